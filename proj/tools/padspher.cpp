#include "padspher/cli_run.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    padspher::RunResult r = padspher::run_cli(args);
    std::cout << r.json_text;
    return r.exit_code;
}
