#pragma once

#include <stdexcept>
#include <string>

namespace padspher {

// Error taxonomy shared by all modules.  Every condition a caller can
// provoke through the public API throws one of these; plain
// std::logic_error is reserved for internal invariant breakage.

struct DivisionByZero : std::runtime_error {
    explicit DivisionByZero(const std::string& what) : std::runtime_error(what) {}
};

struct VarMismatch : std::runtime_error {
    explicit VarMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SpecializationPole : std::runtime_error {
    explicit SpecializationPole(const std::string& what) : std::runtime_error(what) {}
};

struct NoUnitConstantTerm : std::runtime_error {
    explicit NoUnitConstantTerm(const std::string& what) : std::runtime_error(what) {}
};

struct InexactDivision : std::runtime_error {
    explicit InexactDivision(const std::string& what) : std::runtime_error(what) {}
};

struct BadLength : std::runtime_error {
    explicit BadLength(const std::string& what) : std::runtime_error(what) {}
};

struct NoClosedForm : std::runtime_error {
    explicit NoClosedForm(const std::string& what) : std::runtime_error(what) {}
};

struct LevelTooSmall : std::runtime_error {
    explicit LevelTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& what) : std::runtime_error(what) {}
};

struct MismatchBeyondTail : std::runtime_error {
    explicit MismatchBeyondTail(const std::string& what) : std::runtime_error(what) {}
};

struct NotInOpenOrbit : std::runtime_error {
    explicit NotInOpenOrbit(const std::string& what) : std::runtime_error(what) {}
};

struct CosetDecompositionFailure : std::runtime_error {
    explicit CosetDecompositionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct WindowOverflow : std::runtime_error {
    explicit WindowOverflow(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroZeta : std::runtime_error {
    explicit ZeroZeta(const std::string& what) : std::runtime_error(what) {}
};

} // namespace padspher
