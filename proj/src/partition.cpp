#include "padspher/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace padspher {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    for (size_t i = 0; i < parts_.size();) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        profile_.emplace_back(parts_[i], (int)(j - i));
        i = j;
    }
}

long Partition::weight() const {
    long w = 0;
    for (int p : parts_) w += p;
    return w;
}

Partition Partition::translated(int c) const {
    std::vector<int> p = parts_;
    for (int& v : p) v += c;
    return Partition(p);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> Partition::box(int length, int min_part, int max_part) {
    std::vector<Partition> out;
    std::vector<int> cur(length, 0);
    auto rec = [&](auto&& self, int pos, int hi) -> void {
        if (pos == length) {
            out.emplace_back(cur);
            return;
        }
        for (int v = hi; v >= min_part; --v) {
            cur[pos] = v;
            self(self, pos + 1, v);
        }
    };
    if (length == 0) {
        out.emplace_back(std::vector<int>{});
        return out;
    }
    rec(rec, 0, max_part);
    return out;
}

} // namespace padspher
