#pragma once

#include "padspher/rational.hpp"

#include <string>
#include <vector>

namespace padspher {

/// Weakly decreasing integer vector; negative parts are allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int length() const { return (int)parts_.size(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }
    int min_part() const { return parts_.empty() ? 0 : parts_.back(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    long weight() const;

    /// Distinct part values with multiplicities, largest value first.
    const std::vector<std::pair<int, int>>& profile() const { return profile_; }

    /// Adds c to every part.
    Partition translated(int c) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    std::string to_string() const;

    /// All weakly decreasing vectors of the given length with parts in
    /// [min_part, max_part], in lex order.
    static std::vector<Partition> box(int length, int min_part, int max_part);

private:
    std::vector<int> parts_;
    std::vector<std::pair<int, int>> profile_;
};

} // namespace padspher
