#pragma once

#include "cobordkit/bigint.hpp"

#include <string>
#include <vector>

namespace cobordkit {

// A partition of n: weakly decreasing positive parts summing to n.
class Partition {
public:
    explicit Partition(std::vector<Int> parts); // validates shape

    const std::vector<Int>& parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    Int sum() const;

    std::string to_string() const; // "[2,1,1]"

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const; // lexicographic on parts

private:
    std::vector<Int> parts_;
};

// All partitions of n >= 1 in reverse-lexicographic order:
// [n] first, [1,...,1] last.
std::vector<Partition> partitions(const Int& n);

} // namespace cobordkit
