#include "cobordkit/partition.hpp"

#include "cobordkit/errors.hpp"

#include <sstream>

namespace cobordkit {

Partition::Partition(std::vector<Int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw DomainError("partition: no parts");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw DomainError("partition: part " + to_decimal(parts_[i]) + " is not positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition: parts must be weakly decreasing");
    }
}

Int Partition::sum() const {
    Int s = 0;
    for (const Int& p : parts_) s += p;
    return s;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

bool Partition::operator<(const Partition& other) const {
    return parts_ < other.parts_;
}

namespace {

void emit(const Int& n, const Int& max_part, std::vector<Int>& prefix,
          std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(prefix);
        return;
    }
    Int k = max_part < n ? max_part : n;
    for (; k >= 1; --k) {
        prefix.push_back(k);
        emit(n - k, k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions(const Int& n) {
    if (n < 1) throw DomainError("partitions: n must be >= 1, got " + to_decimal(n));
    std::vector<Partition> out;
    std::vector<Int> prefix;
    emit(n, n, prefix, out);
    return out;
}

} // namespace cobordkit
