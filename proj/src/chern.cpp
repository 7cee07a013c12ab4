#include "cobordkit/chern.hpp"

#include "cobordkit/errors.hpp"

#include "jsonutil.hpp"

namespace cobordkit {

const char* to_string(StructureKind kind) {
    return kind == StructureKind::Standard ? "standard" : "twisted";
}

namespace {

void require_dim(int n) {
    if (n < 1) throw DomainError("chern: n must be >= 1, got " + std::to_string(n));
}

void require_partition_of(int n, const Partition& I) {
    if (I.sum() != n)
        throw DomainError("chern: " + I.to_string() + " is not a partition of " +
                          std::to_string(n));
}

} // namespace

RingElement total_chern_class(int n, const Int& a, StructureKind kind) {
    require_dim(n);
    const CohomRing ring(n, a);
    const RingElement one = RingElement::one(ring);
    const RingElement x = RingElement::monomial(ring, true, 0);
    const RingElement y = RingElement::monomial(ring, false, 1);

    RingElement c = (one + y - a * x) * (one + y).pow(n - 1);
    if (kind == StructureKind::Standard) {
        const RingElement u = one + x;
        c = u * u * c;
    }
    return c;
}

Int chern_number(int n, const Int& a, StructureKind kind, const Partition& I) {
    require_dim(n);
    require_partition_of(n, I);
    const RingElement total = total_chern_class(n, a, kind);
    RingElement prod = RingElement::one(CohomRing(n, a));
    for (const Int& part : I.parts())
        prod = prod * total.homogeneous_component(static_cast<int>(to_int64(part)));
    return fundamental_pairing(prod);
}

Int chern_number_closed(int n, const Partition& I) {
    require_dim(n);
    require_partition_of(n, I);
    const auto& parts = I.parts();
    Int sum = 0;
    for (std::size_t q = 0; q < parts.size(); ++q) {
        Int term = binomial(n, parts[q] - 1);
        for (std::size_t s = 0; s < parts.size(); ++s)
            if (s != q) term *= binomial(n, parts[s]);
        sum += term;
    }
    return 2 * sum;
}

const Int& ChernData::at(const Partition& I) const {
    for (const auto& [part, value] : numbers)
        if (part == I) return value;
    throw DomainError("ChernData: no entry for " + I.to_string());
}

njson ChernData::to_json() const {
    njson rows = njson::array();
    for (const auto& [part, value] : numbers) {
        njson row;
        row["partition"] = partition_json(part);
        row["value"] = json_int(value);
        rows.push_back(std::move(row));
    }
    njson doc;
    doc["n"] = n;
    doc["a"] = json_int(a);
    doc["structure"] = to_string(kind);
    doc["numbers"] = std::move(rows);
    return doc;
}

ChernData all_chern_numbers(int n, const Int& a, StructureKind kind) {
    require_dim(n);
    ChernData data{n, a, kind, {}};
    for (const Partition& I : partitions(n))
        data.numbers.emplace_back(I, chern_number(n, a, kind, I));
    return data;
}

njson IdentityReport::to_json() const {
    njson doc;
    doc["mode"] = mode;
    doc["pass"] = pass;
    doc["counterexample"] =
        counterexample ? partition_json(*counterexample) : njson(nullptr);
    doc["detail"] = detail;
    doc["table"] = table;
    return doc;
}

IdentityReport verify_a_independence(int n, const std::vector<Int>& a_values) {
    require_dim(n);
    IdentityReport report;
    report.mode = "independence";
    report.table = njson::array();
    for (const Partition& I : partitions(n)) {
        const Int closed = chern_number_closed(n, I);
        njson row;
        row["partition"] = partition_json(I);
        row["closed"] = json_int(closed);
        njson per_a = njson::array();
        for (const Int& a : a_values) {
            const Int ring_value = chern_number(n, a, StructureKind::Standard, I);
            per_a.push_back(njson{{"a", json_int(a)}, {"ring", json_int(ring_value)}});
            if (ring_value != closed && report.pass) {
                report.pass = false;
                report.counterexample = I;
                report.detail = "c_" + I.to_string() + " at a=" + to_decimal(a) + ": ring " +
                                to_decimal(ring_value) + " != closed " + to_decimal(closed);
            }
        }
        row["ring"] = std::move(per_a);
        report.table.push_back(std::move(row));
    }
    return report;
}

IdentityReport verify_twisted_null(int n, const Int& a) {
    require_dim(n);
    IdentityReport report;
    report.mode = "twisted-null";
    report.table = njson::array();
    for (const Partition& I : partitions(n)) {
        const Int value = chern_number(n, a, StructureKind::Twisted, I);
        report.table.push_back(
            njson{{"partition", partition_json(I)}, {"value", json_int(value)}});
        if (value != 0 && report.pass) {
            report.pass = false;
            report.counterexample = I;
            report.detail = "twisted c_" + I.to_string() + " at a=" + to_decimal(a) + " is " +
                            to_decimal(value) + ", expected 0";
        }
    }
    return report;
}

IdentityReport verify_triple(int n, const Int& a, const Int& b) {
    require_dim(n);
    IdentityReport report;
    report.mode = "triple";
    report.table = njson::array();
    for (const Partition& I : partitions(n)) {
        const Int va = chern_number(n, a, StructureKind::Standard, I);
        const Int vb = chern_number(n, b, StructureKind::Standard, I);
        const Int vt = chern_number(n, b - a, StructureKind::Twisted, I);
        const Int sum = va - vb + vt;
        report.table.push_back(njson{{"partition", partition_json(I)},
                                     {"standard_a", json_int(va)},
                                     {"standard_b", json_int(vb)},
                                     {"twisted_b_minus_a", json_int(vt)},
                                     {"sum", json_int(sum)}});
        if (sum != 0 && report.pass) {
            report.pass = false;
            report.counterexample = I;
            report.detail = "c_" + I.to_string() + ": " + to_decimal(va) + " - " +
                            to_decimal(vb) + " + " + to_decimal(vt) + " = " + to_decimal(sum);
        }
    }
    return report;
}

} // namespace cobordkit
