#include "cobordkit/clutch.hpp"

#include "cobordkit/chern.hpp"
#include "cobordkit/errors.hpp"

#include "jsonutil.hpp"

namespace cobordkit {

ClutchSpec compose(const ClutchSpec& c1, const ClutchSpec& c2) {
    if (c1.rank != c2.rank)
        throw MismatchError("compose: clutching data of distinct ranks " +
                            std::to_string(c1.rank) + " and " + std::to_string(c2.rank));
    return ClutchSpec{c1.rank, c1.d + c2.d, c1.e + c2.e};
}

ClutchSpec inverse(const ClutchSpec& c) { return ClutchSpec{c.rank, -c.d, -c.e}; }

std::string BoundaryLabel::to_string() const {
    switch (kind) {
    case Kind::Standard: return "Standard(" + to_decimal(parameter) + ")";
    case Kind::ConjStandard: return "ConjStandard(" + to_decimal(parameter) + ")";
    case Kind::Twisted: return "Twisted(" + to_decimal(parameter) + ")";
    case Kind::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

BoundaryLabel classify(const ClutchSpec& c) {
    if (c.e == 2) return BoundaryLabel{BoundaryLabel::Kind::Standard, -c.d};
    if (c.e == 0) return BoundaryLabel{BoundaryLabel::Kind::Twisted, -c.d};
    if (c.e == -2) return BoundaryLabel{BoundaryLabel::Kind::ConjStandard, c.d};
    return BoundaryLabel{};
}

GluingTriple gluing_triple(int n, const Int& a, const Int& b) {
    if (n < 1) throw DomainError("gluing_triple: n must be >= 1");
    const ClutchSpec f_a{n, 0, 1};
    const ClutchSpec f_b{n, a, -1};
    const ClutchSpec f_c{n, b, -1};

    GluingTriple t;
    t.f_ab = compose(inverse(f_b), f_a);
    t.f_bc = compose(inverse(f_c), f_b);
    t.f_ca = compose(inverse(f_a), f_c);
    t.label_ab = classify(t.f_ab);
    t.label_bc = classify(t.f_bc);
    t.label_ca = classify(t.f_ca);
    return t;
}

namespace {

// Bordism-class Chern number of a labelled boundary piece; ConjStandard
// contributes with sign -1.
Int label_value(int n, const BoundaryLabel& label, const Partition& I) {
    switch (label.kind) {
    case BoundaryLabel::Kind::Standard:
        return chern_number(n, label.parameter, StructureKind::Standard, I);
    case BoundaryLabel::Kind::ConjStandard:
        return -chern_number(n, label.parameter, StructureKind::Standard, I);
    case BoundaryLabel::Kind::Twisted:
        return chern_number(n, label.parameter, StructureKind::Twisted, I);
    case BoundaryLabel::Kind::Unclassified:
        throw DomainError("label_value: unclassified boundary label");
    }
    throw DomainError("label_value: unclassified boundary label");
}

njson clutch_json(const char* name, const ClutchSpec& c, const BoundaryLabel& label) {
    njson doc;
    doc["pair"] = name;
    doc["d"] = json_int(c.d);
    doc["e"] = json_int(c.e);
    doc["label"] = label.to_string();
    return doc;
}

} // namespace

njson GluingReport::to_json() const {
    njson doc;
    doc["n"] = n;
    doc["a"] = json_int(a);
    doc["b"] = json_int(b);
    doc["clutchings"] = njson::array({clutch_json("f_AB", triple.f_ab, triple.label_ab),
                                      clutch_json("f_BC", triple.f_bc, triple.label_bc),
                                      clutch_json("f_CA", triple.f_ca, triple.label_ca)});
    doc["labels_ok"] = labels_ok;
    doc["sums_ok"] = sums_ok;
    doc["pass"] = pass;
    doc["counterexample"] =
        counterexample ? partition_json(*counterexample) : njson(nullptr);
    doc["table"] = table;
    return doc;
}

GluingReport verify_gluing_bordism(int n, const Int& a, const Int& b) {
    GluingReport report;
    report.n = n;
    report.a = a;
    report.b = b;
    report.triple = gluing_triple(n, a, b);

    const BoundaryLabel expect_ab{BoundaryLabel::Kind::Standard, a};
    const BoundaryLabel expect_bc{BoundaryLabel::Kind::Twisted, b - a};
    const BoundaryLabel expect_ca{BoundaryLabel::Kind::ConjStandard, b};
    report.labels_ok = report.triple.label_ab == expect_ab &&
                       report.triple.label_bc == expect_bc &&
                       report.triple.label_ca == expect_ca;

    report.sums_ok = true;
    report.table = njson::array();
    for (const Partition& I : partitions(n)) {
        const Int v_ab = label_value(n, report.triple.label_ab, I);
        const Int v_bc = label_value(n, report.triple.label_bc, I);
        const Int v_ca = label_value(n, report.triple.label_ca, I);
        const Int sum = v_ab + v_bc + v_ca;
        report.table.push_back(njson{{"partition", partition_json(I)},
                                     {report.triple.label_ab.to_string(), json_int(v_ab)},
                                     {report.triple.label_bc.to_string(), json_int(v_bc)},
                                     {report.triple.label_ca.to_string(), json_int(v_ca)},
                                     {"sum", json_int(sum)}});
        if (sum != 0 && report.sums_ok) {
            report.sums_ok = false;
            report.counterexample = I;
        }
    }
    report.pass = report.labels_ok && report.sums_ok;
    return report;
}

} // namespace cobordkit
