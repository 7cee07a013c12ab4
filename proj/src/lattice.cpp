#include "cobordkit/lattice.hpp"

#include "cobordkit/errors.hpp"

#include "jsonutil.hpp"

#include <algorithm>
#include <set>

namespace cobordkit {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// d | x with the convention that 0 divides only 0.
bool divides(const Int& d, const Int& x) {
    if (d == 0) return x == 0;
    return x % d == 0;
}

} // namespace

SmithResult smith_normal_form(const IntMat& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    SmithResult res{IntMat::identity(rows), m, IntMat::identity(cols)};
    IntMat& u = res.U;
    IntMat& d = res.D;
    IntMat& v = res.V;

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Smallest nonzero entry of the lower-right submatrix becomes the pivot.
            bool found = false;
            std::size_t pi = t, pj = t;
            Int best = 0;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j) {
                    const Int& e = d.at(i, j);
                    if (e == 0) continue;
                    Int mag = abs_int(e);
                    if (!found || mag < best) {
                        found = true;
                        best = std::move(mag);
                        pi = i;
                        pj = j;
                    }
                }
            if (!found) {
                t = steps; // submatrix is zero; remaining diagonal stays 0
                break;
            }
            if (pi != t) {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
            }
            if (pj != t) {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }

            // Clear the pivot row and column modulo the pivot.
            bool lone = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (d.at(i, t) != 0) lone = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (d.at(t, j) != 0) lone = false;
            }
            if (!lone) continue; // smaller residues exist, pick a new pivot

            // Divisibility fix: pull a non-divisible row into the pivot row.
            bool chain = true;
            for (std::size_t i = t + 1; i < rows && chain; ++i)
                for (std::size_t j = t + 1; j < cols && chain; ++j)
                    if (!divides(d.at(t, t), d.at(i, j))) {
                        d.add_row_multiple(t, i, Int(1));
                        u.add_row_multiple(t, i, Int(1));
                        chain = false;
                    }
            if (chain) break;
        }
        if (t >= steps) break;
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    // Sign fix for pivots settled before an early zero-submatrix exit.
    for (std::size_t t = 0; t < steps; ++t)
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            u.negate_row(t);
        }

    // Postcondition self-check runs on every call.
    if (!(u * m * v == d)) throw InternalError("smith_normal_form: U*M*V != D");
    if (abs_int(u.det()) != 1) throw InternalError("smith_normal_form: U not unimodular");
    if (abs_int(v.det()) != 1) throw InternalError("smith_normal_form: V not unimodular");
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (i != j && d.at(i, j) != 0)
                throw InternalError("smith_normal_form: D not diagonal");
    for (std::size_t t = 0; t < steps; ++t) {
        if (d.at(t, t) < 0) throw InternalError("smith_normal_form: negative divisor");
        if (t + 1 < steps && !divides(d.at(t, t), d.at(t + 1, t + 1)))
            throw InternalError("smith_normal_form: divisor chain broken");
    }
    return res;
}

int rational_rank(const IntMat& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    const SmithResult s = smith_normal_form(m);
    int rank = 0;
    const std::size_t steps = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < steps; ++t)
        if (s.D.at(t, t) != 0) ++rank;
    return rank;
}

bool is_part_of_basis(const std::vector<std::vector<Int>>& vectors) {
    if (vectors.empty()) return true;
    const std::size_t n = vectors[0].size();
    for (const auto& vec : vectors)
        if (vec.size() != n) throw DomainError("is_part_of_basis: ragged vector lengths");
    const std::size_t r = vectors.size();
    if (r > n) return false;
    const SmithResult s = smith_normal_form(IntMat::from_columns(vectors));
    for (std::size_t t = 0; t < r; ++t)
        if (s.D.at(t, t) != 1) return false;
    return true;
}

VectorAssignment::VectorAssignment(int rank) : rank_(rank) {
    if (rank < 0) throw DomainError("VectorAssignment: negative rank");
}

void VectorAssignment::set(const std::string& facet, std::vector<Int> vector) {
    if (static_cast<int>(vector.size()) != rank_)
        throw DomainError("VectorAssignment: vector for '" + facet + "' has length " +
                          std::to_string(vector.size()) + ", expected " + std::to_string(rank_));
    if (find(facet)) throw DomainError("VectorAssignment: duplicate facet '" + facet + "'");
    entries_.emplace_back(facet, std::move(vector));
}

const std::vector<Int>* VectorAssignment::find(const std::string& facet) const {
    for (const auto& [id, vec] : entries_)
        if (id == facet) return &vec;
    return nullptr;
}

const std::vector<Int>& VectorAssignment::at(const std::string& facet) const {
    const std::vector<Int>* v = find(facet);
    if (!v) throw DomainError("VectorAssignment: no vector for facet '" + facet + "'");
    return *v;
}

VectorAssignment VectorAssignment::from_json(const nlohmann::ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("rank") || !doc.contains("vectors"))
        throw ParseError("assignment json: expected object with rank, vectors");
    if (!doc["rank"].is_number_integer())
        throw ParseError("assignment json: rank must be an integer");
    if (!doc["vectors"].is_object())
        throw ParseError("assignment json: vectors must be an object");
    const int rank = doc["rank"].get<int>();
    if (rank < 0) throw ParseError("assignment json: negative rank");
    VectorAssignment a(rank);
    for (const auto& [id, value] : doc["vectors"].items()) {
        if (!value.is_array())
            throw ParseError("assignment json: vector for '" + id + "' must be an array");
        std::vector<Int> vec;
        for (const auto& entry : value) {
            if (entry.is_number_integer())
                vec.emplace_back(static_cast<long>(entry.get<std::int64_t>()));
            else if (entry.is_string())
                vec.push_back(parse_decimal(entry.get<std::string>()));
            else
                throw ParseError("assignment json: entries must be integers or decimal strings");
        }
        try {
            a.set(id, std::move(vec));
        } catch (const DomainError& e) {
            throw ParseError(std::string("assignment json: ") + e.what());
        }
    }
    return a;
}

nlohmann::ordered_json VectorAssignment::to_json() const {
    njson vectors = njson::object();
    for (const auto& [id, vec] : entries_) {
        njson arr = njson::array();
        for (const Int& x : vec) arr.push_back(json_int(x));
        vectors[id] = std::move(arr);
    }
    njson doc;
    doc["rank"] = rank_;
    doc["vectors"] = std::move(vectors);
    return doc;
}

njson CharacteristicReport::to_json() const {
    njson doc;
    doc["pass"] = pass;
    doc["witness_vertex"] = witness_vertex ? njson(*witness_vertex) : njson(nullptr);
    doc["witness_det"] = witness_vertex ? json_int(witness_det) : njson(nullptr);
    return doc;
}

CharacteristicReport is_characteristic(const SimplePolytope& p, const VectorAssignment& chi) {
    if (chi.rank() != p.dim())
        throw MismatchError("is_characteristic: assignment rank " + std::to_string(chi.rank()) +
                            " != polytope dimension " + std::to_string(p.dim()));
    for (const auto& id : p.facet_ids())
        if (!chi.find(id))
            throw DomainError("is_characteristic: no vector for facet '" + id + "'");
    for (const auto& [id, vec] : chi.entries()) {
        (void)vec;
        (void)p.facet_index(id); // entries must name facets of p
    }

    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        std::vector<std::vector<Int>> cols;
        for (int f : p.vertices()[v]) cols.push_back(chi.at(p.facet_id(f)));
        const Int det = IntMat::from_columns(cols).det();
        if (det != 1 && det != -1)
            return CharacteristicReport{false, p.vertex_ids(v), det};
    }
    return CharacteristicReport{true, std::nullopt, Int(0)};
}

njson IsotropyReport::to_json() const {
    njson doc;
    doc["mode"] = mode == IsotropyMode::SarkarCondition ? "sarkar" : "independence";
    doc["pass"] = pass;
    doc["witness_vertex"] = witness_vertex ? njson(*witness_vertex) : njson(nullptr);
    doc["detail"] = detail;
    return doc;
}

namespace {

// Shared validation: marked ids exist and are distinct, lambda covers exactly
// the unmarked facets.
std::vector<bool> marked_flags(const SimplePolytope& p, const std::vector<std::string>& marked,
                               const VectorAssignment& lambda) {
    std::vector<bool> flags(p.facet_count(), false);
    for (const auto& id : marked) {
        const auto idx = static_cast<std::size_t>(p.facet_index(id));
        if (flags[idx]) throw DomainError("marked facet '" + id + "' listed twice");
        flags[idx] = true;
    }
    for (const auto& [id, vec] : lambda.entries()) {
        (void)vec;
        if (flags[static_cast<std::size_t>(p.facet_index(id))])
            throw DomainError("vector assigned to marked facet '" + id + "'");
    }
    for (std::size_t f = 0; f < p.facet_count(); ++f)
        if (!flags[f] && !lambda.find(p.facet_id(static_cast<int>(f))))
            throw DomainError("no vector for unmarked facet '" +
                              p.facet_id(static_cast<int>(f)) + "'");
    return flags;
}

std::string divisor_string(const std::vector<std::vector<Int>>& cols) {
    if (cols.empty()) return "[]";
    const SmithResult s = smith_normal_form(IntMat::from_columns(cols));
    std::string out = "[";
    const std::size_t steps = std::min(s.D.rows(), s.D.cols());
    for (std::size_t t = 0; t < steps; ++t) {
        if (t) out += ",";
        out += to_decimal(s.D.at(t, t));
    }
    return out + "]";
}

} // namespace

IsotropyReport validate_isotropy(const SimplePolytope& p,
                                 const std::vector<std::string>& marked,
                                 const VectorAssignment& lambda, IsotropyMode mode) {
    if (p.dim() != lambda.rank() + 1)
        throw MismatchError("validate_isotropy: polytope dimension " + std::to_string(p.dim()) +
                            " != assignment rank " + std::to_string(lambda.rank()) + " + 1");
    const std::vector<bool> flags = marked_flags(p, marked, lambda);

    IsotropyReport report;
    report.mode = mode;
    for (std::size_t v = 0; v < p.vertex_count(); ++v) {
        std::vector<std::vector<Int>> cols;
        for (int f : p.vertices()[v])
            if (!flags[static_cast<std::size_t>(f)]) cols.push_back(lambda.at(p.facet_id(f)));
        bool ok;
        if (mode == IsotropyMode::SarkarCondition) {
            ok = is_part_of_basis(cols);
        } else {
            ok = cols.empty() ||
                 rational_rank(IntMat::from_columns(cols)) == static_cast<int>(cols.size());
        }
        if (!ok) {
            report.pass = false;
            report.witness_vertex = p.vertex_ids(v);
            report.detail = mode == IsotropyMode::SarkarCondition
                                ? "smith divisors " + divisor_string(cols)
                                : "rational rank below vector count";
            return report;
        }
    }
    return report;
}

Restriction restriction(const SimplePolytope& p, const std::vector<std::string>& marked,
                        const VectorAssignment& lambda, const std::string& facet) {
    if (std::find(marked.begin(), marked.end(), facet) == marked.end())
        throw DomainError("restriction: facet '" + facet + "' is not marked");
    FacetSub fs = facet_subpolytope(p, facet);
    VectorAssignment xi(lambda.rank());
    for (const auto& [sub_id, parent_id] : fs.correspondence) {
        const std::vector<Int>* vec = lambda.find(parent_id);
        if (!vec)
            throw DomainError("restriction: no vector for facet '" + parent_id +
                              "' adjacent to '" + facet + "'");
        xi.set(sub_id, *vec);
    }
    return Restriction{std::move(fs), std::move(xi)};
}

njson LemmaReport::to_json() const {
    njson doc;
    doc["restrictions_characteristic"] = restrictions_characteristic;
    doc["first_failing_facet"] =
        first_failing_facet ? njson(*first_failing_facet) : njson(nullptr);
    doc["sarkar_holds"] = sarkar_holds;
    doc["agree"] = agree;
    doc["per_facet"] = per_facet;
    return doc;
}

LemmaReport check_lemma_equivalence(const SimplePolytope& p,
                                    const std::vector<std::string>& marked,
                                    const VectorAssignment& lambda) {
    LemmaReport report;
    report.per_facet = njson::array();

    std::vector<std::string> ordered = marked;
    std::sort(ordered.begin(), ordered.end(), [&](const auto& x, const auto& y) {
        return p.facet_index(x) < p.facet_index(y);
    });
    for (const auto& q : ordered) {
        const Restriction r = restriction(p, marked, lambda, q);
        const CharacteristicReport cr = is_characteristic(r.face.sub, r.xi);
        njson row;
        row["facet"] = q;
        row["characteristic"] = cr.pass;
        row["witness"] = cr.to_json();
        report.per_facet.push_back(std::move(row));
        if (!cr.pass && report.restrictions_characteristic) {
            report.restrictions_characteristic = false;
            report.first_failing_facet = q;
        }
    }
    report.sarkar_holds =
        validate_isotropy(p, marked, lambda, IsotropyMode::SarkarCondition).pass;
    report.agree = report.restrictions_characteristic == report.sarkar_holds;
    return report;
}

const std::string& GlWitness::image(const std::string& facet) const {
    for (const auto& [from, to] : sigma)
        if (from == facet) return to;
    throw DomainError("GlWitness: no image for facet '" + facet + "'");
}

int GlWitness::sign(const std::string& facet) const {
    for (const auto& [id, s] : signs)
        if (id == facet) return s;
    throw DomainError("GlWitness: no sign for facet '" + facet + "'");
}

njson GlWitness::to_json() const {
    njson doc;
    doc["U"] = U.to_json();
    njson sig = njson::object();
    for (const auto& [from, to] : sigma) sig[from] = to;
    doc["sigma"] = std::move(sig);
    njson sgn = njson::object();
    for (const auto& [id, s] : signs) sgn[id] = s;
    doc["signs"] = std::move(sgn);
    return doc;
}

namespace {

std::vector<Int> negate(std::vector<Int> v) {
    for (Int& x : v) x = -x;
    return v;
}

// adj(M) with M * adj(M) = det(M) * I.
IntMat adjugate(const IntMat& m) {
    const std::size_t n = m.rows();
    IntMat adj(n, n);
    if (n == 1) {
        adj.at(0, 0) = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntMat minor(n - 1, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor.at(mr, mc) = m.at(r, c);
                    ++mc;
                }
                ++mr;
            }
            const Int cof = minor.det();
            adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

struct BlockPermuter {
    // indices into `ids` per block; next_permutation advances lexicographically
    std::vector<std::vector<std::size_t>> base;
    std::vector<std::vector<std::size_t>> current;

    bool advance() {
        for (std::size_t b = current.size(); b-- > 0;) {
            if (std::next_permutation(current[b].begin(), current[b].end())) return true;
            current[b] = base[b];
        }
        return false;
    }
};

} // namespace

bool verify_gl_witness(const VectorAssignment& a, const VectorAssignment& b,
                       const GlWitness& w, bool allow_sign) {
    if (a.rank() != b.rank()) return false;
    const std::size_t n = static_cast<std::size_t>(a.rank());
    if (w.U.rows() != n || w.U.cols() != n) return false;
    if (abs_int(w.U.det()) != 1) return false;

    std::set<std::string> images;
    for (const auto& [id, vec] : a.entries()) {
        (void)vec;
        std::string to;
        try {
            to = w.image(id);
        } catch (const DomainError&) {
            return false;
        }
        if (!b.find(to) || !images.insert(to).second) return false;
        const int s = [&] {
            try {
                return w.sign(id);
            } catch (const DomainError&) {
                return 0;
            }
        }();
        if (s != 1 && s != -1) return false;
        if (!allow_sign && s != 1) return false;
        std::vector<Int> expect = b.at(to);
        if (s == -1) expect = negate(std::move(expect));
        if (w.U.apply(a.at(id)) != expect) return false;
    }
    return images.size() == b.entries().size();
}

std::optional<GlWitness> gl_equivalent(const VectorAssignment& a, const VectorAssignment& b,
                                       const std::vector<std::vector<std::string>>& perm_blocks,
                                       bool allow_sign) {
    if (a.rank() != b.rank())
        throw MismatchError("gl_equivalent: assignments of distinct ranks");
    const std::size_t n = static_cast<std::size_t>(a.rank());
    if (a.size() != b.size())
        throw MismatchError("gl_equivalent: assignments with different facet counts");
    std::set<std::string> ids_a;
    for (const auto& [id, vec] : a.entries()) {
        (void)vec;
        ids_a.insert(id);
        if (!b.find(id)) throw MismatchError("gl_equivalent: facet sets differ at '" + id + "'");
    }

    std::set<std::string> in_block;
    for (const auto& block : perm_blocks) {
        if (block.size() > 8)
            throw DomainError("gl_equivalent: permutation block larger than 8 facets");
        for (const auto& id : block) {
            if (!ids_a.count(id))
                throw DomainError("gl_equivalent: block names unknown facet '" + id + "'");
            if (!in_block.insert(id).second)
                throw DomainError("gl_equivalent: facet '" + id + "' in two blocks");
        }
    }

    const auto finish = [&](GlWitness w) -> std::optional<GlWitness> {
        if (!verify_gl_witness(a, b, w, allow_sign))
            throw InternalError("gl_equivalent: candidate witness failed verification");
        return w;
    };

    // Fast path: exact equality, identity witness. Also covers assignments
    // whose columns do not span Q^rank.
    {
        bool equal = true;
        for (const auto& [id, vec] : a.entries())
            if (*b.find(id) != vec) {
                equal = false;
                break;
            }
        if (equal) {
            GlWitness w{IntMat::identity(n), {}, {}};
            for (const auto& [id, vec] : a.entries()) {
                (void)vec;
                w.sigma.emplace_back(id, id);
                w.signs.emplace_back(id, 1);
            }
            return finish(std::move(w));
        }
    }
    if (n == 0) return std::nullopt;

    // Solving set: greedily take facets whose vectors raise the rational rank.
    std::vector<std::string> solve_ids;
    std::vector<std::vector<Int>> solve_cols;
    for (const auto& [id, vec] : a.entries()) {
        if (solve_ids.size() == n) break;
        solve_cols.push_back(vec);
        if (rational_rank(IntMat::from_columns(solve_cols)) ==
            static_cast<int>(solve_cols.size())) {
            solve_ids.push_back(id);
        } else {
            solve_cols.pop_back();
        }
    }
    if (solve_ids.size() < n) return std::nullopt; // does not span; fast path was the only hope

    const IntMat a_s = IntMat::from_columns(solve_cols);
    const Int det_a = a_s.det();
    const IntMat adj_a = adjugate(a_s);

    // Permutations: ids inside blocks permute, everything else is fixed.
    std::vector<std::string> ids_order;
    for (const auto& [id, vec] : a.entries()) {
        (void)vec;
        ids_order.push_back(id);
    }
    BlockPermuter permuter;
    std::vector<std::vector<std::string>> block_ids;
    for (const auto& block : perm_blocks) {
        if (block.empty()) continue;
        std::vector<std::string> sorted_block = block;
        std::sort(sorted_block.begin(), sorted_block.end(),
                  [&](const auto& x, const auto& y) {
                      return std::find(ids_order.begin(), ids_order.end(), x) <
                             std::find(ids_order.begin(), ids_order.end(), y);
                  });
        block_ids.push_back(sorted_block);
        std::vector<std::size_t> idx(sorted_block.size());
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        permuter.base.push_back(idx);
        permuter.current.push_back(idx);
    }

    const std::size_t sign_choices = allow_sign ? (std::size_t{1} << n) : 1;
    for (;;) {
        // sigma for the current block arrangement
        std::vector<std::pair<std::string, std::string>> sigma;
        for (const auto& id : ids_order) sigma.emplace_back(id, id);
        auto sigma_of = [&](const std::string& id) -> std::string& {
            for (auto& [from, to] : sigma)
                if (from == id) return to;
            throw InternalError("gl_equivalent: sigma misses facet");
        };
        for (std::size_t bidx = 0; bidx < block_ids.size(); ++bidx)
            for (std::size_t i = 0; i < block_ids[bidx].size(); ++i)
                sigma_of(block_ids[bidx][i]) = block_ids[bidx][permuter.current[bidx][i]];

        for (std::size_t mask = 0; mask < sign_choices; ++mask) {
            std::vector<std::vector<Int>> b_cols;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<Int> col = b.at(sigma_of(solve_ids[i]));
                if (mask & (std::size_t{1} << i)) col = negate(std::move(col));
                b_cols.push_back(std::move(col));
            }
            const IntMat u_num = IntMat::from_columns(b_cols) * adj_a;

            bool integral = true;
            IntMat u(n, n);
            for (std::size_t i = 0; i < n && integral; ++i)
                for (std::size_t j = 0; j < n && integral; ++j) {
                    if (!divides(det_a, u_num.at(i, j))) {
                        integral = false;
                        break;
                    }
                    u.at(i, j) = u_num.at(i, j) / det_a;
                }
            if (!integral || abs_int(u.det()) != 1) continue;

            bool all_match = true;
            std::vector<std::pair<std::string, int>> signs;
            for (const auto& id : ids_order) {
                const std::vector<Int> mapped = u.apply(a.at(id));
                const std::vector<Int>& target = b.at(sigma_of(id));
                if (mapped == target) {
                    signs.emplace_back(id, 1);
                } else if (allow_sign && mapped == negate(target)) {
                    signs.emplace_back(id, -1);
                } else {
                    all_match = false;
                    break;
                }
            }
            if (all_match) return finish(GlWitness{u, std::move(sigma), std::move(signs)});
        }
        if (!permuter.advance()) break;
    }
    return std::nullopt;
}

} // namespace cobordkit
