#pragma once

// Test-only oracles, independent of the library code paths they check.

#include "cobordkit/bigint.hpp"
#include "cobordkit/intmat.hpp"
#include "cobordkit/partition.hpp"

#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracles {

using cobordkit::Int;

// Number of partitions of n via the bounded-part recurrence; never touches
// cobordkit::partitions.
inline Int partition_count(int n) {
    static std::map<std::pair<int, int>, Int> memo;
    std::function<Int(int, int)> count = [&](int rest, int max_part) -> Int {
        if (rest == 0) return 1;
        if (max_part == 0) return 0;
        const auto key = std::make_pair(rest, max_part);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Int total = 0;
        for (int k = std::min(rest, max_part); k >= 1; --k) total += count(rest - k, k);
        memo[key] = total;
        return total;
    };
    return count(n, n);
}

// Dense polynomial in Z[x,y]/(x^2, y^n): coefficient c[e][j] of x^e * y^j.
// Used to compute Chern numbers of CP^1 x CP^(n-1) from (1+x)^2 (1+y)^n
// without going through the quotient-ring implementation.
struct TruncPoly {
    int n;
    std::vector<std::vector<Int>> c; // [2][n]

    explicit TruncPoly(int n_) : n(n_), c(2, std::vector<Int>(static_cast<size_t>(n_), Int(0))) {}

    static TruncPoly constant(int n, const Int& v) {
        TruncPoly p(n);
        p.c[0][0] = v;
        return p;
    }

    TruncPoly operator*(const TruncPoly& o) const {
        TruncPoly r(n);
        for (int e1 = 0; e1 < 2; ++e1)
            for (int j1 = 0; j1 < n; ++j1) {
                if (c[e1][static_cast<size_t>(j1)] == 0) continue;
                for (int e2 = 0; e2 + e1 < 2; ++e2)
                    for (int j2 = 0; j1 + j2 < n; ++j2)
                        r.c[static_cast<size_t>(e1 + e2)][static_cast<size_t>(j1 + j2)] +=
                            c[static_cast<size_t>(e1)][static_cast<size_t>(j1)] *
                            o.c[static_cast<size_t>(e2)][static_cast<size_t>(j2)];
            }
        return r;
    }

    TruncPoly component(int degree) const { // deg x = deg y = 1
        TruncPoly r(n);
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                if (e + j == degree) r.c[static_cast<size_t>(e)][static_cast<size_t>(j)] =
                    c[static_cast<size_t>(e)][static_cast<size_t>(j)];
        return r;
    }

    const Int& top() const { return c[1][static_cast<size_t>(n - 1)]; } // coeff of x*y^(n-1)
};

// Chern number c_I of CP^1 x CP^(n-1) with total class (1+x)^2 (1+y)^n.
inline Int product_space_chern(int n, const cobordkit::Partition& I) {
    TruncPoly one_x(n), one_y(n);
    one_x.c[0][0] = 1;
    one_x.c[1][0] = 1; // 1 + x
    one_y.c[0][0] = 1;
    if (n >= 2) one_y.c[0][1] = 1; // 1 + y (y^1 dies when n == 1)
    TruncPoly total = one_x * one_x;
    for (int i = 0; i < n; ++i) total = total * one_y;
    TruncPoly acc = TruncPoly::constant(n, 1);
    for (const Int& part : I.parts())
        acc = acc * total.component(static_cast<int>(cobordkit::to_int64(part)));
    return acc.top();
}

// Cofactor-expansion determinant; independent of the Bareiss routine.
inline Int naive_det(const cobordkit::IntMat& m) {
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        cobordkit::IntMat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, mc = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, mc++) = m.at(r, c);
            }
        const Int term = m.at(0, j) * naive_det(minor);
        total += (j % 2 == 0) ? term : -term;
    }
    return total;
}

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed);
    return gen;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    return dist(rng());
}

} // namespace oracles
