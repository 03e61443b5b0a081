// Shared helpers for the test binaries: seeded RNG, independent oracles, and
// random generators for complexes and supports.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "dualcx/dual_complex.hpp"
#include "dualcx/lattice.hpp"
#include "dualcx/newton.hpp"

namespace dualcx::testing {

inline std::uint64_t seed() {
    if (const char* s = std::getenv("DUALCX_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240607;
}

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(seed());
    return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline IntMatrix random_matrix(std::size_t rows, std::size_t cols, long lo, long hi) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform(lo, hi);
    return m;
}

/** Product of random elementary integer operations; determinant +-1. */
inline IntMatrix random_unimodular(std::size_t n, int steps = 12) {
    IntMatrix u = IntMatrix::identity(n);
    if (n < 2) return u;
    for (int s = 0; s < steps; ++s) {
        const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        const long f = uniform(-2, 2);
        for (std::size_t c = 0; c < n; ++c) u(i, c) += f * u(j, c);
        if (uniform(0, 3) == 0)
            for (std::size_t c = 0; c < n; ++c) std::swap(u(i, c), u(j, c));
    }
    return u;
}

/** Rank over Q by plain Gaussian elimination with rationals. */
inline std::size_t rational_rank(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/** Determinant by cofactor expansion along the first row. */
inline Integer cofactor_det(const std::vector<std::vector<Integer>>& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        std::vector<std::vector<Integer>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Integer> row;
            for (std::size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
        }
        det += ((j % 2 == 0) ? 1 : -1) * a[0][j] * cofactor_det(minor);
    }
    return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

/** gcd of all k x k minors (the k-th determinantal divisor). */
inline Integer minor_gcd(const IntMatrix& m, std::size_t k) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    subsets(m.rows(), k, 0, cur, rows);
    subsets(m.cols(), k, 0, cur, cols);
    Integer g = 0;
    for (const auto& rs : rows)
        for (const auto& cs : cols) {
            std::vector<std::vector<Integer>> sub;
            for (auto r : rs) {
                std::vector<Integer> row;
                for (auto c : cs) row.push_back(m(r, c));
                sub.push_back(std::move(row));
            }
            Integer d = cofactor_det(sub);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        }
    return g;
}

/**
 * Betti numbers from ranks only: betti_k = (#k-cells - rank d_k) - rank d_{k+1},
 * with the boundary matrices assembled here from vertex tuples and copies.
 */
inline std::vector<long> brute_force_betti(const DualComplex& c, bool reduced) {
    const int top = c.dim();
    std::vector<std::vector<const DualCell*>> by_dim(static_cast<std::size_t>(top + 1));
    for (const auto& cell : c.cells) by_dim[static_cast<std::size_t>(cell.dim)].push_back(&cell);
    std::vector<std::size_t> ranks(by_dim.size() + 1, 0);
    if (reduced && top >= 0 && !by_dim[0].empty()) ranks[0] = 1;
    for (std::size_t k = 1; k < by_dim.size(); ++k) {
        IntMatrix d(by_dim[k - 1].size(), by_dim[k].size());
        for (std::size_t col = 0; col < by_dim[k].size(); ++col) {
            const auto& verts = by_dim[k][col]->verts;
            for (std::size_t i = 0; i < verts.size(); ++i) {
                std::vector<int> facet = verts;
                facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(i));
                for (std::size_t row = 0; row < by_dim[k - 1].size(); ++row)
                    if (by_dim[k - 1][row]->verts == facet && by_dim[k - 1][row]->copy == 1)
                        d(row, col) += (i % 2 == 0) ? 1 : -1;
            }
        }
        ranks[k] = rational_rank(d);
    }
    std::vector<long> betti;
    for (std::size_t k = 0; k < by_dim.size(); ++k)
        betti.push_back(static_cast<long>(by_dim[k].size() - ranks[k] - ranks[k + 1]));
    return betti;
}

/** Random simplicial complex on vertices 1..n: closure of random simplices of dimension <= d. */
inline DualComplex random_simplicial_complex(int n, int d, int facets) {
    std::vector<DualVertex> vertices;
    for (int v = 1; v <= n; ++v) vertices.push_back({v, std::nullopt});
    std::vector<std::vector<int>> simplices;
    for (int f = 0; f < facets; ++f) {
        const int size = static_cast<int>(uniform(1, std::min(d + 1, n)));
        std::vector<int> pool;
        for (int v = 1; v <= n; ++v) pool.push_back(v);
        std::shuffle(pool.begin(), pool.end(), rng());
        pool.resize(static_cast<std::size_t>(size));
        simplices.push_back(pool);
    }
    return simplicial_closure(std::move(vertices), simplices);
}

/** Cone with apex `apex` over every cell of `base`. */
inline DualComplex cone_over(const DualComplex& base, int apex) {
    std::vector<std::vector<int>> simplices;
    for (const auto& cell : base.cells) {
        simplices.push_back(cell.verts);
        auto with_apex = cell.verts;
        with_apex.push_back(apex);
        simplices.push_back(with_apex);
    }
    auto vertices = base.vertices;
    vertices.push_back({apex, std::nullopt});
    simplices.push_back({apex});
    return simplicial_closure(std::move(vertices), simplices);
}

/** Boundary of the tetrahedron on vertices 0..3. */
inline DualComplex tetrahedron_boundary() {
    std::vector<DualVertex> v;
    for (int i = 0; i < 4; ++i) v.push_back({i, std::nullopt});
    return simplicial_closure(v, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

/** Six-vertex minimal triangulation of the real projective plane. */
inline DualComplex projective_plane() {
    std::vector<DualVertex> v;
    for (int i = 1; i <= 6; ++i) v.push_back({i, std::nullopt});
    return simplicial_closure(v, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                  {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

/**
 * Random convenient support in `n` variables: a pure power a_i e_i on every
 * axis plus a few mixed monomials.
 */
inline Support random_convenient_support(std::size_t n, std::size_t max_points, long max_exp) {
    std::set<IntVector> pts;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector p(n, 0);
        p[i] = uniform(2, max_exp);
        pts.insert(p);
    }
    const long extra = uniform(1, static_cast<long>(max_points - n));
    for (long e = 0; e < extra; ++e) {
        IntVector p(n);
        for (auto& x : p) x = uniform(0, max_exp / 2);
        if (std::count(p.begin(), p.end(), 0) >= static_cast<long>(n) - 1) continue;
        pts.insert(p);
    }
    return Support(n, std::vector<IntVector>(pts.begin(), pts.end()));
}

}  // namespace dualcx::testing
