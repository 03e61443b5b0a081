#include "dualcx/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "dualcx/error.hpp"

namespace dualcx {

IntVector make_vector(std::initializer_list<long> entries) {
    IntVector v;
    v.reserve(entries.size());
    for (long e : entries) v.emplace_back(e);
    return v;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
        for (long e : r) data_.emplace_back(e);
    }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidArgument("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
        }
    return p;
}

Integer dot(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw InvalidArgument("dot product of vectors of different length");
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Integer content(const IntVector& v) {
    Integer g = 0;
    for (const auto& e : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    return g;
}

bool is_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& e) { return e == 0; });
}

IntVector primitive_vector(const IntVector& v) {
    Integer g = content(v);
    if (g == 0) throw InvalidArgument("zero vector has no primitive representative");
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        mpz_divexact(out[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
    return out;
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

// Moves the entry of least nonzero magnitude in the block [t.., t..] to (t, t).
bool place_min_pivot(IntMatrix& m, std::size_t t) {
    std::size_t br = 0, bc = 0;
    bool found = false;
    Integer best;
    for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c) {
            if (m(r, c) == 0) continue;
            Integer a = abs(m(r, c));
            if (!found || a < best) {
                best = a;
                br = r;
                bc = c;
                found = true;
            }
        }
    if (!found) return false;
    swap_rows(m, t, br);
    swap_cols(m, t, bc);
    return true;
}

}  // namespace

SNFResult smith_normal_form(IntMatrix m) {
    const std::size_t limit = std::min(m.rows(), m.cols());
    std::size_t t = 0;
    for (; t < limit; ++t) {
        if (!place_min_pivot(m, t)) break;
        for (;;) {
            const Integer pivot = m(t, t);
            Integer q;
            bool residue = false;
            for (std::size_t r = t + 1; r < m.rows(); ++r) {
                if (m(r, t) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), pivot.get_mpz_t());
                for (std::size_t c = t; c < m.cols(); ++c) m(r, c) -= q * m(t, c);
                residue = residue || m(r, t) != 0;
            }
            for (std::size_t c = t + 1; c < m.cols(); ++c) {
                if (m(t, c) == 0) continue;
                mpz_tdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), pivot.get_mpz_t());
                for (std::size_t r = t; r < m.rows(); ++r) m(r, c) -= q * m(r, t);
                residue = residue || m(t, c) != 0;
            }
            if (residue) {
                // A remainder smaller than the pivot survived in row or column t.
                std::size_t br = t, bc = t;
                Integer best = abs(m(t, t));
                for (std::size_t r = t + 1; r < m.rows(); ++r)
                    if (m(r, t) != 0 && abs(m(r, t)) < best) best = abs(m(r, t)), br = r, bc = t;
                for (std::size_t c = t + 1; c < m.cols(); ++c)
                    if (m(t, c) != 0 && abs(m(t, c)) < best) best = abs(m(t, c)), br = t, bc = c;
                swap_rows(m, t, br);
                swap_cols(m, t, bc);
                continue;
            }
            std::size_t bad_row = 0;
            bool indivisible = false;
            for (std::size_t r = t + 1; r < m.rows() && !indivisible; ++r)
                for (std::size_t c = t + 1; c < m.cols(); ++c)
                    if (!mpz_divisible_p(m(r, c).get_mpz_t(), pivot.get_mpz_t())) {
                        bad_row = r;
                        indivisible = true;
                        break;
                    }
            if (!indivisible) break;
            for (std::size_t c = t; c < m.cols(); ++c) m(t, c) += m(bad_row, c);
        }
    }
    SNFResult out;
    out.rank = t;
    out.diagonal.reserve(t);
    for (std::size_t i = 0; i < t; ++i) out.diagonal.push_back(abs(m(i, i)));
    return out;
}

std::size_t matrix_rank(const IntMatrix& input) {
    IntMatrix a = input;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        swap_rows(a, rank, p);
        const Integer pivot = a(rank, c);
        for (std::size_t r = rank + 1; r < a.rows(); ++r) {
            if (a(r, c) == 0) continue;
            const Integer factor = a(r, c);
            Integer g = 0;
            for (std::size_t j = c; j < a.cols(); ++j) {
                a(r, j) = pivot * a(r, j) - factor * a(rank, j);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(r, j).get_mpz_t());
            }
            if (g > 1)
                for (std::size_t j = c; j < a.cols(); ++j)
                    mpz_divexact(a(r, j).get_mpz_t(), a(r, j).get_mpz_t(), g.get_mpz_t());
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    return matrix_rank(IntMatrix::from_rows(rows, cols));
}

namespace {

struct Echelon {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivot_cols;
};

Echelon reduced_row_echelon(const IntMatrix& m) {
    Echelon e;
    e.rows.assign(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) e.rows[r][c] = m(r, c);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && e.rows[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(e.rows[rank], e.rows[p]);
        const Rational inv = 1 / e.rows[rank][c];
        for (auto& x : e.rows[rank]) x *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank || e.rows[r][c] == 0) continue;
            const Rational f = e.rows[r][c];
            for (std::size_t j = 0; j < m.cols(); ++j) e.rows[r][j] -= f * e.rows[rank][j];
        }
        e.pivot_cols.push_back(c);
        ++rank;
    }
    e.rows.resize(rank);
    return e;
}

}  // namespace

std::vector<IntVector> integer_nullspace(const IntMatrix& m) {
    const Echelon e = reduced_row_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;
    std::vector<IntVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(m.cols());
        x[f] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = -e.rows[r][f];
        basis.push_back(primitive_from_rational(x));
    }
    return basis;
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidArgument("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c);
        a[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) throw InvalidArgument("singular matrix");
        std::swap(a[c], a[p]);
        const Rational inv = 1 / a[c][c];
        for (auto& x : a[c]) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational f = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv[r][c] = a[r][n + c];
    return inv;
}

IntVector primitive_from_rational(const std::vector<Rational>& v) {
    Integer denom = 1;
    for (const auto& x : v) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
    IntVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (denom / v[i].get_den());
    return primitive_vector(out);
}

std::string to_string(const IntVector& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

}  // namespace dualcx
