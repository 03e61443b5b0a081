#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dualcx {

using Integer = mpz_class;
using Rational = mpq_class;

/** Exponent and weight vectors. Entries are arbitrary precision. */
using IntVector = std::vector<Integer>;

IntVector make_vector(std::initializer_list<long> entries);

/** Dense row-major integer matrix. */
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    /** Builds a matrix whose rows are the given vectors; all must share one length. */
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntMatrix transposed() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/** Invariant factors d_1 | d_2 | ... | d_rank of an integer matrix. */
struct SNFResult {
    std::vector<Integer> diagonal;
    std::size_t rank = 0;

    friend bool operator==(const SNFResult&, const SNFResult&) = default;
};

Integer dot(const IntVector& a, const IntVector& b);
Integer content(const IntVector& v);  // gcd of the entries, 0 for the zero vector
bool is_zero(const IntVector& v);

/**
 * Divides v by the gcd of its entries. Throws InvalidArgument for the
 * zero vector, which has no primitive representative.
 */
IntVector primitive_vector(const IntVector& v);

/**
 * Invariant factors by elimination. The pivot is the entry of smallest
 * nonzero absolute value in the remaining block; its row and column are
 * reduced modulo the pivot until they vanish, and a remaining entry not
 * divisible by the pivot is folded into the pivot row. No transforms are kept.
 */
SNFResult smith_normal_form(IntMatrix m);

/** Rank over Q by fraction-free (Bareiss) elimination. */
std::size_t matrix_rank(const IntMatrix& m);
std::size_t rank_of_rows(const std::vector<IntVector>& rows, std::size_t cols);

/**
 * Basis of the integer kernel {x : M x = 0}, one primitive vector per free
 * column of the reduced row echelon form.
 */
std::vector<IntVector> integer_nullspace(const IntMatrix& m);

/** Inverse of a square nonsingular matrix over Q; throws InvalidArgument if singular. */
std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m);

/** Clears denominators and makes the result primitive. */
IntVector primitive_from_rational(const std::vector<Rational>& v);

std::string to_string(const IntVector& v);

}  // namespace dualcx
