#ifndef HYPERFORM_EXACT_LINALG_HPP_
#define HYPERFORM_EXACT_LINALG_HPP_

#include "hyperform/cyclotomic.hpp"
#include "hyperform/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace hyperform {

/* Dense row-major matrix of exact rationals. */
class RationalMatrix {
  public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(std::span<Rational const> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Rational const& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::span<Rational const> entries() const { return a_; }

    std::vector<Rational> column(std::size_t j) const;
    std::vector<Rational> row(std::size_t i) const;
    void set_column(std::size_t j, std::span<Rational const> v);

    RationalMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    RationalMatrix& operator+=(RationalMatrix const& o);
    RationalMatrix& operator-=(RationalMatrix const& o);
    RationalMatrix& operator*=(Rational const& s);

    friend RationalMatrix operator+(RationalMatrix a, RationalMatrix const& b) { return a += b; }
    friend RationalMatrix operator-(RationalMatrix a, RationalMatrix const& b) { return a -= b; }
    friend RationalMatrix operator*(RationalMatrix a, Rational const& s) { return a *= s; }
    friend RationalMatrix operator*(Rational const& s, RationalMatrix a) { return a *= s; }
    friend RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b);
    friend bool operator==(RationalMatrix const&, RationalMatrix const&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, RationalMatrix const& m);

/* Sends e_i to e_{i+1} for i < n and e_n to -(c_0 e_1 + ... + c_{n-1} e_n).
 * Throws errc::not_monic. */
RationalMatrix companion_matrix(IntPolynomial const& f);

/* Throws errc::shape_mismatch. */
RationalMatrix matmul(RationalMatrix const& a, RationalMatrix const& b);

std::vector<Rational> apply(RationalMatrix const& m, std::span<Rational const> v);

/* Gauss-Jordan over Q. Throws errc::singular, errc::shape_mismatch. */
RationalMatrix inverse(RationalMatrix const& m);

/* Bareiss elimination on the integer matrix obtained by clearing row
 * denominators. Throws errc::shape_mismatch. */
Rational determinant(RationalMatrix const& m);

/* T^t Q T = diag(entries), T invertible. */
struct DiagonalForm {
    std::vector<Rational> entries;
    RationalMatrix witness;
};

/* Symmetric Gaussian elimination. A zero pivot is first replaced by a
 * later nonzero diagonal entry (swap); if the trailing diagonal is all
 * zero, row/column j is added into row/column k. Degenerate forms give
 * zero diagonal entries. Throws errc::shape_mismatch when Q is not
 * symmetric. */
DiagonalForm congruence_diagonalize(RationalMatrix const& q);

/* Number of congruence_diagonalize calls so far in this process. Each one
 * checked T^t Q T == diag before returning. */
std::uint64_t verified_diagonalizations();

/* Signed squarefree s with r/s a nonzero rational square. Throws
 * errc::zero_input, errc::unfactored. */
Integer squarefree_class(Rational const& r);

}  // namespace hyperform

#endif /* HYPERFORM_EXACT_LINALG_HPP_ */
