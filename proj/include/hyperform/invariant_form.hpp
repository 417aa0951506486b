#ifndef HYPERFORM_INVARIANT_FORM_HPP_
#define HYPERFORM_INVARIANT_FORM_HPP_

#include "hyperform/exact_linalg.hpp"

#include <vector>

namespace hyperform {

/* A rational quadratic form given by its symmetric Gram matrix. Forms
 * preserved by hypergeometric groups are Toeplitz: Q[i][j] = row[|i-j|]. */
class QuadraticForm {
  public:
    QuadraticForm() = default;

    /* Throws errc::shape_mismatch unless m is square and symmetric. */
    explicit QuadraticForm(RationalMatrix m);

    static QuadraticForm from_first_row(std::span<Rational const> row);
    static QuadraticForm from_first_row(std::initializer_list<long> row);
    static QuadraticForm identity(std::size_t n);

    std::size_t dimension() const { return m_.rows(); }
    RationalMatrix const& matrix() const { return m_; }
    std::vector<Rational> first_row() const { return m_.row(0); }
    bool is_toeplitz() const;

    QuadraticForm scaled(Rational const& lambda) const;

    friend bool operator==(QuadraticForm const&, QuadraticForm const&) = default;

  private:
    RationalMatrix m_;
};

/* The form preserved by <A, B>, normalized by q(v, e_n) = 1 where v is the
 * last column of A^{-1}B - I. Throws errc::dependent_orbit,
 * errc::not_invariant, errc::degenerate. */
QuadraticForm invariant_quadratic_form(RationalMatrix const& a, RationalMatrix const& b);

/* Intermediate data of the construction, exposed for verification. */
struct FormConstruction {
    RationalMatrix c;                  // A^{-1} B
    std::vector<Rational> v;           // last column of C - I
    std::vector<Rational> moments;     // q(v, A^j v), j = 0..n-1
    RationalMatrix orbit_basis;        // columns v, Av, ..., A^{n-1} v
    QuadraticForm form;
};
FormConstruction construct_invariant_form(RationalMatrix const& a, RationalMatrix const& b);

/* lambda * Q with lambda > 0 chosen so the entries are coprime integers. */
QuadraticForm primitive_integral_representative(QuadraticForm const& q);

/* Integer first row of primitive_integral_representative(q). */
std::vector<Integer> primitive_first_row(QuadraticForm const& q);

/* Q1 = lambda Q2 for some nonzero rational lambda. */
bool forms_equal_up_to_scalar(QuadraticForm const& q1, QuadraticForm const& q2);

/* A^t Q A == Q. */
bool preserves(RationalMatrix const& g, QuadraticForm const& q);

}  // namespace hyperform

#endif /* HYPERFORM_INVARIANT_FORM_HPP_ */
