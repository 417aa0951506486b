#ifndef HYPERFORM_CYCLOTOMIC_HPP_
#define HYPERFORM_CYCLOTOMIC_HPP_

#include "hyperform/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace hyperform {

/* Dense integer polynomial, coefficient i is the coefficient of x^i.
 * Trailing zero coefficients are stripped, so the zero polynomial has an
 * empty coefficient vector and degree -1. */
class IntPolynomial {
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial monomial(unsigned degree, Integer coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    /* Coefficient of x^i, zero beyond the degree. */
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    std::span<Integer const> coefficients() const { return coeffs_; }

    Integer constant_term() const { return coeff(0); }

    IntPolynomial& operator+=(IntPolynomial const& o);
    IntPolynomial& operator-=(IntPolynomial const& o);
    IntPolynomial& operator*=(IntPolynomial const& o);

    friend IntPolynomial operator+(IntPolynomial a, IntPolynomial const& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, IntPolynomial const& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, IntPolynomial const& b) { return a *= b; }
    friend bool operator==(IntPolynomial const&, IntPolynomial const&) = default;

    IntPolynomial pow(unsigned e) const;

    std::string to_string(char var = 'x') const;

  private:
    void normalize();
    std::vector<Integer> coeffs_;
};

struct DivisionResult {
    IntPolynomial quotient;
    IntPolynomial remainder;
};

/* Euclidean division by a monic divisor; stays in Z[x]. */
DivisionResult divide_by_monic(IntPolynomial const& dividend, IntPolynomial const& divisor);

/* Monic gcd over Q[x], returned with integer coefficients scaled to be
 * primitive with positive leading coefficient. */
IntPolynomial polynomial_gcd(IntPolynomial const& a, IntPolynomial const& b);

/* Euler's phi. */
unsigned long totient(unsigned long n);

/* Phi_n by exact division of x^n - 1 by the Phi_d, d | n, d < n. Memoized;
 * safe to call from several threads. */
IntPolynomial const& cyclotomic_polynomial(unsigned long n);

/* A multiset of hypergeometric parameters, reduced into [0, 1) and sorted. */
class ParameterVector {
  public:
    ParameterVector() = default;
    explicit ParameterVector(std::vector<Rational> entries);

    /* Comma separated rationals, e.g. "0,1/5,2/5,3/5,4/5". */
    static ParameterVector parse(std::string_view text);

    std::size_t size() const { return entries_.size(); }
    std::span<Rational const> entries() const { return entries_; }
    Rational const& operator[](std::size_t i) const { return entries_[i]; }

    std::string to_string() const;
    friend bool operator==(ParameterVector const&, ParameterVector const&) = default;

  private:
    std::vector<Rational> entries_;
};

/* prod_j (X - exp(2 pi i alpha_j)), assembled from cyclotomic factors.
 * Throws errc::not_cyclotomic_product. */
IntPolynomial parameters_to_polynomial(ParameterVector const& p);

/* Inverse of parameters_to_polynomial: factor a product of cyclotomic
 * polynomials and list the k/d of its roots. Throws
 * errc::not_cyclotomic_product. */
ParameterVector polynomial_to_parameters(IntPolynomial const& f);

/* Strict alternation alpha_1 < beta_1 < ... or beta_1 < alpha_1 < ...
 * Throws errc::shared_value when some alpha_j == beta_k. */
bool interlaces(ParameterVector const& alpha, ParameterVector const& beta);

enum class PairKind { orthogonal, symplectic, finite, inadmissible };

std::string_view to_string(PairKind kind);

struct PairClassification {
    bool has_common_root = false;
    bool is_primitive_pair = false;
    int constant_ratio = 0;  // f(0)/g(0) when it is +-1, otherwise 0
    bool interlaces = false;
    PairKind kind = PairKind::inadmissible;
    std::string reason;  // why the pair is inadmissible, empty otherwise
};

/* No k >= 2 with f(x) = f1(x^k) and g(x) = g1(x^k). */
bool is_primitive_pair(IntPolynomial const& f, IntPolynomial const& g);

PairClassification validate_pair(IntPolynomial const& f, IntPolynomial const& g);

}  // namespace hyperform

#endif /* HYPERFORM_CYCLOTOMIC_HPP_ */
