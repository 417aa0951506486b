#ifndef HYPERFORM_FINITE_GROUP_HPP_
#define HYPERFORM_FINITE_GROUP_HPP_

#include "hyperform/exact_linalg.hpp"

#include <cstddef>
#include <vector>

namespace hyperform {

/* Square integer matrix, row-major. */
class IntMatrix {
  public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n);
    static IntMatrix identity(std::size_t n);
    /* Throws errc::shape_mismatch if m is not square with integral entries. */
    static IntMatrix from_rational(RationalMatrix const& m);

    std::size_t dim() const { return n_; }
    Integer& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    Integer const& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    RationalMatrix to_rational() const;
    Integer determinant() const;
    /* Adjugate divided by the determinant; throws errc::singular unless
     * det = +-1. */
    IntMatrix unimodular_inverse() const;

    std::size_t hash() const;

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<Integer> a_;
};

inline constexpr std::size_t default_max_elements = 1'000'000;

/* All elements of <A, B>, breadth first from the identity using A, B,
 * A^{-1}, B^{-1}. Throws errc::bound_exceeded past max_elements. */
std::vector<IntMatrix> enumerate_group(std::vector<IntMatrix> const& generators,
                                       std::size_t max_elements = default_max_elements);

std::size_t group_order(IntMatrix const& a, IntMatrix const& b,
                        std::size_t max_elements = default_max_elements);

}  // namespace hyperform

#endif /* HYPERFORM_FINITE_GROUP_HPP_ */
