#include "hyperform/finite_group.hpp"

#include "hyperform/error.hpp"

#include <deque>
#include <functional>
#include <unordered_set>

namespace hyperform {

IntMatrix::IntMatrix(std::size_t n) : n_(n), a_(n * n) {}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rational(RationalMatrix const& m)
{
    if (!m.is_square())
        throw error(errc::shape_mismatch, "group elements must be square");
    IntMatrix r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).get_den() != 1)
                throw error(errc::shape_mismatch, "matrix entry " + m(i, j).get_str() + " is not integral");
            r(i, j) = m(i, j).get_num();
        }
    return r;
}

RationalMatrix IntMatrix::to_rational() const
{
    RationalMatrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(i, j) = Rational((*this)(i, j));
    return m;
}

namespace {

/* Bareiss elimination on a copy. */
Integer bareiss(std::vector<Integer> b, std::size_t n)
{
    if (n == 0)
        return 1;
    auto at = [&b, n](std::size_t i, std::size_t j) -> Integer& { return b[i * n + j]; };
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && at(piv, k) == 0)
                ++piv;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(at(k, j), at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = at(k, k);
    }
    return sign * at(n - 1, n - 1);
}

}  // namespace

Integer IntMatrix::determinant() const
{
    return bareiss(a_, n_);
}

IntMatrix IntMatrix::unimodular_inverse() const
{
    Integer const det = determinant();
    if (det != 1 && det != -1)
        throw error(errc::singular, "determinant " + det.get_str() + " is not +-1");
    IntMatrix inv(n_);
    std::vector<Integer> minor((n_ - 1) * (n_ - 1));
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) {
            std::size_t k = 0;
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    if (i != r && j != c)
                        minor[k++] = (*this)(i, j);
            Integer cof = bareiss(minor, n_ - 1);
            if ((r + c) % 2)
                cof = -cof;
            inv(c, r) = cof * det;  // adj / det with det = +-1
        }
    return inv;
}

std::size_t IntMatrix::hash() const
{
    std::size_t h = n_;
    for (auto const& x : a_)
        h = h * 1000003u ^ std::hash<long>{}(mpz_get_si(x.get_mpz_t()));
    return h;
}

IntMatrix operator*(IntMatrix const& a, IntMatrix const& b)
{
    if (a.n_ != b.n_)
        throw error(errc::shape_mismatch, "cannot multiply matrices of different size");
    std::size_t const n = a.n_;
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            Integer const& x = a(i, k);
            if (x == 0)
                continue;
            for (std::size_t j = 0; j < n; ++j)
                mpz_addmul(c(i, j).get_mpz_t(), x.get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

std::vector<IntMatrix> enumerate_group(std::vector<IntMatrix> const& generators, std::size_t max_elements)
{
    if (generators.empty())
        throw error(errc::shape_mismatch, "no generators");
    std::vector<IntMatrix> steps;
    for (auto const& g : generators) {
        steps.push_back(g);
        steps.push_back(g.unimodular_inverse());
    }

    struct Hasher {
        std::size_t operator()(IntMatrix const& m) const { return m.hash(); }
    };
    std::unordered_set<IntMatrix, Hasher> seen;
    std::vector<IntMatrix> elements;
    std::deque<IntMatrix> queue;

    IntMatrix const one = IntMatrix::identity(generators.front().dim());
    seen.insert(one);
    elements.push_back(one);
    queue.push_back(one);
    while (!queue.empty()) {
        IntMatrix const g = std::move(queue.front());
        queue.pop_front();
        for (auto const& s : steps) {
            IntMatrix h = g * s;
            if (!seen.insert(h).second)
                continue;
            if (elements.size() >= max_elements)
                throw error(errc::bound_exceeded,
                            "group has more than " + std::to_string(max_elements) + " elements");
            elements.push_back(h);
            queue.push_back(std::move(h));
        }
    }
    return elements;
}

std::size_t group_order(IntMatrix const& a, IntMatrix const& b, std::size_t max_elements)
{
    return enumerate_group({a, b}, max_elements).size();
}

}  // namespace hyperform
