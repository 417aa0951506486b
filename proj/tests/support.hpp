#ifndef HYPERFORM_TESTS_SUPPORT_HPP_
#define HYPERFORM_TESTS_SUPPORT_HPP_

// Helpers shared by the test binaries. Everything here is written
// independently of the library routines it is used to check.

#include "hyperform/catalog.hpp"
#include "hyperform/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#ifndef HYPERFORM_DEFAULT_CATALOG
#define HYPERFORM_DEFAULT_CATALOG "data/catalog.jsonl"
#endif

namespace testing {

using hyperform::Integer;
using hyperform::Rational;
using hyperform::RationalMatrix;

inline std::vector<hyperform::CatalogEntry> const& default_catalog()
{
    static auto const entries = hyperform::load_catalog(HYPERFORM_DEFAULT_CATALOG);
    return entries;
}

// Plain triple loop.
inline RationalMatrix naive_product(RationalMatrix const& a, RationalMatrix const& b)
{
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

inline RationalMatrix congruent(RationalMatrix const& q, RationalMatrix const& t)
{
    return naive_product(naive_product(t.transpose(), q), t);
}

// Cofactor expansion along the first row.
inline Rational laplace_determinant(RationalMatrix const& m)
{
    std::size_t const n = m.rows();
    if (n == 1)
        return m(0, 0);
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0)
            continue;
        RationalMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor(i - 1, jj++) = m(i, j);
        Rational const term = m(0, c) * laplace_determinant(minor);
        det += c % 2 ? -term : term;
    }
    return det;
}

// Faddeev-LeVerrier: coefficients of det(xI - M), index i = coefficient of x^i.
inline std::vector<Rational> characteristic_polynomial(RationalMatrix const& m)
{
    std::size_t const n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next = naive_product(m, mk);
        for (std::size_t i = 0; i < n; ++i)
            next(i, i) += c[n - k + 1];
        mk = next;
        RationalMatrix const am = naive_product(m, mk);
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            tr += am(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
    }
    return c;
}

// prod (x - exp(2 pi i a_j)) in long double, rounded to integers.
inline std::vector<long> numeric_parameter_polynomial(std::span<Rational const> params)
{
    using C = std::complex<long double>;
    std::vector<C> p = {C(1)};
    for (auto const& a : params) {
        long double const t = 2 * std::numbers::pi_v<long double> * a.get_d();
        C const root = std::polar<long double>(1, t);
        std::vector<C> q(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            q[i + 1] += p[i];
            q[i] -= root * p[i];
        }
        p = q;
    }
    std::vector<long> out;
    for (auto const& z : p)
        out.push_back(std::lround(static_cast<double>(z.real())));
    return out;
}

// Strict alternation of the two sorted lists, by merging tagged values.
inline bool alternates(std::vector<Rational> a, std::vector<Rational> b)
{
    std::vector<std::pair<Rational, int>> all;
    for (auto const& x : a)
        all.emplace_back(x, 0);
    for (auto const& x : b)
        all.emplace_back(x, 1);
    std::sort(all.begin(), all.end());
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].first == all[i - 1].first || all[i].second == all[i - 1].second)
            return false;
    return true;
}

}  // namespace testing

#endif /* HYPERFORM_TESTS_SUPPORT_HPP_ */
