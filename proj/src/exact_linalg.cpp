#include "hyperform/exact_linalg.hpp"

#include "hyperform/error.hpp"
#include "hyperform/factor.hpp"

#include <atomic>
#include <ostream>
#include <string>
#include <utility>

namespace hyperform {

namespace {

std::string shape(RationalMatrix const& m)
{
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_square(RationalMatrix const& m, char const* op)
{
    if (!m.is_square())
        throw error(errc::shape_mismatch, std::string(op) + " needs a square matrix, got " + shape(m));
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries))
{
    if (a_.size() != rows * cols)
        throw error(errc::shape_mismatch, "entry count does not match " + shape(*this));
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    for (auto const& r : rows) {
        if (r.size() != cols_)
            throw error(errc::shape_mismatch, "ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<Rational const> d)
{
    RationalMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

std::vector<Rational> RationalMatrix::column(std::size_t j) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, j);
    return v;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const
{
    return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_};
}

void RationalMatrix::set_column(std::size_t j, std::span<Rational const> v)
{
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) = v[i];
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool RationalMatrix::is_symmetric() const
{
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool RationalMatrix::is_zero() const
{
    for (auto const& x : a_)
        if (x != 0)
            return false;
    return true;
}

RationalMatrix& RationalMatrix::operator+=(RationalMatrix const& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error(errc::shape_mismatch, "cannot add " + shape(*this) + " and " + shape(o));
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(RationalMatrix const& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw error(errc::shape_mismatch, "cannot subtract " + shape(o) + " from " + shape(*this));
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(Rational const& s)
{
    for (auto& x : a_)
        x *= s;
    return *this;
}

RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b)
{
    return matmul(a, b);
}

std::ostream& operator<<(std::ostream& os, RationalMatrix const& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

RationalMatrix companion_matrix(IntPolynomial const& f)
{
    if (!f.is_monic() || f.degree() < 1)
        throw error(errc::not_monic, f.to_string() + " is not monic of positive degree");
    auto const n = static_cast<std::size_t>(f.degree());
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        a(i + 1, i) = 1;
    for (std::size_t i = 0; i < n; ++i)
        a(i, n - 1) = Rational(-f.coeff(i));
    return a;
}

RationalMatrix matmul(RationalMatrix const& a, RationalMatrix const& b)
{
    if (a.cols() != b.rows())
        throw error(errc::shape_mismatch, "cannot multiply " + shape(a) + " by " + shape(b));
    RationalMatrix c(a.rows(), b.cols());
    Rational t;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                t = a(i, k) * b(k, j);
                c(i, j) += t;
            }
        }
    return c;
}

std::vector<Rational> apply(RationalMatrix const& m, std::span<Rational const> v)
{
    if (m.cols() != v.size())
        throw error(errc::shape_mismatch, "vector length does not match " + shape(m));
    std::vector<Rational> r(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i] += m(i, j) * v[j];
    return r;
}

RationalMatrix inverse(RationalMatrix const& m)
{
    require_square(m, "inverse");
    std::size_t const n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k) == 0)
            ++piv;
        if (piv == n)
            throw error(errc::singular, "matrix is singular");
        if (piv != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
                std::swap(inv(k, j), inv(piv, j));
            }
        Rational const s = 1 / a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) *= s;
            inv(k, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0)
                continue;
            Rational const f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

Rational determinant(RationalMatrix const& m)
{
    require_square(m, "determinant");
    std::size_t const n = m.rows();
    if (n == 0)
        return 1;

    // Scale each row by the lcm of its denominators: det(M) = det(B) / prod(scale).
    std::vector<Integer> b(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            Rational s = m(i, j) * l;
            b[i * n + j] = s.get_num();
        }
    }

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
    return make_rational(sign * at(n - 1, n - 1), scale);
}

namespace {
std::atomic<std::uint64_t> diagonalization_counter{0};
}

DiagonalForm congruence_diagonalize(RationalMatrix const& q)
{
    if (!q.is_symmetric())
        throw error(errc::shape_mismatch, "congruence diagonalization needs a symmetric matrix");
    std::size_t const n = q.rows();
    RationalMatrix m = q;
    RationalMatrix t = RationalMatrix::identity(n);

    // M <- E^t M E and T <- T E for the elementary column operation E that
    // adds c times column src to column dst.
    auto add_into = [&](std::size_t dst, std::size_t src, Rational const& c) {
        for (std::size_t i = 0; i < n; ++i) {
            m(i, dst) += c * m(i, src);
            t(i, dst) += c * t(i, src);
        }
        for (std::size_t j = 0; j < n; ++j)
            m(dst, j) += c * m(src, j);
    };
    auto swap_basis = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(m(i, a), m(i, b));
            std::swap(t(i, a), t(i, b));
        }
        for (std::size_t j = 0; j < n; ++j)
            std::swap(m(a, j), m(b, j));
    };

    for (std::size_t k = 0; k < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t j = k + 1;
            while (j < n && m(j, j) == 0)
                ++j;
            if (j < n) {
                swap_basis(k, j);
            } else {
                j = k + 1;
                while (j < n && m(k, j) == 0)
                    ++j;
                if (j == n)
                    continue;  // row k is already zero
                // m(j, j) == 0 here, so adding column j gives 2 m(k, j) != 0.
                add_into(k, j, 1);
            }
        }
        Rational const pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(k, i) == 0)
                continue;
            add_into(i, k, -m(k, i) / pivot);
        }
    }

    DiagonalForm d{std::vector<Rational>(n), std::move(t)};
    for (std::size_t i = 0; i < n; ++i)
        d.entries[i] = m(i, i);
    if (d.witness.transpose() * q * d.witness != RationalMatrix::diagonal(d.entries))
        throw error(errc::not_invariant, "congruence witness does not reproduce the diagonal");
    diagonalization_counter.fetch_add(1, std::memory_order_relaxed);
    return d;
}

std::uint64_t verified_diagonalizations()
{
    return diagonalization_counter.load(std::memory_order_relaxed);
}

Integer squarefree_class(Rational const& r)
{
    if (r == 0)
        throw error(errc::zero_input, "square class of zero");
    Integer s = sgn(r);
    for (Integer const& part : {Integer(r.get_num()), Integer(r.get_den())}) {
        if (abs(part) == 1)
            continue;
        for (auto const& [p, e] : factor_integer(part))
            if (e % 2 == 1)
                s *= p;
    }
    return s;
}

}  // namespace hyperform
