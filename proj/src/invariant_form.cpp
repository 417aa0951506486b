#include "hyperform/invariant_form.hpp"

#include "hyperform/error.hpp"

namespace hyperform {

QuadraticForm::QuadraticForm(RationalMatrix m) : m_(std::move(m))
{
    if (!m_.is_symmetric())
        throw error(errc::shape_mismatch, "a quadratic form needs a square symmetric matrix");
}

QuadraticForm QuadraticForm::from_first_row(std::span<Rational const> row)
{
    std::size_t const n = row.size();
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = row[i > j ? i - j : j - i];
    return QuadraticForm(std::move(m));
}

QuadraticForm QuadraticForm::from_first_row(std::initializer_list<long> row)
{
    std::vector<Rational> r;
    for (long x : row)
        r.emplace_back(x);
    return from_first_row(r);
}

QuadraticForm QuadraticForm::identity(std::size_t n)
{
    return QuadraticForm(RationalMatrix::identity(n));
}

bool QuadraticForm::is_toeplitz() const
{
    for (std::size_t i = 0; i < m_.rows(); ++i)
        for (std::size_t j = 0; j < m_.cols(); ++j)
            if (m_(i, j) != m_(0, i > j ? i - j : j - i))
                return false;
    return true;
}

QuadraticForm QuadraticForm::scaled(Rational const& lambda) const
{
    return QuadraticForm(m_ * lambda);
}

bool preserves(RationalMatrix const& g, QuadraticForm const& q)
{
    return g.transpose() * q.matrix() * g == q.matrix();
}

FormConstruction construct_invariant_form(RationalMatrix const& a, RationalMatrix const& b)
{
    if (!a.is_square() || a.rows() != b.rows() || !b.is_square())
        throw error(errc::shape_mismatch, "generators must be square of equal size");
    std::size_t const n = a.rows();

    FormConstruction fc;
    fc.c = inverse(a) * b;
    fc.v = (fc.c - RationalMatrix::identity(n)).column(n - 1);

    // Columns v, Av, ..., A^{n-1}v; q(v, A^j v) is the e_n coordinate of A^j v.
    fc.orbit_basis = RationalMatrix(n, n);
    std::vector<Rational> w = fc.v;
    for (std::size_t j = 0; j < n; ++j) {
        fc.orbit_basis.set_column(j, w);
        fc.moments.push_back(w[n - 1]);
        w = hyperform::apply(a, w);
    }
    if (determinant(fc.orbit_basis) == 0)
        throw error(errc::dependent_orbit, "v, Av, ..., A^(n-1)v are linearly dependent");

    RationalMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            gram(i, j) = fc.moments[i > j ? i - j : j - i];

    RationalMatrix const p_inv = inverse(fc.orbit_basis);
    fc.form = QuadraticForm(p_inv.transpose() * gram * p_inv);

    if (!fc.form.is_toeplitz())
        throw error(errc::not_invariant, "constructed form is not Toeplitz");
    if (!preserves(a, fc.form))
        throw error(errc::not_invariant, "A does not preserve the constructed form");
    if (!preserves(b, fc.form))
        throw error(errc::not_invariant, "B does not preserve the constructed form");
    if (determinant(fc.form.matrix()) == 0)
        throw error(errc::degenerate, "constructed form is degenerate");
    return fc;
}

QuadraticForm invariant_quadratic_form(RationalMatrix const& a, RationalMatrix const& b)
{
    return construct_invariant_form(a, b).form;
}

QuadraticForm primitive_integral_representative(QuadraticForm const& q)
{
    Integer den = 1;
    for (auto const& x : q.matrix().entries())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
    Integer content = 0;
    for (auto const& x : q.matrix().entries()) {
        Rational s = x * den;
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num_mpz_t());
    }
    if (content == 0)
        return q;
    return q.scaled(make_rational(den, content));
}

std::vector<Integer> primitive_first_row(QuadraticForm const& q)
{
    std::vector<Integer> row;
    for (auto const& x : primitive_integral_representative(q).first_row())
        row.push_back(x.get_num());
    return row;
}

bool forms_equal_up_to_scalar(QuadraticForm const& q1, QuadraticForm const& q2)
{
    if (q1.dimension() != q2.dimension())
        return false;
    auto const e1 = q1.matrix().entries();
    auto const e2 = q2.matrix().entries();
    for (std::size_t k = 0; k < e1.size(); ++k) {
        if (e1[k] == 0 && e2[k] == 0)
            continue;
        if (e1[k] == 0 || e2[k] == 0)
            return false;
        return q1.matrix() == q2.matrix() * Rational(e1[k] / e2[k]);
    }
    return true;
}

}  // namespace hyperform
