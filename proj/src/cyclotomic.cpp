#include "hyperform/cyclotomic.hpp"

#include "hyperform/error.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hyperform {

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

IntPolynomial IntPolynomial::monomial(unsigned degree, Integer coeff)
{
    std::vector<Integer> c(degree + 1);
    c[degree] = std::move(coeff);
    return IntPolynomial(std::move(c));
}

void IntPolynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(IntPolynomial const& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(IntPolynomial const& o)
{
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(IntPolynomial const& o)
{
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            r[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(r);
    normalize();
    return *this;
}

IntPolynomial IntPolynomial::pow(unsigned e) const
{
    IntPolynomial r{1};
    for (unsigned i = 0; i < e; ++i)
        r *= *this;
    return r;
}

std::string IntPolynomial::to_string(char var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer const& c = coeffs_[i];
        if (c == 0)
            continue;
        Integer a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (a != 1 || i == 0)
            os << a;
        if (i >= 1)
            os << var;
        if (i >= 2)
            os << '^' << i;
    }
    return os.str();
}

DivisionResult divide_by_monic(IntPolynomial const& dividend, IntPolynomial const& divisor)
{
    if (!divisor.is_monic())
        throw error(errc::not_monic, "divisor " + divisor.to_string() + " is not monic");
    std::vector<Integer> rem(dividend.coefficients().begin(), dividend.coefficients().end());
    int const dd = divisor.degree();
    int const n = dividend.degree();
    if (n < dd)
        return {IntPolynomial{}, dividend};
    std::vector<Integer> quo(n - dd + 1);
    for (int k = n - dd; k >= 0; --k) {
        Integer c = rem[k + dd];
        quo[k] = c;
        if (c == 0)
            continue;
        for (int i = 0; i <= dd; ++i)
            rem[k + i] -= c * divisor.coeff(i);
    }
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

namespace {

using RatPoly = std::vector<Rational>;

void strip(RatPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

RatPoly rat_remainder(RatPoly a, RatPoly const& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a.pop_back();
        strip(a);
    }
    return a;
}

}  // namespace

IntPolynomial polynomial_gcd(IntPolynomial const& a, IntPolynomial const& b)
{
    RatPoly x, y;
    for (auto const& c : a.coefficients())
        x.emplace_back(c);
    for (auto const& c : b.coefficients())
        y.emplace_back(c);
    while (!y.empty()) {
        RatPoly r = rat_remainder(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty())
        return {};
    Integer den = 1;
    for (auto const& c : x)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> ic;
    Integer content = 0;
    for (auto const& c : x) {
        Rational s = c * den;
        ic.push_back(s.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), s.get_num_mpz_t());
    }
    if (ic.back() < 0)
        content = -content;
    for (auto& c : ic)
        mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return IntPolynomial(std::move(ic));
}

unsigned long totient(unsigned long n)
{
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        while (n % p == 0)
            n /= p;
        result -= result / p;
    }
    if (n > 1)
        result -= result / n;
    return result;
}

IntPolynomial const& cyclotomic_polynomial(unsigned long n)
{
    static std::mutex mutex;
    static std::map<unsigned long, IntPolynomial> memo;

    if (n == 0)
        throw error(errc::zero_input, "cyclotomic polynomial of order 0");
    {
        std::lock_guard lock(mutex);
        if (auto it = memo.find(n); it != memo.end())
            return it->second;
    }
    IntPolynomial p = IntPolynomial::monomial(n) - IntPolynomial{1};
    for (unsigned long d = 1; d < n; ++d) {
        if (n % d)
            continue;
        auto [q, r] = divide_by_monic(p, cyclotomic_polynomial(d));
        p = std::move(q);
    }
    std::lock_guard lock(mutex);
    return memo.try_emplace(n, std::move(p)).first->second;
}

ParameterVector::ParameterVector(std::vector<Rational> entries) : entries_(std::move(entries))
{
    for (auto& e : entries_)
        e = reduce_mod_one(e);
    std::sort(entries_.begin(), entries_.end());
}

ParameterVector ParameterVector::parse(std::string_view text)
{
    std::vector<Rational> v;
    std::size_t start = 0;
    while (true) {
        auto comma = text.find(',', start);
        v.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return ParameterVector(std::move(v));
}

std::string ParameterVector::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            s += ", ";
        s += hyperform::to_string(entries_[i]);
    }
    return s + ")";
}

IntPolynomial parameters_to_polynomial(ParameterVector const& p)
{
    // denominator -> numerator -> multiplicity
    std::map<unsigned long, std::map<unsigned long, unsigned>> groups;
    for (auto const& r : p.entries()) {
        if (!r.get_den().fits_ulong_p())
            throw error(errc::not_cyclotomic_product, "denominator of " + to_string(r) + " too large");
        ++groups[r.get_den().get_ui()][r.get_num().get_ui()];
    }
    IntPolynomial f{1};
    for (auto const& [d, numerators] : groups) {
        unsigned long const units = totient(d);
        unsigned const mult = numerators.begin()->second;
        bool whole = numerators.size() == units;
        for (auto const& [k, m] : numerators)
            whole = whole && m == mult;
        if (!whole)
            throw error(errc::not_cyclotomic_product,
                        "parameters with denominator " + std::to_string(d) +
                            " do not form whole Galois orbits in " + p.to_string());
        f *= cyclotomic_polynomial(d).pow(mult);
    }
    return f;
}

ParameterVector polynomial_to_parameters(IntPolynomial const& f)
{
    if (!f.is_monic())
        throw error(errc::not_cyclotomic_product, f.to_string() + " is not monic");
    IntPolynomial rest = f;
    std::vector<Rational> params;
    unsigned long const n = static_cast<unsigned long>(f.degree());
    for (unsigned long d = 1; d <= 2 * n * n + 2 && rest.degree() > 0; ++d) {
        if (totient(d) > static_cast<unsigned long>(rest.degree()))
            continue;
        while (rest.degree() > 0) {
            auto [q, r] = divide_by_monic(rest, cyclotomic_polynomial(d));
            if (!r.is_zero())
                break;
            rest = std::move(q);
            for (unsigned long k = 0; k < d; ++k)
                if (std::gcd(k, d) == 1)
                    params.push_back(make_rational(Integer(k), Integer(d)));
        }
    }
    if (rest != IntPolynomial{1})
        throw error(errc::not_cyclotomic_product, f.to_string() + " is not a product of cyclotomic polynomials");
    return ParameterVector(std::move(params));
}

bool interlaces(ParameterVector const& alpha, ParameterVector const& beta)
{
    struct Tagged {
        Rational value;
        bool is_alpha;
    };
    std::vector<Tagged> all;
    for (auto const& a : alpha.entries())
        all.push_back({a, true});
    for (auto const& b : beta.entries()) {
        for (auto const& a : alpha.entries())
            if (a == b)
                throw error(errc::shared_value, "parameter " + to_string(a) + " occurs in both alpha and beta");
        all.push_back({b, false});
    }
    if (alpha.size() != beta.size())
        return false;
    std::stable_sort(all.begin(), all.end(),
                     [](Tagged const& x, Tagged const& y) { return x.value < y.value; });
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].is_alpha == all[i - 1].is_alpha)
            return false;
    return true;
}

std::string_view to_string(PairKind kind)
{
    switch (kind) {
        case PairKind::orthogonal: return "Orthogonal";
        case PairKind::symplectic: return "Symplectic";
        case PairKind::finite: return "Finite";
        case PairKind::inadmissible: return "Inadmissible";
    }
    return "Inadmissible";
}

bool is_primitive_pair(IntPolynomial const& f, IntPolynomial const& g)
{
    int const top = std::max(f.degree(), g.degree());
    for (int k = 2; k <= top; ++k) {
        bool in_x_to_k = true;
        for (auto const* p : {&f, &g})
            for (int i = 0; i <= p->degree(); ++i)
                if (i % k != 0 && p->coeff(i) != 0)
                    in_x_to_k = false;
        if (in_x_to_k)
            return false;
    }
    return true;
}

PairClassification validate_pair(IntPolynomial const& f, IntPolynomial const& g)
{
    PairClassification c;
    auto reject = [&c](std::string why) {
        c.kind = PairKind::inadmissible;
        c.reason = std::move(why);
        return c;
    };

    c.has_common_root = polynomial_gcd(f, g).degree() > 0;
    c.is_primitive_pair = is_primitive_pair(f, g);
    Integer const f0 = f.constant_term(), g0 = g.constant_term();
    if (abs(f0) == 1 && abs(g0) == 1)
        c.constant_ratio = f0 == g0 ? 1 : -1;

    if (!f.is_monic() || !g.is_monic())
        return reject("polynomials must be monic");
    if (f.degree() != g.degree())
        return reject("polynomials have different degrees");
    if (c.has_common_root)
        return reject("f and g have a common root");
    if (c.constant_ratio == 0)
        return reject("constant terms are not +-1");
    try {
        c.interlaces = interlaces(polynomial_to_parameters(f), polynomial_to_parameters(g));
    } catch (error const& e) {
        return reject(e.what());
    }

    // Interlacing roots give a finite group whether or not the pair is
    // primitive (x^5 - 1 against x^5 + 1 generates a group of order 160).
    if (c.interlaces)
        c.kind = PairKind::finite;
    else if (!c.is_primitive_pair)
        return reject("f and g are not a primitive pair");
    else if (c.constant_ratio == -1)
        c.kind = PairKind::orthogonal;
    else if (f.degree() % 2 == 0)
        c.kind = PairKind::symplectic;
    else
        return reject("f(0)/g(0) = +1 in odd degree");
    return c;
}

}  // namespace hyperform
