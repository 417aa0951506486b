#include "hyperform/rational.hpp"

#include "hyperform/error.hpp"

#include <cctype>

namespace hyperform {

std::string_view to_string(errc code)
{
    switch (code) {
        case errc::not_cyclotomic_product: return "NotCyclotomicProduct";
        case errc::shared_value: return "SharedValue";
        case errc::not_monic: return "NotMonic";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::singular: return "Singular";
        case errc::zero_input: return "ZeroInput";
        case errc::unfactored: return "Unfactored";
        case errc::dependent_orbit: return "DependentOrbit";
        case errc::not_invariant: return "NotInvariant";
        case errc::degenerate: return "Degenerate";
        case errc::zero_argument: return "ZeroArgument";
        case errc::not_prime: return "NotPrime";
        case errc::zero_scalar: return "ZeroScalar";
        case errc::bound_exceeded: return "BoundExceeded";
        case errc::parse_error: return "ParseError";
        case errc::duplicate_id: return "DuplicateId";
        case errc::bad_rational: return "BadRational";
    }
    return "UnknownError";
}

Rational make_rational(Integer num, Integer den)
{
    if (den == 0)
        throw error(errc::bad_rational, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool parse_integer(std::string_view s, Integer& out)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+'))
        ++i;
    if (i == s.size())
        return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            return false;
    std::string digits(s.substr(s[0] == '+' ? 1 : 0));
    return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto s = trim(text);
    Integer num, den = 1;
    auto slash = s.find('/');
    bool ok = slash == std::string_view::npos
                  ? parse_integer(s, num)
                  : parse_integer(trim(s.substr(0, slash)), num) &&
                        parse_integer(trim(s.substr(slash + 1)), den);
    if (!ok || den == 0)
        throw error(errc::bad_rational, "cannot parse '" + std::string(text) + "' as a rational");
    return make_rational(num, den);
}

std::string to_string(Rational const& r)
{
    return r.get_str();
}

Rational reduce_mod_one(Rational const& r)
{
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return r - Rational(fl);
}

}  // namespace hyperform
