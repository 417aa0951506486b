#include "hyperform/padic.hpp"

#include "hyperform/error.hpp"
#include "hyperform/factor.hpp"

#include <cstdint>
#include <set>

namespace hyperform {

int InvariantRecord::hasse_at(unsigned long p) const
{
    auto it = hasse.find(p);
    return it == hasse.end() ? 1 : it->second;
}

int legendre_symbol(Integer const& a, unsigned long p)
{
    Integer r = a % Integer(p);
    if (r < 0)
        r += p;
    if (r == 0)
        return 0;
    Integer e;
    mpz_powm_ui(e.get_mpz_t(), r.get_mpz_t(), (p - 1) / 2, Integer(p).get_mpz_t());
    return e == 1 ? 1 : -1;
}

namespace {

void check_arguments(Rational const& a, Rational const& b, unsigned long p)
{
    if (a == 0 || b == 0)
        throw error(errc::zero_argument, "Hilbert symbol of zero");
    if (!is_prime(p))
        throw error(errc::not_prime, std::to_string(p) + " is not prime");
}

/* num * den lies in the same square class as the rational. */
Integer integral_representative(Rational const& r)
{
    return r.get_num() * r.get_den();
}

bool residue_mod(Integer const& u, unsigned long m, unsigned long r)
{
    return mpz_fdiv_ui(u.get_mpz_t(), m) == r;
}

}  // namespace

int hilbert_symbol(Rational const& a, Rational const& b, unsigned long p)
{
    check_arguments(a, b, p);
    auto const [alpha, u] = split_valuation(integral_representative(a), p);
    auto const [beta, w] = split_valuation(integral_representative(b), p);

    unsigned long exponent = 0;
    int value = 1;
    if (p == 2) {
        auto eps = [](Integer const& t) -> unsigned long { return residue_mod(t, 4, 3); };
        auto omega = [](Integer const& t) -> unsigned long {
            return residue_mod(t, 8, 3) || residue_mod(t, 8, 5);
        };
        exponent = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    } else {
        exponent = alpha * beta * (((p - 1) / 2) % 2);
        if (beta % 2)
            value *= legendre_symbol(u, p);
        if (alpha % 2)
            value *= legendre_symbol(w, p);
    }
    return exponent % 2 ? -value : value;
}

namespace {

class PrimitiveZeroSearch {
  public:
    PrimitiveZeroSearch(Integer const& a, Integer const& b, unsigned long p, unsigned depth)
        : p_(p), depth_(depth)
    {
        Integer mod = 1;
        for (unsigned k = 0; k < depth; ++k)
            mod *= p;
        top_ = mod.get_si();
        a_ = mpz_fdiv_ui(a.get_mpz_t(), top_);
        b_ = mpz_fdiv_ui(b.get_mpz_t(), top_);
    }

    bool run() const
    {
        auto const p = static_cast<std::int64_t>(p_);
        for (std::int64_t x = 0; x < p; ++x)
            for (std::int64_t y = 0; y < p; ++y)
                for (std::int64_t z = 0; z < p; ++z) {
                    if (x == 0 && y == 0 && z == 0)
                        continue;
                    if (residue(x, y, z, p) == 0 && lift(1, p, x, y, z))
                        return true;
                }
        return false;
    }

  private:
    std::int64_t residue(std::int64_t x, std::int64_t y, std::int64_t z, std::int64_t mod) const
    {
        __int128 v = static_cast<__int128>(a_) * x * x + static_cast<__int128>(b_) * y * y -
                     static_cast<__int128>(z) * z;
        v %= mod;
        return static_cast<std::int64_t>(v < 0 ? v + mod : v);
    }

    /* (x, y, z) is a primitive zero modulo pk = p^level. */
    bool lift(unsigned level, std::int64_t pk, std::int64_t x, std::int64_t y, std::int64_t z) const
    {
        if (level == depth_)
            return true;
        auto const p = static_cast<std::int64_t>(p_);
        std::int64_t const next = pk * p;
        for (std::int64_t i = 0; i < p; ++i)
            for (std::int64_t j = 0; j < p; ++j)
                for (std::int64_t k = 0; k < p; ++k) {
                    std::int64_t const X = x + i * pk, Y = y + j * pk, Z = z + k * pk;
                    if (residue(X, Y, Z, next) == 0 && lift(level + 1, next, X, Y, Z))
                        return true;
                }
        return false;
    }

    unsigned long p_;
    unsigned depth_;
    std::int64_t top_ = 1;
    std::int64_t a_ = 0;
    std::int64_t b_ = 0;
};

Integer strip_square_p_powers(Integer n, unsigned long p)
{
    Integer const p2 = Integer(p) * p;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t()))
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p2.get_mpz_t());
    return n;
}

}  // namespace

int hilbert_symbol_oracle(Rational const& a, Rational const& b, unsigned long p)
{
    check_arguments(a, b, p);
    Integer const a1 = strip_square_p_powers(integral_representative(a), p);
    Integer const b1 = strip_square_p_powers(integral_representative(b), p);
    unsigned const depth = static_cast<unsigned>(split_valuation(4 * a1 * b1, p).exponent) + 3;
    return PrimitiveZeroSearch(a1, b1, p, depth).run() ? 1 : -1;
}

namespace {

void require_nondegenerate(std::span<Rational const> diagonal)
{
    for (auto const& x : diagonal)
        if (x == 0)
            throw error(errc::degenerate, "diagonal form has a zero entry");
}

}  // namespace

int hasse_witt(std::span<Rational const> diagonal, unsigned long p)
{
    require_nondegenerate(diagonal);
    int w = 1;
    for (std::size_t i = 0; i < diagonal.size(); ++i)
        for (std::size_t j = i + 1; j < diagonal.size(); ++j)
            w *= hilbert_symbol(diagonal[i], diagonal[j], p);
    return w;
}

int hasse_witt(DiagonalForm const& d, unsigned long p)
{
    return hasse_witt(d.entries, p);
}

Signature real_signature(std::span<Rational const> diagonal)
{
    require_nondegenerate(diagonal);
    Signature s;
    for (auto const& x : diagonal)
        ++(x > 0 ? s.plus : s.minus);
    return s;
}

Signature real_signature(DiagonalForm const& d)
{
    return real_signature(d.entries);
}

Integer discriminant_class(QuadraticForm const& q)
{
    Rational const det = determinant(q.matrix());
    if (det == 0)
        throw error(errc::degenerate, "form has determinant zero");
    return squarefree_class(det);
}

std::vector<unsigned long> relevant_primes(std::span<Rational const> diagonal)
{
    require_nondegenerate(diagonal);
    std::set<unsigned long> primes{2};
    for (auto const& x : diagonal)
        for (Integer const& part : {Integer(x.get_num()), Integer(x.get_den())}) {
            if (abs(part) == 1)
                continue;
            for (auto const& [p, e] : factor_integer(part))
                primes.insert(p.get_ui());
        }
    return {primes.begin(), primes.end()};
}

std::vector<unsigned long> relevant_primes(DiagonalForm const& d)
{
    return relevant_primes(d.entries);
}

InvariantRecord full_invariants(QuadraticForm const& q, DiagonalForm const& d,
                                InvariantOptions const& options)
{
    require_nondegenerate(d.entries);
    InvariantRecord rec;
    rec.signature = real_signature(d);
    rec.discriminant = discriminant_class(q);
    rec.relevant_primes = relevant_primes(d);

    std::set<unsigned long> primes(rec.relevant_primes.begin(), rec.relevant_primes.end());
    if (options.all_primes_to_bound && options.prime_bound >= 2)
        for (auto p : primes_up_to(static_cast<std::uint32_t>(options.prime_bound)))
            primes.insert(p);
    for (auto p : primes)
        rec.hasse[p] = hasse_witt(d, p);
    return rec;
}

InvariantRecord full_invariants(QuadraticForm const& q, InvariantOptions const& options)
{
    return full_invariants(q, congruence_diagonalize(q.matrix()), options);
}

}  // namespace hyperform
