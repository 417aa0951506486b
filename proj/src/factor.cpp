#include "hyperform/factor.hpp"

#include "hyperform/error.hpp"

#include <map>
#include <mutex>

namespace hyperform {

std::vector<std::uint32_t> const& primes_up_to(std::uint32_t bound)
{
    static std::mutex mutex;
    static std::map<std::uint32_t, std::vector<std::uint32_t>> cache;

    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.try_emplace(bound);
    if (inserted && bound >= 2) {
        std::vector<bool> composite(bound + 1, false);
        for (std::uint64_t i = 2; i <= bound; ++i) {
            if (composite[i])
                continue;
            it->second.push_back(static_cast<std::uint32_t>(i));
            for (std::uint64_t j = i * i; j <= bound; j += i)
                composite[j] = true;
        }
    }
    return it->second;
}

bool is_prime(unsigned long n)
{
    if (n < 2)
        return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(Integer const& n, std::uint32_t bound)
{
    if (n == 0)
        throw error(errc::zero_input, "cannot factor zero");
    Integer m = abs(n);
    std::vector<std::pair<Integer, unsigned>> out;
    for (auto p : primes_up_to(bound)) {
        if (m == 1)
            break;
        if (Integer(p) * p > m)
            break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e)
            out.emplace_back(Integer(p), e);
    }
    if (m != 1) {
        Integer limit = Integer(bound) * bound;
        if (m > limit)
            throw error(errc::unfactored, "cofactor " + m.get_str() + " exceeds the trial division bound");
        out.emplace_back(m, 1);
    }
    return out;
}

Valuation split_valuation(Integer const& n, unsigned long p)
{
    if (n == 0)
        throw error(errc::zero_input, "valuation of zero");
    Valuation v{0, n};
    while (mpz_divisible_ui_p(v.unit.get_mpz_t(), p)) {
        mpz_divexact_ui(v.unit.get_mpz_t(), v.unit.get_mpz_t(), p);
        ++v.exponent;
    }
    return v;
}

long valuation(Rational const& r, unsigned long p)
{
    if (r == 0)
        throw error(errc::zero_input, "valuation of zero");
    return static_cast<long>(split_valuation(r.get_num(), p).exponent) -
           static_cast<long>(split_valuation(r.get_den(), p).exponent);
}

}  // namespace hyperform
