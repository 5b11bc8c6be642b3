#include "tamecover/chars.hpp"

#include <stdexcept>

namespace tamecover {

BigInt gcd_list(const std::vector<BigInt>& values)
{
    if (values.empty())
        throw std::invalid_argument("gcd_list: empty list");
    BigInt g = 0;
    for (const auto& v : values)
        g = gcd(g, boost::multiprecision::abs(v));
    return g;
}

BigInt gaussian_binomial(long n, long k, const BigInt& q)
{
    if (q < 2)
        throw std::invalid_argument("gaussian_binomial: q must be >= 2");
    if (k < 0 || n < 0 || k > n)
        throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    BigInt num = 1, den = 1;
    for (long i = 0; i < k; ++i) {
        num *= ipow(q, static_cast<unsigned long>(n - i)) - 1;
        den *= ipow(q, static_cast<unsigned long>(i + 1)) - 1;
    }
    BigInt quot, rem;
    boost::multiprecision::divide_qr(num, den, quot, rem);
    if (rem != 0)
        throw std::logic_error("gaussian_binomial: non-exact division");
    return quot;
}

CharacterIndex::CharacterIndex(BigInt q_, long d_, BigInt j_)
    : q(std::move(q_)), d(d_), j(std::move(j_))
{
    if (q < 2 || d < 1)
        throw std::invalid_argument("CharacterIndex: need q >= 2, d >= 1");
    const BigInt N = modulus();
    j %= N;
    if (j < 0)
        j += N;
}

BigInt CharacterIndex::modulus() const
{
    return ipow(q, static_cast<unsigned long>(d + 1)) - 1;
}

bool is_primitive(const CharacterIndex& chi)
{
    const BigInt N = chi.modulus();
    const long m = chi.d + 1;
    for (long e = 1; e < m; ++e) {
        if (m % e != 0)
            continue;
        const BigInt norm_index = N / (ipow(chi.q, static_cast<unsigned long>(e)) - 1);
        if (chi.j % norm_index == 0)
            return false;
    }
    return true;
}

std::set<BigInt> green_orbit(const CharacterIndex& chi)
{
    const BigInt N = chi.modulus();
    std::set<BigInt> orbit;
    BigInt cur = chi.j;
    while (orbit.insert(cur).second)
        cur = (cur * chi.q) % N;
    return orbit;
}

BigInt cuspidal_dimension(const BigInt& q, long d)
{
    if (q < 2 || d < 1)
        throw std::invalid_argument("cuspidal_dimension: need q >= 2, d >= 1");
    BigInt acc = 1;
    for (long i = 1; i <= d; ++i)
        acc *= ipow(q, static_cast<unsigned long>(i)) - 1;
    return acc;
}

} // namespace tamecover
