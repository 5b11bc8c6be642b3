#include "tamecover/torseur.hpp"

#include "tamecover/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace tamecover {

namespace {

long mod_n(long v, long n)
{
    v %= n;
    return v < 0 ? v + n : v;
}

} // namespace

TorseurClass::TorseurClass(long n_, long a, std::vector<long> beta)
    : n(n_), unit_exponent(0), beta_mod(std::move(beta))
{
    if (n < 1)
        throw std::invalid_argument("TorseurClass: n must be >= 1");
    unit_exponent = mod_n(a, n);
    for (auto& b : beta_mod)
        b = mod_n(b, n);
}

bool TorseurClass::operator==(const TorseurClass& o) const
{
    return n == o.n && unit_exponent == o.unit_exponent && beta_mod == o.beta_mod;
}

TorseurClass add_classes(const TorseurClass& c1, const TorseurClass& c2)
{
    if (c1.n != c2.n || c1.d() != c2.d())
        throw std::invalid_argument("add_classes: mismatched n or dimension");
    std::vector<long> beta(c1.beta_mod.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        beta[i] = mod_n(c1.beta_mod[i] + c2.beta_mod[i], c1.n);
    return TorseurClass(c1.n, mod_n(c1.unit_exponent + c2.unit_exponent, c1.n), std::move(beta));
}

TorseurClass scalar_multiple(const TorseurClass& c, long k)
{
    std::vector<long> beta(c.beta_mod.size());
    for (std::size_t i = 0; i < beta.size(); ++i)
        beta[i] = mod_n(c.beta_mod[i] * k, c.n);
    return TorseurClass(c.n, mod_n(c.unit_exponent * k, c.n), std::move(beta));
}

long pi0_of_class(const TorseurClass& c)
{
    long g = c.n;
    for (long b : c.beta_mod)
        g = std::gcd(g, b);
    return g;
}

std::pair<TorseurClass, TorseurClass> split_product_class(const TorseurClass& c,
                                                          const AxisOwnership& s_owns)
{
    if (s_owns.size() != c.beta_mod.size())
        throw std::invalid_argument("split_product_class: ownership length != d");
    TorseurClass s = c, t = c;
    t.unit_exponent = 0; // unit carried by the S factor
    for (std::size_t i = 0; i < s_owns.size(); ++i) {
        if (s_owns[i])
            t.beta_mod[i] = 0;
        else
            s.beta_mod[i] = 0;
    }
    return {s, t};
}

long etale_rank(long d, long q)
{
    if (q < 0 || q > d)
        throw std::invalid_argument("etale_rank: need 0 <= q <= d");
    return static_cast<long>(binomial(d, q));
}

} // namespace tamecover
