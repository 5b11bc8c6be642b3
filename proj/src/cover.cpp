#include "tamecover/cover.hpp"

#include <numeric>
#include <stdexcept>

namespace tamecover {

TorusSpec::TorusSpec(long dim, std::vector<long> a) : d(dim), alpha(std::move(a))
{
    validate();
}

void TorusSpec::validate() const
{
    if (d < 0)
        throw std::invalid_argument("TorusSpec: d must be >= 0");
    if (alpha.size() != static_cast<std::size_t>(d))
        throw std::invalid_argument("TorusSpec: alpha length != d");
    for (long a : alpha)
        if (a < 0)
            throw std::invalid_argument("TorusSpec: alpha entries must be >= 0");
    if (!log_s.empty() || !log_r.empty()) {
        if (log_s.size() != static_cast<std::size_t>(d) || log_r.size() != log_s.size())
            throw std::invalid_argument("TorusSpec: radii length != d");
        for (std::size_t i = 0; i < log_s.size(); ++i)
            if (log_s[i] > log_r[i])
                throw std::invalid_argument("TorusSpec: need s_i <= r_i");
    }
    if (log_rho && log_mu && *log_rho > *log_mu)
        throw std::invalid_argument("TorusSpec: need rho <= mu");
}

CoverSpec::CoverSpec(TorusSpec b, long n_, std::vector<long> beta_, long p)
    : base(std::move(b)), n(n_), beta(std::move(beta_)), residue_char(p)
{
    finalize();
}

void CoverSpec::finalize()
{
    base.validate();
    if (n < 1)
        throw std::invalid_argument("CoverSpec: n must be >= 1");
    if (beta.size() != static_cast<std::size_t>(base.d))
        throw std::invalid_argument("CoverSpec: beta length != d");
    if (residue_char > 0 && std::gcd(n, residue_char) != 1)
        throw std::invalid_argument("CoverSpec: n must be coprime to the residue characteristic");
    long g = n;
    for (long b : beta)
        g = std::gcd(g, std::abs(b));
    pi0 = g;
    n_tilde = n / pi0;
    beta_tilde.clear();
    for (long b : beta)
        beta_tilde.push_back(b / pi0);
}

CoverSpec CoverSpec::trivial(long d)
{
    return CoverSpec(TorusSpec(d), 1, std::vector<long>(static_cast<std::size_t>(d), 0));
}

} // namespace tamecover
