#include "tamecover/fq.hpp"

#include <cassert>
#include <stdexcept>

namespace tamecover {

namespace {

constexpr unsigned kMaxDeg = 64;

// Polynomial arithmetic over F_p on small coefficient arrays; degree is
// tracked by the caller. Used only for modulus selection and reduction
// tables, so clarity beats speed here.
using Poly = std::vector<std::uint64_t>;

Poly trim(Poly a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
    return a;
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p)
{
    a = trim(std::move(a));
    const std::size_t dm = m.size() - 1; // m monic
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t& c = a[shift + i];
            c = (c + p - (lead * m[i]) % p) % p;
        }
        a = trim(std::move(a));
        if (a.empty())
            break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p)
{
    Poly acc = {1};
    base = poly_mod(std::move(base), m, p);
    while (e) {
        if (e & 1)
            acc = poly_mulmod(acc, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p)
{
    auto inv_mod_p = [p](std::uint64_t x) {
        std::uint64_t r = 1, e = p - 2, bb = x % p;
        while (e) {
            if (e & 1)
                r = r * bb % p;
            bb = bb * bb % p;
            e >>= 1;
        }
        return r;
    };
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (!b.empty()) {
        // a mod b with b made monic on the fly
        const std::uint64_t li = inv_mod_p(b.back());
        Poly bm = b;
        for (auto& c : bm)
            c = c * li % p;
        a = poly_mod(std::move(a), bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin test: g monic of degree f is irreducible iff x^{p^f} = x (mod g)
// and gcd(x^{p^{f/l}} - x, g) = 1 for every prime l | f.
bool poly_irreducible(const Poly& g, std::uint64_t p)
{
    const unsigned f = static_cast<unsigned>(g.size() - 1);
    if (f == 0)
        return false;
    auto pow_p = [&](unsigned k) {
        // x^{p^k} mod g by repeated p-th powering
        Poly x = {0, 1};
        Poly acc = poly_mod(x, g, p);
        for (unsigned i = 0; i < k; ++i)
            acc = poly_powmod(acc, p, g, p);
        return acc;
    };
    Poly xpf = pow_p(f);
    Poly x = poly_mod({0, 1}, g, p);
    Poly diff = xpf;
    diff.resize(std::max(diff.size(), x.size()), 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        diff[i] = (diff[i] + p - x[i]) % p;
    if (!trim(diff).empty())
        return false;
    for (unsigned l = 2; l <= f; ++l) {
        if (f % l != 0)
            continue;
        bool l_prime = true;
        for (unsigned t = 2; t * t <= l; ++t)
            if (l % t == 0)
                l_prime = false;
        if (!l_prime)
            continue;
        Poly xq = pow_p(f / l);
        Poly d = xq;
        d.resize(std::max(d.size(), x.size()), 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            d[i] = (d[i] + p - x[i]) % p;
        Poly gg = poly_gcd(g, trim(d), p);
        if (gg.size() != 1)
            return false;
    }
    return true;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t t = 2; t * t <= n; ++t)
        if (n % t == 0)
            return false;
    return true;
}

void factor_prime_power(std::uint64_t q, std::uint64_t& p, unsigned& h)
{
    if (q < 2)
        throw std::invalid_argument("q must be >= 2");
    for (std::uint64_t t = 2; t * t <= q; ++t) {
        if (q % t == 0) {
            p = t;
            h = 0;
            std::uint64_t r = q;
            while (r % t == 0) {
                r /= t;
                ++h;
            }
            if (r != 1 || !is_prime(t))
                throw std::invalid_argument("q is not a prime power");
            return;
        }
    }
    p = q; // q itself prime
    h = 1;
}

FqField::FqField(std::uint64_t p, unsigned f) : p_(p), f_(f)
{
    if (!is_prime(p))
        throw std::invalid_argument("field characteristic must be prime");
    if (f == 0 || f > kMaxDeg)
        throw std::invalid_argument("extension degree out of range");
    size_ = 1;
    for (unsigned i = 0; i < f; ++i) {
        if (size_ > (std::uint64_t(1) << 62) / p)
            throw std::invalid_argument("field too large");
        size_ *= p;
    }
    if (f == 1) {
        modulus_ = {0, 1}; // x, unused
    } else {
        // first irreducible in lexicographic order of (c_0, ..., c_{f-1})
        std::vector<std::uint64_t> c(f, 0);
        bool found = false;
        while (!found) {
            Poly g(c.begin(), c.end());
            g.push_back(1);
            if (poly_irreducible(g, p)) {
                modulus_ = g;
                found = true;
                break;
            }
            unsigned i = f;
            // odometer increment from the high end so that (c_0,...,c_{f-1})
            // advances lexicographically with c_0 most significant
            while (i > 0) {
                --i;
                if (++c[i] < p)
                    break;
                c[i] = 0;
                if (i == 0)
                    throw std::logic_error("no irreducible polynomial found");
            }
        }
        red_.resize(f > 1 ? f - 1 : 0);
        // x^{f+k} mod modulus, as digit vectors of length f
        Poly cur(modulus_.begin(), modulus_.end() - 1); // x^f = -lower part
        for (auto& d : cur)
            d = (p - d) % p;
        for (unsigned k = 0; k + 1 < f; ++k) {
            red_[k].assign(cur.begin(), cur.end());
            red_[k].resize(f, 0);
            // multiply cur by x
            Poly next(f, 0);
            std::uint64_t top = cur.size() == f ? cur[f - 1] : 0;
            for (unsigned i = f; i-- > 1;)
                next[i] = (i - 1 < cur.size()) ? cur[i - 1] : 0;
            next[0] = 0;
            if (top) {
                for (unsigned i = 0; i < f; ++i)
                    next[i] = (next[i] + top * ((p - modulus_[i]) % p)) % p;
            }
            cur = next;
        }
    }
}

void FqField::decode(std::uint64_t a, std::uint64_t* out) const
{
    for (unsigned i = 0; i < f_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
}

std::uint64_t FqField::encode(const std::uint64_t* digits) const
{
    std::uint64_t a = 0;
    for (unsigned i = f_; i-- > 0;)
        a = a * p_ + digits[i];
    return a;
}

std::uint64_t FqField::add(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t da[kMaxDeg], db[kMaxDeg];
    decode(a, da);
    decode(b, db);
    for (unsigned i = 0; i < f_; ++i)
        da[i] = (da[i] + db[i]) % p_;
    return encode(da);
}

std::uint64_t FqField::sub(std::uint64_t a, std::uint64_t b) const
{
    std::uint64_t da[kMaxDeg], db[kMaxDeg];
    decode(a, da);
    decode(b, db);
    for (unsigned i = 0; i < f_; ++i)
        da[i] = (da[i] + p_ - db[i]) % p_;
    return encode(da);
}

std::uint64_t FqField::neg(std::uint64_t a) const
{
    std::uint64_t da[kMaxDeg];
    decode(a, da);
    for (unsigned i = 0; i < f_; ++i)
        da[i] = (p_ - da[i]) % p_;
    return encode(da);
}

std::uint64_t FqField::mul(std::uint64_t a, std::uint64_t b) const
{
    if (a == 0 || b == 0)
        return 0;
    if (f_ == 1)
        return (a * b) % p_;
    std::uint64_t da[kMaxDeg], db[kMaxDeg], prod[2 * kMaxDeg] = {0};
    decode(a, da);
    decode(b, db);
    for (unsigned i = 0; i < f_; ++i) {
        if (!da[i])
            continue;
        for (unsigned j = 0; j < f_; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    std::uint64_t out[kMaxDeg];
    for (unsigned i = 0; i < f_; ++i)
        out[i] = prod[i];
    for (unsigned k = 0; k + 1 < f_; ++k) {
        const std::uint64_t c = prod[f_ + k];
        if (!c)
            continue;
        for (unsigned i = 0; i < f_; ++i)
            out[i] = (out[i] + c * red_[k][i]) % p_;
    }
    return encode(out);
}

std::uint64_t FqField::pow(std::uint64_t a, std::uint64_t e) const
{
    std::uint64_t acc = from_int(1);
    std::uint64_t b = a;
    while (e) {
        if (e & 1)
            acc = mul(acc, b);
        b = mul(b, b);
        e >>= 1;
    }
    return acc;
}

std::uint64_t FqField::inv(std::uint64_t a) const
{
    if (a == 0)
        throw std::domain_error("inverse of zero");
    return pow(a, size_ - 2);
}

std::vector<std::uint64_t> FqField::subfield(std::uint64_t s) const
{
    // s must be p^k with k | f
    std::uint64_t t = s;
    unsigned k = 0;
    while (t > 1 && t % p_ == 0) {
        t /= p_;
        ++k;
    }
    if (t != 1 || k == 0 || f_ % k != 0)
        throw std::invalid_argument("not a subfield cardinality");
    std::vector<std::uint64_t> out;
    out.reserve(s);
    for (std::uint64_t a = 0; a < size_; ++a)
        if (pow(a, s) == a)
            out.push_back(a);
    assert(out.size() == s);
    return out;
}

std::string FqField::element_str(std::uint64_t a) const
{
    if (f_ == 1)
        return std::to_string(a);
    std::uint64_t d[kMaxDeg];
    decode(a, d);
    std::string s = "[";
    for (unsigned i = 0; i < f_; ++i) {
        if (i)
            s += ",";
        s += std::to_string(d[i]);
    }
    return s + "]";
}

} // namespace tamecover
