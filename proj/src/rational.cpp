#include "tamecover/rational.hpp"

namespace tamecover {

std::string to_string(const Rational& r)
{
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

BigInt parse_bigint(const std::string& s)
{
    if (s.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t pos = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (pos == s.size())
        throw std::invalid_argument("bad integer literal: " + s);
    for (std::size_t i = pos; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad integer literal: " + s);
    return BigInt(s);
}

Rational parse_rational(const std::string& s)
{
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(parse_bigint(s));
    const BigInt num = parse_bigint(s.substr(0, slash));
    const BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0)
        throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
}

BigInt ipow(const BigInt& base, unsigned long e)
{
    BigInt acc = 1;
    BigInt b = base;
    while (e) {
        if (e & 1)
            acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

BigInt binomial(long n, long k)
{
    if (k < 0 || k > n || n < 0)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt acc = 1;
    for (long i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

} // namespace tamecover
