#include "tamecover/laurent.hpp"

#include <stdexcept>

namespace tamecover {

void LaurentPoly::add_term(const ExpVec& exp, const Rational& coeff)
{
    if (exp.size() != static_cast<std::size_t>(d_))
        throw std::invalid_argument("LaurentPoly: exponent vector length mismatch");
    if (coeff == 0)
        return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentPoly LaurentPoly::monomial(const ExpVec& exp, const Rational& coeff)
{
    LaurentPoly p(static_cast<long>(exp.size()));
    p.add_term(exp, coeff);
    return p;
}

LaurentPoly LaurentPoly::constant(long d, const Rational& c)
{
    LaurentPoly p(d);
    p.add_term(ExpVec(static_cast<std::size_t>(d), 0), c);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r -= o;
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    LaurentPoly r(d_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = e1;
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const
{
    LaurentPoly r(d_);
    if (c == 0)
        return r;
    for (const auto& [e, v] : terms_)
        r.add_term(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const
{
    return *this * Rational(-1);
}

} // namespace tamecover
