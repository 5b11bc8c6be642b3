#pragma once

#include "tamecover/rational.hpp"

#include <map>
#include <vector>

namespace tamecover {

using ExpVec = std::vector<long>;

/// Finitely supported Laurent polynomial in d variables over Q. Zero
/// coefficients are never stored, so equality of maps is equality of values.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long d) : d_(d) {}

    long dim() const { return d_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }

    void add_term(const ExpVec& exp, const Rational& coeff);

    static LaurentPoly monomial(const ExpVec& exp, const Rational& coeff);
    static LaurentPoly constant(long d, const Rational& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly operator-() const;

    bool operator==(const LaurentPoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

private:
    long d_ = 0;
    std::map<ExpVec, Rational> terms_;
};

} // namespace tamecover
