#include "tamecover/forms.hpp"

#include <bit>
#include <cassert>

namespace tamecover {

int popcount(AxisSet m)
{
    return std::popcount(m);
}

std::vector<int> axis_list(AxisSet m)
{
    std::vector<int> out;
    for (int k = 1; m; ++k, m >>= 1)
        if (m & 1)
            out.push_back(k);
    return out;
}

namespace {

// sign of dlog(x_r) ^ dlog(x_I) = sign * dlog(x_{I union r}), I sorted
int insert_sign(AxisSet I, int r)
{
    const AxisSet below = I & ((AxisSet(1) << (r - 1)) - 1);
    return (popcount(below) & 1) ? -1 : 1;
}

// sign of dlog(x_I) = sign * dlog(x_{I minus r}) ^ dlog(x_r)
int extract_sign(AxisSet I, int r)
{
    const AxisSet above = I >> r;
    return (popcount(above) & 1) ? -1 : 1;
}

} // namespace

IsoForm::IsoForm(CoverSpec cover, long degree, long iso)
    : cover_(std::move(cover)), degree_(degree), iso_(iso)
{
    if (degree_ < 0 || degree_ > cover_.d() + 1)
        throw std::invalid_argument("IsoForm: degree out of range");
    iso_ %= cover_.n;
    if (iso_ < 0)
        iso_ += cover_.n;
}

void IsoForm::add_term(AxisSet I, const ExpVec& exp, const Rational& coeff)
{
    if (popcount(I) != degree_)
        throw std::invalid_argument("IsoForm: axis set size != degree");
    if (I >= (AxisSet(1) << cover_.d()))
        throw std::invalid_argument("IsoForm: axis out of range");
    auto it = components_.find(I);
    if (it == components_.end())
        it = components_.emplace(I, LaurentPoly(cover_.d())).first;
    it->second.add_term(exp, coeff);
    if (it->second.is_zero())
        components_.erase(it);
}

void IsoForm::add_component(AxisSet I, const LaurentPoly& f)
{
    for (const auto& [e, c] : f.terms())
        add_term(I, e, c);
}

namespace {

void require_compatible(const IsoForm& a, const IsoForm& b)
{
    if (a.cover().d() != b.cover().d() || a.cover().n != b.cover().n ||
        a.cover().beta != b.cover().beta || a.iso() != b.iso() || a.degree() != b.degree())
        throw std::invalid_argument("IsoForm: incompatible summands");
}

} // namespace

IsoForm IsoForm::operator+(const IsoForm& o) const
{
    require_compatible(*this, o);
    IsoForm r = *this;
    for (const auto& [I, f] : o.components_)
        r.add_component(I, f);
    return r;
}

IsoForm IsoForm::operator-(const IsoForm& o) const
{
    require_compatible(*this, o);
    IsoForm r = *this;
    for (const auto& [I, f] : o.components_)
        r.add_component(I, -f);
    return r;
}

IsoForm IsoForm::operator*(const Rational& c) const
{
    IsoForm r(cover_, degree_, iso_);
    if (c == 0)
        return r;
    for (const auto& [I, f] : components_)
        r.add_component(I, f * c);
    return r;
}

bool IsoForm::operator==(const IsoForm& o) const
{
    return cover_.d() == o.cover_.d() && cover_.n == o.cover_.n && cover_.beta == o.cover_.beta &&
           degree_ == o.degree_ && iso_ == o.iso_ && components_ == o.components_;
}

bool CohomClass::operator==(const CohomClass& o) const
{
    return cover.d() == o.cover.d() && cover.n == o.cover.n && cover.beta == o.cover.beta &&
           degree == o.degree && coords == o.coords;
}

IsoForm differential(const IsoForm& w)
{
    const CoverSpec& cv = w.cover();
    const long d = cv.d();
    IsoForm out(cv, std::min<long>(w.degree() + 1, d + 1), w.iso());
    if (w.degree() >= d)
        return out; // only the zero (d+1)-form exists
    for (const auto& [I, f] : w.components()) {
        for (const auto& [exp, c] : f.terms()) {
            for (int r = 1; r <= d; ++r) {
                const AxisSet bit = AxisSet(1) << (r - 1);
                if (I & bit)
                    continue;
                const long wn = cv.n * exp[static_cast<std::size_t>(r - 1)] +
                                w.iso() * cv.beta[static_cast<std::size_t>(r - 1)];
                if (wn == 0)
                    continue;
                const Rational weight(wn, cv.n);
                out.add_term(I | bit, exp, c * weight * insert_sign(I, r));
            }
        }
    }
    return out;
}

IsoForm integrate(const IsoForm& w, int axis)
{
    const CoverSpec& cv = w.cover();
    if (axis < 1 || axis > cv.d())
        throw std::invalid_argument("integrate: axis out of range");
    IsoForm out(cv, w.degree(), w.iso());
    for (const auto& [I, f] : w.components()) {
        for (const auto& [exp, c] : f.terms()) {
            const long wn = cv.n * exp[static_cast<std::size_t>(axis - 1)] +
                            w.iso() * cv.beta[static_cast<std::size_t>(axis - 1)];
            if (wn == 0)
                continue; // dropping is the contract
            out.add_term(I, exp, c * make_ratio(cv.n, wn));
        }
    }
    return out;
}

IsoForm canonical_generator(const CoverSpec& cover, long a, AxisSet I, const Rational& coeff)
{
    if (a < 0 || a >= cover.pi0)
        throw std::invalid_argument("canonical_generator: a out of range");
    IsoForm w(cover, popcount(I), a * cover.n_tilde);
    ExpVec exp;
    for (long bt : cover.beta_tilde)
        exp.push_back(-a * bt);
    w.add_term(I, exp, coeff);
    return w;
}

IsoForm canonical_form(const CohomClass& cls)
{
    long a = -1;
    for (const auto& [key, c] : cls.coords) {
        if (a == -1)
            a = key.first;
        if (key.first != a)
            throw std::invalid_argument("canonical_form: mixed component indices");
    }
    if (a == -1)
        a = 0; // zero class: any isotypic slice represents it
    IsoForm w(cls.cover, cls.degree, a * cls.cover.n_tilde);
    for (const auto& [key, c] : cls.coords)
        w = w + canonical_generator(cls.cover, key.first, key.second, c);
    return w;
}

ReduceResult reduce_to_class(const IsoForm& w)
{
    if (!differential(w).is_zero())
        throw NotClosedError();

    const CoverSpec& cv = w.cover();
    const long d = cv.d();
    const long q = w.degree();

    IsoForm omega = w;
    IsoForm eta(cv, q > 0 ? q - 1 : 0, w.iso());

    for (int r = static_cast<int>(d); r >= 1; --r) {
        const AxisSet bit = AxisSet(1) << (r - 1);
        IsoForm eta_r(cv, q > 0 ? q - 1 : 0, w.iso());
        for (const auto& [I, f] : omega.components()) {
            if (!(I & bit))
                continue;
            for (const auto& [exp, c] : f.terms()) {
                const long wn = cv.n * exp[static_cast<std::size_t>(r - 1)] +
                                w.iso() * cv.beta[static_cast<std::size_t>(r - 1)];
                if (wn == 0)
                    continue;
                const int sgn = extract_sign(I, r) * (((q - 1) & 1) ? -1 : 1);
                eta_r.add_term(I & ~bit, exp, c * make_ratio(cv.n, wn) * sgn);
            }
        }
        if (!eta_r.is_zero()) {
            omega = omega - differential(eta_r);
            eta = eta + eta_r;
        }
        // closedness makes the twisted weight along r vanish on what is left
        for (const auto& [I, f] : omega.components())
            for (const auto& [exp, c] : f.terms()) {
                const long wn = cv.n * exp[static_cast<std::size_t>(r - 1)] +
                                w.iso() * cv.beta[static_cast<std::size_t>(r - 1)];
                if (wn != 0)
                    throw NotClosedError();
            }
    }

    CohomClass cls;
    cls.cover = cv;
    cls.degree = q;
    if (!omega.is_zero()) {
        if (w.iso() % cv.n_tilde != 0)
            throw NotClosedError(); // no classes off the multiples of n_tilde
        const long a = w.iso() / cv.n_tilde;
        ExpVec expect;
        for (long bt : cv.beta_tilde)
            expect.push_back(-a * bt);
        for (const auto& [I, f] : omega.components()) {
            for (const auto& [exp, c] : f.terms()) {
                assert(exp == expect);
                (void)expect;
                cls.coords[{a, I}] = c;
            }
        }
    }
    return ReduceResult{std::move(cls), std::move(eta)};
}

} // namespace tamecover
