#pragma once

#include "tamecover/cover.hpp"
#include "tamecover/laurent.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>

namespace tamecover {

struct NotClosedError : std::runtime_error {
    NotClosedError() : std::runtime_error("form is not closed") {}
};

/// Subsets I of {1,...,d} are bitmasks: bit k-1 set means axis k is in I.
using AxisSet = std::uint32_t;

int popcount(AxisSet m);
std::vector<int> axis_list(AxisSet m); // sorted 1-based axes

/// One isotypic slice of the de Rham complex of a Kummer cover: the form
/// t^iso * sum_I f_I dlog(x_I) with every f_I a Laurent polynomial on the
/// base torus. Components with zero polynomial are not stored.
class IsoForm {
public:
    IsoForm() = default;
    IsoForm(CoverSpec cover, long degree, long iso);

    const CoverSpec& cover() const { return cover_; }
    long degree() const { return degree_; }
    long iso() const { return iso_; }
    bool is_zero() const { return components_.empty(); }
    const std::map<AxisSet, LaurentPoly>& components() const { return components_; }

    void add_term(AxisSet I, const ExpVec& exp, const Rational& coeff);
    void add_component(AxisSet I, const LaurentPoly& f);

    IsoForm operator+(const IsoForm& o) const;
    IsoForm operator-(const IsoForm& o) const;
    IsoForm operator*(const Rational& c) const;

    // Equality of the algebraic data; torus radii metadata is ignored.
    bool operator==(const IsoForm& o) const;

private:
    CoverSpec cover_;
    long degree_ = 0;
    long iso_ = 0;
    std::map<AxisSet, LaurentPoly> components_;
};

/// Coordinates of a cohomology class in the basis t0^a dlog(x_I).
struct CohomClass {
    CoverSpec cover;
    long degree = 0;
    std::map<std::pair<long, AxisSet>, Rational> coords;

    bool operator==(const CohomClass& o) const;
};

// Exterior differential. A d-form maps to the zero (d+1)-form.
IsoForm differential(const IsoForm& w);

// Coefficientwise antiderivative along one axis: terms whose twisted weight
// n*nu_r + iso*beta_r vanishes are dropped; the rest are divided by it.
IsoForm integrate(const IsoForm& w, int axis);

struct ReduceResult {
    CohomClass cls;
    IsoForm primitive; // (degree-1)-form eta with  w = canonical(cls) + d(eta)
};

// Constructive reduction of a closed form to the canonical basis. Throws
// NotClosedError when d(w) != 0. Axes are processed in the order d, ..., 1.
ReduceResult reduce_to_class(const IsoForm& w);

// The basis element t0^a dlog(x_I) scaled by coeff, as a concrete form.
IsoForm canonical_generator(const CoverSpec& cover, long a, AxisSet I, const Rational& coeff);

// Expansion of a class whose coordinates all share one component index a.
// (reduce_to_class outputs have this shape: a is determined by the iso index.)
IsoForm canonical_form(const CohomClass& cls);

} // namespace tamecover
