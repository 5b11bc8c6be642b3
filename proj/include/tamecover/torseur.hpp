#pragma once

#include <utility>
#include <vector>

namespace tamecover {

/// Class of a mu_n-torsor on a monomial torus: the unit part is one residue
/// a (the exponent of the uniformizer against a fixed unit tag) and the
/// monomial part is beta mod n, one residue per axis.
struct TorseurClass {
    long n = 1;
    long unit_exponent = 0;      // a in Z/nZ
    std::vector<long> beta_mod;  // entries in [0, n)

    TorseurClass() = default;
    TorseurClass(long n_, long a, std::vector<long> beta);

    long d() const { return static_cast<long>(beta_mod.size()); }
    bool operator==(const TorseurClass& o) const;
};

// Componentwise sum mod n: the group law of H^1_et realized by the
// antidiagonal quotient of the product torsor.
TorseurClass add_classes(const TorseurClass& c1, const TorseurClass& c2);

TorseurClass scalar_multiple(const TorseurClass& c, long k);

// gcd(n, beta_1, ..., beta_d) on representatives in [0, n): the number of
// geometric connected components of the associated cover. The unit exponent
// does not enter (scalars are extended until the unit is an n-th power).
long pi0_of_class(const TorseurClass& c);

/// Axis ownership for product splitting: true = the S factor owns the axis.
using AxisOwnership = std::vector<bool>;

// Splits [T] as [T_S x C] + [S x T_C] by zeroing complementary axis blocks.
// The unit exponent stays on the S factor by convention.
std::pair<TorseurClass, TorseurClass> split_product_class(const TorseurClass& c,
                                                          const AxisOwnership& s_owns);

// binom(d, q): the rank of R^q phi_* mu_n for the projection of a
// d-dimensional monomial torus.
long etale_rank(long d, long q);

} // namespace tamecover
