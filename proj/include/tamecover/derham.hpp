#pragma once

#include "tamecover/cover.hpp"

#include <vector>

namespace tamecover {

// Dimension of the iso-indexed slice of H^q: binom(d, q) when n_tilde | iso,
// zero otherwise. The basis t0^a dlog(x_I) lives in isotypic index a*n_tilde.
long isotypic_dimension(const CoverSpec& cover, long q, long iso);

// pi0 * binom(d, q).
long cohomology_dimension(const CoverSpec& cover, long q);

struct ExponentBox {
    std::vector<long> lo, hi; // inclusive

    static ExponentBox centered(long d, long radius);
};

// Brute-force rank oracle. The complex splits into finite exterior-algebra
// pieces graded by (iso, exponent); each piece has differential wedge by the
// integer vector (n*nu_r + iso*beta_r)_r, and its cohomology is computed by
// exact Gaussian elimination. Returns the sum of dim H^q over all pieces in
// the box. Equals cohomology_dimension whenever the box contains every
// exponent with n*nu + iso*beta = 0.
long koszul_oracle(const CoverSpec& cover, long q, const ExponentBox& window);

// Same sweep, all degrees at once (one elimination pass per piece).
std::vector<long> koszul_oracle_all(const CoverSpec& cover, const ExponentBox& window);

// sum_{q1+q2=q} isotypic_dimension(A,q1,iso) * isotypic_dimension(B,q2,iso).
// Requires coverA.n == coverB.n.
long kunneth_dimension(const CoverSpec& a, const CoverSpec& b, long iso, long q);

} // namespace tamecover
