#pragma once

#include "tamecover/rational.hpp"

#include <optional>
#include <vector>

namespace tamecover {

/// Closed annulus product with one extra monomial bound |x^alpha|. The radii
/// are inert metadata: no algebraic routine reads them, which is what makes
/// the restriction isomorphism hold on the nose in this model.
struct TorusSpec {
    long d = 1;
    std::vector<long> alpha;            // length d, entries >= 0; all-zero = plain annuli
    std::vector<Rational> log_s, log_r; // optional radii metadata, length d when set
    std::optional<Rational> log_rho, log_mu;

    TorusSpec() { alpha.assign(1, 0); }
    explicit TorusSpec(long dim) : d(dim) { alpha.assign(static_cast<std::size_t>(dim), 0); }
    TorusSpec(long dim, std::vector<long> a);

    void validate() const;
};

/// Degree-n Kummer cover cut out by t^n = lambda * x^beta. The symbolic unit
/// lambda defaults to 1 (scalars are extended so that it is); a nontrivial
/// tag only relabels components and never enters the arithmetic here.
struct CoverSpec {
    TorusSpec base;
    long n = 1;
    std::vector<long> beta; // length d
    long residue_char = 0;  // declared p; 0 means unconstrained
    std::string lambda_tag = "1";

    long pi0 = 1;     // gcd(n, beta_1, ..., beta_d)
    long n_tilde = 1; // n / pi0
    std::vector<long> beta_tilde;

    CoverSpec() : beta{0} { finalize(); }
    CoverSpec(TorusSpec b, long n_, std::vector<long> beta_, long p = 0);

    long d() const { return base.d; }

    // Trivial degree-1 cover of a plain d-torus.
    static CoverSpec trivial(long d);

private:
    void finalize();
};

} // namespace tamecover
