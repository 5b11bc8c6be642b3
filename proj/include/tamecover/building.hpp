#pragma once

#include "tamecover/chars.hpp"
#include "tamecover/dl.hpp" // BudgetError, kDefaultBudget
#include "tamecover/fq.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tamecover {

/// Composition (e_0, ..., e_k) of d+1 classifying a simplex of the building
/// at the standard vertex; d_i = e_0 + ... + e_i - 1 are the partial flag
/// dimensions (0-based).
struct SimplexType {
    std::vector<long> e;

    explicit SimplexType(std::vector<long> parts);

    long k() const { return static_cast<long>(e.size()) - 1; }
    long d() const; // e sums to d+1
    long partial_dim(long i) const; // d_i

    bool operator<(const SimplexType& o) const { return e < o.e; }
    bool operator==(const SimplexType& o) const { return e == o.e; }
};

// All flags of F_q^{d+1} grouped by type, the empty flag included as type
// (d+1). Computed by explicit subspace-chain enumeration.
std::map<SimplexType, BigInt> star_census(std::uint64_t q, long d,
                                          std::uint64_t budget = kDefaultBudget);

// Closed forms q^{d-d_i} (q^{e_i} - 1) for i = 0..k-1: the exponents the
// vertex unit picks up along the diagonal coordinates of the simplex.
std::vector<BigInt> beta_values(std::uint64_t q, const SimplexType& type);

// Same numbers recomputed by enumerating F_q^{d+1} minus 0 and counting each
// vector in the block of its leading nonzero coordinate.
std::vector<BigInt> beta_values_counted(std::uint64_t q, const SimplexType& type);

// Smallest i such that every coordinate of a with index > d_i vanishes;
// a != 0, entries read only for zero/nonzero. Indices are 0-based.
long level_of(const std::vector<long>& a, const SimplexType& type);

struct VanishingReport {
    long m = 1;          // gcd(d+1, e_0, ..., e_k)
    bool vanishes = false;
};

// m = gcd(d+1, e_0,...,e_k); the theta-part of the tube over the simplex
// vanishes iff N/(q^m - 1) does not divide j. Requires k >= 1.
VanishingReport m_and_vanishing(const CharacterIndex& chi, const SimplexType& type);

// Index of the determinant-valuation subgroup: the multiplicity d+1.
long jl_multiplicity(long d);

/// Vertices of the building within BFS radius R of the standard vertex,
/// with canonical lattice representatives and the induced adjacency.
struct TruncatedBuilding {
    std::uint64_t q = 2;
    long d = 1;
    long radius = 0;
    std::vector<std::string> labels;          // canonical representative per vertex
    std::vector<long> depth;                  // BFS distance from the origin
    std::vector<std::vector<long>> adjacency; // sorted neighbor ids
};

TruncatedBuilding bfs_vertices(std::uint64_t q, long d, long R,
                               std::uint64_t budget = kDefaultBudget);

/// First page of the covering spectral sequence over the truncation:
/// entries E_1^{-r,s}, plus the degenerate total in degree d. Entries that
/// the desk model refuses to fabricate are left unset ("not-computed").
struct CechE1Report {
    std::uint64_t q = 2;
    long d = 1;
    long radius = 0;
    BigInt theta; // character exponent j
    bool primitive = false;
    std::map<std::pair<long, long>, std::optional<BigInt>> entries; // (r, s) -> dim
    std::optional<BigInt> total_hd;
    std::vector<long> simplex_counts; // simplices by dimension r
};

CechE1Report cech_e1(std::uint64_t q, long d, long R, const CharacterIndex& chi,
                     std::uint64_t budget = kDefaultBudget);

} // namespace tamecover
