#pragma once

#include "tamecover/rational.hpp"

#include <set>
#include <vector>

namespace tamecover {

// gcd of absolute values; gcd of an all-zero list is 0 by convention.
// Throws std::invalid_argument on an empty list.
BigInt gcd_list(const std::vector<BigInt>& values);

// Number of k-dimensional subspaces of F_q^n, exact for any integer q >= 2.
// Throws if k > n or k < 0 or q < 2.
BigInt gaussian_binomial(long n, long k, const BigInt& q);

/// Character of F_{q^{d+1}}^* stored as an exponent j mod N, N = q^{d+1}-1.
/// All predicates on characters are arithmetic on j.
struct CharacterIndex {
    BigInt q;
    long d = 1;
    BigInt j;

    CharacterIndex(BigInt q_, long d_, BigInt j_);

    BigInt modulus() const; // N = q^{d+1} - 1
};

// True iff j is not killed by any norm to a proper subfield: for every
// proper divisor e of d+1, (q^{d+1}-1)/(q^e-1) does not divide j.
bool is_primitive(const CharacterIndex& chi);

// Orbit of j under multiplication by q mod N. Two primitive characters give
// isomorphic representations iff their orbits coincide.
std::set<BigInt> green_orbit(const CharacterIndex& chi);

// prod_{i=1..d} (q^i - 1), the dimension of the cuspidal representation
// attached to a primitive character.
BigInt cuspidal_dimension(const BigInt& q, long d);

} // namespace tamecover
