#pragma once

#include <cstdint>

namespace circulant {

// Exact binomial coefficient; 0 when k < 0 or k > n. Throws Error on overflow.
std::int64_t binomial(std::int64_t n, std::int64_t k);

// S(f,k) = sum_{i=0}^{f} 2^i C(f,i) C(k,i).
// Counts integer vectors a in Z^f with |a|_1 <= k. S(f,0) = S(0,k) = 1.
std::int64_t s_poly(int f, std::int64_t k);

// Upper bound on the order of an Abelian Cayley graph of degree d >= 2 and
// diameter k: S(f,k) for even d with f = d/2, S(f,k) + S(f,k-1) for odd d
// with f = (d-1)/2. mac_bound(d,0) = 1 for every d, which makes
// lmac(d,1) = d uniformly.
std::int64_t mac_bound(int degree, std::int64_t diameter);

// First difference of the bound in the diameter argument, l >= 1:
// mac_bound(d,l) - mac_bound(d,l-1). Upper bound on the size of distance
// partition level l of any circulant graph of degree d.
std::int64_t lmac(int degree, std::int64_t level);

// Per-degree closed form of lmac for degrees 2..9 and l >= 2
// (e.g. 4l^2+2 for d=6, (8l^3+16l)/3 for d=8). Agrees with lmac everywhere.
std::int64_t lmac_closed(int degree, std::int64_t level);

// Position of the last maximal level for the extremal / largest-known family
// of degree 2..9 at diameter k: k for d=2,3,4; k-1 for d=5; floor((2k+1)/3)
// for d=6; floor(2k/3) for d=7; floor((k+1)/2) for d=8; floor(k/2) for d=9.
std::int64_t last_maximal_level(int degree, std::int64_t diameter);

}  // namespace circulant
