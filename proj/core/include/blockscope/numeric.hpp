#pragma once

#include <cstdint>
#include <vector>

namespace blockscope {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);
u64 invmod(u64 a, u64 m);  // requires gcd(a,m)=1
u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);  // throws capacity_error on overflow

bool is_prime(u64 n);  // deterministic Miller-Rabin, full 64-bit range

// Ascending list of (prime, multiplicity) pairs.
std::vector<std::pair<u64, u32>> factorize(u64 n);
std::vector<u64> prime_divisors(u64 n);

u64 euler_phi(u64 n);
int mobius(u64 n);

// Largest e with p^e | n, and the cofactor helpers.
u32 valuation(u64 n, u64 p);
u64 p_part(u64 n, u64 p);
u64 p_prime_part(u64 n, u64 p);

// Multiplicative order of a modulo n, gcd(a,n)=1.
u64 mult_order(u64 a, u64 n);

// Smallest prime l with l ≡ 1 (mod n) and l > floor; used both for the
// character table splitting field and for modular rank certificates.
u64 smallest_prime_1_mod(u64 n, u64 floor);

// Smallest generator of (Z/lZ)* for prime l.
u64 primitive_root(u64 l);

// Square root mod prime l, or l if a is a non-residue.
u64 sqrt_mod(u64 a, u64 l);

u64 checked_mul(u64 a, u64 b);  // throws capacity_error on overflow

}  // namespace blockscope
