#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "blockscope/numeric.hpp"

namespace blockscope {

// Dense polynomial over F_p, constant term first, no trailing zero limbs.
// The zero polynomial is the empty vector.
using FpPoly = std::vector<u64>;

int fp_degree(const FpPoly& a);
FpPoly fp_trim(FpPoly a);
FpPoly fp_add(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_monic(const FpPoly& a, u64 p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b, u64 p);
FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p);  // monic
u64 fp_eval(const FpPoly& a, u64 x, u64 p);
FpPoly fp_powmod(const FpPoly& base, const mpz_class& e, const FpPoly& mod, u64 p);

// Monic integer cyclotomic polynomial, constant term first, length phi(n)+1.
std::vector<mpz_class> cyclotomic_polynomial_z(u64 n);

// All monic irreducible factors of the n-th cyclotomic polynomial over F_p,
// gcd(n,p)=1.  Every factor has degree ord_n(p).  The splitting uses a
// Cantor-Zassenhaus walk with an RNG seeded only by (n,p), and the result is
// sorted by coefficient list, so the output is a pure function of (n,p).
std::vector<FpPoly> factor_cyclotomic_mod_p(u64 n, u64 p);

// Distinct roots in F_p of a nonzero polynomial, ascending.
std::vector<u64> fp_roots(const FpPoly& a, u64 p);

}  // namespace blockscope
