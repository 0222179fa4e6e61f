#pragma once

#include "blockscope/permgroup.hpp"

namespace blockscope {
namespace groups {

PermGroup trivial();
PermGroup cyclic(u64 n);                // natural n-cycle
PermGroup symmetric(u32 n);
PermGroup alternating(u32 n);
PermGroup dihedral(u64 order);          // order = 2m, m >= 1
PermGroup dicyclic(u64 order);          // order = 4m, regular action; Dic8 = Q8
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

// C_n : <k> where the complement is generated by x -> k*x mod n.  The
// complement order is ord_n(k); covers dihedral-like metacyclic groups,
// Frobenius groups, M16, SD16.
PermGroup semidirect_cyclic(u64 n, u64 k);

// C_n : C_m with the generator of C_m acting as x -> k*x mod n; requires
// k^m = 1 mod n.  Unlike semidirect_cyclic the acting factor may be larger
// than its image (C3:C8 etc).  Degree n + m.
PermGroup cyclic_by_cyclic(u64 n, u64 m, u64 k);

// SL(2,3) on the eight nonzero vectors of F_3^2.
PermGroup sl2_3();

// PSL(2,q) for prime q >= 5 on the projective line, degree q+1.
PermGroup psl2_prime(u64 q);

// Heisenberg group of order 27 (extraspecial, exponent 3) on F_3^3.
PermGroup heisenberg3();

}  // namespace groups
}  // namespace blockscope
