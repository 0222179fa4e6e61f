#pragma once

#include <string>
#include <vector>

#include "blockscope/chartable.hpp"
#include "blockscope/permgroup.hpp"

namespace testsupport {

using namespace blockscope;

// Multiplicative closure of a generating set, independent of the stabilizer
// chain.  Throws std::runtime_error beyond cap.
std::vector<Permutation> closure(u32 degree, const std::vector<Permutation>& gens,
                                 size_t cap = 300000);

// Conjugacy partition by conjugating with every group element.
std::vector<std::vector<Permutation>> brute_classes(const std::vector<Permutation>& elements);

// A group built as a direct product of natural cycles acts on disjoint
// blocks, one cycle per generator.  Recovers (block start, cycle length)
// per factor; throws if the generators do not have that shape.
struct CycleFactor {
    u32 start = 0;
    u64 length = 1;
};
std::vector<CycleFactor> cycle_factors(const PermGroup& g);

// Character table of an abelian product-of-cycles group built directly from
// the dual group: one row per tuple of exponents, no eigenvector machinery.
CharacterTable dual_table(const PermGroup& g, const std::string& name);

}  // namespace testsupport
