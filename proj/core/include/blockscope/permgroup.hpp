#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "blockscope/perm.hpp"

namespace blockscope {

// Hard cap on explicit element enumeration.  Operations that need the full
// element list (conjugacy classes, centralizers, normal subgroup lattices)
// throw capacity_error beyond it.
inline constexpr u64 kEnumerationBound = 100000;

// Cap for the normal subgroup lattice walk.
inline constexpr u64 kNormalLatticeBound = 2000;

struct ConjClass {
    Permutation representative;  // lexicographically smallest class element
    u64 size = 0;
    u64 element_order = 0;
};

namespace detail {
struct GroupData;
}

// Immutable permutation group with a stabilizer chain built at construction.
// Copies share state; all lazy caches are thread safe.
class PermGroup {
public:
    PermGroup();  // trivial group on one point
    static PermGroup from_generators(u32 degree, std::vector<Permutation> gens);

    u32 degree() const;
    u64 order() const;
    const std::vector<Permutation>& generators() const;  // input gens, duplicates and identity dropped
    Permutation identity() const;
    bool contains(const Permutation& g) const;
    bool is_trivial() const { return order() == 1; }

    // Full element list in stabilizer-chain order; throws capacity_error if
    // order() > kEnumerationBound.  The order is deterministic for a fixed
    // generating sequence.
    const std::vector<Permutation>& elements() const;
    u32 element_index(const Permutation& g) const;  // index into elements()

    // Canonical order: identity class first, then ascending by
    // (element order, class size, representative image table).
    const std::vector<ConjClass>& conjugacy_classes() const;
    u32 class_count() const { return static_cast<u32>(conjugacy_classes().size()); }
    u32 class_of(const Permutation& g) const;
    u32 inverse_class(u32 class_index) const;
    u32 power_class(u32 class_index, u64 e) const;  // class of x^e for x in the class
    const std::vector<u32>& class_members(u32 class_index) const;  // element indices

    u64 exponent() const;  // lcm of element orders
    bool is_abelian() const;
    bool is_cyclic() const;

    bool same_underlying(const PermGroup& other) const { return data_ == other.data_; }
    const void* data_key() const;  // stable identity token for caches

private:
    std::shared_ptr<detail::GroupData> data_;
    explicit PermGroup(std::shared_ptr<detail::GroupData> d) : data_(std::move(d)) {}
    friend struct detail::GroupData;
};

// Subgroup predicates and constructions.  H arguments must act on the same
// point set (equal degree).
bool is_subgroup(const PermGroup& G, const PermGroup& H);
bool is_normal(const PermGroup& G, const PermGroup& N);

PermGroup centralizer(const PermGroup& G, const Permutation& x);
PermGroup centralizer_of_subgroup(const PermGroup& G, const PermGroup& U);
PermGroup center(const PermGroup& G);
PermGroup normalizer(const PermGroup& G, const PermGroup& U);
PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seed);
PermGroup join_subgroups(const PermGroup& A, const PermGroup& B);
PermGroup derived_subgroup(const PermGroup& G);

// Sylow p-subgroup by normalizer ascent.  Deterministic for a fixed group.
PermGroup sylow_subgroup(const PermGroup& G, u64 p);

u64 involution_count(const PermGroup& G);

// Invariant factors of a finite abelian group as elementary divisor list
// (prime power cyclic orders, ascending).  Requires is_abelian.
std::vector<u64> abelian_invariants(const PermGroup& A);

// Isomorphism-type tag for small p-groups as used by the block reports.
enum class SylowTag {
    Trivial,   // order 1
    C2, C3, C4, C5, C7,
    Klein,     // C2 x C2
    D8, Q8,
    CyclicOther,
    AbelianOther,
    NonabelianOther,
};
std::string to_string(SylowTag tag);

struct SylowDescriptor {
    u64 p = 0;
    u64 order = 1;
    SylowTag tag = SylowTag::Trivial;
    bool abelian = true;
    bool cyclic = true;
    u64 exponent = 1;
    std::vector<u64> invariants;  // abelian case only
};

SylowDescriptor classify_sylow(const PermGroup& P, u64 p);
SylowDescriptor sylow_descriptor(const PermGroup& G, u64 p);  // classify_sylow(sylow_subgroup(G,p), p)

// Conjugacy classes of nontrivial p-element representatives, canonical class
// order, split by centrality.
struct PElementClasses {
    std::vector<u32> central;     // class indices, excluding the identity class
    std::vector<u32> noncentral;
};
PElementClasses p_element_classes(const PermGroup& G, u64 p);

// Action of G on the cosets of a normal subgroup N.  The quotient is a
// permutation group on |G:N| points; project maps group elements onto it.
class CosetAction {
public:
    const PermGroup& quotient() const { return quotient_; }
    Permutation project(const Permutation& g) const;
    u32 coset_count() const { return static_cast<u32>(reps_.size()); }
    const Permutation& coset_rep(u32 i) const { return reps_[i]; }

private:
    friend CosetAction coset_action(const PermGroup& G, const PermGroup& N);
    PermGroup group_;
    PermGroup normal_;
    PermGroup quotient_;
    std::vector<Permutation> reps_;
    u32 coset_index(const Permutation& g) const;
};

CosetAction coset_action(const PermGroup& G, const PermGroup& N);

// All normal subgroups, sorted by (order, element set).  Throws
// capacity_error when order() > kNormalLatticeBound.
std::vector<PermGroup> normal_subgroups(const PermGroup& G);

}  // namespace blockscope
