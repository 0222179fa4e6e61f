#pragma once

#include <stdexcept>
#include <string>

namespace blockscope {

// Bad user-supplied data: malformed permutations, non-prime p, degree
// mismatches, unreadable files.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A request exceeded a documented size bound (element enumeration, normal
// subgroup lattice).  Callers running corpus scans convert these into
// "capacity" findings instead of aborting.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// Preconditions of an operation were violated (element outside the group,
// subgroup not normal, Sylow subgroup not cyclic, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed.  These indicate a bug, never bad
// input: orthogonality failure, degree sum mismatch, block counts that do
// not add up.
struct invariant_violation : std::logic_error {
    explicit invariant_violation(const std::string& what) : std::logic_error(what) {}
};

// A cyclotomic value could not be pushed into the chosen residue field,
// e.g. a denominator divisible by the prime.
struct reduction_error : std::runtime_error {
    explicit reduction_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blockscope
