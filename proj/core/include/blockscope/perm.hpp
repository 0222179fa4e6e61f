#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "blockscope/numeric.hpp"

namespace blockscope {

// Permutation of {0,...,deg-1} as an image table.  Products compose left
// factor first: (a*b)(x) = b(a(x)).  Files store images 1-based; everything
// in memory is 0-based.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(u32 degree);  // identity
    explicit Permutation(std::vector<u32> images);

    u32 degree() const { return static_cast<u32>(images_.size()); }
    u32 operator()(u32 point) const { return images_[point]; }
    const std::vector<u32>& images() const { return images_; }

    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;
    u64 order() const;  // lcm of cycle lengths
    u32 smallest_moved_point() const;  // degree() if identity

    Permutation power(i64 e) const;
    // conjugate by g: g^-1 * (*this) * g
    Permutation conjugated_by(const Permutation& g) const;

    std::vector<std::vector<u32>> cycles() const;  // nontrivial cycles, each rotated to min first, sorted
    std::string to_cycle_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<u32> images_;
};

struct PermHash {
    size_t operator()(const Permutation& p) const {
        u64 h = 0xcbf29ce484222325ull ^ p.degree();
        for (u32 x : p.images()) {
            h ^= x;
            h *= 0x100000001b3ull;
        }
        return static_cast<size_t>(h);
    }
};

// Convenience constructor from cycle notation, 0-based points.
Permutation perm_from_cycles(u32 degree, const std::vector<std::vector<u32>>& cycles);

}  // namespace blockscope
