#include "blockscope/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "blockscope/errors.hpp"

namespace blockscope {

Permutation::Permutation(u32 degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<u32> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (u32 x : images_) {
        if (x >= images_.size() || seen[x])
            throw input_error("permutation image table is not a bijection");
        seen[x] = true;
    }
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (degree() != rhs.degree())
        throw input_error("permutation degree mismatch in product");
    Permutation r;
    r.images_.resize(images_.size());
    for (u32 i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
    return r;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (u32 i = 0; i < images_.size(); ++i) r.images_[images_[i]] = i;
    return r;
}

bool Permutation::is_identity() const {
    for (u32 i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

u64 Permutation::order() const {
    u64 ord = 1;
    std::vector<bool> seen(images_.size(), false);
    for (u32 i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        u64 len = 0;
        u32 j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = images_[j];
            ++len;
        }
        ord = lcm_u64(ord, len);
    }
    return ord;
}

u32 Permutation::smallest_moved_point() const {
    for (u32 i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return i;
    return degree();
}

Permutation Permutation::power(i64 e) const {
    u64 n = order();
    u64 k = static_cast<u64>(((e % static_cast<i64>(n)) + static_cast<i64>(n))) % n;
    Permutation acc(degree());
    Permutation base = *this;
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
    return g.inverse() * (*this) * g;
}

std::vector<std::vector<u32>> Permutation::cycles() const {
    std::vector<std::vector<u32>> out;
    std::vector<bool> seen(images_.size(), false);
    for (u32 i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) {
            seen[i] = true;
            continue;
        }
        std::vector<u32> cyc;
        u32 j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(j);
            j = images_[j];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

std::string Permutation::to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::ostringstream os;
    for (auto& c : cyc) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

Permutation perm_from_cycles(u32 degree, const std::vector<std::vector<u32>>& cycles) {
    std::vector<u32> img(degree);
    std::iota(img.begin(), img.end(), 0u);
    for (auto& c : cycles) {
        for (size_t i = 0; i < c.size(); ++i) {
            u32 from = c[i];
            u32 to = c[(i + 1) % c.size()];
            if (from >= degree || to >= degree) throw input_error("cycle point out of range");
            img[from] = to;
        }
    }
    return Permutation(std::move(img));
}

}  // namespace blockscope
