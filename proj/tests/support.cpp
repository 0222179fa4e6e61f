#include "support.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "blockscope/errors.hpp"
#include "blockscope/numeric.hpp"

namespace testsupport {

std::vector<Permutation> closure(u32 degree, const std::vector<Permutation>& gens, size_t cap) {
    std::unordered_set<Permutation, PermHash> seen;
    std::deque<Permutation> queue;
    Permutation id(degree);
    seen.insert(id);
    queue.push_back(id);
    while (!queue.empty()) {
        Permutation cur = queue.front();
        queue.pop_front();
        for (const Permutation& g : gens) {
            Permutation next = cur * g;
            if (seen.insert(next).second) {
                if (seen.size() > cap) throw std::runtime_error("closure cap exceeded");
                queue.push_back(next);
            }
        }
    }
    std::vector<Permutation> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Permutation>> brute_classes(const std::vector<Permutation>& elements) {
    std::unordered_set<Permutation, PermHash> unassigned(elements.begin(), elements.end());
    std::vector<std::vector<Permutation>> classes;
    for (const Permutation& e : elements) {
        if (!unassigned.count(e)) continue;
        std::unordered_set<Permutation, PermHash> cls;
        for (const Permutation& g : elements) cls.insert(e.conjugated_by(g));
        std::vector<Permutation> members(cls.begin(), cls.end());
        std::sort(members.begin(), members.end());
        for (const Permutation& m : members) unassigned.erase(m);
        classes.push_back(std::move(members));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return std::tuple(a.front().order(), a.size(), a.front()) <
               std::tuple(b.front().order(), b.size(), b.front());
    });
    return classes;
}

std::vector<CycleFactor> cycle_factors(const PermGroup& g) {
    std::vector<CycleFactor> factors;
    u64 order = 1;
    for (const Permutation& gen : g.generators()) {
        auto cycles = gen.cycles();
        if (cycles.size() != 1) throw std::runtime_error("generator is not a single cycle");
        const auto& cyc = cycles[0];
        u32 start = cyc[0];
        u64 len = cyc.size();
        for (u64 i = 0; i < len; ++i) {
            u32 pt = start + static_cast<u32>(i);
            if (gen(pt) != start + static_cast<u32>((i + 1) % len))
                throw std::runtime_error("generator cycle is not a block rotation");
        }
        for (const CycleFactor& f : factors)
            if (start < f.start + f.length && f.start < start + len)
                throw std::runtime_error("generator blocks overlap");
        factors.push_back({start, len});
        order = checked_mul(order, len);
    }
    if (order != g.order()) throw std::runtime_error("factor lengths do not multiply to the order");
    std::sort(factors.begin(), factors.end(),
              [](const CycleFactor& a, const CycleFactor& b) { return a.start < b.start; });
    return factors;
}

CharacterTable dual_table(const PermGroup& g, const std::string& name) {
    std::vector<CycleFactor> factors = cycle_factors(g);
    u64 exponent = g.exponent();
    const auto& classes = g.conjugacy_classes();
    u32 k = g.class_count();
    if (static_cast<u64>(k) != g.order()) throw std::runtime_error("classes are not singletons");

    std::vector<ClassData> cdata(k);
    for (u32 c = 0; c < k; ++c) {
        cdata[c].size = classes[c].size;
        cdata[c].element_order = classes[c].element_order;
        for (u64 q : prime_divisors(exponent))
            cdata[c].power_maps.emplace_back(q, g.power_class(c, q));
    }

    // shift of each block under the class representative
    std::vector<std::vector<u64>> shifts(k, std::vector<u64>(factors.size()));
    for (u32 c = 0; c < k; ++c)
        for (size_t i = 0; i < factors.size(); ++i)
            shifts[c][i] = classes[c].representative(factors[i].start) - factors[i].start;

    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<u64> tuple(factors.size(), 0);
    while (true) {
        std::vector<Cyclotomic> row;
        for (u32 c = 0; c < k; ++c) {
            u64 e = 0;
            for (size_t i = 0; i < factors.size(); ++i)
                e = (e + (exponent / factors[i].length) % exponent * (tuple[i] * shifts[c][i] % exponent)) % exponent;
            row.push_back(Cyclotomic::zeta(exponent, e));
        }
        rows.push_back(std::move(row));
        size_t i = 0;
        while (i < factors.size() && ++tuple[i] == factors[i].length) tuple[i++] = 0;
        if (i == factors.size()) break;
    }

    return CharacterTable::build(name, g.order(), exponent, std::move(cdata), std::move(rows));
}

}  // namespace testsupport
