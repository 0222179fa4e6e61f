#include "blockscope/permgroup.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "blockscope/errors.hpp"

namespace blockscope {

namespace detail {

struct Level {
    u32 base = 0;
    std::vector<Permutation> gens;
    std::vector<u32> orbit;  // BFS discovery order, orbit[0] == base
    std::unordered_map<u32, Permutation> trans;  // point -> element mapping base to point
};

struct GroupData {
    u32 degree = 1;
    std::vector<Permutation> gens;
    std::vector<Level> levels;
    u64 order = 1;

    std::once_flag elements_once;
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, u32, PermHash> element_index;

    std::once_flag classes_once;
    std::vector<ConjClass> classes;
    std::vector<u32> class_of_element;
    std::vector<std::vector<u32>> class_members;
    std::vector<u32> inverse_class;
    u64 exponent = 1;

    // Generating set of the i-th stabilizer: every generator stored at this
    // level or deeper fixes all earlier base points.
    std::vector<const Permutation*> stabilizer_gens(size_t i) const {
        std::vector<const Permutation*> out;
        for (size_t j = i; j < levels.size(); ++j)
            for (const Permutation& s : levels[j].gens) out.push_back(&s);
        return out;
    }

    void recompute_orbit(size_t li) {
        Level& L = levels[li];
        auto sgens = stabilizer_gens(li);
        L.orbit.clear();
        L.trans.clear();
        L.orbit.push_back(L.base);
        L.trans.emplace(L.base, Permutation(degree));
        for (size_t i = 0; i < L.orbit.size(); ++i) {
            u32 pt = L.orbit[i];
            Permutation rep = L.trans.at(pt);
            for (const Permutation* s : sgens) {
                u32 img = (*s)(pt);
                if (!L.trans.count(img)) {
                    L.orbit.push_back(img);
                    L.trans.emplace(img, rep * *s);
                }
            }
        }
    }

    // Strip g through levels [from, end); returns residue and stop level.
    std::pair<Permutation, size_t> sift(Permutation g, size_t from) const {
        for (size_t i = from; i < levels.size(); ++i) {
            const Level& L = levels[i];
            u32 img = g(L.base);
            if (img == L.base) continue;
            auto it = L.trans.find(img);
            if (it == L.trans.end()) return {std::move(g), i};
            g = g * it->second.inverse();
        }
        return {std::move(g), levels.size()};
    }

    void add_at_level(size_t lev, Permutation h) {
        if (lev == levels.size()) {
            Level L;
            L.base = h.smallest_moved_point();
            levels.push_back(std::move(L));
        }
        levels[lev].gens.push_back(std::move(h));
        recompute_orbit(lev);
    }

    // Verify the Schreier generators of one level sift to identity through
    // the deeper levels.  On failure the residue is installed where sifting
    // stopped and that index is returned; -1 means the level is consistent.
    long verify_level(size_t i) {
        recompute_orbit(i);
        Level& L = levels[i];
        auto sgens = stabilizer_gens(i);
        for (size_t oi = 0; oi < L.orbit.size(); ++oi) {
            u32 pt = L.orbit[oi];
            Permutation rep = L.trans.at(pt);
            for (const Permutation* s : sgens) {
                Permutation sg = rep * *s * L.trans.at((*s)(pt)).inverse();
                if (sg.is_identity()) continue;
                auto [h, lev] = sift(std::move(sg), i + 1);
                if (!h.is_identity()) {
                    add_at_level(lev, std::move(h));
                    return static_cast<long>(lev);
                }
            }
        }
        return -1;
    }

    void build_chain() {
        for (const Permutation& g : gens) {
            auto [h, lev] = sift(g, 0);
            if (!h.is_identity()) add_at_level(lev, std::move(h));
        }
        long i = static_cast<long>(levels.size()) - 1;
        while (i >= 0) {
            long j = verify_level(static_cast<size_t>(i));
            if (j < 0)
                --i;
            else
                i = j;
        }
        order = 1;
        for (const Level& L : levels) order = checked_mul(order, L.orbit.size());
    }

    bool contains(const Permutation& g) const {
        if (g.degree() != degree) return false;
        auto [h, lev] = sift(g, 0);
        return h.is_identity();
    }

    void ensure_elements() {
        std::call_once(elements_once, [this] {
            if (order > kEnumerationBound)
                throw capacity_error("group order " + std::to_string(order) +
                                     " exceeds the enumeration bound " +
                                     std::to_string(kEnumerationBound));
            std::vector<Permutation> acc{Permutation(degree)};
            for (size_t li = levels.size(); li-- > 0;) {
                const Level& L = levels[li];
                std::vector<Permutation> next;
                next.reserve(acc.size() * L.orbit.size());
                for (u32 pt : L.orbit) {
                    const Permutation& t = L.trans.at(pt);
                    for (const Permutation& h : acc) next.push_back(h * t);
                }
                acc = std::move(next);
                if (li == 0) break;
            }
            elements = std::move(acc);
            element_index.reserve(elements.size() * 2);
            for (u32 i = 0; i < elements.size(); ++i) element_index.emplace(elements[i], i);
            if (elements.size() != order) throw invariant_violation("element enumeration count mismatch");
        });
    }

    void ensure_classes() {
        ensure_elements();
        std::call_once(classes_once, [this] {
            std::vector<Permutation> gen_invs;
            gen_invs.reserve(gens.size());
            for (auto& g : gens) gen_invs.push_back(g.inverse());

            struct RawClass {
                std::vector<u32> members;
                Permutation rep;
                u64 elt_order;
            };
            std::vector<RawClass> raw;
            std::vector<u32> raw_of_element(elements.size(), UINT32_MAX);
            for (u32 start = 0; start < elements.size(); ++start) {
                if (raw_of_element[start] != UINT32_MAX) continue;
                RawClass rc;
                rc.rep = elements[start];
                std::vector<u32> queue{start};
                raw_of_element[start] = static_cast<u32>(raw.size());
                for (size_t qi = 0; qi < queue.size(); ++qi) {
                    u32 idx = queue[qi];
                    rc.members.push_back(idx);
                    const Permutation& x = elements[idx];
                    if (x < rc.rep) rc.rep = x;
                    for (size_t gi = 0; gi < gens.size(); ++gi) {
                        Permutation y = gen_invs[gi] * x * gens[gi];
                        u32 yidx = element_index.at(y);
                        if (raw_of_element[yidx] == UINT32_MAX) {
                            raw_of_element[yidx] = static_cast<u32>(raw.size());
                            queue.push_back(yidx);
                        }
                    }
                }
                rc.elt_order = rc.rep.order();
                std::sort(rc.members.begin(), rc.members.end());
                raw.push_back(std::move(rc));
            }

            std::vector<u32> perm_order(raw.size());
            for (u32 i = 0; i < raw.size(); ++i) perm_order[i] = i;
            std::sort(perm_order.begin(), perm_order.end(), [&](u32 a, u32 b) {
                if (raw[a].elt_order != raw[b].elt_order) return raw[a].elt_order < raw[b].elt_order;
                if (raw[a].members.size() != raw[b].members.size())
                    return raw[a].members.size() < raw[b].members.size();
                return raw[a].rep < raw[b].rep;
            });

            classes.resize(raw.size());
            class_members.resize(raw.size());
            class_of_element.assign(elements.size(), 0);
            std::vector<u32> new_index(raw.size());
            for (u32 ni = 0; ni < raw.size(); ++ni) {
                u32 oi = perm_order[ni];
                new_index[oi] = ni;
                classes[ni].representative = raw[oi].rep;
                classes[ni].size = raw[oi].members.size();
                classes[ni].element_order = raw[oi].elt_order;
                class_members[ni] = std::move(raw[oi].members);
            }
            for (u32 e = 0; e < elements.size(); ++e)
                class_of_element[e] = new_index[raw_of_element[e]];

            exponent = 1;
            for (auto& c : classes) exponent = lcm_u64(exponent, c.element_order);
            inverse_class.resize(classes.size());
            for (u32 c = 0; c < classes.size(); ++c) {
                Permutation inv = classes[c].representative.inverse();
                inverse_class[c] = class_of_element[element_index.at(inv)];
            }
        });
    }
};

}  // namespace detail

PermGroup::PermGroup() : PermGroup(from_generators(1, {})) {}

PermGroup PermGroup::from_generators(u32 degree, std::vector<Permutation> gens) {
    auto data = std::make_shared<detail::GroupData>();
    data->degree = degree;
    for (auto& g : gens) {
        if (g.degree() != degree) throw input_error("generator degree mismatch");
        if (g.is_identity()) continue;
        if (std::find(data->gens.begin(), data->gens.end(), g) == data->gens.end())
            data->gens.push_back(std::move(g));
    }
    data->build_chain();
    PermGroup G(std::move(data));
    for (const Permutation& g : G.generators())
        if (!G.contains(g)) throw invariant_violation("stabilizer chain rejects its own generator");
    return G;
}

u32 PermGroup::degree() const { return data_->degree; }
u64 PermGroup::order() const { return data_->order; }
const std::vector<Permutation>& PermGroup::generators() const { return data_->gens; }
Permutation PermGroup::identity() const { return Permutation(data_->degree); }
bool PermGroup::contains(const Permutation& g) const { return data_->contains(g); }
const void* PermGroup::data_key() const { return data_.get(); }

const std::vector<Permutation>& PermGroup::elements() const {
    data_->ensure_elements();
    return data_->elements;
}

u32 PermGroup::element_index(const Permutation& g) const {
    data_->ensure_elements();
    auto it = data_->element_index.find(g);
    if (it == data_->element_index.end()) throw domain_error("element is not in the group");
    return it->second;
}

const std::vector<ConjClass>& PermGroup::conjugacy_classes() const {
    data_->ensure_classes();
    return data_->classes;
}

u32 PermGroup::class_of(const Permutation& g) const {
    data_->ensure_classes();
    return data_->class_of_element[element_index(g)];
}

u32 PermGroup::inverse_class(u32 class_index) const {
    data_->ensure_classes();
    return data_->inverse_class.at(class_index);
}

u32 PermGroup::power_class(u32 class_index, u64 e) const {
    data_->ensure_classes();
    const ConjClass& c = data_->classes.at(class_index);
    return class_of(c.representative.power(static_cast<i64>(e % c.element_order)));
}

const std::vector<u32>& PermGroup::class_members(u32 class_index) const {
    data_->ensure_classes();
    return data_->class_members.at(class_index);
}

u64 PermGroup::exponent() const {
    data_->ensure_classes();
    return data_->exponent;
}

bool PermGroup::is_abelian() const {
    const auto& g = data_->gens;
    for (size_t i = 0; i < g.size(); ++i)
        for (size_t j = i + 1; j < g.size(); ++j)
            if (!(g[i] * g[j] == g[j] * g[i])) return false;
    return true;
}

bool PermGroup::is_cyclic() const {
    if (!is_abelian()) return false;
    return exponent() == order();
}

bool is_subgroup(const PermGroup& G, const PermGroup& H) {
    if (G.degree() != H.degree()) return false;
    for (const Permutation& h : H.generators())
        if (!G.contains(h)) return false;
    return true;
}

bool is_normal(const PermGroup& G, const PermGroup& N) {
    if (!is_subgroup(G, N)) return false;
    for (const Permutation& n : N.generators())
        for (const Permutation& g : G.generators())
            if (!N.contains(n.conjugated_by(g))) return false;
    return true;
}

namespace {

PermGroup filter_subgroup(const PermGroup& G, const std::function<bool(const Permutation&)>& keep) {
    std::vector<Permutation> gens;
    PermGroup cur = PermGroup::from_generators(G.degree(), {});
    for (const Permutation& e : G.elements()) {
        if (!keep(e) || cur.contains(e)) continue;
        gens.push_back(e);
        cur = PermGroup::from_generators(G.degree(), gens);
    }
    return cur;
}

}  // namespace

PermGroup centralizer(const PermGroup& G, const Permutation& x) {
    if (!G.contains(x)) throw domain_error("centralizer: element is not in the group");
    return filter_subgroup(G, [&](const Permutation& e) { return e * x == x * e; });
}

PermGroup centralizer_of_subgroup(const PermGroup& G, const PermGroup& U) {
    return filter_subgroup(G, [&](const Permutation& e) {
        for (const Permutation& u : U.generators())
            if (!(e * u == u * e)) return false;
        return true;
    });
}

PermGroup center(const PermGroup& G) { return centralizer_of_subgroup(G, G); }

PermGroup normalizer(const PermGroup& G, const PermGroup& U) {
    return filter_subgroup(G, [&](const Permutation& e) {
        for (const Permutation& u : U.generators())
            if (!U.contains(u.conjugated_by(e))) return false;
        return true;
    });
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Permutation>& seed) {
    std::vector<Permutation> gens;
    PermGroup cur = PermGroup::from_generators(G.degree(), {});
    std::vector<Permutation> work = seed;
    while (!work.empty()) {
        Permutation s = std::move(work.back());
        work.pop_back();
        if (cur.contains(s)) continue;
        gens.push_back(s);
        cur = PermGroup::from_generators(G.degree(), gens);
        for (const Permutation& g : G.generators()) work.push_back(gens.back().conjugated_by(g));
    }
    return cur;
}

PermGroup join_subgroups(const PermGroup& A, const PermGroup& B) {
    if (A.degree() != B.degree()) throw input_error("join: degree mismatch");
    std::vector<Permutation> gens = A.generators();
    for (const Permutation& b : B.generators()) gens.push_back(b);
    return PermGroup::from_generators(A.degree(), std::move(gens));
}

PermGroup derived_subgroup(const PermGroup& G) {
    std::vector<Permutation> comms;
    const auto& gens = G.generators();
    for (const Permutation& a : gens)
        for (const Permutation& b : gens) {
            Permutation c = a.inverse() * b.inverse() * a * b;
            if (!c.is_identity()) comms.push_back(std::move(c));
        }
    return normal_closure(G, comms);
}

PermGroup sylow_subgroup(const PermGroup& G, u64 p) {
    if (!is_prime(p)) throw input_error("sylow_subgroup: p must be prime");
    u32 a = valuation(G.order(), p);
    if (a == 0) return PermGroup::from_generators(G.degree(), {});
    u64 target = 1;
    for (u32 i = 0; i < a; ++i) target *= p;

    // seed with the p-part of the first element of order divisible by p
    Permutation seed = G.identity();
    for (const Permutation& e : G.elements()) {
        u64 o = e.order();
        if (o % p == 0) {
            seed = e.power(static_cast<i64>(p_prime_part(o, p)));
            break;
        }
    }
    std::vector<Permutation> pgens{seed};
    PermGroup P = PermGroup::from_generators(G.degree(), pgens);
    while (P.order() < target) {
        PermGroup N = normalizer(G, P);
        bool extended = false;
        for (const Permutation& e : N.elements()) {
            u64 o = e.order();
            if (o % p != 0) continue;
            Permutation h = e.power(static_cast<i64>(p_prime_part(o, p)));
            if (P.contains(h)) continue;
            pgens.push_back(h);
            P = PermGroup::from_generators(G.degree(), pgens);
            extended = true;
            break;
        }
        if (!extended)
            throw invariant_violation("sylow ascent stalled below the full p-part");
    }
    return P;
}

u64 involution_count(const PermGroup& G) {
    u64 n = 0;
    for (const ConjClass& c : G.conjugacy_classes())
        if (c.element_order == 2) n += c.size;
    return n;
}

std::vector<u64> abelian_invariants(const PermGroup& A) {
    if (!A.is_abelian()) throw domain_error("abelian_invariants: group is not abelian");
    std::vector<u64> inv;
    u64 n = A.order();
    for (u64 p : prime_divisors(n)) {
        u32 amax = valuation(n, p);
        // s[k] = log_p #{ x : x^(p^k) = 1 }
        std::vector<u32> s(amax + 2, 0);
        for (u32 k = 1; k <= amax; ++k) {
            u64 pk = 1;
            for (u32 i = 0; i < k; ++i) pk *= p;
            u64 count = 0;
            for (const ConjClass& c : A.conjugacy_classes())
                if (pk % c.element_order == 0) count += c.size;
            s[k] = valuation(count, p);
        }
        s[amax + 1] = s[amax];
        for (u32 k = 1; k <= amax; ++k) {
            u32 at_least_k = s[k] - s[k - 1];
            u32 at_least_k1 = s[k + 1] - s[k];
            u32 exactly_k = at_least_k - at_least_k1;
            u64 pk = 1;
            for (u32 i = 0; i < k; ++i) pk *= p;
            for (u32 c = 0; c < exactly_k; ++c) inv.push_back(pk);
        }
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::string to_string(SylowTag tag) {
    switch (tag) {
        case SylowTag::Trivial: return "trivial";
        case SylowTag::C2: return "C2";
        case SylowTag::C3: return "C3";
        case SylowTag::C4: return "C4";
        case SylowTag::C5: return "C5";
        case SylowTag::C7: return "C7";
        case SylowTag::Klein: return "C2xC2";
        case SylowTag::D8: return "D8";
        case SylowTag::Q8: return "Q8";
        case SylowTag::CyclicOther: return "cyclic";
        case SylowTag::AbelianOther: return "abelian";
        case SylowTag::NonabelianOther: return "nonabelian";
    }
    return "?";
}

SylowDescriptor classify_sylow(const PermGroup& P, u64 p) {
    if (!is_prime(p)) throw input_error("classify_sylow: p must be prime");
    SylowDescriptor d;
    d.p = p;
    d.order = P.order();
    if (d.order != 1 && p_prime_part(d.order, p) != 1)
        throw domain_error("classify_sylow: group is not a p-group");
    d.abelian = P.is_abelian();
    d.cyclic = P.is_cyclic();
    d.exponent = d.order == 1 ? 1 : P.exponent();
    if (d.abelian) d.invariants = abelian_invariants(P);
    if (d.order == 1) {
        d.tag = SylowTag::Trivial;
    } else if (d.order == p) {
        d.tag = p == 2   ? SylowTag::C2
                : p == 3 ? SylowTag::C3
                : p == 5 ? SylowTag::C5
                : p == 7 ? SylowTag::C7
                         : SylowTag::CyclicOther;
    } else if (d.cyclic) {
        d.tag = d.order == 4 ? SylowTag::C4 : SylowTag::CyclicOther;
    } else if (d.abelian) {
        d.tag = d.order == 4 ? SylowTag::Klein : SylowTag::AbelianOther;
    } else if (d.order == 8) {
        u64 inv = involution_count(P);
        if (inv == 1)
            d.tag = SylowTag::Q8;
        else if (inv == 5)
            d.tag = SylowTag::D8;
        else
            throw invariant_violation("nonabelian group of order 8 with impossible involution count");
    } else {
        d.tag = SylowTag::NonabelianOther;
    }
    return d;
}

SylowDescriptor sylow_descriptor(const PermGroup& G, u64 p) {
    return classify_sylow(sylow_subgroup(G, p), p);
}

PElementClasses p_element_classes(const PermGroup& G, u64 p) {
    if (!is_prime(p)) throw input_error("p_element_classes: p must be prime");
    PElementClasses out;
    const auto& classes = G.conjugacy_classes();
    for (u32 ci = 0; ci < classes.size(); ++ci) {
        u64 o = classes[ci].element_order;
        if (o == 1 || p_prime_part(o, p) != 1) continue;
        if (classes[ci].size == 1)
            out.central.push_back(ci);
        else
            out.noncentral.push_back(ci);
    }
    return out;
}

namespace {

std::vector<u32> coset_signature(const Permutation& g, const std::vector<Permutation>& n_elements) {
    std::vector<u32> best = (n_elements[0] * g).images();
    for (size_t i = 1; i < n_elements.size(); ++i) {
        std::vector<u32> cand = (n_elements[i] * g).images();
        if (cand < best) best = cand;
    }
    return best;
}

}  // namespace

u32 CosetAction::coset_index(const Permutation& g) const {
    std::vector<u32> sig = coset_signature(g, normal_.elements());
    // reps_ holds exactly the minimal coset elements, so the signature is a rep
    Permutation m{std::vector<u32>(sig)};
    for (u32 i = 0; i < reps_.size(); ++i)
        if (reps_[i] == m) return i;
    throw invariant_violation("coset signature missing from the enumeration");
}

Permutation CosetAction::project(const Permutation& g) const {
    if (!group_.contains(g)) throw domain_error("project: element not in the group");
    std::vector<u32> img(reps_.size());
    for (u32 i = 0; i < reps_.size(); ++i) img[i] = coset_index(reps_[i] * g);
    return Permutation(std::move(img));
}

CosetAction coset_action(const PermGroup& G, const PermGroup& N) {
    if (!is_normal(G, N)) throw domain_error("coset_action: subgroup is not normal in G");
    CosetAction ca;
    ca.group_ = G;
    ca.normal_ = N;
    const auto& n_elems = N.elements();

    std::map<std::vector<u32>, u32> index_of;
    std::vector<Permutation> reps;
    auto intern = [&](const Permutation& g) -> u32 {
        std::vector<u32> sig = coset_signature(g, n_elems);
        auto it = index_of.find(sig);
        if (it != index_of.end()) return it->second;
        u32 idx = static_cast<u32>(reps.size());
        index_of.emplace(sig, idx);
        reps.push_back(Permutation(std::move(sig)));
        return idx;
    };
    intern(G.identity());
    for (u32 qi = 0; qi < reps.size(); ++qi) {
        Permutation rep = reps[qi];
        for (const Permutation& s : G.generators()) intern(rep * s);
    }
    u64 expected = G.order() / N.order();
    if (reps.size() != expected) throw invariant_violation("coset enumeration found a wrong index");

    std::vector<Permutation> qgens;
    for (const Permutation& s : G.generators()) {
        std::vector<u32> img(reps.size());
        for (u32 i = 0; i < reps.size(); ++i) img[i] = intern(reps[i] * s);
        qgens.emplace_back(std::move(img));
    }
    ca.reps_ = std::move(reps);
    ca.quotient_ = PermGroup::from_generators(static_cast<u32>(ca.reps_.size()), std::move(qgens));
    if (ca.quotient_.order() != expected)
        throw invariant_violation("quotient order disagrees with the coset count");
    return ca;
}

std::vector<PermGroup> normal_subgroups(const PermGroup& G) {
    if (G.order() > kNormalLatticeBound)
        throw capacity_error("normal subgroup lattice needs order <= " +
                             std::to_string(kNormalLatticeBound) + ", group has " +
                             std::to_string(G.order()));

    auto signature = [&](const PermGroup& H) {
        std::vector<u32> sig;
        sig.reserve(H.order());
        for (const Permutation& e : H.elements()) sig.push_back(G.element_index(e));
        std::sort(sig.begin(), sig.end());
        return sig;
    };

    std::map<std::vector<u32>, PermGroup> found;
    auto add = [&](const PermGroup& H) { return found.emplace(signature(H), H).second; };

    add(PermGroup::from_generators(G.degree(), {}));
    const auto& classes = G.conjugacy_classes();
    for (u32 ci = 1; ci < classes.size(); ++ci)
        add(normal_closure(G, {classes[ci].representative}));

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PermGroup> current;
        current.reserve(found.size());
        for (auto& [sig, H] : found) current.push_back(H);
        for (size_t i = 0; i < current.size(); ++i) {
            for (size_t j = i + 1; j < current.size(); ++j) {
                if (current[i].order() == G.order() || current[j].order() == G.order()) continue;
                PermGroup J = join_subgroups(current[i], current[j]);
                if (add(J)) grew = true;
            }
        }
    }

    std::vector<std::pair<std::vector<u32>, PermGroup>> all;
    for (auto& [sig, H] : found) all.emplace_back(sig, H);
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<PermGroup> out;
    out.reserve(all.size());
    for (auto& [sig, H] : all) out.push_back(H);
    return out;
}

}  // namespace blockscope
