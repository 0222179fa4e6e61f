#include "blockscope/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include "blockscope/blocks.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/normal.hpp"
#include "blockscope/numeric.hpp"

namespace blockscope {

namespace {

using nlohmann::ordered_json;

struct GroupEntry {
    std::string name;
    std::string file;
    PermGroup group;
};

// Lazy per-group products shared by all suites and primes.  One coarse
// recursive lock per group; jobs for different groups never contend.
class GroupCache {
public:
    GroupCache(const GroupEntry* e) : e_(e) {}

    const CharacterTable& table() {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        if (!table_) table_ = std::make_unique<CharacterTable>(compute_table(e_->group, e_->name));
        return *table_;
    }

    const BlockDecomposition& dec(u64 p) {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        auto it = decs_.find(p);
        if (it == decs_.end())
            it = decs_.emplace(p, std::make_unique<BlockDecomposition>(block_partition(table(), p))).first;
        return *it->second;
    }

    const SylowDescriptor& sylow(u64 p) {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        auto it = sylows_.find(p);
        if (it == sylows_.end()) it = sylows_.emplace(p, sylow_descriptor(e_->group, p)).first;
        return it->second;
    }

    struct NormalEntry {
        PermGroup n;
        std::string label;
    };

    const std::vector<NormalEntry>& normals(bool& capped) {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        if (!normals_done_) {
            std::vector<PermGroup> list;
            try {
                list = normal_subgroups(e_->group);
            } catch (const capacity_error&) {
                normals_capped_ = true;
                list = fallback_normals();
            }
            for (size_t i = 0; i < list.size(); ++i) {
                char buf[48];
                std::snprintf(buf, sizeof buf, "N%03zu[o=%llu]", i,
                              static_cast<unsigned long long>(list[i].order()));
                normals_.push_back({std::move(list[i]), buf});
            }
            normals_done_ = true;
        }
        capped = normals_capped_;
        return normals_;
    }

    const CharacterTable& normal_table(size_t i) {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        auto it = ntables_.find(i);
        if (it == ntables_.end()) {
            std::string nm = e_->name + ":" + normals_[i].label;
            it = ntables_.emplace(i, std::make_unique<CharacterTable>(compute_table(normals_[i].n, nm)))
                     .first;
        }
        return *it->second;
    }

    const BlockDecomposition& normal_dec(size_t i, u64 p) {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        auto key = std::make_pair(i, p);
        auto it = ndecs_.find(key);
        if (it == ndecs_.end())
            it = ndecs_.emplace(key, std::make_unique<BlockDecomposition>(block_partition(normal_table(i), p)))
                     .first;
        return *it->second;
    }

    const FusionMap& fusion(size_t i) {
        std::lock_guard<std::recursive_mutex> lk(mu_);
        auto it = fusions_.find(i);
        if (it == fusions_.end())
            it = fusions_.emplace(i, std::make_unique<FusionMap>(class_fusion(e_->group, normals_[i].n)))
                     .first;
        return *it->second;
    }

private:
    // Beyond the lattice cap: trivial subgroup, derived subgroup, center,
    // Sylow normal closures, and the group itself.
    std::vector<PermGroup> fallback_normals() {
        const PermGroup& g = e_->group;
        std::vector<PermGroup> cand;
        cand.push_back(PermGroup::from_generators(g.degree(), {}));
        cand.push_back(derived_subgroup(g));
        cand.push_back(center(g));
        for (u64 p : prime_divisors(g.order()))
            cand.push_back(normal_closure(g, sylow_subgroup(g, p).generators()));
        cand.push_back(g);

        std::map<std::vector<u32>, PermGroup> uniq;
        for (auto& n : cand) {
            std::vector<u32> sig;
            sig.reserve(n.order());
            for (const auto& x : n.elements()) sig.push_back(g.element_index(x));
            std::sort(sig.begin(), sig.end());
            uniq.emplace(std::move(sig), std::move(n));
        }
        std::vector<std::pair<std::vector<u32>, PermGroup>> rows(
            std::make_move_iterator(uniq.begin()), std::make_move_iterator(uniq.end()));
        std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
            if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
            return a.first < b.first;
        });
        std::vector<PermGroup> out;
        out.reserve(rows.size());
        for (auto& r : rows) out.push_back(std::move(r.second));
        return out;
    }

    const GroupEntry* e_;
    std::recursive_mutex mu_;
    std::unique_ptr<CharacterTable> table_;
    std::map<u64, std::unique_ptr<BlockDecomposition>> decs_;
    std::map<u64, SylowDescriptor> sylows_;
    bool normals_done_ = false;
    bool normals_capped_ = false;
    std::vector<NormalEntry> normals_;
    std::map<size_t, std::unique_ptr<CharacterTable>> ntables_;
    std::map<std::pair<size_t, u64>, std::unique_ptr<BlockDecomposition>> ndecs_;
    std::map<size_t, std::unique_ptr<FusionMap>> fusions_;
};

struct JobCtx {
    const VerifyOptions* opt;
    const GroupEntry* ge;
    GroupCache* cache;
    u64 p = 2;
    bool divides = false;
    std::vector<Finding>* out;

    Finding base(const char* suite, std::string subject) const {
        Finding f;
        f.suite = suite;
        f.group = ge->name;
        f.p = p;
        f.subject = std::move(subject);
        return f;
    }

    void emit(Finding f, bool ok, ordered_json payload) const {
        f.status = ok ? "pass" : "fail";
        f.payload = std::move(payload);
        if (!ok)
            f.payload["repro"] = ordered_json{{"file", ge->file}, {"p", p}, {"seed", opt->seed}};
        out->push_back(std::move(f));
    }

    void skip(Finding f, std::string reason, ordered_json payload = ordered_json::object()) const {
        f.status = "skipped";
        f.reason = std::move(reason);
        f.payload = std::move(payload);
        out->push_back(std::move(f));
    }
};

bool tag_is(SylowTag t, std::initializer_list<SylowTag> set) {
    return std::find(set.begin(), set.end(), t) != set.end();
}

// k(B0) = 5 forces a Sylow subgroup of type C5, C7, D8 or Q8.
void suite_five_chars(const JobCtx& c) {
    if (!c.divides) return;
    const auto& d = c.cache->dec(c.p);
    u64 k = d.principal().k;
    Finding f = c.base("thmA", "principal");
    if (k != 5) {
        c.skip(std::move(f), "principal block count is not 5", {{"k", k}});
        return;
    }
    const auto& desc = c.cache->sylow(c.p);
    bool ok = tag_is(desc.tag, {SylowTag::C5, SylowTag::C7, SylowTag::D8, SylowTag::Q8});
    c.emit(std::move(f), ok,
           {{"k", k}, {"sylow", to_string(desc.tag)}, {"defect", d.principal().defect}});
}

// Characterizations for k(B0) <= 4: k=1 iff p coprime to |G|; k=2 iff Sylow
// C2; k=3 iff Sylow C3; k=4 forces C2xC2, C4 or C5.
void suite_few_chars(const JobCtx& c) {
    const auto& d = c.cache->dec(c.p);
    u64 k = d.principal().k;
    Finding f = c.base("smaller4", "principal");
    ordered_json payload{{"k", k}, {"divides", c.divides}};
    if (!c.divides) {
        c.emit(std::move(f), k == 1, std::move(payload));
        return;
    }
    const auto& desc = c.cache->sylow(c.p);
    payload["sylow"] = to_string(desc.tag);
    bool ok = k >= 2;
    if ((k == 2) != (desc.tag == SylowTag::C2)) ok = false;
    if ((k == 3) != (desc.tag == SylowTag::C3)) ok = false;
    if (k == 4 && !tag_is(desc.tag, {SylowTag::Klein, SylowTag::C4, SylowTag::C5})) ok = false;
    c.emit(std::move(f), ok, std::move(payload));
}

// Every 2-block: even defect group forces even k0; order-4 subgroup forces
// 4 | k0; defect exactly 1 happens exactly when k0 = 2.
void suite_div2(const JobCtx& c) {
    if (c.p != 2 || !c.divides) return;
    const auto& d = c.cache->dec(2);
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        bool row_ok = true;
        if (b.defect >= 1 && b.k0 % 2 != 0) row_ok = false;
        if (b.defect >= 2 && b.k0 % 4 != 0) row_ok = false;
        if ((b.defect == 1) != (b.k0 == 2)) row_ok = false;
        rows.push_back({{"defect", b.defect}, {"k0", b.k0}, {"ok", row_ok}});
        ok = ok && row_ok;
    }
    c.emit(c.base("div2", "blocks"), ok, {{"blocks", rows}});
}

// Principal 3-block: 3 | defect group order forces 3 | k0; defect exactly 1
// happens exactly when k0 = 3.
void suite_div3(const JobCtx& c) {
    if (c.p != 3 || !c.divides) return;
    const Block& b = c.cache->dec(3).principal();
    bool ok = true;
    if (b.defect >= 1 && b.k0 % 3 != 0) ok = false;
    if ((b.defect == 1) != (b.k0 == 3)) ok = false;
    c.emit(c.base("div3", "principal"), ok, {{"defect", b.defect}, {"k0", b.k0}});
}

// Abelian Sylow subgroup: every principal block character has height zero.
void suite_heightzero(const JobCtx& c) {
    if (!c.divides) return;
    const auto& desc = c.cache->sylow(c.p);
    Finding f = c.base("heightzero", "principal");
    if (!desc.abelian) {
        c.skip(std::move(f), "Sylow subgroup is nonabelian");
        return;
    }
    const Block& b = c.cache->dec(c.p).principal();
    c.emit(std::move(f), b.k == b.k0, {{"k", b.k}, {"k0", b.k0}});
}

// Nontrivial cyclic Sylow subgroup: k(B0) = e + (|P|-1)/e.
void suite_cyclic(const JobCtx& c) {
    if (!c.divides) return;
    const auto& desc = c.cache->sylow(c.p);
    Finding f = c.base("cyclic", "principal");
    if (!desc.cyclic || desc.order == 1) {
        c.skip(std::move(f), "Sylow subgroup is not nontrivial cyclic");
        return;
    }
    CyclicDefectPrediction pred = cyclic_defect_count(c.ge->group, c.p);
    u64 k = c.cache->dec(c.p).principal().k;
    c.emit(std::move(f), pred.predicted_k == k,
           {{"e", pred.e}, {"sylow_order", pred.sylow_order}, {"predicted", pred.predicted_k}, {"k", k}});
}

// k(B0) = |Z(G)|_p l(B0) + sum of l(B0(C_G(x))) over noncentral classes of
// nontrivial p-elements.
void suite_brauer(const JobCtx& c) {
    if (!c.divides) return;
    BrauerIdentityResult r =
        brauer_count_identity(c.ge->group, c.cache->table(), c.cache->dec(c.p), c.p);
    ordered_json parts = ordered_json::array();
    for (const auto& [ci, l] : r.centralizer_parts) parts.push_back({{"class", ci}, {"l", l}});
    c.emit(c.base("brauer-identity", "principal"), r.holds,
           {{"lhs", r.lhs},
            {"rhs", r.rhs},
            {"center_p_part", r.center_p_part},
            {"l_b0", r.l_b0},
            {"parts", parts}});
}

// Every block: k(B) <= p^defect.
void suite_kbound(const JobCtx& c) {
    if (!c.divides) return;
    const auto& d = c.cache->dec(c.p);
    ordered_json rows = ordered_json::array();
    bool ok = true;
    for (const Block& b : d.blocks) {
        u64 bound = 1;
        for (u32 i = 0; i < b.defect; ++i) bound = checked_mul(bound, c.p);
        bool row_ok = b.k <= bound;
        rows.push_back({{"k", b.k}, {"defect", b.defect}, {"bound", bound}, {"ok", row_ok}});
        ok = ok && row_ok;
    }
    c.emit(c.base("kB-bound", "blocks"), ok, {{"blocks", rows}});
}

// Per normal subgroup: the principal block covers the principal block below,
// every principal-block character of N lies under the principal block of G,
// uniqueness of the covering block when P C_G(P) is inside N, and the
// cyclic-quotient restriction count.
void suite_covering(const JobCtx& c) {
    if (!c.divides) return;
    bool capped = false;
    const auto& ns = c.cache->normals(capped);
    if (capped) {
        Finding f = c.base("covering", "normal-lattice");
        f.status = "capacity";
        f.reason = "normal subgroup lattice capped; derived subgroup, center and Sylow closures used";
        c.out->push_back(std::move(f));
    }
    const CharacterTable& tg = c.cache->table();
    const auto& dg = c.cache->dec(c.p);
    std::vector<u64> divs = prime_divisors(c.ge->group.order());
    bool first_prime = !divs.empty() && divs.front() == c.p;

    for (size_t i = 0; i < ns.size(); ++i) {
        const CharacterTable& tn = c.cache->normal_table(i);
        const auto& dn = c.cache->normal_dec(i, c.p);
        const FusionMap& fm = c.cache->fusion(i);

        auto pairs = covering_blocks(tg, dg, tn, dn, fm);
        bool covers =
            std::find(pairs.begin(), pairs.end(),
                      std::make_pair(dg.principal_index, dn.principal_index)) != pairs.end();
        ordered_json jp = ordered_json::array();
        for (const auto& [a, b] : pairs) jp.push_back({a, b});
        c.emit(c.base("covering", ns[i].label + ":covers"), covers, {{"pairs", jp}});

        bool above = check_blockabove(tg, dg, tn, dn, fm);
        c.emit(c.base("covering", ns[i].label + ":above"), above,
               {{"k_b0_n", dn.principal().k}});

        CheckOutcome oc = check_onlycovering(c.ge->group, tg, dg, ns[i].n, tn, dn, fm, c.p);
        if (oc.applicable) c.emit(c.base("covering", ns[i].label + ":unique"), oc.holds, oc.details);

        if (first_prime) {
            CheckOutcome rc = check_restriction_count(c.ge->group, tg, ns[i].n, tn, fm);
            if (rc.applicable)
                c.emit(c.base("covering", ns[i].label + ":restcount"), rc.holds, rc.details);
        }
    }
}

// Inflation from G/Z(G) maps blocks to blocks, principal to principal.
void suite_inflation(const JobCtx& c) {
    if (!c.divides) return;
    Finding f = c.base("inflation", "center-quotient");
    CheckOutcome oc = check_quotient_inflation(c.ge->group, c.cache->table(), c.cache->dec(c.p), c.p);
    if (!oc.applicable) {
        c.skip(std::move(f), "trivial center");
        return;
    }
    c.emit(std::move(f), oc.holds, oc.details);
}

// Restriction bijection between principal blocks across a p'-index normal
// subgroup with G = N C_G(P).
void suite_isomblocks(const JobCtx& c) {
    if (!c.divides) return;
    bool capped = false;
    const auto& ns = c.cache->normals(capped);
    const PermGroup& g = c.ge->group;
    PermGroup syl = sylow_subgroup(g, c.p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    for (size_t i = 0; i < ns.size(); ++i) {
        const PermGroup& n = ns[i].n;
        if ((g.order() / n.order()) % c.p == 0) continue;
        u64 meet = 0;
        const PermGroup& small = n.order() <= cent.order() ? n : cent;
        const PermGroup& large = n.order() <= cent.order() ? cent : n;
        for (const auto& x : small.elements())
            if (large.contains(x)) ++meet;
        if (n.order() / meet * cent.order() != g.order()) continue;
        CheckOutcome oc = check_isomblocks(g, c.cache->table(), c.cache->dec(c.p), n,
                                           c.cache->normal_table(i), c.cache->normal_dec(i, c.p),
                                           c.cache->fusion(i), c.p);
        if (oc.applicable) c.emit(c.base("isomblocks", ns[i].label), oc.holds, oc.details);
    }
}

// Normal subgroups containing P C_G(P) in groups with k(B0) = 5 have
// k(B0(M)) in {4,5,7,11,13}, and exactly 7 for p = 2 with M proper.
void suite_tech(const JobCtx& c) {
    if (!c.divides) return;
    if (c.cache->dec(c.p).principal().k != 5) return;
    bool capped = false;
    const auto& ns = c.cache->normals(capped);
    const PermGroup& g = c.ge->group;
    PermGroup syl = sylow_subgroup(g, c.p);
    PermGroup cent = centralizer_of_subgroup(g, syl);
    auto inside = [](const PermGroup& outer, const PermGroup& inner) {
        for (const auto& x : inner.generators())
            if (!outer.contains(x)) return false;
        return true;
    };
    for (size_t i = 0; i < ns.size(); ++i) {
        if (!inside(ns[i].n, syl) || !inside(ns[i].n, cent)) continue;
        CheckOutcome oc = check_tech(g, c.cache->table(), c.cache->dec(c.p), ns[i].n,
                                     c.cache->normal_table(i), c.cache->normal_dec(i, c.p),
                                     c.cache->fusion(i), c.p);
        if (oc.applicable) c.emit(c.base("tech", ns[i].label), oc.holds, oc.details);
    }
}

using SuiteFn = void (*)(const JobCtx&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteFn>> table = {
        {"thmA", suite_five_chars},
        {"smaller4", suite_few_chars},
        {"div2", suite_div2},
        {"div3", suite_div3},
        {"heightzero", suite_heightzero},
        {"cyclic", suite_cyclic},
        {"brauer-identity", suite_brauer},
        {"kB-bound", suite_kbound},
        {"covering", suite_covering},
        {"inflation", suite_inflation},
        {"isomblocks", suite_isomblocks},
        {"tech", suite_tech},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, fn] : suite_table()) v.push_back(n);
        return v;
    }();
    return names;
}

PermGroup read_group_file(const std::string& path, std::string* name_out) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad group file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("degree") || !j.contains("generators"))
        throw input_error("group file needs name, degree and generators");
    std::string name = j["name"].get<std::string>();
    if (name.empty()) throw input_error("group name is empty");
    u64 degree = j["degree"].get<u64>();
    if (degree < 1 || degree > 4096) throw input_error("degree out of range");
    std::vector<Permutation> gens;
    for (const auto& row : j["generators"]) {
        std::vector<u32> images;
        for (const auto& v : row) {
            u64 x = v.get<u64>();
            if (x < 1 || x > degree) throw input_error("generator image out of range");
            images.push_back(static_cast<u32>(x - 1));
        }
        if (images.size() != degree) throw input_error("generator length mismatch");
        gens.emplace_back(std::move(images));
    }
    if (name_out) *name_out = name;
    return PermGroup::from_generators(static_cast<u32>(degree), std::move(gens));
}

void write_group_file(const PermGroup& g, const std::string& name, const std::string& path) {
    ordered_json j;
    j["name"] = name;
    j["degree"] = g.degree();
    ordered_json gens = ordered_json::array();
    for (const auto& p : g.generators()) {
        ordered_json row = ordered_json::array();
        for (u32 i = 0; i < g.degree(); ++i) row.push_back(p(i) + 1);
        gens.push_back(std::move(row));
    }
    j["generators"] = std::move(gens);
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << j.dump(1) << "\n";
}

Report run_suite(const VerifyOptions& opt) {
    std::vector<std::string> wanted;
    if (opt.suite == "all") {
        wanted = suite_names();
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), opt.suite) == names.end())
            throw input_error("unknown suite " + opt.suite);
        wanted.push_back(opt.suite);
    }

    Report rep;
    rep.suite = opt.suite;
    rep.seed = opt.seed;

    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& e : std::filesystem::directory_iterator(opt.corpus_dir, ec)) {
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path().string());
    }
    if (ec) throw input_error("cannot read corpus directory " + opt.corpus_dir);
    std::sort(files.begin(), files.end());

    std::vector<GroupEntry> groups;
    for (const auto& f : files) {
        try {
            std::string name;
            PermGroup g = read_group_file(f, &name);
            groups.push_back({name, std::filesystem::path(f).filename().string(), std::move(g)});
        } catch (const std::exception& e) {
            Finding bad;
            bad.suite = "corpus";
            bad.group = std::filesystem::path(f).filename().string();
            bad.subject = "parse";
            bad.status = "skipped";
            bad.reason = e.what();
            rep.findings.push_back(std::move(bad));
        }
    }

    struct Job {
        size_t gi;
        u64 p;
        bool divides;
    };
    std::vector<Job> jobs;
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        u64 order = groups[gi].group.order();
        std::vector<u64> ps = prime_divisors(order);
        u64 extra = 2;
        while (order % extra == 0) extra = smallest_prime_1_mod(1, extra);
        for (u64 p : ps)
            if (!opt.prime || *opt.prime == p) jobs.push_back({gi, p, true});
        if (!opt.prime || *opt.prime == extra) jobs.push_back({gi, extra, false});
    }

    std::vector<std::unique_ptr<GroupCache>> caches;
    caches.reserve(groups.size());
    for (const auto& g : groups) caches.push_back(std::make_unique<GroupCache>(&g));

    std::vector<std::vector<Finding>> results(jobs.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= jobs.size()) break;
            const Job& jb = jobs[i];
            JobCtx ctx;
            ctx.opt = &opt;
            ctx.ge = &groups[jb.gi];
            ctx.cache = caches[jb.gi].get();
            ctx.p = jb.p;
            ctx.divides = jb.divides;
            ctx.out = &results[i];
            for (const auto& [sname, fn] : suite_table()) {
                if (std::find(wanted.begin(), wanted.end(), sname) == wanted.end()) continue;
                try {
                    fn(ctx);
                } catch (const capacity_error& e) {
                    Finding f = ctx.base(sname.c_str(), "error");
                    f.status = "capacity";
                    f.reason = e.what();
                    results[i].push_back(std::move(f));
                } catch (const std::exception& e) {
                    Finding f = ctx.base(sname.c_str(), "error");
                    f.status = "fail";
                    f.reason = e.what();
                    f.payload["repro"] =
                        ordered_json{{"file", ctx.ge->file}, {"p", ctx.p}, {"seed", opt.seed}};
                    results[i].push_back(std::move(f));
                }
            }
        }
    };

    unsigned nthreads = std::max(1u, opt.jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (auto& r : results)
        for (auto& f : r) rep.findings.push_back(std::move(f));

    std::sort(rep.findings.begin(), rep.findings.end(), [](const Finding& a, const Finding& b) {
        return std::tie(a.group, a.p, a.suite, a.subject) < std::tie(b.group, b.p, b.suite, b.subject);
    });

    for (const Finding& f : rep.findings) {
        if (f.status == "pass") ++rep.pass;
        else if (f.status == "fail") ++rep.fail;
        else if (f.status == "skipped") ++rep.skipped;
        else ++rep.capacity;
    }
    return rep;
}

nlohmann::ordered_json report_json(const Report& r) {
    ordered_json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    ordered_json fs = ordered_json::array();
    for (const Finding& f : r.findings) {
        ordered_json e;
        e["suite"] = f.suite;
        e["group"] = f.group;
        e["p"] = f.p;
        e["subject"] = f.subject;
        e["status"] = f.status;
        if (!f.reason.empty()) e["reason"] = f.reason;
        e["payload"] = f.payload;
        fs.push_back(std::move(e));
    }
    j["findings"] = std::move(fs);
    j["summary"] = ordered_json{
        {"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped}, {"capacity", r.capacity}};
    return j;
}

std::string report_table(const Report& r) {
    std::map<std::string, std::array<u64, 4>> rows;
    for (const Finding& f : r.findings) {
        auto& row = rows[f.suite];
        if (f.status == "pass") ++row[0];
        else if (f.status == "fail") ++row[1];
        else if (f.status == "skipped") ++row[2];
        else ++row[3];
    }
    std::ostringstream os;
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-16s %8s %8s %8s %8s\n", "suite", "pass", "fail", "skipped",
                  "capacity");
    os << buf;
    for (const auto& [name, row] : rows) {
        std::snprintf(buf, sizeof buf, "%-16s %8llu %8llu %8llu %8llu\n", name.c_str(),
                      static_cast<unsigned long long>(row[0]), static_cast<unsigned long long>(row[1]),
                      static_cast<unsigned long long>(row[2]), static_cast<unsigned long long>(row[3]));
        os << buf;
    }
    std::snprintf(buf, sizeof buf, "%-16s %8llu %8llu %8llu %8llu\n", "total",
                  static_cast<unsigned long long>(r.pass), static_cast<unsigned long long>(r.fail),
                  static_cast<unsigned long long>(r.skipped), static_cast<unsigned long long>(r.capacity));
    os << buf;
    for (const Finding& f : r.findings) {
        if (f.status != "fail") continue;
        os << "FAIL " << f.suite << " " << f.group << " p=" << f.p << " " << f.subject;
        if (!f.reason.empty()) os << ": " << f.reason;
        os << "\n";
    }
    return os.str();
}

}  // namespace blockscope
