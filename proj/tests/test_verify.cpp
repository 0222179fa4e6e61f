#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "blockscope/errors.hpp"
#include "blockscope/groups.hpp"
#include "blockscope/verify.hpp"

using namespace blockscope;
namespace fs = std::filesystem;

namespace {

struct TempCorpus {
    fs::path dir;
    explicit TempCorpus(const std::string& tag) {
        dir = fs::temp_directory_path() / ("blockscope_tests_" + tag);
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    TempCorpus(const TempCorpus&) = delete;
    TempCorpus& operator=(const TempCorpus&) = delete;
    ~TempCorpus() { fs::remove_all(dir); }
    void add(const PermGroup& g, const std::string& name) {
        write_group_file(g, name, (dir / (name + ".json")).string());
    }
    void fill_small() {
        add(groups::cyclic(5), "C5");
        add(groups::dihedral(14), "D14");
        add(groups::dicyclic(8), "Q8");
        add(groups::alternating(5), "A5");
        add(groups::symmetric(3), "S3");
    }
};

const Finding* find_one(const Report& r, const std::string& suite, const std::string& group, u64 p,
                        const std::string& subject = "principal") {
    for (const Finding& f : r.findings)
        if (f.suite == suite && f.group == group && f.p == p && f.subject == subject) return &f;
    return nullptr;
}

u64 count_status(const Report& r, const std::string& suite, const std::string& status) {
    u64 n = 0;
    for (const Finding& f : r.findings)
        if (f.suite == suite && f.status == status) ++n;
    return n;
}

}  // namespace

TEST_CASE("group files round trip") {
    TempCorpus tc("roundtrip");
    PermGroup g = groups::semidirect_cyclic(7, 2);
    std::string path = (tc.dir / "F21.json").string();
    write_group_file(g, "F21", path);
    std::string name;
    PermGroup back = read_group_file(path, &name);
    CHECK(name == "F21");
    CHECK(back.order() == 21);
    CHECK(back.degree() == g.degree());
    for (const Permutation& gen : g.generators()) CHECK(back.contains(gen));
    for (const Permutation& gen : back.generators()) CHECK(g.contains(gen));

    CHECK_THROWS_AS(read_group_file((tc.dir / "missing.json").string()), input_error);
    std::ofstream((tc.dir / "junk.json").string()) << "{ not json";
    CHECK_THROWS_AS(read_group_file((tc.dir / "junk.json").string()), input_error);
    std::ofstream((tc.dir / "bad.json").string()) << R"({"name":"X","degree":2,"generators":[[1,3]]})";
    CHECK_THROWS_AS(read_group_file((tc.dir / "bad.json").string()), input_error);
}

TEST_CASE("five character suite on a small corpus") {
    TempCorpus tc("thma");
    tc.fill_small();
    VerifyOptions opt;
    opt.suite = "thmA";
    opt.corpus_dir = tc.dir.string();
    Report r = run_suite(opt);

    CHECK(r.fail == 0);
    CHECK(r.pass == 3);

    const Finding* c5 = find_one(r, "thmA", "C5", 5);
    REQUIRE(c5);
    CHECK(c5->status == "pass");
    CHECK(c5->payload.at("sylow") == "C5");
    CHECK(c5->payload.at("k") == 5);

    const Finding* d14 = find_one(r, "thmA", "D14", 7);
    REQUIRE(d14);
    CHECK(d14->status == "pass");
    CHECK(d14->payload.at("sylow") == "C7");

    const Finding* q8 = find_one(r, "thmA", "Q8", 2);
    REQUIRE(q8);
    CHECK(q8->status == "pass");
    CHECK(q8->payload.at("sylow") == "Q8");
    CHECK(q8->payload.at("defect") == 3);

    // groups whose principal block is narrower are skipped with the count
    const Finding* a5 = find_one(r, "thmA", "A5", 2);
    REQUIRE(a5);
    CHECK(a5->status == "skipped");
    CHECK(a5->payload.at("k") == 4);
    CHECK(r.skipped == 6);
}

TEST_CASE("small principal block suite covers nondivisor primes") {
    TempCorpus tc("smaller4");
    tc.fill_small();
    VerifyOptions opt;
    opt.suite = "smaller4";
    opt.corpus_dir = tc.dir.string();
    Report r = run_suite(opt);

    CHECK(r.fail == 0);
    CHECK(r.skipped == 0);
    // one finding per (group, prime) pair including one coprime prime each
    CHECK(r.pass == 14);

    const Finding* a5k4 = find_one(r, "smaller4", "A5", 2);
    REQUIRE(a5k4);
    CHECK(a5k4->payload.at("k") == 4);
    CHECK(a5k4->payload.at("sylow") == "C2xC2");

    const Finding* a5k3 = find_one(r, "smaller4", "A5", 3);
    REQUIRE(a5k3);
    CHECK(a5k3->payload.at("k") == 3);
    CHECK(a5k3->payload.at("sylow") == "C3");

    // coprime primes must give the one-character principal block
    u64 coprime_cases = 0;
    for (const Finding& f : r.findings)
        if (f.suite == "smaller4" && f.payload.contains("divides") &&
            f.payload.at("divides") == false) {
            CHECK(f.payload.at("k") == 1);
            CHECK(f.status == "pass");
            ++coprime_cases;
        }
    CHECK(coprime_cases == 5);
}

TEST_CASE("all suites pass on the small corpus") {
    TempCorpus tc("all");
    tc.fill_small();
    VerifyOptions opt;
    opt.suite = "all";
    opt.corpus_dir = tc.dir.string();
    opt.jobs = 2;
    Report r = run_suite(opt);
    CHECK(r.fail == 0);
    CHECK(r.capacity == 0);
    CHECK(r.pass > 50);

    // every suite contributed at least one finding
    for (const std::string& s : suite_names()) {
        CAPTURE(s);
        u64 n = 0;
        for (const Finding& f : r.findings)
            if (f.suite == s) ++n;
        CHECK(n > 0);
    }

    // findings arrive sorted by (group, p, suite, subject)
    auto key = [](const Finding& f) { return std::tie(f.group, f.p, f.suite, f.subject); };
    for (size_t i = 1; i < r.findings.size(); ++i)
        CHECK(key(r.findings[i - 1]) <= key(r.findings[i]));

    // summary counters match the findings
    u64 pass = 0, fail = 0, skipped = 0, capacity = 0;
    for (const Finding& f : r.findings) {
        if (f.status == "pass") ++pass;
        if (f.status == "fail") ++fail;
        if (f.status == "skipped") ++skipped;
        if (f.status == "capacity") ++capacity;
    }
    CHECK(pass == r.pass);
    CHECK(fail == r.fail);
    CHECK(skipped == r.skipped);
    CHECK(capacity == r.capacity);
}

TEST_CASE("reports are deterministic and independent of worker count") {
    TempCorpus tc("determinism");
    tc.fill_small();
    VerifyOptions opt;
    opt.suite = "all";
    opt.corpus_dir = tc.dir.string();
    opt.seed = 42;
    opt.jobs = 1;
    std::string first = report_json(run_suite(opt)).dump(2);
    opt.jobs = 4;
    std::string second = report_json(run_suite(opt)).dump(2);
    CHECK(first == second);
}

TEST_CASE("prime filter restricts the job list") {
    TempCorpus tc("primefilter");
    tc.fill_small();
    VerifyOptions opt;
    opt.suite = "smaller4";
    opt.corpus_dir = tc.dir.string();
    opt.prime = 2;
    Report r = run_suite(opt);
    CHECK(!r.findings.empty());
    for (const Finding& f : r.findings) CHECK(f.p == 2);
}

TEST_CASE("parse failures become skipped corpus findings") {
    TempCorpus tc("parsefail");
    tc.add(groups::cyclic(5), "C5");
    std::ofstream((tc.dir / "broken.json").string()) << "{ definitely not json";
    VerifyOptions opt;
    opt.suite = "thmA";
    opt.corpus_dir = tc.dir.string();
    Report r = run_suite(opt);
    bool saw_parse_skip = false;
    for (const Finding& f : r.findings)
        if (f.suite == "corpus" && f.status == "skipped") {
            saw_parse_skip = true;
            CHECK(f.group == "broken.json");
            CHECK(f.subject == "parse");
            CHECK(!f.reason.empty());
        }
    CHECK(saw_parse_skip);
    CHECK(find_one(r, "thmA", "C5", 5));  // good files still run
}

TEST_CASE("oversized lattices fall back and get flagged") {
    // groups beyond the lattice walk bound still run against a safe list of
    // known normal subgroups, and each (group, prime) pair gets one capacity
    // marker in the covering suite
    TempCorpus tc("capacity");
    tc.add(groups::alternating(7), "A7");
    VerifyOptions opt;
    opt.suite = "covering";
    opt.corpus_dir = tc.dir.string();
    opt.jobs = 2;
    Report r = run_suite(opt);
    CHECK(r.fail == 0);
    u64 caps = 0;
    for (const Finding& f : r.findings)
        if (f.status == "capacity") {
            ++caps;
            CHECK(f.subject == "normal-lattice");
            CHECK(f.group == "A7");
        }
    CHECK(caps == 4);  // one per divisor prime 2, 3, 5, 7
    CHECK(count_status(r, "covering", "pass") > 0);
}

TEST_CASE("suite names and validation") {
    const auto& names = suite_names();
    for (const char* expect : {"thmA", "smaller4", "div2", "div3", "heightzero", "cyclic",
                               "brauer-identity", "kB-bound", "covering", "inflation",
                               "isomblocks", "tech"})
        CHECK(std::find(names.begin(), names.end(), expect) != names.end());
    CHECK(names.size() == 12);

    TempCorpus tc("badsuite");
    tc.add(groups::cyclic(5), "C5");
    VerifyOptions opt;
    opt.suite = "no-such-suite";
    opt.corpus_dir = tc.dir.string();
    CHECK_THROWS_AS(run_suite(opt), input_error);
    opt.suite = "thmA";
    opt.corpus_dir = (tc.dir / "missing_subdir").string();
    CHECK_THROWS_AS(run_suite(opt), input_error);
}

TEST_CASE("report serialization carries the envelope") {
    TempCorpus tc("envelope");
    tc.add(groups::cyclic(5), "C5");
    VerifyOptions opt;
    opt.suite = "cyclic";
    opt.corpus_dir = tc.dir.string();
    opt.seed = 99;
    Report r = run_suite(opt);
    auto j = report_json(r);
    CHECK(j.at("suite") == "cyclic");
    CHECK(j.at("seed") == 99);
    CHECK(j.at("summary").at("pass").get<u64>() == r.pass);
    CHECK(j.at("findings").is_array());
    REQUIRE(!j.at("findings").empty());
    const auto& jf = j.at("findings")[0];
    for (const char* key : {"suite", "group", "p", "subject", "status"}) CHECK(jf.contains(key));

    std::string table = report_table(r);
    CHECK(table.find("cyclic") != std::string::npos);
}
