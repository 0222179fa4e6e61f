#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "blockscope/permgroup.hpp"

namespace blockscope {

struct Finding {
    std::string suite;
    std::string group;
    u64 p = 0;
    std::string subject;
    std::string status;  // pass | fail | skipped | capacity
    std::string reason;
    nlohmann::ordered_json payload = nlohmann::ordered_json::object();
};

struct VerifyOptions {
    std::string suite = "all";
    std::string corpus_dir;
    unsigned jobs = 1;
    u64 seed = 0;
    std::optional<u64> prime;  // restrict to one prime
};

struct Report {
    std::string suite;
    u64 seed = 0;
    std::vector<Finding> findings;  // sorted by (group, p, suite, subject)
    u64 pass = 0;
    u64 fail = 0;
    u64 skipped = 0;
    u64 capacity = 0;
};

// Suite ids accepted besides "all".
const std::vector<std::string>& suite_names();

// Runs one suite (or all of them) over every group file in the corpus
// directory.  Parse failures become skipped findings.  Deterministic:
// identical corpus and options give byte-identical reports.
Report run_suite(const VerifyOptions& opt);

nlohmann::ordered_json report_json(const Report& r);
std::string report_table(const Report& r);

// Group files: { "name", "degree", "generators": [[1-based images]...] }.
PermGroup read_group_file(const std::string& path, std::string* name_out = nullptr);
void write_group_file(const PermGroup& g, const std::string& name, const std::string& path);

}  // namespace blockscope
