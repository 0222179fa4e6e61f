#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>

#include "blockscope/blocks.hpp"
#include "blockscope/errors.hpp"
#include "blockscope/verify.hpp"

using namespace blockscope;

namespace {

int cmd_table(const std::string& path, const std::string& out) {
    std::string name;
    PermGroup g = read_group_file(path, &name);
    CharacterTable t = compute_table(g, name);
    if (out.empty()) {
        std::cout << t.to_json().dump(1) << "\n";
    } else {
        write_table(t, out);
    }
    return 0;
}

int cmd_blocks(const std::string& path, u64 p, bool as_json) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("bad input file: ") + e.what());
    }

    std::optional<CharacterTable> table;
    std::optional<SylowDescriptor> sylow;
    if (j.contains("irr")) {
        table = CharacterTable::from_json(j);
    } else {
        std::string name;
        PermGroup g = read_group_file(path, &name);
        table = compute_table(g, name);
        sylow = sylow_descriptor(g, p);
    }

    BlockDecomposition d = block_partition(*table, p);
    if (as_json) {
        std::cout << block_report_json(table->group_name(), d, sylow).dump(1) << "\n";
        return 0;
    }

    std::cout << table->group_name() << "  order " << table->order() << "  p=" << p << "\n";
    if (sylow)
        std::cout << "sylow: " << to_string(sylow->tag) << " of order " << sylow->order << "\n";
    for (size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        std::cout << "block " << i << (b.principal ? " (principal)" : "") << ": k=" << b.k
                  << " k0=" << b.k0 << " l=" << b.l << " defect=" << b.defect << " chars=[";
        for (size_t c = 0; c < b.chars.size(); ++c) std::cout << (c ? " " : "") << b.chars[c];
        std::cout << "]\n";
    }
    return 0;
}

int cmd_verify(const VerifyOptions& opt, const std::string& report_path) {
    Report rep = run_suite(opt);
    std::cout << report_table(rep);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw input_error("cannot write " + report_path);
        out << report_json(rep).dump(1) << "\n";
    }
    return rep.fail == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character tables and p-block invariants of finite permutation groups"};
    app.require_subcommand(1);

    std::string table_in, table_out;
    auto* tcmd = app.add_subcommand("table", "compute the character table of a group file");
    tcmd->add_option("group", table_in, "group JSON file")->required();
    tcmd->add_option("--out", table_out, "write the table to this file instead of stdout");

    std::string blocks_in;
    u64 blocks_p = 2;
    bool blocks_json = false;
    auto* bcmd = app.add_subcommand("blocks", "decompose a table into p-blocks");
    bcmd->add_option("input", blocks_in, "group or table JSON file")->required();
    bcmd->add_option("-p,--prime", blocks_p, "prime")->required();
    bcmd->add_flag("--json", blocks_json, "JSON output");

    VerifyOptions vopt;
    std::string report_path;
    u64 prime_filter = 0;
    auto* vcmd = app.add_subcommand("verify", "run a verification suite over a corpus directory");
    vcmd->add_option("--suite", vopt.suite, "suite id or 'all'")->required();
    vcmd->add_option("--corpus", vopt.corpus_dir, "directory of group JSON files")->required();
    vcmd->add_option("--jobs", vopt.jobs, "worker threads")->default_val(1);
    vcmd->add_option("--seed", vopt.seed, "seed recorded in the report")->default_val(0);
    vcmd->add_option("--report", report_path, "write the JSON report here");
    vcmd->add_option("--p", prime_filter, "restrict to one prime");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (tcmd->parsed()) return cmd_table(table_in, table_out);
        if (bcmd->parsed()) return cmd_blocks(blocks_in, blocks_p, blocks_json);
        if (vcmd->parsed()) {
            if (prime_filter) vopt.prime = prime_filter;
            return cmd_verify(vopt, report_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
