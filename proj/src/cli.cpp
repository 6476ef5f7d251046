#include "homcode/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "homcode/covering.hpp"
#include "homcode/css.hpp"
#include "homcode/distance.hpp"
#include "homcode/error.hpp"
#include "homcode/generators.hpp"
#include "homcode/map.hpp"
#include "homcode/tables.hpp"

namespace homcode {

namespace {

std::uint64_t budget_from_env() {
    if (const char* raw = std::getenv("HOMCODE_BUDGET")) {
        try {
            return std::stoull(raw);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, std::string("HOMCODE_BUDGET is not an integer: ") + raw);
        }
    }
    return kDefaultBudget;
}

std::vector<int> parse_cycle(const std::string& text) {
    std::vector<int> cycle;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
            cycle.push_back(v - 1);
        } catch (const std::exception&) {
            throw Error(ErrorKind::NotACycle, "'" + tok + "' in --cycle is not a 1-based vertex id");
        }
    }
    return cycle;
}

std::string join_one_based(const std::vector<int>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(cycle[i] + 1);
    }
    return s;
}

void write_spm_file(const std::string& path, const gf2::BitMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::ios_base::failure("cannot write " + path);
    gf2::write_spm(out, m);
}

struct CodeOptions {
    std::string map_path;
    std::string method = "bfs";
    int cap = 0;
    std::string hx_path;
    std::string hz_path;
    bool witness = false;
};

int cmd_code(const CodeOptions& opt, std::ostream& out, std::ostream& err) {
    const PolygonalMap map = load_map(opt.map_path);
    const CssCode code = build_css(map);
    if (!opt.hx_path.empty()) write_spm_file(opt.hx_path, code.hx);
    if (!opt.hz_path.empty()) write_spm_file(opt.hz_path, code.hz);

    CodeReport report = make_report(map, code, "file:" + opt.map_path);
    const std::uint64_t budget = budget_from_env();
    if (code.k == 0) {
        err << "note: k=0, the code has no logical qubits and no distance\n";
    } else if (opt.method == "bfs") {
        report = compute_report(map, report.provenance, 64, budget, opt.witness);
    } else if (opt.method == "oracle") {
        DistanceOptions dopt;
        dopt.weight_cap = opt.cap;
        dopt.budget = budget;
        report.d_min = distance(code, map, DistanceMethod::Oracle, dopt).d_min;
    }
    out << report.render() << '\n';
    return kExitOk;
}

int cmd_table(const std::string& which, int m1_max, int m2_max, int d_max, std::ostream& out, std::ostream& err) {
    std::vector<TableRow> rows;
    if (which == "t1-k3") {
        rows = table_builtin_codes(budget_from_env());
    } else if (which == "t2-families") {
        rows = table_families(m1_max, m2_max);
    } else {
        rows = table_covers(d_max);
    }
    out << render_table(rows);
    const auto bad = std::count_if(rows.begin(), rows.end(), [](const TableRow& r) { return !r.ok(); });
    if (bad > 0) {
        err << "error: " << bad << " row(s) disagree with their closed form\n";
        return kExitBudget;
    }
    return kExitOk;
}

void emit_map(const PolygonalMap& map, const std::string& path, std::ostream& out) {
    if (!path.empty()) save_map(path, map);
    out << summary(map) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Homological CSS codes from polygonal maps on closed surfaces", "homcode"};
    app.require_subcommand(1);

    std::string family;
    int m1 = 3;
    int m2 = 0;
    std::string out_path;
    auto* gen = app.add_subcommand("gen", "Generate an equivelar [k^k] map");
    gen->add_option("family", family, "odd or even")->required()->check(CLI::IsMember({"odd", "even"}));
    gen->add_option("m1", m1)->required();
    gen->add_option("m2", m2)->required();
    gen->add_option("-o,--out", out_path, "Write the .map file here");

    std::string name;
    auto* bi = app.add_subcommand("builtin", "Emit a built-in map (n1, k3)");
    bi->add_option("name", name)->required();
    bi->add_option("-o,--out", out_path, "Write the .map file here");

    std::string map_path;
    auto* info = app.add_subcommand("info", "Summarize a .map file");
    info->add_option("map", map_path)->required();

    CodeOptions code_opt;
    auto* code = app.add_subcommand("code", "Build the CSS code of a map and report [[n,k,d]]");
    code->add_option("map", code_opt.map_path)->required();
    code->add_option("--distance", code_opt.method, "bfs, oracle or none")
        ->check(CLI::IsMember({"bfs", "oracle", "none"}));
    code->add_option("--cap", code_opt.cap, "Oracle weight cap (default: largest within budget)");
    code->add_option("--hx", code_opt.hx_path, "Export H_X as .spm");
    code->add_option("--hz", code_opt.hz_path, "Export H_Z as .spm");
    code->add_flag("--witness", code_opt.witness, "Append a minimum-weight logical's edges");

    int d = 1;
    std::string cycle_text;
    auto* cover = app.add_subcommand("cover", "Build the d-th cyclic cover of a map");
    cover->add_option("map", map_path)->required();
    cover->add_option("d", d)->required()->check(CLI::PositiveNumber);
    cover->add_option("--cycle", cycle_text, "Gluing cycle as 1-based ids, e.g. \"1,2,3\"");
    cover->add_option("-o,--out", out_path, "Write the .map file here");

    std::string which;
    int m1_max = 4;
    int m2_max = 3;
    int d_max = 3;
    auto* table = app.add_subcommand("table", "Reproduce a code table");
    table->add_option("which", which)->required()->check(CLI::IsMember({"t1-k3", "t2-families", "t3-covers"}));
    table->add_option("--m1-max", m1_max);
    table->add_option("--m2-max", m2_max);
    table->add_option("--d-max", d_max);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitDomain;
    }

    std::vector<int> cycle;
    try {
        if (*gen) {
            emit_map(family == "odd" ? gen_odd({m1, m2}) : gen_even({m1, m2}), out_path, out);
        } else if (*bi) {
            emit_map(builtin(name), out_path, out);
        } else if (*info) {
            const PolygonalMap m = load_map(map_path);
            out << summary(m) << " orientable=" << (is_orientable(m) ? "yes" : "no") << '\n';
        } else if (*code) {
            return cmd_code(code_opt, out, err);
        } else if (*cover) {
            const PolygonalMap m = load_map(map_path);
            cycle = cycle_text.empty() ? find_gluing_cycle(m) : parse_cycle(cycle_text);
            out << "cycle=" << join_one_based(cycle) << '\n';
            emit_map(d_cover(m, {cycle, d}), out_path, out);
        } else if (*table) {
            return cmd_table(which, m1_max, m2_max, d_max, out, err);
        }
    } catch (const Error& e) {
        err << "error: " << e.what();
        if (!cycle.empty()) err << " (cycle " << join_one_based(cycle) << ")";
        err << '\n';
        const bool alarm = e.kind() == ErrorKind::MethodTooExpensive || e.kind() == ErrorKind::InconsistentCode;
        return alarm ? kExitBudget : kExitDomain;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace homcode
