// Command line front end: build family members, verify their structure,
// scan triple common-neighbor counts.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sympgm/family.hpp"
#include "sympgm/graph6.hpp"
#include "sympgm/json_io.hpp"
#include "sympgm/verify.hpp"
#include "sympgm/version.hpp"

namespace {

using nlohmann::json;
using namespace sympgm;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

const std::vector<std::string> kVariantNames = {"base", "S", "O", "S4", "S0MinusST", "AH2cell"};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    out << text;
}

json wrap(const std::string& command, json config, json result) {
    return json{{"command", command},
                {"config", std::move(config)},
                {"result", std::move(result)},
                {"tool", "sympgm"},
                {"version", std::string(kVersion)}};
}

std::optional<SpecialQuadruple> quadruple_from(int nu, const std::vector<std::uint32_t>& ids) {
    if (ids.empty()) return std::nullopt;
    return make_quadruple(nu, {ids[0], ids[1], ids[2], ids[3]});
}

struct BuildOptions {
    int nu = 0;
    std::string variant = "base";
    std::vector<std::uint32_t> quad_ids;
    std::string out_prefix;
};

int run_build(const BuildOptions& opt) {
    FamilyBuild fb = build_family(opt.nu, *parse_variant(opt.variant), quadruple_from(opt.nu, opt.quad_ids));
    std::string g6 = graph6_encode(fb.graph) + "\n";
    if (opt.out_prefix.empty()) {
        std::cout << g6;
        return kExitPass;
    }

    json partition_doc = wrap("build", {{"graph", fb.graph_id}, {"nu", opt.nu}, {"variant", opt.variant}},
                              partition_to_json(fb.partition));
    json switch_doc = wrap("build", {{"graph", fb.graph_id}, {"nu", opt.nu}, {"variant", opt.variant}},
                           fb.record ? switch_record_to_json(*fb.record, fb.partition) : json(nullptr));
    if (!fb.record)
        switch_doc["note"] = fb.noop ? "designated cell is empty at this nu; switch is a no-op"
                                     : "no switch for this variant";

    emit(g6, opt.out_prefix + ".g6");
    emit(partition_doc.dump(2) + "\n", opt.out_prefix + ".partition.json");
    emit(switch_doc.dump(2) + "\n", opt.out_prefix + ".switch.json");
    std::cout << "wrote " << opt.out_prefix << ".g6 " << opt.out_prefix << ".partition.json "
              << opt.out_prefix << ".switch.json\n";
    return kExitPass;
}

struct VerifyOptions {
    int nu = 0;
    std::vector<std::uint32_t> quad_ids;
    std::string in_path;
    std::string out_path;
    std::string format = "text";
};

VerifySuiteResult checks_for_input_graph(int nu, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    SympGraph g = graph6_decode(buf.str());

    VerifySuiteResult result;
    result.nu = nu;
    const int want_n = (1 << (2 * nu)) - 1;
    result.checks.push_back({"vertex_count", g.vertex_count() == want_n,
                             std::to_string(g.vertex_count()) + " vertices, family size " +
                                 std::to_string(want_n)});
    SrgCheck srg = verify_srg(g);
    bool params_ok = srg.ok && srg.params == symplectic_srg_params(nu);
    std::ostringstream detail;
    if (srg.ok)
        detail << "(" << srg.params.n << "," << srg.params.k << "," << srg.params.lambda << ","
               << srg.params.mu << ")";
    else
        detail << srg.failure;
    result.checks.push_back({"srg_params", params_ok, detail.str()});
    return result;
}

int run_verify(const VerifyOptions& opt) {
    VerifySuiteResult result = opt.in_path.empty()
                                   ? run_verify_suite(opt.nu, quadruple_from(opt.nu, opt.quad_ids))
                                   : checks_for_input_graph(opt.nu, opt.in_path);

    json config{{"nu", opt.nu}};
    if (!opt.in_path.empty()) config["in"] = opt.in_path;

    if (opt.format == "json") {
        emit(wrap("verify", config, verify_to_json(result)).dump(2) + "\n", opt.out_path);
    } else {
        std::ostringstream out;
        int failed = 0;
        for (const CheckResult& c : result.checks) {
            out << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
            if (!c.detail.empty()) out << ": " << c.detail;
            out << "\n";
            failed += c.pass ? 0 : 1;
        }
        if (failed == 0)
            out << "all " << result.checks.size() << " checks passed\n";
        else
            out << failed << " of " << result.checks.size() << " checks failed\n";
        emit(out.str(), opt.out_path);
    }
    return result.all_pass() ? kExitPass : kExitCheckFailed;
}

struct ScanOptions {
    int nu = 0;
    std::string variant;
    bool all_variants = false;
    std::uint64_t samples = 0;
    std::uint64_t seed = kDefaultSeed;
    int threads = 0;
    bool histogram = false;
    std::string out_path;
    std::string format = "json";
};

json report_with_expectation(Variant v, int nu, const TripleScanReport& report) {
    json doc = scan_report_to_json(report);
    ExpectedMinimum expected = expected_scan_minimum(v, nu);
    doc["expected_min"] = expected.value;
    doc["expected_asserted"] = expected.asserted;
    return doc;
}

void print_scan_text(std::ostream& out, const std::string& graph_id, const TripleScanReport& r) {
    out << graph_id << ": min_nonzero " << r.min_nonzero << ", witness (" << r.witness[0] << ", "
        << r.witness[1] << ", " << r.witness[2] << ")"
        << (r.zero_triples_seen ? ", zero triples seen" : "");
    if (!r.exhaustive) out << ", " << r.samples << " samples, seed " << r.seed;
    out << "\n";
    if (r.histogram) {
        out << "  histogram:";
        for (const auto& [count, times] : *r.histogram) out << " " << count << "x" << times;
        out << "\n";
    }
}

int run_scan(const ScanOptions& opt) {
    ScanSettings settings;
    settings.exhaustive = opt.samples == 0;
    settings.samples = opt.samples;
    settings.seed = opt.seed;
    settings.threads = opt.threads;
    settings.histogram = opt.histogram;

    json config{{"nu", opt.nu},
                {"mode", settings.exhaustive ? "exhaustive" : "sampled"},
                {"seed", opt.seed},
                {"threads", opt.threads}};
    if (!settings.exhaustive) config["samples"] = opt.samples;

    if (!opt.all_variants) {
        Variant v = *parse_variant(opt.variant);
        FamilyBuild fb = build_family(opt.nu, v);
        settings.graph_id = fb.graph_id;
        TripleScanReport report = scan_min_nonzero(fb.graph, settings);
        config["variant"] = opt.variant;

        ExpectedMinimum expected = expected_scan_minimum(v, opt.nu);
        bool violated = expected.asserted &&
                        (settings.exhaustive ? report.min_nonzero != expected.value
                                             : report.min_nonzero < expected.value);
        if (opt.format == "json") {
            emit(wrap("scan", config, report_with_expectation(v, opt.nu, report)).dump(2) + "\n",
                 opt.out_path);
        } else {
            std::ostringstream out;
            print_scan_text(out, fb.graph_id, report);
            if (expected.asserted)
                out << "  closed form " << expected.value << (violated ? " VIOLATED" : " ok")
                    << "\n";
            emit(out.str(), opt.out_path);
        }
        return violated ? kExitCheckFailed : kExitPass;
    }

    config["variant"] = "all";
    FamilyScan fs = scan_family(opt.nu, settings);
    bool failed = fs.asserted && settings.exhaustive && !(fs.matches_expected && fs.pairwise_distinct);

    if (opt.format == "json") {
        json reports = json::array();
        for (const auto& [v, r] : fs.reports) reports.push_back(report_with_expectation(v, opt.nu, r));
        json result{{"nu", fs.nu},
                    {"reports", std::move(reports)},
                    {"flags", fs.flags},
                    {"pairwise_distinct", fs.pairwise_distinct},
                    {"asserted", fs.asserted},
                    {"matches_expected", fs.matches_expected}};
        emit(wrap("scan", config, std::move(result)).dump(2) + "\n", opt.out_path);
    } else {
        std::ostringstream out;
        for (const auto& [v, r] : fs.reports) print_scan_text(out, r.graph_id, r);
        out << "pairwise distinct: " << (fs.pairwise_distinct ? "yes" : "no") << "\n";
        if (fs.asserted)
            out << "matches closed forms: " << (fs.matches_expected ? "yes" : "no") << "\n";
        for (const std::string& flag : fs.flags) out << "note: " << flag << "\n";
        emit(out.str(), opt.out_path);
    }
    return failed ? kExitCheckFailed : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symplectic graphs over GF(2): switching variants and triple scans"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    BuildOptions build_opt;
    CLI::App* cmd_build = app.add_subcommand("build", "construct a family member, write graph6 and reports");
    cmd_build->add_option("--nu", build_opt.nu, "half the dimension, 3..8")
        ->required()
        ->check(CLI::Range(kMinNu, kMaxNu));
    cmd_build->add_option("--variant", build_opt.variant, "family member")
        ->check(CLI::IsMember(kVariantNames));
    cmd_build->add_option("--quadruple", build_opt.quad_ids, "four vertex ids a,b,c,d of the special quadruple")
        ->delimiter(',')
        ->expected(4);
    cmd_build->add_option("--out", build_opt.out_prefix,
                          "path prefix for PREFIX.g6, PREFIX.partition.json, PREFIX.switch.json");

    VerifyOptions verify_opt;
    CLI::App* cmd_verify = app.add_subcommand("verify", "run structural checks");
    cmd_verify->add_option("--nu", verify_opt.nu, "half the dimension, 3..8")
        ->required()
        ->check(CLI::Range(kMinNu, kMaxNu));
    cmd_verify->add_option("--quadruple", verify_opt.quad_ids, "four vertex ids a,b,c,d")
        ->delimiter(',')
        ->expected(4);
    cmd_verify->add_option("--in", verify_opt.in_path, "graph6 file to check instead of the full suite");
    cmd_verify->add_option("--out", verify_opt.out_path, "write the report here instead of stdout");
    cmd_verify->add_option("--format", verify_opt.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    ScanOptions scan_opt;
    CLI::App* cmd_scan = app.add_subcommand("scan", "minimum nonzero triple common-neighbor counts");
    cmd_scan->add_option("--nu", scan_opt.nu, "half the dimension, 3..8")
        ->required()
        ->check(CLI::Range(kMinNu, kMaxNu));
    CLI::Option* opt_variant =
        cmd_scan->add_option("--variant", scan_opt.variant, "family member")
            ->check(CLI::IsMember(kVariantNames));
    CLI::Option* opt_all = cmd_scan->add_flag("--all-variants", scan_opt.all_variants,
                                              "scan the five family members and compare");
    opt_variant->excludes(opt_all);
    CLI::Option* opt_sample =
        cmd_scan->add_option("--sample", scan_opt.samples, "sampled mode with this many triples")
            ->check(CLI::PositiveNumber);
    cmd_scan->add_flag("--exhaustive", "walk all triples (the default)")->excludes(opt_sample);
    cmd_scan->add_option("--seed", scan_opt.seed, "sampled mode seed");
    cmd_scan->add_option("--threads", scan_opt.threads, "worker threads, 0 picks from hardware")
        ->check(CLI::Range(0, 64));
    cmd_scan->add_flag("--histogram", scan_opt.histogram, "collect the full count histogram");
    cmd_scan->add_option("--out", scan_opt.out_path, "write the report here instead of stdout");
    cmd_scan->add_option("--format", scan_opt.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
        if (*cmd_scan && !scan_opt.all_variants && scan_opt.variant.empty())
            throw CLI::RequiredError("--variant or --all-variants");
        if (*cmd_build) return run_build(build_opt);
        if (*cmd_verify) return run_verify(verify_opt);
        return run_scan(scan_opt);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
