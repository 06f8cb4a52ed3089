// Command-line surface: exact sequence tables, the congruence verification
// suite, period analysis, and the digit-sum falsifier.
//
// Exit codes: 0 all requested checks PASS (or sequence printed), 1 at least
// one check FAIL, 2 usage or configuration error.

#include <touchard/congruences.hpp>
#include <touchard/modular.hpp>
#include <touchard/periods.hpp>
#include <touchard/report.hpp>
#include <touchard/sequences.hpp>
#include <touchard/version.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;
using namespace touchard;

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw config_error("cannot open output path: " + out_path);
    }
    out << content;
}

std::string join_values(const std::vector<std::string>& values) {
    std::ostringstream os;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) os << ',';
        os << values[i];
    }
    os << '\n';
    return os.str();
}

// --- seq -----------------------------------------------------------------

struct SeqArgs {
    std::string name;
    long count = 10;
    long n = -1;
    long r = 0;
    long p = 0;
    bool gave_count = false;
    bool gave_n = false;
    bool gave_r = false;
    bool gave_p = false;
    std::string format = "plain";
    std::string out;
};

int run_seq(const SeqArgs& args) {
    std::vector<std::string> values;
    std::string index_name = "n";

    bool is_stirling = args.name == "rstirling1" || args.name == "rstirling2";
    bool known = is_stirling || args.name == "bell" || args.name == "rbell" ||
                 args.name == "vn" || args.name == "derangement" || args.name == "bellmod";
    if (!known) throw config_error("unknown sequence name: " + args.name);
    // Reject flags the chosen kind ignores: silently dropping --p or --r would
    // hand back a different sequence than the one the user asked for.
    if (args.gave_p && args.name != "bellmod") {
        throw config_error("--p only applies to bellmod");
    }
    if (args.gave_n && !is_stirling) {
        throw config_error("--n only applies to rstirling kinds");
    }
    if (args.gave_r && (args.name == "bell" || args.name == "vn" ||
                        args.name == "derangement")) {
        throw config_error("--r does not apply to " + args.name);
    }
    if (args.gave_count && is_stirling) {
        throw config_error("--count does not apply to " + args.name +
                           "; select a row with --n");
    }

    if (args.count < 1) throw config_error("--count must be positive");
    if (args.name == "bell") {
        for (long i = 0; i < args.count; ++i) values.push_back(to_decimal(rbell(i, 0)));
    } else if (args.name == "rbell") {
        for (long i = 0; i < args.count; ++i) values.push_back(to_decimal(rbell(i, args.r)));
    } else if (args.name == "vn") {
        for (long i = 0; i < args.count; ++i) values.push_back(to_decimal(rbell(i, -1)));
    } else if (args.name == "derangement") {
        for (long i = 0; i < args.count; ++i) values.push_back(to_decimal(derangement(i)));
    } else if (args.name == "rstirling1" || args.name == "rstirling2") {
        if (args.n < 0) throw config_error("--n (row index) is required for " + args.name);
        if (args.r < 0) throw config_error("--r must be nonnegative for " + args.name);
        StirlingKind kind =
            args.name == "rstirling1" ? StirlingKind::FIRST : StirlingKind::SECOND;
        index_name = "k";
        for (long k = 0; k <= args.n; ++k) {
            values.push_back(to_decimal(rstirling(kind, args.n, k, args.r)));
        }
    } else if (args.name == "bellmod") {
        if (args.p == 0) throw config_error("--p is required for bellmod");
        ResidueSeq seq = residue_seq(PrimeModulus(args.p), args.r, args.count);
        for (uint32_t v : seq.values) values.push_back(std::to_string(v));
    } else {
        throw config_error("unknown sequence name: " + args.name);
    }

    std::string content;
    if (args.format == "plain") {
        content = join_values(values);
    } else if (args.format == "csv") {
        std::ostringstream os;
        os << index_name << ",value\n";
        for (size_t i = 0; i < values.size(); ++i) os << i << ',' << values[i] << '\n';
        content = os.str();
    } else {  // json
        ordered_json j;
        j["version"] = kVersion;
        j["name"] = args.name;
        if (args.name == "rstirling1" || args.name == "rstirling2") j["n"] = args.n;
        if (args.name == "rbell" || args.name == "bellmod" || args.name == "rstirling1" ||
            args.name == "rstirling2") {
            j["r"] = args.r;
        }
        if (args.name == "bellmod") j["p"] = args.p;
        j["index"] = index_name;
        j["values"] = values;
        content = j.dump(2) + "\n";
    }
    emit(content, args.out);
    return 0;
}

// --- verify ----------------------------------------------------------------

struct VerifyArgs {
    std::string config_path;
    std::vector<std::string> kind_names;
    std::vector<long> ps;
    std::vector<long> n_range, m_range, r_range, a_range, N_range;
    std::string format;
    std::string out;
    bool record_all = false;
    bool timing = false;
    bool probe = false;
};

std::pair<long, long> flag_range(const std::vector<long>& v, const char* name) {
    if (v.size() != 2 || v[1] < v[0]) {
        throw config_error(std::string("--") + name + " expects LO HI with LO <= HI");
    }
    return {v[0], v[1]};
}

int run_verify(const VerifyArgs& args) {
    GridConfig cfg =
        args.config_path.empty() ? GridConfig{} : GridConfig::from_file(args.config_path);

    if (!args.kind_names.empty()) {
        cfg.kinds.clear();
        for (const std::string& name : args.kind_names) {
            auto kind = parse_check_kind(name);
            if (!kind) throw config_error("unknown check kind: " + name);
            cfg.kinds.push_back(*kind);
        }
    }
    if (!args.ps.empty()) {
        for (long p : args.ps) PrimeModulus check(p);
        cfg.ps = args.ps;
    }
    if (!args.n_range.empty()) cfg.n_range = flag_range(args.n_range, "n");
    if (!args.m_range.empty()) cfg.m_range = flag_range(args.m_range, "m");
    if (!args.r_range.empty()) cfg.r_range = flag_range(args.r_range, "r");
    if (!args.a_range.empty()) cfg.a_range = flag_range(args.a_range, "a");
    if (!args.N_range.empty()) cfg.N_range = flag_range(args.N_range, "N");
    if (!args.format.empty()) cfg.format = args.format;
    if (args.record_all) cfg.record_all = true;
    if (args.timing) cfg.timing = true;
    if (args.probe) cfg.probe = true;
    if (cfg.format == "csv") cfg.record_all = true;

    std::vector<CongruenceReport> reports;
    std::vector<ordered_json> fragments;
    std::vector<std::pair<std::string, double>> timings;

    auto run_one = [&](const std::string& label, auto&& produce) {
        auto start = std::chrono::steady_clock::now();
        CongruenceReport report = produce();
        auto elapsed =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
        timings.emplace_back(label, elapsed);
        fragments.push_back(to_fragment(report));
        reports.push_back(std::move(report));
    };

    for (CheckKind kind : cfg.kinds) {
        run_one(check_kind_name(kind),
                [&] { return run_check(kind, cfg.grid_for(kind), cfg.record_all); });
    }
    if (cfg.probe) {
        for (CheckKind kind : cfg.kinds) {
            for (Mutation mut : all_mutations()) {
                run_one(std::string(check_kind_name(kind)) + "/" + mutation_name(mut),
                        [&] { return counterexample_probe(kind, mut); });
            }
        }
    }

    bool overall = true;
    for (const auto& f : fragments) {
        if (f.value("status", "FAIL") != "PASS") overall = false;
    }

    std::string content;
    if (cfg.format == "csv") {
        content = verify_csv(reports);
    } else {
        content = assemble_run_report(cfg.echo(), fragments, cfg.timing ? &timings : nullptr)
                      .dump(2) +
                  "\n";
    }
    emit(content, args.out);
    return overall ? 0 : 1;
}

// --- period / falsify --------------------------------------------------------

struct PeriodArgs {
    long p = 0;
    bool minimal = false;
    long budget = 300000;
    std::optional<long> shift_r;
    bool falsify = false;
    long sample = 200;
    bool hall = false;
    std::optional<long> horizon;
    std::string format = "json";
    std::string out;
};

constexpr long kDefaultHorizonCap = 2000000;

long default_horizon(const PrimeModulus& p, const Integer& scaled, const char* what) {
    if (scaled > kDefaultHorizonCap) {
        throw config_error(std::string("default ") + what + " horizon for p=" +
                           std::to_string(p.value()) +
                           " exceeds " + std::to_string(kDefaultHorizonCap) +
                           "; pass --horizon explicitly");
    }
    return scaled.convert_to<long>();
}

int run_period(const PeriodArgs& args) {
    if (!args.minimal && !args.shift_r && !args.falsify && !args.hall) {
        throw config_error(
            "choose at least one of --minimal, --shift, --falsify-digit-sum, --hall");
    }
    PrimeModulus pm(args.p);

    ordered_json config_echo;
    config_echo["p"] = args.p;
    config_echo["minimal"] = args.minimal;
    if (args.minimal) config_echo["budget"] = args.budget;
    if (args.shift_r) config_echo["shift"] = *args.shift_r;
    config_echo["falsify_digit_sum"] = args.falsify;
    if (args.falsify) config_echo["sample"] = args.sample;
    config_echo["hall"] = args.hall;
    if (args.horizon) config_echo["horizon"] = *args.horizon;
    config_echo["format"] = args.format;

    std::vector<ordered_json> fragments;
    if (args.minimal) {
        fragments.push_back(to_fragment(minimal_period(pm, args.budget)));
    }
    if (args.shift_r) {
        long horizon = args.horizon ? *args.horizon
                                    : default_horizon(pm, 3 * compute_np(pm), "shift");
        bool ok = verify_shift_corollary(pm, *args.shift_r, horizon);
        ordered_json frag;
        frag["kind"] = "SHIFT_COROLLARY";
        frag["p"] = args.p;
        frag["r"] = *args.shift_r;
        frag["horizon"] = horizon;
        frag["status"] = ok ? "PASS" : "FAIL";
        fragments.push_back(frag);
    }
    if (args.falsify) {
        fragments.push_back(to_fragment(digit_sum_falsifier(pm, args.sample)));
    }
    if (args.hall) {
        long horizon =
            args.horizon ? *args.horizon
                         : default_horizon(pm, compute_np(pm) + 2 * args.p + 50, "hall");
        bool ok = hall_recovery_check(pm, horizon);
        ordered_json frag;
        frag["kind"] = "HALL_CHAIN";
        frag["p"] = args.p;
        frag["horizon"] = horizon;
        frag["status"] = ok ? "PASS" : "FAIL";
        fragments.push_back(frag);
    }

    bool overall = true;
    for (const auto& f : fragments) {
        if (f.value("status", "FAIL") != "PASS") overall = false;
    }

    std::string content;
    if (args.format == "csv") {
        content = period_csv(fragments);
    } else {
        content = assemble_run_report(config_echo, fragments).dump(2) + "\n";
    }
    emit(content, args.out);
    return overall ? 0 : 1;
}

int run_falsify(const PeriodArgs& args) {
    PrimeModulus pm(args.p);
    DigitSumReport report = digit_sum_falsifier(pm, args.sample);

    ordered_json config_echo;
    config_echo["p"] = args.p;
    config_echo["sample"] = args.sample;
    config_echo["format"] = args.format;

    std::vector<ordered_json> fragments{to_fragment(report)};
    std::string content;
    if (args.format == "csv") {
        content = period_csv(fragments);
    } else {
        content = assemble_run_report(config_echo, fragments).dump(2) + "\n";
    }
    emit(content, args.out);
    return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact r-Bell/r-Stirling tables with congruence and period verification"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    SeqArgs seq_args;
    CLI::App* seq = app.add_subcommand("seq", "print a sequence table");
    seq->add_option("name", seq_args.name,
                    "one of: bell rbell vn derangement rstirling1 rstirling2 bellmod")
        ->required();
    seq->add_option("--count", seq_args.count, "number of terms (sequence kinds)");
    seq->add_option("--n", seq_args.n, "row index (rstirling kinds)");
    seq->add_option("--r", seq_args.r, "r parameter (rbell, rstirling kinds, bellmod)");
    seq->add_option("--p", seq_args.p, "prime modulus (bellmod)");
    seq->add_option("--format", seq_args.format, "plain|csv|json")
        ->check(CLI::IsMember({"plain", "csv", "json"}));
    seq->add_option("--out", seq_args.out, "write output to PATH instead of stdout");

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "run the congruence/identity suite");
    verify->add_option("--config", verify_args.config_path, "JSON config file");
    verify->add_option("--kind", verify_args.kind_names, "check kinds (default: all)")
        ->delimiter(',');
    verify->add_option("--p", verify_args.ps, "prime list override");
    verify->add_option("--n", verify_args.n_range, "n range override: LO HI")->expected(2);
    verify->add_option("--m", verify_args.m_range, "m range override: LO HI")->expected(2);
    verify->add_option("--r", verify_args.r_range, "r range override: LO HI")->expected(2);
    verify->add_option("--a", verify_args.a_range, "a range override: LO HI")->expected(2);
    verify->add_option("--N", verify_args.N_range, "N range override: LO HI")->expected(2);
    verify->add_option("--format", verify_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", verify_args.out, "write report to PATH instead of stdout");
    verify->add_flag("--record-all", verify_args.record_all,
                     "record every tested point, not only failures");
    verify->add_flag("--timing", verify_args.timing,
                     "append wall-clock timings (breaks byte-determinism)");
    verify->add_flag("--probe", verify_args.probe,
                     "also run the mutation probes (expected to FAIL)");

    PeriodArgs period_args;
    CLI::App* period = app.add_subcommand("period", "period analysis of B_{n,r} mod p");
    period->add_option("--p", period_args.p, "prime modulus")->required();
    period->add_flag("--minimal", period_args.minimal, "search the minimal period");
    period->add_option("--budget", period_args.budget,
                       "largest horizon --minimal may generate");
    long shift_val = 0;
    CLI::Option* shift_opt =
        period->add_option("--shift", shift_val, "verify the r-shift corollary for this r");
    period->add_flag("--falsify-digit-sum", period_args.falsify,
                     "falsify low-digit-sum candidate periods");
    period->add_option("--sample", period_args.sample,
                       "sample size for non-exhaustive falsification");
    period->add_flag("--hall", period_args.hall, "verify the recovery chain");
    long horizon_val = 0;
    CLI::Option* horizon_opt =
        period->add_option("--horizon", horizon_val, "explicit horizon override");
    period->add_option("--format", period_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    period->add_option("--out", period_args.out, "write report to PATH instead of stdout");

    PeriodArgs falsify_args;
    CLI::App* falsify = app.add_subcommand("falsify", "digit-sum candidate-period falsifier");
    falsify->add_option("--p", falsify_args.p, "prime modulus")->required();
    falsify->add_option("--sample", falsify_args.sample,
                        "sample size for non-exhaustive falsification");
    falsify->add_option("--format", falsify_args.format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    falsify->add_option("--out", falsify_args.out, "write report to PATH instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(seq)) {
            seq_args.gave_count = seq->count("--count") > 0;
            seq_args.gave_n = seq->count("--n") > 0;
            seq_args.gave_r = seq->count("--r") > 0;
            seq_args.gave_p = seq->count("--p") > 0;
            return run_seq(seq_args);
        }
        if (app.got_subcommand(verify)) return run_verify(verify_args);
        if (app.got_subcommand(period)) {
            if (shift_opt->count() > 0) period_args.shift_r = shift_val;
            if (horizon_opt->count() > 0) period_args.horizon = horizon_val;
            return run_period(period_args);
        }
        if (app.got_subcommand(falsify)) return run_falsify(falsify_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
