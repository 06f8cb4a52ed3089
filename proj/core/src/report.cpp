#include <touchard/report.hpp>
#include <touchard/version.hpp>

#include <fstream>
#include <sstream>

namespace touchard {

using nlohmann::ordered_json;

namespace {

std::pair<long, long> parse_range(const nlohmann::json& val, const std::string& key) {
    if (!val.is_array() || val.size() != 2 || !val[0].is_number_integer() ||
        !val[1].is_number_integer()) {
        throw config_error("config key '" + key + "' must be a [lo, hi] integer pair");
    }
    long lo = val[0].get<long>();
    long hi = val[1].get<long>();
    if (hi < lo) {
        throw config_error("config key '" + key + "' has an empty range");
    }
    return {lo, hi};
}

bool parse_bool(const nlohmann::json& val, const std::string& key) {
    if (!val.is_boolean()) {
        throw config_error("config key '" + key + "' must be a boolean");
    }
    return val.get<bool>();
}

long parse_positive(const nlohmann::json& val, const std::string& key) {
    if (!val.is_number_integer() || val.get<long>() < 1) {
        throw config_error("config key '" + key + "' must be a positive integer");
    }
    return val.get<long>();
}

std::string csv_cell(const ordered_json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) return "";
    if (it->is_string()) return it->get<std::string>();
    if (it->is_boolean()) return it->get<bool>() ? "true" : "false";
    return it->dump();
}

}  // namespace

GridConfig GridConfig::from_json(const nlohmann::json& j) {
    if (!j.is_object()) {
        throw config_error("config root must be a JSON object");
    }
    GridConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const nlohmann::json& val = it.value();
        if (key == "kinds") {
            if (!val.is_array() || val.empty()) {
                throw config_error("'kinds' must be a nonempty array of check names");
            }
            cfg.kinds.clear();
            for (const auto& entry : val) {
                if (!entry.is_string()) {
                    throw config_error("'kinds' entries must be strings");
                }
                auto kind = parse_check_kind(entry.get<std::string>());
                if (!kind) {
                    throw config_error("unknown check kind: " + entry.get<std::string>());
                }
                cfg.kinds.push_back(*kind);
            }
        } else if (key == "p") {
            if (!val.is_array() || val.empty()) {
                throw config_error("'p' must be a nonempty array of primes");
            }
            std::vector<long> ps;
            for (const auto& entry : val) {
                if (!entry.is_number_integer()) {
                    throw config_error("'p' entries must be integers");
                }
                long p = entry.get<long>();
                try {
                    PrimeModulus check(p);
                } catch (const std::exception& e) {
                    throw config_error(e.what());
                }
                ps.push_back(p);
            }
            cfg.ps = std::move(ps);
        } else if (key == "n") {
            cfg.n_range = parse_range(val, key);
        } else if (key == "m") {
            cfg.m_range = parse_range(val, key);
        } else if (key == "r") {
            cfg.r_range = parse_range(val, key);
        } else if (key == "a") {
            cfg.a_range = parse_range(val, key);
        } else if (key == "N") {
            cfg.N_range = parse_range(val, key);
        } else if (key == "horizon") {
            cfg.horizon = parse_positive(val, key);
        } else if (key == "minimal_budget") {
            cfg.minimal_budget = parse_positive(val, key);
        } else if (key == "format") {
            if (!val.is_string() ||
                (val.get<std::string>() != "json" && val.get<std::string>() != "csv")) {
                throw config_error("'format' must be \"json\" or \"csv\"");
            }
            cfg.format = val.get<std::string>();
        } else if (key == "record_all") {
            cfg.record_all = parse_bool(val, key);
        } else if (key == "timing") {
            cfg.timing = parse_bool(val, key);
        } else if (key == "probe") {
            cfg.probe = parse_bool(val, key);
        } else {
            throw config_error("unknown config key: " + key);
        }
    }
    return cfg;
}

GridConfig GridConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw config_error("cannot open config file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("config file " + path + " is not valid JSON: " + e.what());
    }
    return from_json(j);
}

nlohmann::ordered_json GridConfig::echo() const {
    ordered_json e;
    ordered_json kind_names = ordered_json::array();
    for (CheckKind kind : kinds) kind_names.push_back(check_kind_name(kind));
    e["kinds"] = kind_names;
    if (ps) e["p"] = *ps;
    auto put_range = [&e](const char* key, const std::optional<std::pair<long, long>>& range) {
        if (range) e[key] = {range->first, range->second};
    };
    put_range("n", n_range);
    put_range("m", m_range);
    put_range("r", r_range);
    put_range("a", a_range);
    put_range("N", N_range);
    if (horizon) e["horizon"] = *horizon;
    e["minimal_budget"] = minimal_budget;
    e["format"] = format;
    e["record_all"] = record_all;
    e["timing"] = timing;
    e["probe"] = probe;
    return e;
}

Grid GridConfig::grid_for(CheckKind kind) const {
    Grid g = canonical_grid(kind);
    if (ps) g.ps = *ps;
    if (n_range) {
        g.n_lo = n_range->first;
        g.n_hi = n_range->second;
    }
    if (m_range) {
        g.m_lo = m_range->first;
        g.m_hi = m_range->second;
    }
    if (r_range) {
        g.r_lo = r_range->first;
        g.r_hi = r_range->second;
    }
    if (a_range) {
        g.a_lo = a_range->first;
        g.a_hi = a_range->second;
    }
    if (N_range) {
        g.N_lo = N_range->first;
        g.N_hi = N_range->second;
    }
    return g;
}

nlohmann::ordered_json point_json(const CheckPoint& point) {
    ordered_json j;
    auto put = [&j](const char* key, const std::optional<long>& v) {
        if (v) j[key] = *v;
    };
    put("p", point.p);
    put("a", point.a);
    put("m", point.m);
    put("n", point.n);
    put("r", point.r);
    put("N", point.N);
    return j;
}

namespace {

ordered_json sides_json(const std::vector<Integer>& sides, size_t from) {
    if (sides.size() == from + 1) return to_decimal(sides[from]);
    ordered_json arr = ordered_json::array();
    for (size_t i = from; i < sides.size(); ++i) arr.push_back(to_decimal(sides[i]));
    return arr;
}

}  // namespace

nlohmann::ordered_json to_fragment(const CongruenceReport& report) {
    ordered_json out;
    out["kind"] = check_kind_name(report.kind);
    out["grid"] = report.grid_desc;
    out["tested"] = report.tested;
    out["skipped"] = report.skipped;
    ordered_json failures = ordered_json::array();
    for (const TestedPoint& f : report.failures) {
        ordered_json entry;
        entry["point"] = point_json(f.point);
        entry["lhs"] = to_decimal(f.sides[0]);
        entry["rhs"] = sides_json(f.sides, 1);
        failures.push_back(entry);
    }
    out["failures"] = failures;
    out["status"] = report.pass() ? "PASS" : "FAIL";
    if (!report.all_points.empty()) {
        ordered_json points = ordered_json::array();
        for (const TestedPoint& tp : report.all_points) {
            ordered_json entry;
            entry["point"] = point_json(tp.point);
            ordered_json sides = ordered_json::array();
            for (const Integer& s : tp.sides) sides.push_back(to_decimal(s));
            entry["sides"] = sides;
            entry["pass"] = tp.pass;
            points.push_back(entry);
        }
        out["points"] = points;
    }
    return out;
}

nlohmann::ordered_json to_fragment(const PeriodAnalysis& analysis) {
    ordered_json out;
    out["kind"] = "MINIMAL_PERIOD";
    out["p"] = analysis.p;
    out["np"] = to_decimal(analysis.np);
    ordered_json divisors = ordered_json::array();
    for (const Integer& d : analysis.divisors) divisors.push_back(to_decimal(d));
    out["divisors"] = divisors;
    out["minimal_period"] =
        analysis.minimal_period ? ordered_json(to_decimal(*analysis.minimal_period))
                                : ordered_json("UNKNOWN");
    out["divisor_form_ok"] = analysis.divisor_form_ok;
    out["lower_bound"] = to_decimal(analysis.lower_bound);
    out["bound_ok"] = analysis.bound_ok;
    out["horizon"] = analysis.horizon;
    out["status"] = analysis.pass() ? "PASS" : "FAIL";
    return out;
}

nlohmann::ordered_json to_fragment(const DigitSumReport& report) {
    ordered_json out;
    out["kind"] = "DIGIT_SUM_FALSIFIER";
    out["p"] = report.p;
    out["exhaustive"] = report.exhaustive;
    out["candidates"] = report.candidates;
    out["periods_found"] = report.periods_found;
    ordered_json survivors = ordered_json::array();
    for (long s : report.survivors) survivors.push_back(s);
    out["survivors"] = survivors;
    out["horizon"] = report.horizon;
    out["status"] = report.pass() ? "PASS" : "FAIL";
    return out;
}

nlohmann::ordered_json assemble_run_report(
    const nlohmann::ordered_json& config_echo,
    const std::vector<nlohmann::ordered_json>& checks,
    const std::vector<std::pair<std::string, double>>* timings_ms) {
    ordered_json root;
    root["version"] = kVersion;
    root["config"] = config_echo;
    ordered_json arr = ordered_json::array();
    bool all_pass = true;
    for (const auto& c : checks) {
        if (c.value("status", "FAIL") != "PASS") all_pass = false;
        arr.push_back(c);
    }
    root["checks"] = arr;
    root["status"] = all_pass ? "PASS" : "FAIL";
    if (timings_ms) {
        ordered_json t = ordered_json::array();
        for (const auto& [name, ms] : *timings_ms) {
            ordered_json entry;
            entry["check"] = name;
            entry["ms"] = ms;
            t.push_back(entry);
        }
        root["timings"] = t;
    }
    return root;
}

std::string verify_csv(const std::vector<CongruenceReport>& reports) {
    std::ostringstream os;
    os << "kind,p,a,m,n,r,N,pass,lhs,rhs,rhs2,rhs3\n";
    auto cell = [](const std::optional<long>& v) { return v ? std::to_string(*v) : ""; };
    for (const CongruenceReport& report : reports) {
        const auto& rows = report.all_points.empty() ? report.failures : report.all_points;
        for (const TestedPoint& tp : rows) {
            os << check_kind_name(report.kind) << ',' << cell(tp.point.p) << ','
               << cell(tp.point.a) << ',' << cell(tp.point.m) << ',' << cell(tp.point.n) << ','
               << cell(tp.point.r) << ',' << cell(tp.point.N) << ','
               << (tp.pass ? "PASS" : "FAIL");
            for (size_t i = 0; i < 4; ++i) {
                os << ',' << (i < tp.sides.size() ? to_decimal(tp.sides[i]) : "");
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string period_csv(const std::vector<nlohmann::ordered_json>& checks) {
    std::ostringstream os;
    os << "kind,p,r,np,minimal_period,divisor_form_ok,lower_bound,bound_ok,horizon,"
          "exhaustive,candidates,periods_found,status\n";
    for (const ordered_json& c : checks) {
        os << csv_cell(c, "kind") << ',' << csv_cell(c, "p") << ',' << csv_cell(c, "r") << ','
           << csv_cell(c, "np") << ',' << csv_cell(c, "minimal_period") << ','
           << csv_cell(c, "divisor_form_ok") << ',' << csv_cell(c, "lower_bound") << ','
           << csv_cell(c, "bound_ok") << ',' << csv_cell(c, "horizon") << ','
           << csv_cell(c, "exhaustive") << ',' << csv_cell(c, "candidates") << ','
           << csv_cell(c, "periods_found") << ',' << csv_cell(c, "status") << '\n';
    }
    return os.str();
}

}  // namespace touchard
