#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>

#include "sliderule/cyclic.hpp"

namespace sliderule::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

enum class Command { compute, classify, verify, sweep, transition };
enum class Format { json, csv };

struct RunConfig {
    Command command{Command::compute};
    CycleParams params;
    int n{1};
    double tolerance{kParabolicTol};
    Format format{Format::json};
    std::optional<SweptParameter> swept;
    std::optional<std::pair<double, double>> range;
    int steps{0};
    std::optional<std::pair<double, double>> bracket;
    double corrupt{0};
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string num(double x) { return fmt::format("{:.17g}", x); }

std::pair<double, double> parse_interval(const std::string& text, const char* flag) {
    // The separator is the first ':' that is not part of a leading sign.
    const auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        throw UsageError(fmt::format("{} expects LO:HI, got '{}'", flag, text));
    }
    try {
        std::size_t used_lo = 0;
        std::size_t used_hi = 0;
        const std::string lo_text = text.substr(0, colon);
        const std::string hi_text = text.substr(colon + 1);
        const double lo = std::stod(lo_text, &used_lo);
        const double hi = std::stod(hi_text, &used_hi);
        if (used_lo != lo_text.size() || used_hi != hi_text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw UsageError(fmt::format("{} expects LO:HI, got '{}'", flag, text));
    }
}

Json real_json(const RealMat2& m) { return Json::array({{m.a, m.b}, {m.c, m.d}}); }

Json complex_json(const complex& z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

Json complex_json(const ComplexMat2& m) {
    return Json::array({{complex_json(m.a), complex_json(m.b)},
                        {complex_json(m.c), complex_json(m.d)}});
}

Json params_json(const CycleParams& p) {
    return Json{{"eta", p.eta}, {"phi1", p.phi1}, {"phi2", p.phi2}};
}

Json decomposition_json(const CycleDecomposition& d) {
    Json j;
    j["lambda"] = d.sandwich.lambda;
    j["phi3"] = d.sandwich.phi3;
    j["alpha"] = d.alpha;
    j["xi"] = d.core.xi;
    j["lleft"] = d.lleft;
    std::visit(
        [&](const auto& form) {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, Elliptic>) {
                j["phi"] = form.phi;
            } else if constexpr (std::is_same_v<T, Hyperbolic>) {
                j["chi"] = form.chi;
                j["sign"] = form.sign;
            } else {
                j["gamma"] = form.gamma;
                j["sign"] = form.sign;
            }
        },
        d.core.form);
    return j;
}

// Single-record CSV: header row plus one value row.
void write_record_csv(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& kv) {
    for (std::size_t i = 0; i < kv.size(); ++i) {
        out << (i ? "," : "") << kv[i].first;
    }
    out << '\n';
    for (std::size_t i = 0; i < kv.size(); ++i) {
        out << (i ? "," : "") << kv[i].second;
    }
    out << '\n';
}

std::vector<std::pair<std::string, std::string>> decomposition_fields(const CycleDecomposition& d) {
    std::vector<std::pair<std::string, std::string>> kv{
        {"eta", num(d.params.eta)},
        {"phi1", num(d.params.phi1)},
        {"phi2", num(d.params.phi2)},
        {"class", std::string(d.core.tag())},
        {"lambda", num(d.sandwich.lambda)},
        {"phi3", num(d.sandwich.phi3)},
        {"alpha", num(d.alpha)},
        {"xi", num(d.core.xi)},
        {"lleft", num(d.lleft)},
    };
    std::string phi, chi, gamma, sign;
    std::visit(
        [&](const auto& form) {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, Elliptic>) {
                phi = num(form.phi);
            } else if constexpr (std::is_same_v<T, Hyperbolic>) {
                chi = num(form.chi);
                sign = std::to_string(form.sign);
            } else {
                gamma = num(form.gamma);
                sign = std::to_string(form.sign);
            }
        },
        d.core.form);
    kv.insert(kv.end(), {{"phi", phi}, {"chi", chi}, {"gamma", gamma}, {"sign", sign},
                         {"near_parabolic", d.near_parabolic ? "true" : "false"}});
    return kv;
}

Json header(const char* command) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    return j;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    const NCycleResult r = m2_power_closed(cfg.params, cfg.n, cfg.tolerance);
    const double dev_m2 = r.max_oracle_deviation;
    const double dev_m1 = r.max_oracle_deviation_other;
    if (cfg.format == Format::csv) {
        auto kv = decomposition_fields(r.decomposition);
        kv.insert(kv.begin() + 3, {"n", std::to_string(r.n)});
        const RealMat2& m = r.m2_closed;
        const ComplexMat2& z = r.m1_closed;
        kv.insert(kv.end(), {{"m2_a", num(m.a)},
                             {"m2_b", num(m.b)},
                             {"m2_c", num(m.c)},
                             {"m2_d", num(m.d)},
                             {"m1_a_re", num(z.a.real())},
                             {"m1_a_im", num(z.a.imag())},
                             {"m1_b_re", num(z.b.real())},
                             {"m1_b_im", num(z.b.imag())},
                             {"m1_c_re", num(z.c.real())},
                             {"m1_c_im", num(z.c.imag())},
                             {"m1_d_re", num(z.d.real())},
                             {"m1_d_im", num(z.d.imag())},
                             {"deviation_m2", num(dev_m2)},
                             {"deviation_m1", num(dev_m1)}});
        write_record_csv(out, kv);
        return kOk;
    }
    Json j = header("compute");
    j["params"] = params_json(cfg.params);
    j["n"] = r.n;
    j["tolerance"] = cfg.tolerance;
    j["class"] = r.core().tag();
    j["decomposition"] = decomposition_json(r.decomposition);
    j["near_parabolic"] = r.near_parabolic;
    j["m2_closed"] = real_json(r.m2_closed);
    j["m1_closed"] = complex_json(r.m1_closed);
    j["core_power"] = real_json(r.core_power);
    j["max_oracle_deviation"] = Json{{"m2", dev_m2}, {"m1", dev_m1}};
    j["oracle_tolerance"] =
        Json{{"m2", scaled_tolerance(kOracleTol, r.n, r.m2_closed)},
             {"m1", scaled_tolerance(kOracleTol, r.n, r.m1_closed)}};
    emit(out, j);
    return kOk;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out) {
    const CycleDecomposition d = decompose_cycle(cfg.params, cfg.tolerance);
    if (cfg.format == Format::csv) {
        write_record_csv(out, decomposition_fields(d));
        return kOk;
    }
    Json j = header("classify");
    j["params"] = params_json(cfg.params);
    j["tolerance"] = cfg.tolerance;
    j["class"] = d.core.tag();
    j["decomposition"] = decomposition_json(d);
    j["near_parabolic"] = d.near_parabolic;
    emit(out, j);
    return kOk;
}

void report_error(std::ostream& err, const char* kind, const std::string& message);

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    struct Row {
        int n;
        double dev_m2, tol_m2, dev_m1, tol_m1;
        double ratio() const { return std::max(dev_m2 / tol_m2, dev_m1 / tol_m1); }
    };
    std::vector<Row> rows;
    std::string tag;
    for (int n = 1; n <= cfg.n; ++n) {
        NCycleResult r = m2_power_closed(cfg.params, n, cfg.tolerance);
        tag = std::string(r.core().tag());
        if (cfg.corrupt != 0) {
            r.m2_closed.a += cfg.corrupt;
            r.m1_closed.a += cfg.corrupt;
        }
        rows.push_back({n, max_abs_diff(r.m2_closed, pow_brute(cycle_m2(cfg.params), n)),
                        scaled_tolerance(kOracleTol, n, r.m2_closed),
                        max_abs_diff(r.m1_closed, pow_brute(cycle_m1(cfg.params), n)),
                        scaled_tolerance(kOracleTol, n, r.m1_closed)});
    }
    const auto worst = std::max_element(
        rows.begin(), rows.end(), [](const Row& x, const Row& y) { return x.ratio() < y.ratio(); });
    const bool passed = worst->ratio() <= 1.0;

    if (cfg.format == Format::csv) {
        out << "n,deviation_m2,tolerance_m2,deviation_m1,tolerance_m1,pass\n";
        for (const Row& r : rows) {
            out << r.n << ',' << num(r.dev_m2) << ',' << num(r.tol_m2) << ',' << num(r.dev_m1)
                << ',' << num(r.tol_m1) << ',' << (r.ratio() <= 1.0 ? "true" : "false") << '\n';
        }
    } else {
        Json j = header("verify");
        j["params"] = params_json(cfg.params);
        j["n_max"] = cfg.n;
        j["tolerance"] = cfg.tolerance;
        j["class"] = tag;
        j["oracle_tol"] = kOracleTol;
        j["worst"] = Json{{"n", worst->n},
                          {"deviation_m2", worst->dev_m2},
                          {"tolerance_m2", worst->tol_m2},
                          {"deviation_m1", worst->dev_m1},
                          {"tolerance_m1", worst->tol_m1}};
        j["passed"] = passed;
        emit(out, j);
    }
    if (!passed) {
        report_error(err, "verification_failed",
                     "closed form deviates from repeated multiplication at N = " + std::to_string(worst->n));
    }
    return passed ? kOk : kVerificationFailed;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    const auto rows = sweep_classify(cfg.params, *cfg.swept, *cfg.range, cfg.steps, cfg.tolerance);
    if (cfg.format == Format::csv) {
        out << "value,class,lleft,half_trace,xi\n";
        for (const SweepRow& r : rows) {
            out << num(r.value) << ',' << to_string(r.tag) << ',' << num(r.lleft) << ','
                << num(r.half_trace) << ',' << (r.xi ? num(*r.xi) : "") << '\n';
        }
        return kOk;
    }
    Json j = header("sweep");
    j["params"] = params_json(cfg.params);
    j["swept"] = to_string(*cfg.swept);
    j["range"] = Json::array({cfg.range->first, cfg.range->second});
    j["steps"] = cfg.steps;
    j["tolerance"] = cfg.tolerance;
    Json table = Json::array();
    for (const SweepRow& r : rows) {
        table.push_back(Json{{"value", r.value},
                             {"class", to_string(r.tag)},
                             {"lleft", r.lleft},
                             {"half_trace", r.half_trace},
                             {"xi", r.xi ? Json(*r.xi) : Json(nullptr)}});
    }
    j["rows"] = std::move(table);
    emit(out, j);
    return kOk;
}

int cmd_transition(const RunConfig& cfg, std::ostream& out) {
    const TransitionReport t = find_transition(cfg.params, *cfg.swept, *cfg.bracket);
    const CycleParams at_root = with_value(cfg.params, t.swept, t.root);
    const CycleDecomposition d = decompose_cycle(at_root, cfg.tolerance);
    if (cfg.format == Format::csv) {
        write_record_csv(out, {{"swept", std::string(to_string(t.swept))},
                               {"low", num(t.bracket.first)},
                               {"high", num(t.bracket.second)},
                               {"root", num(t.root)},
                               {"gamma_at_root", num(t.gamma_at_root)},
                               {"residual_lleft", num(t.residual_lleft)},
                               {"class_at_root", std::string(d.core.tag())}});
        return kOk;
    }
    Json j = header("transition");
    j["params"] = params_json(cfg.params);
    j["swept"] = to_string(t.swept);
    j["bracket"] = Json::array({t.bracket.first, t.bracket.second});
    j["root"] = t.root;
    j["gamma_at_root"] = t.gamma_at_root;
    j["residual_lleft"] = t.residual_lleft;
    j["class_at_root"] = d.core.tag();
    emit(out, j);
    return kOk;
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["error"] = kind;
    j["message"] = message;
    err << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed-form N-cycle transfer matrices for periodic two-media multilayers",
                 "sliderule"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool degrees = false;
    std::string format = "json";
    std::string swept_name;
    std::string range_text;
    std::string bracket_text;

    app.add_option("--eta", cfg.params.eta, "boundary parameter eta");
    app.add_option("--phi1", cfg.params.phi1, "phase shift in medium 1 (radians)");
    app.add_option("--phi2", cfg.params.phi2, "phase shift in medium 2 (radians)");
    app.add_option("-N,--cycles", cfg.n, "number of cycles N");
    app.add_option("--tol", cfg.tolerance, "relative parabolic tolerance on |lleft| / cosh(lambda)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--sweep", swept_name, "swept parameter")
        ->check(CLI::IsMember({"eta", "phi1", "phi2"}));
    app.add_option("--range", range_text, "sweep range LO:HI");
    app.add_option("--steps", cfg.steps, "number of sweep grid points");
    app.add_option("--bracket", bracket_text, "transition bracket LO:HI");
    app.add_flag("--degrees", degrees, "interpret angles (phi1, phi2 and their ranges) in degrees");
    app.add_option("--corrupt", cfg.corrupt)->group("");

    struct CommandEntry {
        const char* name;
        Command command;
        const char* description;
    };
    const CommandEntry commands[] = {
        {"compute", Command::compute, "closed-form M2^N and M1^N with oracle deviation"},
        {"classify", Command::classify, "decompose one cycle and report its core class"},
        {"verify", Command::verify, "compare closed forms with repeated multiplication, N = 1..n"},
        {"sweep", Command::sweep, "classify along a grid of one parameter"},
        {"transition", Command::transition, "locate lleft = 0 by bisection"},
    };
    for (const CommandEntry& c : commands) {
        app.add_subcommand(c.name, c.description)->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        report_error(err, "UsageError", e.what());
        return kUsage;
    }

    try {
        for (const CommandEntry& c : commands) {
            if (app.got_subcommand(c.name)) cfg.command = c.command;
        }
        cfg.format = format == "csv" ? Format::csv : Format::json;
        if (!swept_name.empty()) cfg.swept = parse_swept_parameter(swept_name);
        if (!range_text.empty()) cfg.range = parse_interval(range_text, "--range");
        if (!bracket_text.empty()) cfg.bracket = parse_interval(bracket_text, "--bracket");

        if (cfg.n < 1) throw UsageError("N must be ≥ 1");
        if (!(cfg.tolerance > 0)) throw UsageError("--tol must be > 0");
        if (cfg.command == Command::sweep) {
            if (!cfg.swept || !cfg.range) throw UsageError("sweep requires --sweep and --range");
            if (cfg.steps < 2) throw UsageError("--steps must be ≥ 2");
        }
        if (cfg.command == Command::transition) {
            if (!cfg.swept || !cfg.bracket) {
                throw UsageError("transition requires --sweep and --bracket");
            }
            if (!(cfg.bracket->first < cfg.bracket->second)) {
                throw UsageError("--bracket requires LO < HI");
            }
        }

        if (degrees) {
            constexpr double k = std::numbers::pi / 180.0;
            cfg.params.phi1 *= k;
            cfg.params.phi2 *= k;
            if (cfg.swept && *cfg.swept != SweptParameter::eta) {
                if (cfg.range) *cfg.range = {cfg.range->first * k, cfg.range->second * k};
                if (cfg.bracket) *cfg.bracket = {cfg.bracket->first * k, cfg.bracket->second * k};
            }
        }
    } catch (const UsageError& e) {
        report_error(err, "UsageError", e.what());
        return kUsage;
    }

    try {
        switch (cfg.command) {
            case Command::compute:
                return cmd_compute(cfg, out);
            case Command::classify:
                return cmd_classify(cfg, out);
            case Command::verify:
                return cmd_verify(cfg, out, err);
            case Command::sweep:
                return cmd_sweep(cfg, out);
            case Command::transition:
                return cmd_transition(cfg, out);
        }
    } catch (const NoSignChange& e) {
        report_error(err, "NoSignChange", e.what());
        return kNoSignChange;
    } catch (const UnsupportedOrientation& e) {
        report_error(err, "UnsupportedOrientation", e.what());
        return kDomain;
    } catch (const Error& e) {
        report_error(err, "DomainError", e.what());
        return kDomain;
    }
    return kUsage;
}

}  // namespace sliderule::cli
