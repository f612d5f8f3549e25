#pragma once

// Config-driven jobs: parse and validate a JSON job file, run the named
// command, produce a JSON or CSV report and an exit status
// (0 success, 1 input error, 2 verification failure).

#include <mixmul/serialize.hpp>

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mixmul::cli {

enum Status : int { ok = 0, input_error = 1, verification_failed = 2 };

inline const std::set<std::string> &commands()
{
    static const std::set<std::string> c{"colength", "multiplicity", "mixed", "okounkov", "verify", "example1"};
    return c;
}

inline const std::set<std::string> &suites()
{
    static const std::set<std::string> s{"positivity", "expected", "theorem1", "prop1", "lemma1", "minkowski"};
    return s;
}

struct Parameters {
    Backend backend = Backend::direct;
    Levels ladder{8, 16, 32};
    std::int64_t truncation_level = 0;
    Levels truncation_levels;
    std::int64_t check_bound = 6;
    bool certify = false;
    std::optional<Levels> levels; // n for colength
    Levels cutoffs{16, 32, 64};
    double tolerance = 1e-2;
    double zero_threshold = 1e-3;
    std::int64_t lemma_bound = 32;
    std::optional<Levels> sigma;
    std::optional<Levels> tau;
    std::int64_t minkowski_cutoff = 16;
    std::vector<std::string> suites;
    std::map<std::string, std::string> expected; // type key -> rational string
    unsigned threads = 1;
};

struct JobConfig {
    std::string command;
    bool example1 = false; // built-in model
    ModelSpecs model;
    Parameters params;
    std::string out_path;
    std::string format = "json";
};

struct RunOptions {
    bool timestamp = true;
    std::optional<unsigned> threads;
    std::optional<std::string> format;
    std::optional<std::string> out_path;
};

struct RunResult {
    int status = ok;
    Json report;             // empty on input errors
    std::string text;        // serialized report in the requested format
    std::vector<std::string> messages;
};

namespace detail {

inline void check_keys(const Json &obj, const std::set<std::string> &allowed, const std::string &where,
                       std::vector<std::string> &diag)
{
    for (const auto &[k, v] : obj.items())
        if (!allowed.count(k))
            diag.push_back("unknown key '" + k + "' in " + where);
}

inline void check_increasing(const Levels &l, const std::string &name, std::vector<std::string> &diag)
{
    if (l.empty())
        diag.push_back(name + " must not be empty");
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] < 1)
            diag.push_back(name + " entries must be positive");
        else if (i > 0 && l[i] <= l[i - 1])
            diag.push_back(name + " must be strictly increasing");
    }
}

inline std::string timestamp_now()
{
    const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

// Value form shared by coefficients and single multiplicities.
inline Json value_form(const Rational &v, bool exact, const std::string &method)
{
    if (exact)
        return {{"exact", to_string(v)}};
    return {{"approx", to_double(v)}, {"method", method}};
}

} // namespace detail

// Parses a config without validating model contents. Throws Error on
// malformed structure.
inline JobConfig parse_config(const Json &j)
{
    if (!j.is_object())
        throw Error("config must be a JSON object");
    JobConfig cfg;
    if (!j.contains("command") || !j["command"].is_string())
        throw Error("config needs a \"command\" string");
    cfg.command = j["command"].get<std::string>();
    if (j.contains("model")) {
        const auto &m = j["model"];
        if (m.is_string() && m.get<std::string>() == "example1")
            cfg.example1 = true;
        else
            cfg.model = model_specs_from_json(m);
    } else if (cfg.command == "example1") {
        cfg.example1 = true;
    } else {
        throw Error("config needs a \"model\"");
    }
    if (cfg.command == "example1")
        cfg.example1 = true;

    auto &p = cfg.params;
    if (cfg.command == "example1")
        p.ladder = {32, 64, 128};
    if (j.contains("parameters")) {
        const auto &q = j["parameters"];
        if (!q.is_object())
            throw Error("\"parameters\" must be an object");
        if (q.contains("backend"))
            p.backend = parse_backend(q["backend"].get<std::string>());
        if (q.contains("ladder"))
            p.ladder = levels_from_json(q["ladder"]);
        if (q.contains("truncation_level"))
            p.truncation_level = q["truncation_level"].get<std::int64_t>();
        if (q.contains("truncation_levels"))
            p.truncation_levels = levels_from_json(q["truncation_levels"]);
        if (q.contains("check_bound"))
            p.check_bound = q["check_bound"].get<std::int64_t>();
        if (q.contains("certify"))
            p.certify = q["certify"].get<bool>();
        if (q.contains("levels"))
            p.levels = levels_from_json(q["levels"]);
        if (q.contains("cutoffs"))
            p.cutoffs = levels_from_json(q["cutoffs"]);
        if (q.contains("tolerance"))
            p.tolerance = q["tolerance"].get<double>();
        if (q.contains("zero_threshold"))
            p.zero_threshold = q["zero_threshold"].get<double>();
        if (q.contains("lemma_bound"))
            p.lemma_bound = q["lemma_bound"].get<std::int64_t>();
        if (q.contains("sigma"))
            p.sigma = levels_from_json(q["sigma"]);
        if (q.contains("tau"))
            p.tau = levels_from_json(q["tau"]);
        if (q.contains("minkowski_cutoff"))
            p.minkowski_cutoff = q["minkowski_cutoff"].get<std::int64_t>();
        if (q.contains("suites"))
            p.suites = q["suites"].get<std::vector<std::string>>();
        if (q.contains("expected")) {
            for (const auto &[k, v] : q["expected"].items()) {
                if (!v.is_string())
                    throw Error("expected values must be rational strings");
                p.expected[k] = v.get<std::string>();
            }
        }
        if (q.contains("threads"))
            p.threads = q["threads"].get<unsigned>();
    }
    if (j.contains("output")) {
        const auto &o = j["output"];
        cfg.out_path = o.value("path", std::string{});
        cfg.format = o.value("format", std::string{"json"});
    }
    return cfg;
}

// Schema and invariant diagnostics; never runs a computation.
inline std::vector<std::string> validate(const Json &j)
{
    std::vector<std::string> diag;
    if (!j.is_object())
        return {"config must be a JSON object"};
    detail::check_keys(j, {"schema_version", "command", "model", "parameters", "output"}, "config", diag);
    if (!j.contains("schema_version"))
        diag.push_back("missing schema_version");
    else if (!j["schema_version"].is_number_integer() || j["schema_version"].get<int>() != schema_version)
        diag.push_back("unsupported schema_version (expected " + std::to_string(schema_version) + ")");
    if (j.contains("parameters") && j["parameters"].is_object())
        detail::check_keys(j["parameters"],
                           {"backend", "ladder", "truncation_level", "truncation_levels", "check_bound", "certify", "levels",
                            "cutoffs", "tolerance", "zero_threshold", "lemma_bound", "sigma", "tau", "minkowski_cutoff",
                            "suites", "expected", "threads"},
                           "parameters", diag);
    if (j.contains("output") && j["output"].is_object())
        detail::check_keys(j["output"], {"path", "format"}, "output", diag);

    JobConfig cfg;
    try {
        cfg = parse_config(j);
    } catch (const std::exception &e) {
        diag.push_back(e.what());
        return diag;
    }
    if (!commands().count(cfg.command))
        diag.push_back("unknown command '" + cfg.command + "'");
    if (cfg.format != "json" && cfg.format != "csv")
        diag.push_back("format must be json or csv");

    std::size_t r = 2, d = 2, ncomp = 1;
    if (!cfg.example1) {
        ncomp = cfg.model.components.size();
        const auto &first = cfg.model.components.front().second;
        r = first.size();
        d = first.front().dim;
        for (std::size_t c = 0; c < cfg.model.components.size(); ++c) {
            const auto &[w, list] = cfg.model.components[c];
            const std::string where = ncomp > 1 ? "component " + std::to_string(c + 1) + " " : "";
            if (w < 1)
                diag.push_back(where + "weight must be positive");
            if (list.size() != r)
                diag.push_back(where + "has a different number of filtrations");
            for (std::size_t k = 0; k < list.size(); ++k) {
                for (const auto &p : spec_problems(list[k]))
                    diag.push_back(where + "filtration " + std::to_string(k + 1) + ": " + p);
                if (list[k].dim != d)
                    diag.push_back(where + "filtration " + std::to_string(k + 1) + ": dimension mismatch (" +
                                   std::to_string(list[k].dim) + " vs " + std::to_string(d) + ")");
            }
        }
    }

    const auto &p = cfg.params;
    detail::check_increasing(p.ladder, "ladder", diag);
    if (cfg.command != "colength" && p.ladder.size() < 3)
        diag.push_back("ladder needs at least 3 levels");
    if (!p.truncation_levels.empty())
        detail::check_increasing(p.truncation_levels, "truncation_levels", diag);
    detail::check_increasing(p.cutoffs, "cutoffs", diag);
    if (p.truncation_level < 0)
        diag.push_back("truncation_level must be nonnegative");
    if (p.check_bound < 1)
        diag.push_back("check_bound must be positive");
    if (!(p.tolerance > 0))
        diag.push_back("tolerance must be positive");
    if (!(p.zero_threshold > 0))
        diag.push_back("zero_threshold must be positive");
    if (p.lemma_bound < 1 || p.minkowski_cutoff < 1)
        diag.push_back("lemma_bound and minkowski_cutoff must be positive");
    if (p.threads < 1)
        diag.push_back("threads must be positive");
    if (p.levels && p.levels->size() != r)
        diag.push_back("levels must have one entry per filtration");
    if (p.levels)
        for (auto v : *p.levels)
            if (v < 0)
                diag.push_back("levels must be nonnegative");
    for (const auto *v : {&p.sigma, &p.tau})
        if (*v && (*v)->size() != r)
            diag.push_back("sigma and tau must have one entry per filtration");
    for (const auto &[k, v] : p.expected) {
        try {
            parse_rational(v);
        } catch (const Error &) {
            diag.push_back("expected value for '" + k + "' is not a rational");
        }
        bool known = false;
        for (const auto &t : type_vectors(r, d))
            known = known || mixmul::detail::type_key(t) == k;
        if (!known)
            diag.push_back("expected key '" + k + "' is not a type vector for r=" + std::to_string(r) +
                           ", d=" + std::to_string(d));
    }

    if (cfg.command == "okounkov" && ncomp != 1)
        diag.push_back("okounkov needs a single-component model");
    if (cfg.command == "mixed" && !p.truncation_levels.empty() && ncomp != 1)
        diag.push_back("truncation_levels need a single-component model");
    if (cfg.command == "verify") {
        if (p.suites.empty())
            diag.push_back("verify needs a non-empty \"suites\" list");
        for (const auto &s : p.suites) {
            if (!suites().count(s))
                diag.push_back("unknown suite '" + s + "'");
            if ((s == "theorem1" || s == "prop1" || s == "lemma1" || s == "minkowski") && ncomp != 1)
                diag.push_back("suite '" + s + "' needs a single-component model");
        }
        const bool wants = [&] {
            for (const auto &s : p.suites)
                if (s == "minkowski")
                    return true;
            return false;
        }();
        if (wants && (!p.sigma || !p.tau))
            diag.push_back("suite 'minkowski' needs sigma and tau");
        if (std::find(p.suites.begin(), p.suites.end(), "expected") != p.suites.end() && p.expected.empty())
            diag.push_back("suite 'expected' needs \"expected\" values");
    }
    return diag;
}

namespace detail {

inline MixedOptions mixed_options(const Parameters &p)
{
    MixedOptions o;
    o.backend = p.backend;
    o.truncation_level = p.truncation_level;
    o.ladder = p.ladder;
    o.check_bound = p.check_bound;
    o.threads = p.threads;
    o.certify = p.certify;
    return o;
}

inline Levels unit_levels(std::size_t r, std::size_t j)
{
    Levels n(r, 0);
    n[j] = 1;
    return n;
}

inline std::string csv_table(const std::vector<std::vector<std::string>> &rows)
{
    std::string out;
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out += (i ? "," : "") + csv_escape(row[i]);
        out += '\n';
    }
    return out;
}

inline std::string num(double x)
{
    std::ostringstream os;
    os << std::setprecision(10) << x;
    return os.str();
}

struct Output {
    Json result;
    std::string csv;
    std::vector<Assertion> assertions;
};

inline Output run_colength(const ComponentModel &model, const Parameters &p)
{
    Output out;
    const auto r = model.r();
    const Levels n = p.levels ? *p.levels : Levels(r, 1);
    std::map<std::int64_t, Integer> total;
    Json comps = Json::array();
    for (const auto &c : model.components) {
        const auto seq = length_sequence(c.filtrations, n, p.ladder);
        for (const auto &t : seq)
            total[t.m] += Integer(static_cast<long>(c.weight)) * t.length;
        comps.push_back({{"weight", c.weight}, {"terms", sequence_json(seq)}});
    }
    const auto d = model.dim();
    std::vector<SequenceTerm> tot;
    for (const auto &[m, len] : total)
        tot.push_back({m, len, Rational(len) / mixmul::detail::power_of_int(m, d)});
    out.result = {{"n", levels_json(n)}, {"components", comps}, {"total", sequence_json(tot)}};
    out.csv = sequence_csv(tot);
    return out;
}

inline Output run_multiplicity(const ComponentModel &model, const Parameters &p)
{
    Output out;
    const auto opt = mixed_options(p);
    const auto r = model.r();
    const Rational dfact(factorial(static_cast<unsigned>(model.dim())));
    Json list = Json::array();
    std::vector<std::vector<std::string>> rows{{"index", "e", "approx", "exact", "method"}};
    for (std::size_t j = 0; j < r; ++j) {
        const auto est = component_G(model, unit_levels(r, j), opt);
        const Rational e = dfact * est.best();
        const bool exact = est.exact_or_certified();
        Json entry{{"index", j + 1}, {"G", estimate_json(est)}, {"e", value_form(e, exact, to_string(est.method))}};
        if (!exact)
            entry["e_last_term"] = to_string(dfact * est.value);
        if (!p.truncation_levels.empty() && model.components.size() == 1) {
            auto lopt = opt;
            lopt.backend = Backend::truncation_exact;
            entry["truncation_ladder"] =
                ladder_json(truncation_ladder({model.components[0].filtrations[j]}, p.truncation_levels, lopt));
        }
        list.push_back(entry);
        rows.push_back({std::to_string(j + 1), to_string(e), num(to_double(e)), exact ? "true" : "false",
                        to_string(est.method)});
    }
    out.result = {{"d", model.dim()}, {"multiplicities", list}};
    out.csv = csv_table(rows);
    return out;
}

inline Output run_mixed(const ComponentModel &model, const Parameters &p)
{
    Output out;
    const auto opt = mixed_options(p);
    const auto rep = component_mixed(model, opt);
    out.result = mixed_json(rep);
    out.csv = mixed_csv(rep);
    if (!p.truncation_levels.empty()) {
        auto lopt = opt;
        lopt.backend = Backend::truncation_exact;
        const auto rows = truncation_ladder(model.components[0].filtrations, p.truncation_levels, lopt);
        out.result["truncation_ladder"] = ladder_json(rows);
        out.csv = ladder_csv(rows);
    }
    return out;
}

inline Output run_okounkov(const ComponentModel &model, const Parameters &p)
{
    Output out;
    const auto &Fs = model.components[0].filtrations;
    const auto d = model.dim();
    Json per = Json::array();
    std::vector<std::vector<std::string>> rows{{"index", "cutoff", "difference", "limit", "discrepancy"}};
    std::optional<RationalPolytope> first_body;
    for (std::size_t j = 0; j < Fs.size(); ++j) {
        Json checks = Json::array();
        for (auto N : p.cutoffs) {
            const auto t = theorem1_check(Fs[j], N, p.ladder);
            checks.push_back(theorem1_json(t));
            rows.push_back({std::to_string(j + 1), std::to_string(N), to_string(t.difference), num(to_double(t.limit)),
                            num(to_double(t.discrepancy))});
        }
        const auto N = p.cutoffs.back();
        const auto b = body(gamma({Fs[j]}, {1}, beta_for({Fs[j]}, {1}), N));
        if (j == 0)
            first_body = b.body;
        per.push_back({{"index", j + 1},
                       {"theorem1", checks},
                       {"body", polytope_json(b.body)},
                       {"prop1", prop1_json(prop1_check(Fs[j], N, make_rational(1, N)))},
                       {"lemma1", lemma1_json(lemma1_search(Fs[j], p.lemma_bound, p.zero_threshold, p.ladder))}});
    }
    out.result = {{"d", d}, {"filtrations", per}};
    if (p.sigma && p.tau) {
        const auto beta = common_beta(Fs, {*p.sigma, *p.tau, [&] {
                                               Levels s = *p.sigma;
                                               for (std::size_t k = 0; k < s.size(); ++k)
                                                   s[k] += (*p.tau)[k];
                                               return s;
                                           }()});
        out.result["minkowski"] = minkowski_json(minkowski_checks(Fs, *p.sigma, *p.tau, beta, p.minkowski_cutoff));
    }
    out.csv = d == 2 && first_body ? body_csv(*first_body) : csv_table(rows);
    return out;
}

inline Assertion make_assertion(std::string name, bool passed, std::string detail)
{
    return {std::move(name), passed, std::move(detail)};
}

inline Output run_verify(const ComponentModel &model, const Parameters &p)
{
    Output out;
    const auto opt = mixed_options(p);
    Json suites_json = Json::object();
    std::optional<MixedMultiplicityReport> mixed;
    auto get_mixed = [&]() -> const MixedMultiplicityReport & {
        if (!mixed)
            mixed = component_mixed(model, opt);
        return *mixed;
    };
    for (const auto &suite : p.suites) {
        std::vector<Assertion> as;
        if (suite == "positivity") {
            if (model.components.size() == 1) {
                PositivityOptions po;
                po.mixed = opt;
                po.zero_threshold = p.zero_threshold;
                po.tolerance = p.tolerance;
                const auto rep = positivity_report(model.components[0].filtrations, po);
                suites_json[suite] = positivity_json(rep);
                as = rep.assertions;
            } else {
                const auto &rep = get_mixed();
                for (const auto &c : rep.coeffs) {
                    const bool pass = c.exact ? c.value >= 0 : to_double(c.value) >= -p.tolerance;
                    as.push_back(make_assertion("prop0-nonnegative " + mixmul::detail::type_key(c.type), pass,
                                                to_string(c.value)));
                }
                suites_json[suite] = {{"mixed", mixed_json(rep)}};
            }
        } else if (suite == "expected") {
            const auto &rep = get_mixed();
            for (const auto &[key, text] : p.expected) {
                const Rational want = parse_rational(text);
                for (const auto &c : rep.coeffs) {
                    if (mixmul::detail::type_key(c.type) != key)
                        continue;
                    const bool pass = c.exact ? c.value == want : std::abs(to_double(c.value - want)) <= p.tolerance;
                    as.push_back(make_assertion("expected-coefficient " + key, pass,
                                                "computed " + to_string(c.value) + (c.exact ? " (exact)" : "") +
                                                    ", expected " + text));
                }
            }
            suites_json[suite] = {{"mixed", mixed_json(rep)}};
        } else if (suite == "theorem1") {
            const auto &Fs = model.components[0].filtrations;
            Json list = Json::array();
            for (std::size_t j = 0; j < Fs.size(); ++j) {
                std::optional<Rational> prev;
                bool monotone = true;
                for (auto N : p.cutoffs) {
                    const auto t = theorem1_check(Fs[j], N, p.ladder);
                    list.push_back(theorem1_json(t));
                    const double bound = std::max(p.tolerance, 4.0 / static_cast<double>(N));
                    as.push_back(make_assertion("theorem1-identity[" + std::to_string(j + 1) + "]@" + std::to_string(N),
                                                to_double(t.discrepancy) <= bound,
                                                "discrepancy " + num(to_double(t.discrepancy)) + " bound " + num(bound)));
                    if (prev && t.discrepancy > *prev)
                        monotone = false;
                    prev = t.discrepancy;
                }
                as.push_back(make_assertion("theorem1-nonincreasing[" + std::to_string(j + 1) + "]", monotone, ""));
            }
            suites_json[suite] = list;
        } else if (suite == "prop1") {
            const auto &Fs = model.components[0].filtrations;
            Json list = Json::array();
            for (std::size_t j = 0; j < Fs.size(); ++j)
                for (auto N : p.cutoffs) {
                    const auto r = prop1_check(Fs[j], N, make_rational(1, N));
                    list.push_back(prop1_json(r));
                    as.push_back(make_assertion("prop1[" + std::to_string(j + 1) + "]@" + std::to_string(N), r.passed,
                                                r.triggered ? "difference " + to_string(r.difference) + " epsilon " +
                                                                  to_string(r.epsilon)
                                                            : "not triggered"));
                }
            suites_json[suite] = list;
        } else if (suite == "lemma1") {
            const auto &Fs = model.components[0].filtrations;
            Json list = Json::array();
            for (std::size_t j = 0; j < Fs.size(); ++j) {
                const auto r = lemma1_search(Fs[j], p.lemma_bound, p.zero_threshold, p.ladder);
                list.push_back(lemma1_json(r));
                if (r.precondition)
                    as.push_back(make_assertion("lemma1[" + std::to_string(j + 1) + "]", r.found,
                                                r.found ? "b=" + std::to_string(r.b) + " beta=" + std::to_string(r.beta)
                                                        : "no b <= 64"));
            }
            suites_json[suite] = list;
        } else if (suite == "minkowski") {
            const auto &Fs = model.components[0].filtrations;
            Levels st = *p.sigma;
            for (std::size_t k = 0; k < st.size(); ++k)
                st[k] += (*p.tau)[k];
            const auto beta = common_beta(Fs, {*p.sigma, *p.tau, st});
            const auto r = minkowski_checks(Fs, *p.sigma, *p.tau, beta, p.minkowski_cutoff);
            suites_json[suite] = minkowski_json(r);
            as.push_back(make_assertion("lemma-x1-containment", r.lemma_x1_passed,
                                        std::to_string(r.contained) + "/" + std::to_string(r.vertices_checked)));
            if (r.prop_x2_triggered)
                as.push_back(make_assertion("prop-x2-volume", r.prop_x2_passed,
                                            to_string(r.vol_sigma_tau) + " vs " + to_string(r.vol_tau)));
        }
        out.assertions.insert(out.assertions.end(), as.begin(), as.end());
    }
    bool passed = true;
    for (const auto &a : out.assertions)
        passed = passed && a.passed;
    out.result = {{"suites", suites_json}, {"assertions", assertions_json(out.assertions)}, {"passed", passed}};
    std::vector<std::vector<std::string>> rows{{"assertion", "passed", "detail"}};
    for (const auto &a : out.assertions)
        rows.push_back({a.name, a.passed ? "true" : "false", a.detail});
    out.csv = csv_table(rows);
    return out;
}

inline Output run_example1(const Parameters &p)
{
    Output out;
    auto opt = mixed_options(p);
    opt.certify = true;
    const auto model = example1_model();
    Json G = Json::object();
    Json per = Json::array();
    for (const Levels &n : {Levels{1, 0}, Levels{0, 1}, Levels{1, 1}})
        G[mixmul::detail::type_key({static_cast<int>(n[0]), static_cast<int>(n[1])})] =
            estimate_json(component_G(model, n, opt));
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        Json lim = Json::object();
        for (const Levels &n : {Levels{1, 0}, Levels{0, 1}, Levels{1, 1}}) {
            const auto est = G_estimate(model.components[c].filtrations, n, opt);
            lim[mixmul::detail::type_key({static_cast<int>(n[0]), static_cast<int>(n[1])})] =
                value_form(est.best(), est.exact_or_certified(), to_string(est.method));
        }
        per.push_back({{"component", c + 1}, {"limits", lim}});
    }
    const auto rep = component_mixed(model, opt);
    const auto e = [&](std::vector<int> t) {
        const auto &c = rep.at(t);
        return value_form(c.value, c.exact, to_string(rep.backend));
    };
    // l(R_1 / I_n J_n R_1) = (n+1)(n+2)/2 + n - 1 for n <= 64.
    bool formula = true;
    for (std::int64_t n = 1; n <= 64; ++n) {
        const auto len = colength(product_at(model.components[0].filtrations, {1, 1}, n));
        formula = formula && len == Integer(static_cast<long>((n + 1) * (n + 2) / 2 + n - 1));
    }
    out.result = {{"model", model_json(model)},
                  {"G", G},
                  {"component_limits", per},
                  {"e_I", e({2, 0})},
                  {"e_J", e({0, 2})},
                  {"e_IJ", e({1, 1})},
                  {"mixed", mixed_json(rep)},
                  {"length_formula_upto", 64},
                  {"length_formula_holds", formula}};
    out.csv = mixed_csv(rep);
    return out;
}

} // namespace detail

inline RunResult run(const Json &config, const RunOptions &ro = {})
{
    RunResult res;
    res.messages = validate(config);
    if (!res.messages.empty()) {
        res.status = input_error;
        return res;
    }
    auto cfg = parse_config(config);
    if (ro.threads)
        cfg.params.threads = *ro.threads;
    if (ro.format)
        cfg.format = *ro.format;
    if (cfg.format != "json" && cfg.format != "csv") {
        res.status = input_error;
        res.messages.push_back("format must be json or csv");
        return res;
    }
    detail::Output out;
    try {
        if (cfg.command == "example1") {
            out = detail::run_example1(cfg.params);
        } else {
            const auto model = build_model(cfg.model);
            model.validate();
            if (cfg.command == "colength")
                out = detail::run_colength(model, cfg.params);
            else if (cfg.command == "multiplicity")
                out = detail::run_multiplicity(model, cfg.params);
            else if (cfg.command == "mixed")
                out = detail::run_mixed(model, cfg.params);
            else if (cfg.command == "okounkov")
                out = detail::run_okounkov(model, cfg.params);
            else
                out = detail::run_verify(model, cfg.params);
        }
    } catch (const std::exception &e) {
        res.status = input_error;
        res.messages.push_back(e.what());
        return res;
    }
    res.report = report_envelope(cfg.command, out.result, ro.timestamp ? detail::timestamp_now() : std::string{});
    res.text = cfg.format == "json" ? res.report.dump(2) + "\n" : out.csv;
    for (const auto &a : out.assertions)
        if (!a.passed) {
            res.status = verification_failed;
            res.messages.push_back("assertion failed: " + a.name + (a.detail.empty() ? "" : " (" + a.detail + ")"));
        }
    return res;
}

inline Json load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot read config '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error &e) {
        throw Error("config '" + path + "' is not valid JSON: " + e.what());
    }
}

// Output path precedence: flag, then config.
inline std::string output_path(const Json &config, const RunOptions &ro)
{
    if (ro.out_path)
        return *ro.out_path;
    if (config.is_object() && config.contains("output") && config["output"].is_object())
        return config["output"].value("path", std::string{});
    return {};
}

} // namespace mixmul::cli
