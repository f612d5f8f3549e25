#pragma once

// JSON and CSV forms of specs, models and reports. Exact rationals are
// always strings "p/q"; object keys come out sorted, so equal inputs give
// byte-identical text.

#include <mixmul/components.hpp>
#include <mixmul/okounkov.hpp>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace mixmul {

using Json = nlohmann::json;

inline constexpr int schema_version = 1;

// ---- scalars --------------------------------------------------------------

inline Json rational_json(const Rational &r) { return to_string(r); }

inline Rational rational_from_json(const Json &j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(static_cast<long>(j.get<std::int64_t>()));
    throw Error("expected a rational string such as \"3/2\"");
}

inline Json surd_json(const SurdScalar &s)
{
    const char *key = s.kind() == SurdScalar::Kind::rational ? "rat" : "sqrt";
    return Json{{key, Json::array({to_string(s.p()), to_string(s.q())})}};
}

inline SurdScalar surd_from_json(const Json &j)
{
    if (!j.is_object() || j.size() != 1)
        throw Error("scalar must be {\"rat\": [p, q]} or {\"sqrt\": [p, q]}");
    const auto &[key, pq] = *j.items().begin();
    if (!pq.is_array() || pq.size() != 2)
        throw Error("scalar needs [p, q]");
    auto integer = [](const Json &v) {
        if (v.is_number_integer())
            return Integer(static_cast<long>(v.get<std::int64_t>()));
        if (v.is_string())
            return Integer(v.get<std::string>());
        throw Error("scalar entries must be integers");
    };
    if (key == "rat")
        return SurdScalar::rational(integer(pq[0]), integer(pq[1]));
    if (key == "sqrt")
        return SurdScalar::sqrt(integer(pq[0]), integer(pq[1]));
    throw Error("unknown scalar form '" + key + "'");
}

inline Json levels_json(const Levels &n) { return Json(n); }

inline Levels levels_from_json(const Json &j)
{
    if (!j.is_array())
        throw Error("expected an integer list");
    Levels out;
    for (const auto &v : j) {
        if (!v.is_number_integer())
            throw Error("expected an integer list");
        out.push_back(v.get<std::int64_t>());
    }
    return out;
}

// ---- ideals, specs, models ------------------------------------------------

inline Json ideal_json(const MonomialIdeal &I)
{
    Json gens = Json::array();
    for (const auto &g : I.generators())
        gens.push_back(std::vector<std::int64_t>(g.coords().begin(), g.coords().end()));
    return {{"dim", I.dim()}, {"gens", gens}};
}

inline MonomialIdeal ideal_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("dim") || !j.contains("gens"))
        throw Error("ideal must be {\"dim\": d, \"gens\": [[...], ...]}");
    const auto d = j.at("dim").get<std::size_t>();
    std::vector<Exponent> gens;
    for (const auto &g : j.at("gens")) {
        const auto v = g.get<std::vector<std::int64_t>>();
        if (v.size() != d)
            throw Error("generator length differs from dim");
        gens.emplace_back(std::span<const std::int64_t>(v));
    }
    if (gens.empty())
        throw Error("ideal needs at least one generator");
    return minimalize(std::move(gens), d);
}

inline Json spec_json(const FiltrationSpec &spec)
{
    Json j{{"kind", kind_name(spec)}};
    std::visit(
        [&](const auto &k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, AdicSpec>) {
                j["ideal"] = ideal_json(k.ideal);
            } else if constexpr (std::is_same_v<T, FixedPlusAdicSpec>) {
                j["fixed"] = ideal_json(k.fixed);
                j["adic"] = ideal_json(k.adic);
            } else if constexpr (std::is_same_v<T, RoundedValuationSpec>) {
                Json w = Json::array();
                for (const auto &x : k.weights)
                    w.push_back(rational_json(x));
                j["weights"] = w;
                j["scale"] = surd_json(k.scale);
            } else if constexpr (std::is_same_v<T, TruncatedSpec>) {
                j["base"] = spec_json(*k.base);
                j["level"] = k.level;
            } else {
                j["base"] = spec_json(*k.base);
                j["factor"] = k.factor;
            }
        },
        spec.kind);
    return j;
}

inline FiltrationSpec spec_from_json(const Json &j)
{
    if (!j.is_object() || !j.contains("kind"))
        throw Error("filtration needs a \"kind\"");
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "adic")
        return adic_spec(ideal_from_json(j.at("ideal")));
    if (kind == "fixed-plus-adic")
        return fixed_plus_adic_spec(ideal_from_json(j.at("fixed")), ideal_from_json(j.at("adic")));
    if (kind == "rounded-valuation") {
        std::vector<Rational> w;
        for (const auto &x : j.at("weights"))
            w.push_back(rational_from_json(x));
        return rounded_valuation_spec(std::move(w), surd_from_json(j.at("scale")));
    }
    if (kind == "truncated" || kind == "rescaled") {
        auto base = std::make_shared<const FiltrationSpec>(spec_from_json(j.at("base")));
        const auto d = base->dim;
        if (kind == "truncated")
            return {TruncatedSpec{std::move(base), j.at("level").get<std::int64_t>()}, d};
        return {RescaledSpec{std::move(base), j.at("factor").get<std::int64_t>()}, d};
    }
    throw Error("unknown filtration kind '" + kind + "'");
}

inline Json model_json(const ComponentModel &model)
{
    Json comps = Json::array();
    for (const auto &c : model.components) {
        Json fs = Json::array();
        for (const auto &F : c.filtrations)
            fs.push_back(spec_json(F.spec()));
        comps.push_back({{"weight", c.weight}, {"filtrations", fs}});
    }
    return {{"components", comps}};
}

// Accepts {"filtrations": [...]} (one component of weight 1) or
// {"components": [{"weight": w, "filtrations": [...]}, ...]}.
// Specs are not validated here.
struct ModelSpecs {
    std::vector<std::pair<std::int64_t, std::vector<FiltrationSpec>>> components;
};

inline ModelSpecs model_specs_from_json(const Json &j)
{
    ModelSpecs out;
    auto read_list = [](const Json &list) {
        if (!list.is_array() || list.empty())
            throw Error("\"filtrations\" must be a non-empty list");
        std::vector<FiltrationSpec> specs;
        for (const auto &f : list)
            specs.push_back(spec_from_json(f));
        return specs;
    };
    if (!j.is_object())
        throw Error("model must be an object");
    if (j.contains("filtrations")) {
        out.components.push_back({1, read_list(j.at("filtrations"))});
    } else if (j.contains("components")) {
        for (const auto &c : j.at("components"))
            out.components.push_back({c.value("weight", std::int64_t{1}), read_list(c.at("filtrations"))});
        if (out.components.empty())
            throw Error("model has no components");
    } else {
        throw Error("model needs \"filtrations\" or \"components\"");
    }
    return out;
}

inline ComponentModel build_model(const ModelSpecs &specs)
{
    ComponentModel model;
    for (const auto &[w, list] : specs.components) {
        Component c{w, {}};
        for (const auto &s : list)
            c.filtrations.emplace_back(s);
        model.components.push_back(std::move(c));
    }
    return model;
}

inline ComponentModel model_from_json(const Json &j) { return build_model(model_specs_from_json(j)); }

// ---- geometry -------------------------------------------------------------

inline Json point_json(const RationalPoint &p)
{
    Json j = Json::array();
    for (const auto &c : p.coords())
        j.push_back(rational_json(c));
    return j;
}

inline Json polytope_json(const RationalPolytope &P)
{
    Json v = Json::array();
    for (const auto &p : P.vertices())
        v.push_back(point_json(p));
    return {{"dim", P.dim()}, {"vertices", v}, {"volume", rational_json(volume(P))}};
}

inline RationalPolytope polytope_from_json(const Json &j)
{
    const auto d = j.at("dim").get<std::size_t>();
    std::vector<RationalPoint> pts;
    for (const auto &v : j.at("vertices")) {
        std::vector<Rational> c;
        for (const auto &x : v)
            c.push_back(rational_from_json(x));
        if (c.size() != d)
            throw Error("vertex length differs from dim");
        pts.emplace_back(std::move(c));
    }
    return hull(std::move(pts), d);
}

// ---- reports --------------------------------------------------------------

inline Json sequence_json(const std::vector<SequenceTerm> &seq)
{
    Json out = Json::array();
    for (const auto &t : seq)
        out.push_back({{"m", t.m}, {"length", to_string(t.length)}, {"value", rational_json(t.value)}});
    return out;
}

inline Json estimate_json(const LimitEstimate &e)
{
    Json j{{"method", to_string(e.method)},
           {"value", rational_json(e.value)},
           {"lower_evidence", rational_json(e.lower_evidence)},
           {"best", rational_json(e.best())},
           {"approx", to_double(e.best())},
           {"error_note", e.error_note},
           {"tail", sequence_json(e.tail)}};
    if (e.refined)
        j["refined"] = rational_json(*e.refined);
    if (e.certified)
        j["certified"] = rational_json(*e.certified);
    return j;
}

inline Json coefficient_value_json(const Coefficient &c, Backend backend)
{
    if (c.exact)
        return {{"exact", rational_json(c.value)}};
    return {{"approx", to_double(c.value)}, {"method", to_string(backend)}};
}

inline Json mixed_json(const MixedMultiplicityReport &rep)
{
    Json coeffs = Json::object();
    for (const auto &c : rep.coeffs)
        coeffs[detail::type_key(c.type)] = coefficient_value_json(c, rep.backend);
    Json samples = Json::array();
    for (std::size_t i = 0; i < rep.samples.size(); ++i)
        samples.push_back({{"n", levels_json(rep.samples[i])}, {"G", rational_json(rep.sample_values[i])}});
    Json j{{"r", rep.r}, {"d", rep.d}, {"backend", to_string(rep.backend)}, {"coefficients", coeffs}, {"samples", samples}};
    if (rep.truncation_level)
        j["truncation_level"] = *rep.truncation_level;
    if (rep.period)
        j["period"] = *rep.period;
    if (!rep.ladder.empty())
        j["ladder"] = levels_json(rep.ladder);
    return j;
}

// Inverse of mixed_json up to the approximate values, which come back as
// the nearest rational to the stored double.
inline MixedMultiplicityReport mixed_from_json(const Json &j)
{
    MixedMultiplicityReport rep;
    rep.r = j.at("r").get<std::size_t>();
    rep.d = j.at("d").get<std::size_t>();
    rep.backend = parse_backend(j.at("backend").get<std::string>());
    const auto &coeffs = j.at("coefficients");
    for (const auto &t : type_vectors(rep.r, rep.d)) {
        const auto key = detail::type_key(t);
        if (!coeffs.contains(key))
            throw Error("missing coefficient " + key);
        const auto &v = coeffs.at(key);
        if (v.contains("exact"))
            rep.coeffs.push_back({t, rational_from_json(v.at("exact")), true});
        else
            rep.coeffs.push_back({t, Rational(v.at("approx").get<double>()), false});
    }
    if (coeffs.size() != rep.coeffs.size())
        throw Error("unexpected coefficient keys");
    for (const auto &s : j.at("samples")) {
        rep.samples.push_back(levels_from_json(s.at("n")));
        rep.sample_values.push_back(rational_from_json(s.at("G")));
    }
    if (j.contains("truncation_level"))
        rep.truncation_level = j.at("truncation_level").get<std::int64_t>();
    if (j.contains("period"))
        rep.period = j.at("period").get<std::int64_t>();
    if (j.contains("ladder"))
        rep.ladder = levels_from_json(j.at("ladder"));
    return rep;
}

inline Json ladder_json(const std::vector<LadderRow> &rows)
{
    Json out = Json::array();
    for (const auto &row : rows) {
        Json delta = Json::object();
        for (std::size_t k = 0; k < row.delta.size(); ++k)
            delta[detail::type_key(row.report.coeffs[k].type)] = rational_json(row.delta[k]);
        out.push_back({{"level", row.level}, {"report", mixed_json(row.report)}, {"delta", delta}});
    }
    return out;
}

inline Json assertions_json(const std::vector<Assertion> &as)
{
    Json out = Json::array();
    for (const auto &a : as)
        out.push_back({{"name", a.name}, {"passed", a.passed}, {"detail", a.detail}});
    return out;
}

inline Json positivity_json(const PositivityReport &rep)
{
    Json singles = Json::array();
    for (std::size_t j = 0; j < rep.single_e.size(); ++j)
        singles.push_back({{"e", rational_json(rep.single_e[j])}, {"positive", static_cast<bool>(rep.positive[j])}});
    return {{"mixed", mixed_json(rep.mixed)},
            {"single", singles},
            {"s", rep.s},
            {"order", rep.order},
            {"zero_threshold", rep.zero_threshold},
            {"assertions", assertions_json(rep.assertions)},
            {"passed", rep.passed()}};
}

inline Json theorem1_json(const Theorem1Report &r)
{
    return {{"cutoff", r.cutoff},
            {"beta", r.beta},
            {"estimate", estimate_json(r.estimate)},
            {"limit", rational_json(r.limit)},
            {"vol_hat", rational_json(r.vol_hat)},
            {"vol_body", rational_json(r.vol_body)},
            {"difference", rational_json(r.difference)},
            {"discrepancy", rational_json(r.discrepancy)},
            {"discrepancy_approx", to_double(r.discrepancy)}};
}

inline Json prop1_json(const Prop1Report &r)
{
    Json j{{"cutoff", r.cutoff},
           {"beta", r.beta},
           {"tol", rational_json(r.tol)},
           {"triggered", r.triggered},
           {"difference", rational_json(r.difference)},
           {"epsilon", rational_json(r.epsilon)},
           {"passed", r.passed},
           {"note", r.note}};
    if (r.witness)
        j["witness"] = point_json(*r.witness);
    return j;
}

inline Json lemma1_json(const Lemma1Report &r)
{
    return {{"precondition", r.precondition}, {"found", r.found},   {"b", r.b},
            {"beta", r.beta},                 {"verified_bound", r.verified_bound}, {"limit", rational_json(r.limit)}};
}

inline Json minkowski_json(const MinkowskiReport &r)
{
    return {{"beta", r.beta},
            {"cutoff", r.cutoff},
            {"vertices_checked", r.vertices_checked},
            {"contained", r.contained},
            {"unresolved", r.unresolved},
            {"lemma_x1_passed", r.lemma_x1_passed},
            {"tol", rational_json(r.tol)},
            {"prop_x2_triggered", r.prop_x2_triggered},
            {"vol_sigma_tau", rational_json(r.vol_sigma_tau)},
            {"vol_tau", rational_json(r.vol_tau)},
            {"prop_x2_passed", r.prop_x2_passed}};
}

// Top-level report envelope.
inline Json report_envelope(const std::string &command, Json result, const std::string &timestamp = {})
{
    Json j{{"schema_version", schema_version}, {"command", command}, {"result", std::move(result)}};
    if (!timestamp.empty())
        j["timestamp"] = timestamp;
    return j;
}

// Structural checks of the published report schema; empty when valid.
inline std::vector<std::string> report_problems(const Json &j)
{
    std::vector<std::string> out;
    if (!j.is_object())
        return {"report must be an object"};
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        out.push_back("missing schema_version");
    else if (j["schema_version"].get<int>() != schema_version)
        out.push_back("unsupported schema_version");
    if (!j.contains("command") || !j["command"].is_string())
        out.push_back("missing command");
    if (!j.contains("result") || !j["result"].is_object())
        out.push_back("missing result object");
    if (j.contains("timestamp") && !j["timestamp"].is_string())
        out.push_back("timestamp must be a string");
    if (!out.empty())
        return out;

    // Every "exact" leaf and every coefficient map must follow the value forms.
    std::vector<std::pair<std::string, const Json *>> stack{{"result", &j["result"]}};
    while (!stack.empty()) {
        auto [path, node] = stack.back();
        stack.pop_back();
        if (node->is_object()) {
            for (const auto &[k, v] : node->items()) {
                if (k == "coefficients") {
                    if (!v.is_object()) {
                        out.push_back(path + ".coefficients must be an object");
                        continue;
                    }
                    for (const auto &[key, c] : v.items()) {
                        const bool exact = c.is_object() && c.size() == 1 && c.contains("exact") && c["exact"].is_string();
                        const bool approx = c.is_object() && c.size() == 2 && c.contains("approx") &&
                                            c["approx"].is_number() && c.contains("method") && c["method"].is_string();
                        if (!exact && !approx)
                            out.push_back(path + ".coefficients." + key + " has an invalid value form");
                        if (exact) {
                            try {
                                parse_rational(c["exact"].get<std::string>());
                            } catch (const Error &) {
                                out.push_back(path + ".coefficients." + key + " is not a rational string");
                            }
                        }
                        for (char ch : key)
                            if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == ','))
                                out.push_back(path + ".coefficients key '" + key + "' is malformed");
                    }
                }
                stack.push_back({path + "." + k, &v});
            }
        } else if (node->is_array()) {
            for (std::size_t i = 0; i < node->size(); ++i)
                stack.push_back({path + "[" + std::to_string(i) + "]", &(*node)[i]});
        }
    }
    return out;
}

// ---- CSV ------------------------------------------------------------------

inline std::string csv_escape(const std::string &s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
        out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string sequence_csv(const std::vector<SequenceTerm> &seq)
{
    std::ostringstream os;
    os << "m,length,value,approx\n";
    for (const auto &t : seq)
        os << t.m << ',' << t.length << ',' << to_string(t.value) << ',' << to_double(t.value) << '\n';
    return os.str();
}

inline std::string mixed_csv(const MixedMultiplicityReport &rep)
{
    std::ostringstream os;
    os << "type,value,approx,exact\n";
    for (const auto &c : rep.coeffs)
        os << csv_escape(detail::type_key(c.type)) << ',' << to_string(c.value) << ',' << to_double(c.value) << ','
           << (c.exact ? "true" : "false") << '\n';
    return os.str();
}

inline std::string ladder_csv(const std::vector<LadderRow> &rows)
{
    std::ostringstream os;
    os << "level,type,value,approx,delta\n";
    for (const auto &row : rows)
        for (std::size_t k = 0; k < row.report.coeffs.size(); ++k) {
            const auto &c = row.report.coeffs[k];
            os << row.level << ',' << csv_escape(detail::type_key(c.type)) << ',' << to_string(c.value) << ','
               << to_double(c.value) << ',' << (k < row.delta.size() ? to_string(row.delta[k]) : "") << '\n';
        }
    return os.str();
}

// Vertices of a planar polytope in counter-clockwise order, starting from
// the lexicographically smallest one.
inline std::vector<RationalPoint> polygon_order(const RationalPolytope &P)
{
    if (P.dim() != 2)
        throw Error("polygon order needs a planar body");
    auto v = P.vertices();
    if (v.size() < 3)
        return v;
    const RationalPoint o = v.front();
    std::sort(v.begin() + 1, v.end(), [&](const RationalPoint &a, const RationalPoint &b) {
        const Rational cross = (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        return cross > 0;
    });
    return v;
}

// Plot-ready vertex list; the first vertex is repeated to close the polygon.
inline std::string body_csv(const RationalPolytope &P)
{
    std::ostringstream os;
    os << "x,y,x_exact,y_exact\n";
    auto v = polygon_order(P);
    if (v.size() > 2)
        v.push_back(v.front());
    for (const auto &p : v)
        os << to_double(p[0]) << ',' << to_double(p[1]) << ',' << to_string(p[0]) << ',' << to_string(p[1]) << '\n';
    return os.str();
}

} // namespace mixmul
