#include <mixmul/serialize.hpp>

#include <gtest/gtest.h>

using namespace mixmul;

namespace {

const auto m2 = MonomialIdeal::maximal(2);
const auto x2y = make_ideal(2, {{2, 0}, {0, 1}});

std::vector<FiltrationSpec> sample_specs()
{
    const auto x = make_ideal(2, {{1, 0}});
    std::vector<FiltrationSpec> out{
        adic_spec(m2), adic_spec(x2y), fixed_plus_adic_spec(x, m2),
        rounded_valuation_spec({Rational(1)}, SurdScalar::sqrt(2)),
        rounded_valuation_spec({make_rational(1, 2), Rational(3)}, SurdScalar::rational(5, 3)),
        truncate(adic(x2y), 4).spec(), rescale(truncate(rounded_valuation({Rational(1)}, SurdScalar::sqrt(3)), 5), 2).spec()};
    return out;
}

} // namespace

TEST(Json, RationalsAreStrings)
{
    EXPECT_EQ(rational_json(make_rational(6, 4)), Json("3/2"));
    EXPECT_EQ(rational_json(Rational(0)), Json("0"));
    EXPECT_EQ(rational_from_json(Json("-10/4")), make_rational(-5, 2));
    EXPECT_EQ(rational_from_json(Json(7)), Rational(7));
    EXPECT_THROW(rational_from_json(Json(0.5)), Error);
    EXPECT_THROW(rational_from_json(Json("1/0")), Error);
}

TEST(Json, SurdForms)
{
    EXPECT_EQ(surd_json(SurdScalar::sqrt(2)).dump(), R"({"sqrt":["2","1"]})");
    EXPECT_EQ(surd_json(SurdScalar::rational(3, 2)).dump(), R"({"rat":["3","2"]})");
    EXPECT_EQ(surd_from_json(Json::parse(R"({"sqrt":[8,2]})")), SurdScalar::rational(2));
    EXPECT_THROW(surd_from_json(Json::parse(R"({"cbrt":[2,1]})")), Error);
    EXPECT_THROW(surd_from_json(Json::parse(R"({"sqrt":[-2,1]})")), Error);
}

TEST(Json, IdealRoundTrip)
{
    const auto I = make_ideal(3, {{4, 0, 0}, {0, 2, 1}, {0, 0, 3}, {1, 1, 0}, {0, 5, 0}});
    EXPECT_EQ(ideal_from_json(ideal_json(I)), I);
    EXPECT_EQ(ideal_json(m2).dump(), R"({"dim":2,"gens":[[0,1],[1,0]]})");
    // Non-minimal input is minimalized.
    EXPECT_EQ(ideal_from_json(Json::parse(R"({"dim":2,"gens":[[1,0],[2,3],[0,1]]})")), m2);
    EXPECT_THROW(ideal_from_json(Json::parse(R"({"dim":2,"gens":[[1,0,0]]})")), Error);
}

TEST(Json, SpecRoundTrip)
{
    for (const auto &spec : sample_specs()) {
        const auto j = spec_json(spec);
        EXPECT_EQ(spec_from_json(j), spec) << j.dump();
        EXPECT_EQ(spec_from_json(Json::parse(j.dump())), spec);
        EXPECT_EQ(j.at("kind").get<std::string>(), kind_name(spec));
    }
    EXPECT_THROW(spec_from_json(Json::parse(R"({"kind":"weird"})")), Error);
}

TEST(Json, ModelRoundTrip)
{
    const auto model = example1_model();
    const auto back = model_from_json(model_json(model));
    ASSERT_EQ(back.components.size(), 2u);
    for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(back.components[k].weight, model.components[k].weight);
        EXPECT_EQ(back.components[k].filtrations, model.components[k].filtrations);
    }
    const auto single = model_from_json(Json{{"filtrations", Json::array({spec_json(adic_spec(m2))})}});
    EXPECT_EQ(single.components.size(), 1u);
    EXPECT_EQ(single.components[0].weight, 1);
}

TEST(Json, MixedReportRoundTrip)
{
    MixedOptions o;
    o.backend = Backend::truncation_exact;
    const auto rep = mixed_multiplicities({adic(m2), adic(x2y)}, o);
    const auto j = mixed_json(rep);
    EXPECT_EQ(j["coefficients"]["1,1"], Json::parse(R"({"exact":"1"})"));
    EXPECT_EQ(j["coefficients"]["0,2"], Json::parse(R"({"exact":"2"})"));
    const auto back = mixed_from_json(Json::parse(j.dump()));
    ASSERT_EQ(back.coeffs.size(), rep.coeffs.size());
    for (std::size_t k = 0; k < rep.coeffs.size(); ++k) {
        EXPECT_EQ(back.coeffs[k].type, rep.coeffs[k].type);
        EXPECT_EQ(back.coeffs[k].value, rep.coeffs[k].value);
        EXPECT_TRUE(back.coeffs[k].exact);
    }
    EXPECT_EQ(back.samples, rep.samples);
    EXPECT_EQ(back.sample_values, rep.sample_values);
    EXPECT_EQ(back.period, rep.period);
    EXPECT_EQ(mixed_json(back), j);

    const auto direct = mixed_multiplicities({adic(m2), adic(x2y)});
    const auto jd = mixed_json(direct);
    EXPECT_EQ(jd["coefficients"]["2,0"]["method"], "direct");
    const auto back_d = mixed_from_json(jd);
    for (std::size_t k = 0; k < direct.coeffs.size(); ++k)
        EXPECT_EQ(to_double(back_d.coeffs[k].value), to_double(direct.coeffs[k].value));
}

TEST(Json, PolytopeRoundTrip)
{
    const auto P = hull({{0, 0}, {make_rational(3, 2), 0}, {1, make_rational(7, 3)}, {0, 1}}, 2);
    const auto j = polytope_json(P);
    EXPECT_EQ(polytope_from_json(Json::parse(j.dump())), P);
    EXPECT_EQ(j["volume"], Json(to_string(volume(P))));
}

TEST(Json, ReportsValidateAgainstSchema)
{
    const auto F = rounded_valuation({Rational(1)}, SurdScalar::sqrt(2));
    std::vector<Json> results{
        mixed_json(mixed_multiplicities({adic(m2), adic(x2y)})),
        {{"ladder", ladder_json(truncation_ladder({F}, {1, 2, 4}, MixedOptions{}))}},
        positivity_json(positivity_report({adic(m2), adic(x2y)})),
        theorem1_json(theorem1_check(adic(x2y), 8)),
        prop1_json(prop1_check(fixed_plus_adic(make_ideal(2, {{1, 0}}), m2), 8, make_rational(1, 8))),
        lemma1_json(lemma1_search(adic(m2), 8)),
        minkowski_json(minkowski_checks({adic(m2), adic(x2y)}, {1, 0}, {0, 1}, 6, 4)),
        {{"estimate", estimate_json(G_estimate({adic(m2)}, {1}, MixedOptions{}))}}};
    for (const auto &r : results) {
        const auto env = report_envelope("test", r, "2026-01-01T00:00:00Z");
        const auto reparsed = Json::parse(env.dump(2));
        EXPECT_EQ(reparsed, env);
        EXPECT_TRUE(report_problems(reparsed).empty()) << report_problems(reparsed).front();
    }
}

TEST(Json, SchemaRejectsMalformedReports)
{
    EXPECT_FALSE(report_problems(Json::parse("[]")).empty());
    EXPECT_FALSE(report_problems(Json::parse(R"({"command":"x","result":{}})")).empty());
    EXPECT_FALSE(report_problems(Json::parse(R"({"schema_version":2,"command":"x","result":{}})")).empty());
    const auto bad_value = Json::parse(R"({"schema_version":1,"command":"x","result":{"coefficients":{"1,1":{"exact":0.5}}}})");
    EXPECT_FALSE(report_problems(bad_value).empty());
    const auto bad_key = Json::parse(R"({"schema_version":1,"command":"x","result":{"coefficients":{"a":{"exact":"1"}}}})");
    EXPECT_FALSE(report_problems(bad_key).empty());
    const auto good = Json::parse(R"({"schema_version":1,"command":"x","result":{"coefficients":{"1,1":{"exact":"1/2"}}}})");
    EXPECT_TRUE(report_problems(good).empty());
}

TEST(Csv, Tables)
{
    const auto F = rounded_valuation({Rational(1)}, SurdScalar::sqrt(2));
    MixedOptions o;
    o.backend = Backend::truncation_exact;
    o.check_bound = 16;
    const auto csv = ladder_csv(truncation_ladder({F}, {1, 2, 4}, o));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "level,type,value,approx,delta");
    EXPECT_NE(csv.find("\n1,1,2,2,\n"), std::string::npos) << csv;
    EXPECT_NE(csv.find("\n2,1,3/2,1.5,-1/2\n"), std::string::npos) << csv;

    const auto seq = sequence_csv(length_sequence({adic(m2)}, {1}, {4}));
    EXPECT_EQ(seq, "m,length,value,approx\n4,10,5/8,0.625\n");
    EXPECT_EQ(csv_escape("1,1"), "\"1,1\"");
}

TEST(Csv, PolygonIsClosedAndCounterClockwise)
{
    const auto P = hull({{2, 0}, {0, 0}, {0, 2}, {2, 2}, {1, 1}}, 2);
    const auto order = polygon_order(P);
    EXPECT_EQ(order, (std::vector<RationalPoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}}));
    const auto csv = body_csv(P);
    EXPECT_EQ(csv, "x,y,x_exact,y_exact\n0,0,0,0\n2,0,2,0\n2,2,2,2\n0,2,0,2\n0,0,0,0\n");
    // Signed area of the ordered polygon equals the exact volume.
    const auto T = body(gamma({adic(x2y)}, {1}, 2, 8)).body;
    const auto v = polygon_order(T);
    Rational area = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto &a = v[i];
        const auto &b = v[(i + 1) % v.size()];
        area += a[0] * b[1] - a[1] * b[0];
    }
    EXPECT_EQ(area / 2, volume(T));
}
