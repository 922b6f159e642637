#include <gtest/gtest.h>

#include <regex>
#include <sstream>

#include "ellpl/eisenstein_modular.hpp"
#include "verify/commands.hpp"
#include "verify/complex_literal.hpp"
#include "verify/suites.hpp"

using namespace ellpl;
using namespace ellpl::verify;

TEST(ComplexLiteral, ParsesAllForms) {
    EXPECT_EQ(parse_complex("1.5+2i"), Complex(1.5, 2.0));
    EXPECT_EQ(parse_complex("1.5-2i"), Complex(1.5, -2.0));
    EXPECT_EQ(parse_complex("2i"), Complex(0.0, 2.0));
    EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
    EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
    EXPECT_EQ(parse_complex("-0.25"), Complex(-0.25, 0.0));
    EXPECT_EQ(parse_complex("1e-3+2.5e2i"), Complex(1e-3, 250.0));
    EXPECT_EQ(parse_complex("-1e+2-1e-2i"), Complex(-100.0, -0.01));
}

TEST(ComplexLiteral, RejectsMalformed) {
    for (const char* bad : {"", "abc", "1+", "1+2", "2ii", "1 + 2i", "+-i"})
        EXPECT_THROW(parse_complex(bad), DomainError) << bad;
    EXPECT_THROW(parse_tau("0.5"), DomainError);
    EXPECT_THROW(parse_tau("0.5-1i"), DomainError);
    EXPECT_EQ(parse_tau("0.5+1i").value(), Complex(0.5, 1.0));
}

TEST(ComplexLiteral, FormatRoundTrips) {
    for (Complex z : {Complex(0.1, 0.2), Complex(-3.0, 1e-18), Complex(1.0 / 3, -2.0 / 7)})
        EXPECT_EQ(parse_complex(format_complex(z)), z);
}

TEST(Suites, NamesAndLookup) {
    const auto& names = suite_names();
    EXPECT_EQ(names.size(), 11u);
    for (const auto& n : names) EXPECT_TRUE(is_suite(n));
    EXPECT_FALSE(is_suite("nope"));
    try {
        run_suite("nope", {});
        FAIL();
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("legendre"), std::string::npos);
    }
}

TEST(Suites, ConfigHashIsDeterministicAndSensitive) {
    RunConfig a;
    const std::string h = config_hash("legendre", a);
    EXPECT_TRUE(std::regex_match(h, std::regex("[0-9a-f]{16}")));
    EXPECT_EQ(config_hash("legendre", a), h);
    RunConfig b = a;
    b.seed += 1;
    EXPECT_NE(config_hash("legendre", b), h);
    RunConfig c = a;
    c.prec.quad_points = 512;
    EXPECT_NE(config_hash("legendre", c), h);
    EXPECT_NE(config_hash("heat", a), h);
}

TEST(Suites, ReportSchema) {
    const SuiteReport r = run_suite("automorphy-cocycle", {});
    EXPECT_TRUE(r.passed());
    const auto j = to_json(r);
    EXPECT_EQ(j["suite"], "automorphy-cocycle");
    EXPECT_EQ(j["config_hash"], r.config_hash);
    EXPECT_TRUE(j["passed"].get<bool>());
    ASSERT_FALSE(j["checks"].empty());
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("name"));
        EXPECT_TRUE(c.contains("max_error"));
        EXPECT_TRUE(c.contains("tolerance"));
        EXPECT_TRUE(c.contains("passed"));
    }
    EXPECT_EQ(to_json(run_suite("automorphy-cocycle", {})).dump(), j.dump());
}

TEST(Suites, EmptyCheckFails) {
    SuiteReport r;
    r.checks.push_back({"x", 0.0, 1.0, false, false});
    EXPECT_FALSE(r.passed());
}

TEST(Eval, ModularFMatchesLibrary) {
    EvalArgs e;
    e.function = "F";
    e.k = 4;
    e.a = 1;
    e.b = 0;
    e.N = 4;
    e.tau = "2i";
    const auto j = evaluate(e, {});
    const Complex want = modular_F(4, 1, 0, 4, UpperHalfPoint(0.0, 2.0)).value;
    EXPECT_EQ(parse_complex(j["value"].get<std::string>()), want);
    EXPECT_EQ(j["function"], "F");
    EXPECT_EQ(j["route"], "lattice");
    EXPECT_EQ(j["weight"], 4);
}

TEST(Eval, ErrorsPropagate) {
    EvalArgs e;
    e.function = "nope";
    EXPECT_THROW(evaluate(e, {}), DomainError);
    e.function = "F";
    e.a = 0;
    e.b = 0;
    EXPECT_THROW(evaluate(e, {}), DomainError);
    e.function = "A_n";
    e.gamma = "1,1,0,1";
    EXPECT_THROW(evaluate(e, {}), DomainError);
    e.function = "theta";
    e.tau = "-1i";
    EXPECT_THROW(evaluate(e, {}), DomainError);
}

TEST(Table, CsvLayout) {
    TableArgs t;
    t.function = "F";
    const std::string s = make_table(t, {}, "9.9.9");
    std::istringstream in(s);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# ellpl 9.9.9 function=F config_hash=", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line, "tau_re,tau_im,value_re,value_im");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 5);
    EXPECT_EQ(make_table(t, {}, "9.9.9"), s);
}

TEST(Table, JsonLayout) {
    TableArgs t;
    t.function = "theta";
    t.format = "json";
    t.im_to = 2.0;
    const auto j = nlohmann::json::parse(make_table(t, {}, "1.0"));
    EXPECT_EQ(j["function"], "theta");
    EXPECT_EQ(j["rows"].size(), 2u);
    t.format = "xml";
    EXPECT_THROW(make_table(t, {}, "1.0"), DomainError);
}
