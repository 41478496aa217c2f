#include <doctest.h>

#include <grothmn/error.hpp>
#include <grothmn/render.hpp>

using namespace grothmn;

TEST_CASE("monomial and polynomial text")
{
    Monomial m(2);
    CHECK(monomial_text(m) == "1");
    m.x = {3, 0};
    m.a = 2;
    m.b = 1;
    CHECK(monomial_text(m) == "a^2*b*x1^3");
    auto p = Poly::x(2, 0) + Poly::x(2, 1) + Poly::beta(2) * Poly::x(2, 0) * Poly::x(2, 1);
    CHECK(poly_text(p) == "x1 + x2 + b*x1*x2");
    CHECK(poly_latex(p) == "x_{1} + x_{2} + \\beta x_{1} x_{2}");
    CHECK(poly_text(-p) == "-x1 - x2 - b*x1*x2");
    CHECK(poly_latex(Poly::constant(1, -2)) == "-2");
}

TEST_CASE("polynomial json")
{
    auto p = Poly::x(1, 0).with_cap(3) * Integer(-4);
    auto j = poly_json(p);
    CHECK(j.dump() == R"({"schema_version":1,"nvars":1,"cap":3,"terms":[{"x":[1],"a":0,"b":0,"c":"-4"}]})");
    CHECK(poly_json(Poly(2)).dump() == R"({"schema_version":1,"nvars":2,"cap":null,"terms":[]})");
}

TEST_CASE("expansion text and latex")
{
    auto c = expand_classical({2, 1}, 3, 5);
    CHECK(expansion_text(c) == "p3 * s(2,1) = s(5,1) - s(3,3) - s(2,2,2) + s(2,1,1,1,1)");

    auto r = expand_proposition_row({3, 2, 1}, 3, 3, 2);
    CHECK(expansion_text(r) == "A[(3,2,1)+delta+3*e2] = -A[(4,4,1)+delta] - b*A[(5,4,1)+delta] + b^2*A[(5,5,1)+delta]");

    auto s = expand_stable({1}, 1, 1);
    CHECK(expansion_latex(s) == "p_{1}(X^{1}) G^{\\beta}_{(1)}(X^{1}) = G^{\\beta}_{(2)}(X^{1})");

    auto z = expand_stable({}, 1, 2);
    CHECK(expansion_latex(z) ==
          "p_{1}(X^{2}) G^{\\beta}_{()}(X^{2}) = G^{\\beta}_{(1)}(X^{2}) - \\beta G^{\\beta}_{(1,1)}(X^{2})");

    auto k = expand_canonical({}, 1, 2);
    CHECK(expansion_text(k) == "p1^a * G() = G(1) - (a + b)*G(1,1)");
}

TEST_CASE("expansion json round trip")
{
    for (auto e : {expand_stable({3, 2, 1}, 3, 3), expand_classical({2, 1}, 3, 5), expand_canonical({2, 1}, 2, 2),
                   expand_proposition_row({3, 2, 1}, 3, 3, 2)}) {
        auto j = expansion_json(e);
        auto back = expansion_from_json(j);
        CHECK(back == e);
        CHECK(expansion_json(back).dump() == j.dump());
        CHECK(ordered_json::parse(j.dump(2)).dump() == j.dump());
    }
    auto j = expansion_json(expand_proposition_row({3, 2, 1}, 3, 3, 2));
    CHECK(j["terms"].size() == 3);
    CHECK(j["row"] == 2);
    CHECK(j["terms"][0]["nu"] == ordered_json::parse("[4,4,1]"));
    CHECK(j["terms"][1]["coeff"][0]["c"] == "-1");
    CHECK(j["terms"][1]["coeff"][0]["b"] == 1);
}

TEST_CASE("malformed expansion json")
{
    auto good = expansion_json(expand_stable({1}, 1, 1));
    auto bad = good;
    bad["schema_version"] = 2;
    CHECK_THROWS_AS(expansion_from_json(bad), invalid_input);
    bad = good;
    bad.erase("terms");
    CHECK_THROWS_AS(expansion_from_json(bad), invalid_input);
    bad = good;
    bad["terms"][0]["coeff"][0]["c"] = "one";
    CHECK_THROWS_AS(expansion_from_json(bad), invalid_input);
    bad = good;
    bad["lambda"] = ordered_json::parse("[1,2]");
    CHECK_THROWS_AS(expansion_from_json(bad), invalid_input);
}

TEST_CASE("output formats")
{
    CHECK(parse_output_format("json") == OutputFormat::json);
    CHECK(parse_output_format("latex") == OutputFormat::latex);
    CHECK(parse_output_format("text") == OutputFormat::text);
    CHECK_THROWS_AS(parse_output_format("yaml"), invalid_input);
}
