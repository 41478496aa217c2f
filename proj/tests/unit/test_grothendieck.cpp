#include <doctest.h>

#include <random>

#include <grothmn/error.hpp>
#include <grothmn/grothendieck.hpp>
#include <grothmn/render.hpp>

#include "oracles.hpp"

using namespace grothmn;

TEST_CASE("power sums")
{
    CHECK(power_sum(0, 3) == Poly::constant(3, 1));
    CHECK(poly_text(power_sum(3, 2)) == "x1^3 + x2^3");
    CHECK(poly_text(power_sum(1, 1)) == "x1");
    CHECK(poly_text(power_sum_alpha(1, 1, 3)) == "x1 + a*x1^2 + a^2*x1^3");
    CHECK(poly_text(power_sum_alpha(2, 1, 4)) == "x1^2 + 2*a*x1^3 + 3*a^2*x1^4");
    CHECK_THROWS_AS(power_sum(-1, 2), invalid_input);
    CHECK_THROWS_AS(power_sum_alpha(0, 2, 3), invalid_input);
}

TEST_CASE("staircase and vandermonde")
{
    CHECK(staircase(3) == std::vector<int>{2, 1, 0});
    CHECK(staircase(1) == std::vector<int>{0});
    auto v = vandermonde(3);
    auto x = [](std::size_t i) { return Poly::x(3, i); };
    CHECK(v == (x(0) - x(1)) * (x(0) - x(2)) * (x(1) - x(2)));
}

TEST_CASE("deformed alternants")
{
    auto a10 = a_function({1, 0}, 2);
    CHECK(poly_text(a10) == "x1 - x2");
    std::vector<Rational> pt{2, 3};
    // Scalar determinant of [[2, 1 + 2], [3, 1 + 3]] at beta = 1.
    CHECK(evaluate(a10, pt, 0, 1) == oracle::determinant({{2, 3}, {3, 4}}));
    CHECK(a10.without_beta() == vandermonde(2));

    CHECK(poly_text(a_function({2, 0}, 2)) == "x1^2 - x2^2 + b*x1^2*x2 - b*x1*x2^2");
    CHECK(poly_text(a_function({0, 2}, 2)) == "-x1^2 + x2^2 - b*x1^3 + b*x2^3");
    // Columns (1 + b x_i)^{j-1}: a Vandermonde determinant in 1 + b x_i.
    CHECK(a_function({0, 0, 0}, 3) == -(Poly::beta(3).pow(3) * vandermonde(3)));
    CHECK_THROWS_AS(a_function({1}, 2), invalid_input);
}

TEST_CASE("alternants agree with numeric determinants")
{
    std::mt19937 rng(8);
    std::uniform_int_distribution<int> part(0, 4);
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + t % 3;
        std::vector<int> gamma(static_cast<std::size_t>(n));
        for (auto &g : gamma) {
            g = part(rng);
        }
        auto a = a_function(gamma, n);
        auto xs = oracle::random_point(rng, static_cast<std::size_t>(n));
        auto b = oracle::random_point(rng, 1)[0];
        std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                Rational v = 1;
                for (int e = 0; e < gamma[static_cast<std::size_t>(j)]; ++e) {
                    v *= xs[static_cast<std::size_t>(i)];
                }
                for (int e = 0; e < j; ++e) {
                    v *= 1 + b * xs[static_cast<std::size_t>(i)];
                }
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            }
        }
        CHECK(evaluate(a, xs, 0, b) == oracle::determinant(m));
    }
}

TEST_CASE("stable Grothendieck by tableaux and by bialternant")
{
    CHECK(poly_text(g_stable_tableaux({1}, 2)) == "x1 + x2 + b*x1*x2");
    CHECK(poly_text(g_stable_determinant({1}, 2)) == "x1 + x2 + b*x1*x2");
    CHECK(g_stable_tableaux({}, 2) == Poly::constant(2, 1));
    CHECK(g_stable_determinant({}, 2) == Poly::constant(2, 1));
    CHECK(g_stable_determinant({2, 1}, 2) == g_stable_tableaux({2, 1}, 2));
    CHECK(poly_text(g_stable_determinant({2, 1}, 2)) == "x1^2*x2 + x1*x2^2 + b*x1^2*x2^2");
    CHECK(g_stable_tableaux({1, 1, 1}, 2).is_zero());
    CHECK_THROWS_AS(g_stable_determinant({1, 1, 1}, 2), invalid_input);

    for (const auto &lambda : partitions_in_box(3, 3)) {
        for (int n = std::max(1, lambda.length()); n <= 3; ++n) {
            CAPTURE(lambda.str());
            CAPTURE(n);
            auto g = g_stable_determinant(lambda, n);
            CHECK(g == g_stable_tableaux(lambda, n));
            // Symmetric in the variables.
            for (int i = 0; i + 1 < n; ++i) {
                CHECK(g.swap_vars(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) == g);
            }
            // Lowest degree part is the Schur polynomial.
            CHECK(g.homogeneous_part(static_cast<unsigned>(lambda.size())).without_beta() == schur(lambda, n));
        }
    }
}

TEST_CASE("Schur polynomials")
{
    CHECK(poly_text(schur({1}, 3)) == "x1 + x2 + x3");
    std::vector<Rational> ones{1, 1, 1};
    CHECK(evaluate(schur({2, 1}, 3), ones, 0, 0) == 8);
    CHECK(schur({1, 1, 1}, 2).is_zero());
}

TEST_CASE("canonical Grothendieck")
{
    CHECK(poly_text(g_canonical_tableaux({1}, 1, 3)) == "x1 + a*x1^2 + a^2*x1^3");
    CHECK(g_canonical_tableaux({1}, 1, 3) == power_sum_alpha(1, 1, 3));
    CHECK(poly_text(g_canonical_tableaux({1}, 2, 2)) == "x1 + x2 + a*x1^2 + a*x1*x2 + b*x1*x2 + a*x2^2");
    CHECK(g_canonical_tableaux({}, 2, 3) == Poly::constant(2, 1).with_cap(3));
    CHECK(g_canonical_substitution({}, 2, 3) == Poly::constant(2, 1).with_cap(3));
    CHECK(g_canonical_substitution({1}, 2, 4) == g_canonical_tableaux({1}, 2, 4));
    // alpha = 0 gives back the truncated stable polynomial.
    CHECK(g_canonical_substitution({2, 1}, 2, 5).without_alpha() == g_stable_determinant({2, 1}, 2).with_cap(5));

    for (const auto &lambda : partitions_in_box(2, 2, 3)) {
        for (int n = std::max(1, lambda.length()); n <= 2; ++n) {
            const unsigned D = static_cast<unsigned>(lambda.size()) + 3;
            CAPTURE(lambda.str());
            CHECK(g_canonical_tableaux(lambda, n, D) == g_canonical_substitution(lambda, n, D));
        }
    }
}

TEST_CASE("dispatch")
{
    GrothendieckSpec spec;
    spec.lambda = {2};
    spec.nvars = 2;
    CHECK(grothendieck(spec) == g_stable_tableaux({2}, 2));
    spec.mode = GrothendieckMode::schur;
    CHECK(grothendieck(spec) == schur({2}, 2));
    spec.mode = GrothendieckMode::canonical_alpha_beta;
    CHECK_THROWS_AS(grothendieck(spec), invalid_input);
    spec.cap = 4;
    CHECK(grothendieck(spec) == g_canonical_tableaux({2}, 2, 4));
}
