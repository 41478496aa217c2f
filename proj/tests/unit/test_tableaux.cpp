#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include <grothmn/error.hpp>
#include <grothmn/grothendieck.hpp>
#include <grothmn/tableaux.hpp>

#include "oracles.hpp"

using namespace grothmn;

namespace
{

const char *const example = "1(12|23) 3(4|) 4(4|5)/4(|5) 5(56|6)";

// Independent validity check working on flattened value lists.
bool hook_ok(const HookEntry &e)
{
    std::vector<int> arm{e.head};
    arm.insert(arm.end(), e.arm.begin(), e.arm.end());
    std::vector<int> leg{e.head};
    leg.insert(leg.end(), e.leg.begin(), e.leg.end());
    return e.head >= 1 && std::is_sorted(arm.begin(), arm.end()) &&
           std::adjacent_find(leg.begin(), leg.end(), std::greater_equal<>()) == leg.end();
}

std::vector<int> values(const HookEntry &e)
{
    std::vector<int> v{e.head};
    v.insert(v.end(), e.arm.begin(), e.arm.end());
    v.insert(v.end(), e.leg.begin(), e.leg.end());
    return v;
}

bool tableau_ok(const std::vector<std::vector<HookEntry>> &rows)
{
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            if (!hook_ok(rows[i][j])) {
                return false;
            }
            auto here = values(rows[i][j]);
            if (j > 0) {
                for (int u : values(rows[i][j - 1])) {
                    for (int v : here) {
                        if (u > v) {
                            return false;
                        }
                    }
                }
            }
            if (i > 0) {
                for (int u : values(rows[i - 1][j])) {
                    for (int v : here) {
                        if (u >= v) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    return true;
}

// Every hook entry with values in 1..n and at most `budget` values.
std::vector<HookEntry> all_hooks(int n, int budget)
{
    std::vector<HookEntry> out;
    for (int h = 1; h <= n; ++h) {
        std::vector<int> arm;
        std::function<void(int)> arms = [&](int from) {
            // legs are subsets of h+1..n
            for (unsigned mask = 0; mask < (1U << static_cast<unsigned>(n - h)); ++mask) {
                std::vector<int> leg;
                for (int v = h + 1; v <= n; ++v) {
                    if (mask & (1U << static_cast<unsigned>(v - h - 1))) {
                        leg.push_back(v);
                    }
                }
                if (1 + static_cast<int>(arm.size() + leg.size()) <= budget) {
                    out.push_back({h, arm, leg});
                }
            }
            if (1 + static_cast<int>(arm.size()) >= budget) {
                return;
            }
            for (int v = from; v <= n; ++v) {
                arm.push_back(v);
                arms(v);
                arm.pop_back();
            }
        };
        arms(h);
    }
    return out;
}

// Counts fillings of lambda by brute force over all hook entries per box.
std::uint64_t brute_count(const Partition &lambda, int n, int cap, bool allow_arm, bool allow_leg)
{
    auto hooks = all_hooks(n, cap);
    std::vector<Cell> cells = skew(lambda, {}).cells();
    std::vector<std::vector<HookEntry>> rows;
    for (int i = 1; i <= lambda.length(); ++i) {
        rows.emplace_back(static_cast<std::size_t>(lambda.row(i)));
    }
    std::uint64_t count = 0;
    std::function<void(std::size_t, int)> rec = [&](std::size_t idx, int used) {
        if (idx == cells.size()) {
            count += tableau_ok(rows) ? 1 : 0;
            return;
        }
        const auto c = cells[idx];
        for (const auto &h : hooks) {
            if ((!allow_arm && !h.arm.empty()) || (!allow_leg && !h.leg.empty())) {
                continue;
            }
            if (used + h.entry_count() > cap) {
                continue;
            }
            rows[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)] = h;
            rec(idx + 1, used + h.entry_count());
        }
    };
    rec(0, 0);
    return count;
}

} // namespace

TEST_CASE("hook entries")
{
    CHECK(HookEntry{1, {1, 2}, {2, 3}}.valid());
    CHECK(HookEntry{1, {1, 2}, {2, 3}}.max() == 3);
    CHECK(HookEntry{1, {1, 2}, {2, 3}}.entry_count() == 5);
    CHECK_FALSE(HookEntry{2, {1}, {}}.valid());
    CHECK_FALSE(HookEntry{2, {}, {2}}.valid());
    CHECK_FALSE(HookEntry{1, {}, {3, 3}}.valid());
    CHECK_FALSE(HookEntry{0, {}, {}}.valid());
}

TEST_CASE("worked hook-valued tableau")
{
    auto t = parse_tableau(example);
    CHECK(t.shape() == Partition{3, 2});
    CHECK(is_valid(t));
    auto st = statistics(t, 6);
    CHECK(st.weight == std::vector<int>{2, 2, 2, 4, 4, 2});
    CHECK(st.arm_total == 6);
    CHECK(st.leg_total == 5);
    CHECK(st.total_entries == 16);
    CHECK(to_text(t) == example);
    CHECK(t.at({2, 2}) == HookEntry{5, {5, 6}, {6}});
    CHECK_THROWS_AS(t.at({2, 3}), invalid_input);
    CHECK_THROWS_AS(statistics(t, 5), invalid_input);
}

TEST_CASE("tableau text encoding")
{
    CHECK(to_text(parse_tableau("1")) == "1");
    CHECK(to_text(parse_tableau("")) == "");
    HookValuedTableau wide({{HookEntry{9, {10, 11}, {12}}}});
    CHECK(to_text(wide) == "9(10,11,|12,)");
    CHECK(parse_tableau(to_text(wide)) == wide);
    CHECK_THROWS_AS(parse_tableau("1(2"), invalid_input);
    CHECK_THROWS_AS(parse_tableau("x"), invalid_input);
    CHECK_THROWS_AS(parse_tableau("1/1 2"), invalid_input);

    // Row violation and column violation.
    CHECK_FALSE(is_valid(parse_tableau("2 1")));
    CHECK_FALSE(is_valid(parse_tableau("1(|2) 1")));
    CHECK_FALSE(is_valid(parse_tableau("1/1")));
    CHECK_FALSE(is_valid(parse_tableau("1(2|)/2")));
    CHECK(is_valid(parse_tableau("1(1|) 1(2|)/2")));
}

TEST_CASE("single box statistics")
{
    auto t = parse_tableau("1");
    auto st = statistics(t, 3);
    CHECK(st.weight == std::vector<int>{1, 0, 0});
    CHECK(st.arm_total == 0);
    CHECK(st.leg_total == 0);
}

TEST_CASE("semistandard enumeration")
{
    CHECK(enumerate_ssyt({2, 1}, 3).size() == 8);
    CHECK(enumerate_ssyt({1}, 4).size() == 4);
    CHECK(enumerate_ssyt({1, 1, 1}, 2).empty());
    CHECK(enumerate_ssyt({}, 2).size() == 1);
    for (const auto &t : enumerate_ssyt({3, 2}, 3)) {
        auto st = statistics(t, 3);
        CHECK(st.arm_total == 0);
        CHECK(st.leg_total == 0);
        CHECK(st.total_entries == 5);
    }
}

TEST_CASE("set-valued enumeration")
{
    auto one = enumerate_svt({1}, 2);
    REQUIRE(one.size() == 3);
    std::set<std::string> texts;
    for (const auto &t : one) {
        texts.insert(to_text(t));
    }
    CHECK(texts == std::set<std::string>{"1", "2", "1(|2)"});
    CHECK(enumerate_svt({1, 1}, 2).size() == 1);
    CHECK(enumerate_svt({1}, 1).size() == 1);
}

TEST_CASE("hook-valued enumeration")
{
    auto t = enumerate_hvt_capped({1}, 1, 3);
    std::set<std::string> texts;
    for (const auto &x : t) {
        texts.insert(to_text(x));
    }
    CHECK(texts == std::set<std::string>{"1", "1(1|)", "1(11|)"});
    CHECK(enumerate_hvt_capped({1}, 2, 2).size() == 6);
    CHECK(enumerate_hvt_capped({}, 3, 0).size() == 1);
    CHECK(enumerate_hvt_capped({2}, 2, 1).empty());
    CHECK_THROWS_AS(count_tableaux({1}, 2, TableauFamily::hvt, std::nullopt), invalid_input);
}

TEST_CASE("enumerators agree with brute force over hook fillings")
{
    const std::vector<Partition> shapes{{}, {1}, {2}, {1, 1}, {2, 1}, {3}, {2, 2}};
    for (const auto &lambda : shapes) {
        for (int n = 1; n <= 3; ++n) {
            for (int cap = lambda.size(); cap <= lambda.size() + 2; ++cap) {
                CAPTURE(lambda.str());
                CAPTURE(n);
                CAPTURE(cap);
                CHECK(count_tableaux(lambda, n, TableauFamily::ssyt, cap) == brute_count(lambda, n, cap, false, false));
                CHECK(count_tableaux(lambda, n, TableauFamily::svt, cap) == brute_count(lambda, n, cap, false, true));
                CHECK(count_tableaux(lambda, n, TableauFamily::hvt, cap) == brute_count(lambda, n, cap, true, true));
            }
        }
    }
}

TEST_CASE("families are nested and every output validates")
{
    for (const auto &lambda : partitions_in_box(3, 3, 4)) {
        for (int n = 1; n <= 3; ++n) {
            const int cap = lambda.size() + 2;
            std::set<std::string> ssyt, svt, hvt;
            for_each_tableau(lambda, n, TableauFamily::ssyt, cap, [&](const HookValuedTableau &t) {
                CHECK(is_valid(t));
                CHECK(tableau_ok(t.rows()));
                CHECK(t.shape() == lambda);
                ssyt.insert(to_text(t));
            });
            for_each_tableau(lambda, n, TableauFamily::svt, cap, [&](const HookValuedTableau &t) {
                CHECK(is_valid(t));
                CHECK(statistics(t, n).arm_total == 0);
                svt.insert(to_text(t));
            });
            for_each_tableau(lambda, n, TableauFamily::hvt, cap, [&](const HookValuedTableau &t) {
                CHECK(is_valid(t));
                CHECK(statistics(t, n).total_entries <= cap);
                CHECK(parse_tableau(to_text(t)) == t);
                hvt.insert(to_text(t));
            });
            CHECK(std::includes(svt.begin(), svt.end(), ssyt.begin(), ssyt.end()));
            CHECK(std::includes(hvt.begin(), hvt.end(), svt.begin(), svt.end()));
        }
    }
}

TEST_CASE("semistandard counts match the bialternant at x = 1")
{
    for (const auto &lambda : partitions_in_box(3, 3)) {
        for (int n = lambda.length(); n <= 3; ++n) {
            if (n == 0) {
                continue;
            }
            auto s = g_stable_determinant(lambda, n).without_beta();
            std::vector<Rational> ones(static_cast<std::size_t>(n), Rational(1));
            CHECK(evaluate(s, ones, 0, 0) == Rational(count_tableaux(lambda, n, TableauFamily::ssyt, std::nullopt)));
        }
    }
}

TEST_CASE("random fillings: validator agrees with the reference check")
{
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> val(1, 4);
    std::uniform_int_distribution<int> len(0, 2);
    int valid = 0;
    for (int t = 0; t < 3000; ++t) {
        std::vector<std::vector<HookEntry>> rows{std::vector<HookEntry>(2), std::vector<HookEntry>(1)};
        for (auto &row : rows) {
            for (auto &e : row) {
                e.head = val(rng);
                e.arm.resize(static_cast<std::size_t>(len(rng)));
                e.leg.resize(static_cast<std::size_t>(len(rng)));
                for (auto &v : e.arm) {
                    v = val(rng);
                }
                for (auto &v : e.leg) {
                    v = val(rng);
                }
            }
        }
        HookValuedTableau tab(rows);
        CHECK(is_valid(tab) == tableau_ok(rows));
        valid += tableau_ok(rows) ? 1 : 0;
    }
    CHECK(valid > 0);
}
