#include <grothmn/mnrule.hpp>

#include <grothmn/error.hpp>

namespace grothmn
{

namespace
{

void check_k(int k)
{
    if (k < 1) {
        throw invalid_input("k must be at least 1");
    }
}

Expansion make_expansion(const Partition &lambda, int k, int n, ExpansionMode mode)
{
    Expansion e;
    e.lambda = lambda;
    e.k = k;
    e.nvars = n;
    e.mode = mode;
    return e;
}

void add_term(Expansion &e, const Partition &nu, Poly coeff)
{
    if (coeff.is_zero()) {
        e.vanishing.push_back(nu);
    } else {
        e.terms.emplace(nu, std::move(coeff));
    }
}

} // namespace

Poly stable_coefficient(const SkewShape &s, int k, int nvars, CoefficientRule rule)
{
    check_k(k);
    const auto st = shape_stats(s);
    if (s.empty() || !st.connected || st.cols_occupied > k || max_nw_ribbon_size(s) < k) {
        throw invalid_input("skew shape " + s.str() + " is not admissible for k = " + std::to_string(k));
    }
    const auto nv = static_cast<std::size_t>(nvars);
    const int gap = k - st.cols_occupied;
    if (gap > st.rows_occupied - 1) {
        return Poly(nv);
    }
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(st.rows_occupied - 1), static_cast<unsigned long>(gap));
    const auto extra = static_cast<unsigned>(s.size() - k);
    Monomial m(nv);
    m.b = extra;
    // (-beta)^extra * (-1)^gap
    int sign_exp = static_cast<int>(extra);
    if (rule == CoefficientRule::exact) {
        sign_exp += gap;
    }
    if (sign_exp % 2) {
        binom = -binom;
    }
    return Poly::monomial(m, binom);
}

Expansion expand_classical(const Partition &lambda, int k, int n)
{
    check_k(k);
    auto e = make_expansion(lambda, k, n, ExpansionMode::classical);
    const auto nv = static_cast<std::size_t>(n);
    for (const auto &nu : enumerate_ribbon_outer(lambda, k, n)) {
        const int h = height(SkewShape(nu, lambda));
        add_term(e, nu, Poly::constant(nv, h % 2 ? -1 : 1));
    }
    return e;
}

Expansion expand_stable(const Partition &lambda, int k, int n, CoefficientRule rule)
{
    check_k(k);
    auto e = make_expansion(lambda, k, n, ExpansionMode::stable);
    for (const auto &nu : enumerate_mn_outer(lambda, k, n)) {
        add_term(e, nu, stable_coefficient(SkewShape(nu, lambda), k, n, rule));
    }
    return e;
}

Expansion expand_proposition_row(const Partition &lambda, int k, int n, int j, CoefficientRule rule)
{
    check_k(k);
    auto e = make_expansion(lambda, k, n, ExpansionMode::stable);
    e.row = j;
    for (const auto &nu : enumerate_mn_outer_row(lambda, k, n, j)) {
        add_term(e, nu, stable_coefficient(SkewShape(nu, lambda), k, n, rule));
    }
    return e;
}

Expansion expand_canonical(const Partition &lambda, int k, int n)
{
    check_k(k);
    auto e = make_expansion(lambda, k, n, ExpansionMode::canonical);
    for (const auto &nu : enumerate_mn_outer(lambda, k, n)) {
        add_term(e, nu, beta_substitute_sum(stable_coefficient(SkewShape(nu, lambda), k, n)));
    }
    return e;
}

Poly expansion_sum(const Expansion &e, const std::function<Poly(const Partition &)> &basis)
{
    Poly total(static_cast<std::size_t>(e.nvars));
    bool first = true;
    for (const auto &[nu, coeff] : e.terms) {
        Poly term = coeff * basis(nu);
        if (first) {
            total = std::move(term);
            first = false;
        } else {
            total += term;
        }
    }
    return total;
}

std::string to_string(ExpansionMode mode)
{
    switch (mode) {
    case ExpansionMode::classical:
        return "classical";
    case ExpansionMode::stable:
        return "stable";
    case ExpansionMode::canonical:
        return "canonical";
    }
    return "unknown";
}

ExpansionMode parse_expansion_mode(const std::string &text)
{
    if (text == "classical") {
        return ExpansionMode::classical;
    }
    if (text == "stable") {
        return ExpansionMode::stable;
    }
    if (text == "canonical") {
        return ExpansionMode::canonical;
    }
    throw invalid_input("unknown expansion mode '" + text + "'");
}

} // namespace grothmn
