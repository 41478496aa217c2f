#include <grothmn/grothendieck.hpp>

#include <algorithm>

#include <grothmn/error.hpp>
#include <grothmn/tableaux.hpp>

namespace grothmn
{

namespace
{

std::size_t checked_vars(int n)
{
    if (n < 1) {
        throw invalid_input("number of variables must be at least 1");
    }
    return static_cast<std::size_t>(n);
}

void require_in_pn(const Partition &lambda, int n)
{
    if (!lambda.fits_in(n)) {
        throw invalid_input("partition " + lambda.str() + " is not in P[" + std::to_string(n) + "]");
    }
}

// Sums x^wt(T) alpha^a(T) beta^b(T) over a tableau family.
Poly tableau_generating_function(const Partition &lambda, int n, TableauFamily family, std::optional<unsigned> cap)
{
    const auto nv = checked_vars(n);
    Poly out(nv, cap);
    Monomial m(nv);
    std::optional<int> entry_cap;
    if (cap) {
        entry_cap = static_cast<int>(*cap);
    }
    for_each_tableau(lambda, n, family, entry_cap, [&](const HookValuedTableau &t) {
        std::fill(m.x.begin(), m.x.end(), 0U);
        m.a = 0;
        m.b = 0;
        for (const auto &row : t.rows()) {
            for (const auto &e : row) {
                ++m.x[static_cast<std::size_t>(e.head - 1)];
                for (int v : e.arm) {
                    ++m.x[static_cast<std::size_t>(v - 1)];
                }
                for (int v : e.leg) {
                    ++m.x[static_cast<std::size_t>(v - 1)];
                }
                m.a += static_cast<unsigned>(e.arm.size());
                m.b += static_cast<unsigned>(e.leg.size());
            }
        }
        out.add_term(m, 1);
    });
    return out;
}

} // namespace

Poly power_sum(int k, int n)
{
    const auto nv = checked_vars(n);
    if (k < 0) {
        throw invalid_input("power sum index must be non-negative");
    }
    if (k == 0) {
        return Poly::constant(nv, 1);
    }
    Poly out(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        Monomial m(nv);
        m.x[i] = static_cast<unsigned>(k);
        out.add_term(m, 1);
    }
    return out;
}

Poly power_sum_alpha(int k, int n, unsigned D)
{
    if (k < 1) {
        throw invalid_input("deformed power sum needs k >= 1");
    }
    return geometric_substitute(power_sum(k, n), D);
}

std::vector<int> staircase(int n)
{
    std::vector<int> delta(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        delta[static_cast<std::size_t>(i)] = n - 1 - i;
    }
    return delta;
}

Poly a_function(const std::vector<int> &gamma, int n)
{
    const auto nv = checked_vars(n);
    if (gamma.size() != nv) {
        throw invalid_input("exponent vector length " + std::to_string(gamma.size()) + " does not match n = " +
                            std::to_string(n));
    }
    for (int g : gamma) {
        if (g < 0) {
            throw invalid_input("exponents must be non-negative");
        }
    }
    PolyMatrix m(nv, std::vector<Poly>(nv, Poly(nv)));
    for (std::size_t i = 0; i < nv; ++i) {
        const Poly deform = Poly::constant(nv, 1) + Poly::beta(nv) * Poly::x(nv, i);
        for (std::size_t j = 0; j < nv; ++j) {
            Monomial xi(nv);
            xi.x[i] = static_cast<unsigned>(gamma[j]);
            m[i][j] = Poly::monomial(xi) * deform.pow(static_cast<unsigned>(j));
        }
    }
    return determinant(m);
}

Poly vandermonde(int n)
{
    const auto nv = checked_vars(n);
    Poly out = Poly::constant(nv, 1);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            out *= Poly::x(nv, i) - Poly::x(nv, j);
        }
    }
    return out;
}

Poly g_stable_tableaux(const Partition &lambda, int n)
{
    return tableau_generating_function(lambda, n, TableauFamily::svt, std::nullopt);
}

Poly g_stable_determinant(const Partition &lambda, int n)
{
    require_in_pn(lambda, n);
    auto gamma = lambda.padded(n);
    const auto delta = staircase(n);
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        gamma[i] += delta[i];
    }
    Poly q = a_function(gamma, n);
    const auto nv = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            q = divide_exact_linear(q, i, j);
        }
    }
    return q;
}

Poly schur(const Partition &lambda, int n)
{
    return tableau_generating_function(lambda, n, TableauFamily::ssyt, std::nullopt);
}

Poly g_canonical_tableaux(const Partition &lambda, int n, unsigned D)
{
    return tableau_generating_function(lambda, n, TableauFamily::hvt, D);
}

Poly g_canonical_substitution(const Partition &lambda, int n, unsigned D)
{
    return geometric_substitute(beta_substitute_sum(g_stable_determinant(lambda, n)), D);
}

Poly grothendieck(const GrothendieckSpec &spec)
{
    switch (spec.mode) {
    case GrothendieckMode::schur:
        return schur(spec.lambda, spec.nvars);
    case GrothendieckMode::stable_beta:
        return g_stable_tableaux(spec.lambda, spec.nvars);
    case GrothendieckMode::canonical_alpha_beta:
        if (!spec.cap || *spec.cap < static_cast<unsigned>(spec.lambda.size())) {
            throw invalid_input("canonical mode needs a cap of at least |lambda|");
        }
        return g_canonical_tableaux(spec.lambda, spec.nvars, *spec.cap);
    }
    throw invalid_input("unknown mode");
}

} // namespace grothmn
