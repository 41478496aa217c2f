#ifndef GROTHMN_POLY_HPP
#define GROTHMN_POLY_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace grothmn
{

using Integer = mpz_class;
using Rational = mpq_class;

// x_1^e_1 ... x_n^e_n * alpha^a * beta^b
struct Monomial {
    std::vector<unsigned> x;
    unsigned a = 0;
    unsigned b = 0;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : x(nvars, 0) {}
    Monomial(std::vector<unsigned> xexp, unsigned aexp, unsigned bexp) : x(std::move(xexp)), a(aexp), b(bexp) {}

    unsigned x_degree() const noexcept;
    bool has_x() const noexcept;

    Monomial &operator*=(const Monomial &other);
    friend Monomial operator*(Monomial lhs, const Monomial &rhs)
    {
        return lhs *= rhs;
    }
    friend bool operator==(const Monomial &, const Monomial &) = default;
};

// Canonical term order: total x-degree ascending, then (x, alpha, beta)
// exponents in reverse lex, so x1^2 precedes x1*x2 precedes x2^2 and
// a^2 precedes a*b precedes b^2.
struct MonomialOrder {
    bool operator()(const Monomial &l, const Monomial &r) const noexcept;
};

// Sparse polynomial in x_1..x_n, alpha, beta with integer coefficients.
//
// With a cap D set, the value is a power series truncated at total x-degree D:
// every stored monomial has x-degree <= D and products drop anything above.
// Alpha and beta degrees are never truncated.
class Poly
{
public:
    using Terms = std::map<Monomial, Integer, MonomialOrder>;

    explicit Poly(std::size_t nvars = 0, std::optional<unsigned> cap = std::nullopt);

    static Poly constant(std::size_t nvars, const Integer &c);
    static Poly monomial(const Monomial &m, const Integer &c = 1);
    // x_i, 0-based index.
    static Poly x(std::size_t nvars, std::size_t i);
    static Poly alpha(std::size_t nvars);
    static Poly beta(std::size_t nvars);

    std::size_t nvars() const noexcept
    {
        return nvars_;
    }
    const std::optional<unsigned> &cap() const noexcept
    {
        return cap_;
    }
    const Terms &terms() const noexcept
    {
        return terms_;
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    std::size_t term_count() const noexcept
    {
        return terms_.size();
    }
    // Coefficient of m, zero when absent.
    Integer coeff(const Monomial &m) const;
    // Highest total x-degree present; 0 for the zero polynomial.
    unsigned x_degree() const noexcept;
    bool has_x() const noexcept;

    // Adds c * m, respecting the cap.
    void add_term(const Monomial &m, const Integer &c);

    Poly &operator+=(const Poly &q);
    Poly &operator-=(const Poly &q);
    Poly &operator*=(const Poly &q);
    Poly &operator*=(const Integer &c);

    friend Poly operator+(Poly p, const Poly &q)
    {
        return p += q;
    }
    friend Poly operator-(Poly p, const Poly &q)
    {
        return p -= q;
    }
    friend Poly operator*(const Poly &p, const Poly &q);
    friend Poly operator*(Poly p, const Integer &c)
    {
        return p *= c;
    }
    friend Poly operator*(const Integer &c, Poly p)
    {
        return p *= c;
    }
    Poly operator-() const;

    Poly pow(unsigned e) const;

    // Same terms, new cap: drops monomials above D (or removes the cap).
    Poly with_cap(std::optional<unsigned> cap) const;
    // Terms of total x-degree exactly d.
    Poly homogeneous_part(unsigned d) const;
    // alpha := 0, beta := 0 respectively.
    Poly without_alpha() const;
    Poly without_beta() const;
    // Monomials that mention alpha at all.
    bool has_alpha() const noexcept;
    // Exchanges x_i and x_j (0-based).
    Poly swap_vars(std::size_t i, std::size_t j) const;

    // Equality of term mappings; caps are not compared.
    friend bool operator==(const Poly &p, const Poly &q)
    {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }

private:
    void check_compatible(const Poly &q, const char *op) const;
    static std::optional<unsigned> meet(const std::optional<unsigned> &a, const std::optional<unsigned> &b);

    std::size_t nvars_;
    std::optional<unsigned> cap_;
    Terms terms_;
};

// Replaces each x_i by x_i/(1 - alpha x_i) = sum_{m>=1} alpha^{m-1} x_i^m and
// truncates at total x-degree D.
Poly geometric_substitute(const Poly &p, unsigned D);

// Replaces beta by (alpha + beta). Throws invalid_input if p mentions alpha.
Poly beta_substitute_sum(const Poly &p);

using PolyMatrix = std::vector<std::vector<Poly>>;

// Laplace expansion along rows, memoizing minors by column subset.
Poly determinant(const PolyMatrix &m);

// Exact quotient p / (x_i - x_j), 0-based indices. Throws divisibility_error
// on a nonzero remainder.
Poly divide_exact_linear(const Poly &p, std::size_t i, std::size_t j);

Rational evaluate(const Poly &p, std::span<const Rational> xvals, const Rational &aval, const Rational &bval);

} // namespace grothmn

#endif
