#include <grothmn/poly.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include <grothmn/error.hpp>

namespace grothmn
{

unsigned Monomial::x_degree() const noexcept
{
    unsigned d = 0;
    for (auto e : x) {
        d += e;
    }
    return d;
}

bool Monomial::has_x() const noexcept
{
    return std::any_of(x.begin(), x.end(), [](unsigned e) { return e != 0; });
}

Monomial &Monomial::operator*=(const Monomial &other)
{
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] += other.x[i];
    }
    a += other.a;
    b += other.b;
    return *this;
}

bool MonomialOrder::operator()(const Monomial &l, const Monomial &r) const noexcept
{
    const auto dl = l.x_degree();
    const auto dr = r.x_degree();
    if (dl != dr) {
        return dl < dr;
    }
    if (l.x != r.x) {
        return std::lexicographical_compare(r.x.begin(), r.x.end(), l.x.begin(), l.x.end());
    }
    if (l.a != r.a) {
        return l.a > r.a;
    }
    return l.b > r.b;
}

Poly::Poly(std::size_t nvars, std::optional<unsigned> cap) : nvars_(nvars), cap_(cap) {}

Poly Poly::constant(std::size_t nvars, const Integer &c)
{
    Poly p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Poly Poly::monomial(const Monomial &m, const Integer &c)
{
    Poly p(m.x.size());
    p.add_term(m, c);
    return p;
}

Poly Poly::x(std::size_t nvars, std::size_t i)
{
    if (i >= nvars) {
        throw invalid_input("variable index out of range");
    }
    Monomial m(nvars);
    m.x[i] = 1;
    return monomial(m);
}

Poly Poly::alpha(std::size_t nvars)
{
    Monomial m(nvars);
    m.a = 1;
    return monomial(m);
}

Poly Poly::beta(std::size_t nvars)
{
    Monomial m(nvars);
    m.b = 1;
    return monomial(m);
}

Integer Poly::coeff(const Monomial &m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

unsigned Poly::x_degree() const noexcept
{
    // Terms are sorted by x-degree first.
    return terms_.empty() ? 0 : terms_.rbegin()->first.x_degree();
}

bool Poly::has_x() const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.has_x(); });
}

void Poly::add_term(const Monomial &m, const Integer &c)
{
    if (m.x.size() != nvars_) {
        throw invalid_input("monomial has " + std::to_string(m.x.size()) + " variables, expected " +
                            std::to_string(nvars_));
    }
    if (c == 0 || (cap_ && m.x_degree() > *cap_)) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void Poly::check_compatible(const Poly &q, const char *op) const
{
    if (nvars_ != q.nvars_) {
        throw invalid_input(std::string(op) + ": variable count mismatch (" + std::to_string(nvars_) + " vs " +
                            std::to_string(q.nvars_) + ")");
    }
}

std::optional<unsigned> Poly::meet(const std::optional<unsigned> &a, const std::optional<unsigned> &b)
{
    if (a && b) {
        return std::min(*a, *b);
    }
    return a ? a : b;
}

Poly &Poly::operator+=(const Poly &q)
{
    check_compatible(q, "add");
    auto cap = meet(cap_, q.cap_);
    if (cap != cap_) {
        *this = with_cap(cap);
    }
    for (const auto &[m, c] : q.terms_) {
        add_term(m, c);
    }
    return *this;
}

Poly &Poly::operator-=(const Poly &q)
{
    check_compatible(q, "subtract");
    auto cap = meet(cap_, q.cap_);
    if (cap != cap_) {
        *this = with_cap(cap);
    }
    for (const auto &[m, c] : q.terms_) {
        add_term(m, -c);
    }
    return *this;
}

Poly operator*(const Poly &p, const Poly &q)
{
    p.check_compatible(q, "multiply");
    Poly out(p.nvars_, Poly::meet(p.cap_, q.cap_));
    for (const auto &[mp, cp] : p.terms_) {
        const auto dp = mp.x_degree();
        for (const auto &[mq, cq] : q.terms_) {
            if (out.cap_ && dp + mq.x_degree() > *out.cap_) {
                continue;
            }
            out.add_term(mp * mq, cp * cq);
        }
    }
    return out;
}

Poly &Poly::operator*=(const Poly &q)
{
    return *this = *this * q;
}

Poly &Poly::operator*=(const Integer &c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

Poly Poly::operator-() const
{
    Poly out(*this);
    for (auto &t : out.terms_) {
        t.second = -t.second;
    }
    return out;
}

Poly Poly::pow(unsigned e) const
{
    Poly result = constant(nvars_, 1).with_cap(cap_);
    Poly base = *this;
    while (e) {
        if (e & 1U) {
            result *= base;
        }
        e >>= 1U;
        if (e) {
            base *= base;
        }
    }
    return result;
}

Poly Poly::with_cap(std::optional<unsigned> cap) const
{
    Poly out(nvars_, cap);
    for (const auto &[m, c] : terms_) {
        if (!cap || m.x_degree() <= *cap) {
            out.terms_.emplace_hint(out.terms_.end(), m, c);
        }
    }
    return out;
}

Poly Poly::homogeneous_part(unsigned d) const
{
    Poly out(nvars_, cap_);
    for (const auto &[m, c] : terms_) {
        if (m.x_degree() == d) {
            out.terms_.emplace_hint(out.terms_.end(), m, c);
        }
    }
    return out;
}

Poly Poly::without_alpha() const
{
    Poly out(nvars_, cap_);
    for (const auto &[m, c] : terms_) {
        if (m.a == 0) {
            out.terms_.emplace_hint(out.terms_.end(), m, c);
        }
    }
    return out;
}

Poly Poly::without_beta() const
{
    Poly out(nvars_, cap_);
    for (const auto &[m, c] : terms_) {
        if (m.b == 0) {
            out.terms_.emplace_hint(out.terms_.end(), m, c);
        }
    }
    return out;
}

bool Poly::has_alpha() const noexcept
{
    return std::any_of(terms_.begin(), terms_.end(), [](const auto &t) { return t.first.a != 0; });
}

Poly Poly::swap_vars(std::size_t i, std::size_t j) const
{
    if (i >= nvars_ || j >= nvars_) {
        throw invalid_input("variable index out of range");
    }
    Poly out(nvars_, cap_);
    for (const auto &[m, c] : terms_) {
        Monomial s = m;
        std::swap(s.x[i], s.x[j]);
        out.add_term(s, c);
    }
    return out;
}

Poly geometric_substitute(const Poly &p, unsigned D)
{
    Poly out(p.nvars(), p.cap() ? std::min(*p.cap(), D) : D);
    const std::size_t n = p.nvars();
    for (const auto &[m, c] : p.terms()) {
        const unsigned deg = m.x_degree();
        if (deg > D) {
            continue;
        }
        // (x/(1-ax))^e = x^e * sum_{t>=0} C(e+t-1, t) a^t x^t for e >= 1.
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.x[i]) {
                support.push_back(i);
            }
        }
        Monomial cur = m;
        Integer coef = c;
        std::function<void(std::size_t, unsigned)> spread = [&](std::size_t pos, unsigned budget) {
            if (pos == support.size()) {
                out.add_term(cur, coef);
                return;
            }
            const auto i = support[pos];
            const unsigned e = m.x[i];
            const Integer saved = coef;
            for (unsigned t = 0; t <= budget; ++t) {
                Integer binom;
                mpz_bin_uiui(binom.get_mpz_t(), e + t - 1, t);
                coef = saved * binom;
                cur.x[i] = e + t;
                cur.a += t;
                spread(pos + 1, budget - t);
                cur.a -= t;
            }
            cur.x[i] = e;
            coef = saved;
        };
        spread(0, D - deg);
    }
    return out;
}

Poly beta_substitute_sum(const Poly &p)
{
    if (p.has_alpha()) {
        throw invalid_input("beta_substitute_sum: input already depends on alpha");
    }
    Poly out(p.nvars(), p.cap());
    for (const auto &[m, c] : p.terms()) {
        for (unsigned t = 0; t <= m.b; ++t) {
            Integer binom;
            mpz_bin_uiui(binom.get_mpz_t(), m.b, t);
            Monomial s = m;
            s.a = t;
            s.b = m.b - t;
            out.add_term(s, c * binom);
        }
    }
    return out;
}

Poly determinant(const PolyMatrix &m)
{
    const std::size_t n = m.size();
    for (const auto &row : m) {
        if (row.size() != n) {
            throw invalid_input("determinant of a non-square matrix");
        }
    }
    if (n == 0) {
        return Poly::constant(0, 1);
    }
    if (n > 24) {
        throw invalid_input("determinant: matrix too large for minor expansion");
    }
    const std::size_t nvars = m[0][0].nvars();

    // minor(mask) = det of rows [n - popcount(mask), n) restricted to the
    // columns in mask.
    std::unordered_map<std::uint32_t, Poly> memo;
    std::function<Poly(std::uint32_t)> minor = [&](std::uint32_t mask) -> Poly {
        if (mask == 0) {
            return Poly::constant(nvars, 1);
        }
        if (auto it = memo.find(mask); it != memo.end()) {
            return it->second;
        }
        const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
        Poly acc(nvars);
        int sign = 1;
        for (std::size_t col = 0; col < n; ++col) {
            const std::uint32_t bit = std::uint32_t{1} << col;
            if (!(mask & bit)) {
                continue;
            }
            const Poly &entry = m[row][col];
            if (!entry.is_zero()) {
                Poly sub = minor(mask & ~bit);
                if (!sub.is_zero()) {
                    Poly term = entry * sub;
                    if (sign > 0) {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    return minor(full);
}

Poly divide_exact_linear(const Poly &p, std::size_t i, std::size_t j)
{
    if (i >= p.nvars() || j >= p.nvars() || i == j) {
        throw invalid_input("divide_exact_linear: need two distinct variable indices");
    }
    // View p as sum_d c_d x_i^d with c_d free of x_i.
    std::map<unsigned, Poly> by_degree;
    for (const auto &[m, c] : p.terms()) {
        Monomial rest = m;
        rest.x[i] = 0;
        auto [it, _] = by_degree.try_emplace(m.x[i], p.nvars());
        it->second.add_term(rest, c);
    }
    Poly quotient(p.nvars(), p.cap());
    if (by_degree.empty()) {
        return quotient;
    }
    const Poly xj = Poly::x(p.nvars(), j);
    // Synthetic division by (t - x_j): q_{d-1} = c_d + x_j q_d.
    Poly carry(p.nvars());
    for (unsigned d = by_degree.rbegin()->first; d >= 1; --d) {
        if (auto it = by_degree.find(d); it != by_degree.end()) {
            carry += it->second;
        }
        for (const auto &[m, c] : carry.terms()) {
            Monomial s = m;
            s.x[i] = d - 1;
            quotient.add_term(s, c);
        }
        carry = carry * xj;
    }
    if (auto it = by_degree.find(0); it != by_degree.end()) {
        carry += it->second;
    }
    if (!carry.is_zero()) {
        throw divisibility_error("polynomial is not divisible by (x" + std::to_string(i + 1) + " - x" +
                                 std::to_string(j + 1) + ")");
    }
    return quotient;
}

namespace
{

Rational power(const Rational &base, unsigned e)
{
    Rational r = 1;
    for (unsigned k = 0; k < e; ++k) {
        r *= base;
    }
    return r;
}

} // namespace

Rational evaluate(const Poly &p, std::span<const Rational> xvals, const Rational &aval, const Rational &bval)
{
    if (xvals.size() != p.nvars()) {
        throw invalid_input("evaluate: expected " + std::to_string(p.nvars()) + " x values");
    }
    Rational total = 0;
    for (const auto &[m, c] : p.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < m.x.size(); ++i) {
            term *= power(xvals[i], m.x[i]);
        }
        term *= power(aval, m.a);
        term *= power(bval, m.b);
        total += term;
    }
    return total;
}

} // namespace grothmn
