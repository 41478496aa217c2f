#include <grothmn/render.hpp>

#include <vector>

#include <grothmn/error.hpp>

namespace grothmn
{

OutputFormat parse_output_format(const std::string &text)
{
    if (text == "json") {
        return OutputFormat::json;
    }
    if (text == "latex") {
        return OutputFormat::latex;
    }
    if (text == "text") {
        return OutputFormat::text;
    }
    throw invalid_input("unknown output format '" + text + "'");
}

namespace
{

std::string power_text(const std::string &base, unsigned e)
{
    return e == 1 ? base : base + "^" + std::to_string(e);
}

std::string power_latex(const std::string &base, unsigned e)
{
    return e == 1 ? base : base + "^{" + std::to_string(e) + "}";
}

std::vector<std::string> factor_texts(const Monomial &m)
{
    std::vector<std::string> f;
    if (m.a) {
        f.push_back(power_text("a", m.a));
    }
    if (m.b) {
        f.push_back(power_text("b", m.b));
    }
    for (std::size_t i = 0; i < m.x.size(); ++i) {
        if (m.x[i]) {
            f.push_back(power_text("x" + std::to_string(i + 1), m.x[i]));
        }
    }
    return f;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep)
{
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

// Unsigned rendering of |c| * m.
std::string term_text(const Monomial &m, const Integer &abs_c)
{
    auto f = factor_texts(m);
    if (f.empty()) {
        return abs_c.get_str();
    }
    if (abs_c != 1) {
        f.insert(f.begin(), abs_c.get_str());
    }
    return join(f, "*");
}

std::string term_latex(const Monomial &m, const Integer &abs_c)
{
    std::string body;
    if (m.a) {
        body += power_latex("\\alpha", m.a);
    }
    if (m.b) {
        body += power_latex("\\beta", m.b);
    }
    for (std::size_t i = 0; i < m.x.size(); ++i) {
        if (m.x[i]) {
            if (!body.empty()) {
                body += ' ';
            }
            body += power_latex("x_{" + std::to_string(i + 1) + "}", m.x[i]);
        }
    }
    if (body.empty()) {
        return abs_c.get_str();
    }
    return abs_c == 1 ? body : abs_c.get_str() + body;
}

template <typename TermFn>
std::string signed_sum(const Poly &p, TermFn term)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto &[m, c] : p.terms()) {
        const bool neg = c < 0;
        const Integer mag = abs(c);
        if (first) {
            out += neg ? "-" : "";
        } else {
            out += neg ? " - " : " + ";
        }
        out += term(m, mag);
        first = false;
    }
    return out;
}

bool all_negative(const Poly &p)
{
    for (const auto &t : p.terms()) {
        if (t.second > 0) {
            return false;
        }
    }
    return true;
}

// A coefficient times a basis element, with its sign split off so the caller
// can join terms with " + " / " - ". Single-term coefficients are written
// inline ("b^2*G(5,5,1)"); longer ones are parenthesised.
struct SignedTerm {
    bool negative = false;
    std::string body;
};

template <typename TermFn>
SignedTerm coefficient_times(const Poly &coeff, const std::string &basis, const std::string &mult, TermFn term)
{
    SignedTerm st;
    if (coeff.term_count() == 1) {
        const auto &[m, c] = *coeff.terms().begin();
        st.negative = c < 0;
        const Integer mag = abs(c);
        if (!m.has_x() && m.a == 0 && m.b == 0 && mag == 1) {
            st.body = basis;
        } else {
            st.body = term(m, mag) + mult + basis;
        }
        return st;
    }
    st.negative = all_negative(coeff);
    const Poly shown = st.negative ? -coeff : coeff;
    st.body = "(" + signed_sum(shown, term) + ")" + mult + basis;
    return st;
}

std::string join_signed(const std::vector<SignedTerm> &terms)
{
    if (terms.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            out += terms[i].negative ? "-" : "";
        } else {
            out += terms[i].negative ? " - " : " + ";
        }
        out += terms[i].body;
    }
    return out;
}

std::string latex_vars(int n)
{
    return "(X^{" + std::to_string(n) + "})";
}

} // namespace

std::string monomial_text(const Monomial &m)
{
    auto f = factor_texts(m);
    return f.empty() ? "1" : join(f, "*");
}

std::string poly_text(const Poly &p)
{
    return signed_sum(p, term_text);
}

std::string poly_latex(const Poly &p)
{
    return signed_sum(p, term_latex);
}

ordered_json partition_json(const Partition &p)
{
    return ordered_json(p.parts());
}

ordered_json poly_json(const Poly &p)
{
    ordered_json j;
    j["schema_version"] = schema_version;
    j["nvars"] = p.nvars();
    j["cap"] = p.cap() ? ordered_json(*p.cap()) : ordered_json(nullptr);
    auto terms = ordered_json::array();
    for (const auto &[m, c] : p.terms()) {
        ordered_json t;
        t["x"] = m.x;
        t["a"] = m.a;
        t["b"] = m.b;
        t["c"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

std::string expansion_text(const Expansion &e)
{
    std::string lhs;
    std::string basis;
    if (e.row) {
        lhs = "A[" + e.lambda.str() + "+delta+" + std::to_string(e.k) + "*e" + std::to_string(*e.row) + "]";
    } else {
        switch (e.mode) {
        case ExpansionMode::classical:
            basis = "s";
            lhs = "p" + std::to_string(e.k);
            break;
        case ExpansionMode::stable:
            basis = "G";
            lhs = "p" + std::to_string(e.k);
            break;
        case ExpansionMode::canonical:
            basis = "G";
            lhs = "p" + std::to_string(e.k) + "^a";
            break;
        }
        lhs += " * " + basis + e.lambda.str();
    }
    std::vector<SignedTerm> terms;
    for (const auto &[nu, coeff] : e.terms) {
        const std::string b = e.row ? "A[" + nu.str() + "+delta]" : basis + nu.str();
        terms.push_back(coefficient_times(coeff, b, "*", term_text));
    }
    return lhs + " = " + join_signed(terms);
}

std::string expansion_latex(const Expansion &e)
{
    const std::string vars = latex_vars(e.nvars);
    auto basis_of = [&](const Partition &p) {
        if (e.row) {
            return "A^{\\beta}_{" + p.str() + "+\\delta^{" + std::to_string(e.nvars) + "}}" + vars;
        }
        switch (e.mode) {
        case ExpansionMode::classical:
            return "s_{" + p.str() + "}" + vars;
        case ExpansionMode::stable:
            return "G^{\\beta}_{" + p.str() + "}" + vars;
        case ExpansionMode::canonical:
            return "G^{(\\alpha,\\beta)}_{" + p.str() + "}" + vars;
        }
        return std::string{};
    };
    std::string lhs;
    if (e.row) {
        lhs = "A^{\\beta}_{" + e.lambda.str() + "+\\delta^{" + std::to_string(e.nvars) + "}+" + std::to_string(e.k) +
              "\\epsilon_{" + std::to_string(*e.row) + "}}" + vars;
    } else if (e.mode == ExpansionMode::canonical) {
        lhs = "p^{\\alpha}_{" + std::to_string(e.k) + "}" + vars + " " + basis_of(e.lambda);
    } else {
        lhs = "p_{" + std::to_string(e.k) + "}" + vars + " " + basis_of(e.lambda);
    }
    std::vector<SignedTerm> terms;
    for (const auto &[nu, coeff] : e.terms) {
        terms.push_back(coefficient_times(coeff, basis_of(nu), " ", term_latex));
    }
    return lhs + " = " + join_signed(terms);
}

ordered_json expansion_json(const Expansion &e)
{
    ordered_json j;
    j["schema_version"] = schema_version;
    j["lambda"] = partition_json(e.lambda);
    j["k"] = e.k;
    j["n"] = e.nvars;
    j["mode"] = to_string(e.mode);
    j["row"] = e.row ? ordered_json(*e.row) : ordered_json(nullptr);
    auto terms = ordered_json::array();
    for (const auto &[nu, coeff] : e.terms) {
        ordered_json t;
        t["nu"] = partition_json(nu);
        auto cs = ordered_json::array();
        for (const auto &[m, c] : coeff.terms()) {
            cs.push_back(ordered_json{{"a", m.a}, {"b", m.b}, {"c", c.get_str()}});
        }
        t["coeff"] = std::move(cs);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    auto vanishing = ordered_json::array();
    for (const auto &nu : e.vanishing) {
        vanishing.push_back(partition_json(nu));
    }
    j["vanishing"] = std::move(vanishing);
    return j;
}

Expansion expansion_from_json(const ordered_json &j)
{
    try {
        if (j.at("schema_version").get<int>() != schema_version) {
            throw invalid_input("unsupported schema_version");
        }
        Expansion e;
        e.lambda = Partition(j.at("lambda").get<std::vector<int>>());
        e.k = j.at("k").get<int>();
        e.nvars = j.at("n").get<int>();
        e.mode = parse_expansion_mode(j.at("mode").get<std::string>());
        if (!j.at("row").is_null()) {
            e.row = j.at("row").get<int>();
        }
        const auto nv = static_cast<std::size_t>(e.nvars);
        for (const auto &t : j.at("terms")) {
            Poly coeff(nv);
            for (const auto &c : t.at("coeff")) {
                Monomial m(nv);
                m.a = c.at("a").get<unsigned>();
                m.b = c.at("b").get<unsigned>();
                coeff.add_term(m, Integer(c.at("c").get<std::string>()));
            }
            e.terms.emplace(Partition(t.at("nu").get<std::vector<int>>()), std::move(coeff));
        }
        if (j.contains("vanishing")) {
            for (const auto &nu : j.at("vanishing")) {
                e.vanishing.emplace_back(nu.get<std::vector<int>>());
            }
        }
        return e;
    } catch (const nlohmann::json::exception &ex) {
        throw invalid_input(std::string("malformed expansion JSON: ") + ex.what());
    } catch (const std::invalid_argument &ex) {
        // mpz_class rejects malformed integer strings this way.
        throw invalid_input(std::string("malformed expansion JSON: ") + ex.what());
    }
}

} // namespace grothmn
