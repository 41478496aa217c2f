#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <grothmn/error.hpp>
#include <grothmn/grothendieck.hpp>
#include <grothmn/mnrule.hpp>
#include <grothmn/render.hpp>
#include <grothmn/shapes.hpp>
#include <grothmn/tableaux.hpp>
#include <grothmn/verify.hpp>

namespace py = pybind11;
using namespace grothmn;

namespace
{

py::int_ to_py(const Integer &z)
{
    return py::int_(py::module_::import("builtins").attr("int")(z.get_str()));
}

py::dict poly_dict(const Poly &p)
{
    py::dict out;
    for (const auto &[m, c] : p.terms()) {
        py::tuple x(m.x.size());
        for (std::size_t i = 0; i < m.x.size(); ++i) {
            x[i] = m.x[i];
        }
        out[py::make_tuple(x, m.a, m.b)] = to_py(c);
    }
    return out;
}

py::tuple part_tuple(const Partition &p)
{
    return py::cast(p.parts()).cast<py::tuple>();
}

Expansion run_expand(const std::vector<int> &lambda, int k, int n, const std::string &mode, std::optional<int> row)
{
    const Partition lam(lambda);
    const auto m = parse_expansion_mode(mode);
    if (row) {
        if (m != ExpansionMode::stable) {
            throw invalid_input("row applies to the stable mode only");
        }
        return expand_proposition_row(lam, k, n, *row);
    }
    switch (m) {
    case ExpansionMode::classical:
        return expand_classical(lam, k, n);
    case ExpansionMode::stable:
        return expand_stable(lam, k, n);
    case ExpansionMode::canonical:
        return expand_canonical(lam, k, n);
    }
    throw invalid_input("unknown mode");
}

Poly run_poly(const std::vector<int> &lambda, int n, const std::string &construction, std::optional<unsigned> cap)
{
    const Partition lam(lambda);
    if (construction == "schur") {
        return schur(lam, n);
    }
    if (construction == "svt") {
        return g_stable_tableaux(lam, n);
    }
    if (construction == "det") {
        return g_stable_determinant(lam, n);
    }
    if (construction == "hvt" || construction == "subst") {
        if (!cap) {
            throw invalid_input("cap is required for the " + construction + " construction");
        }
        return construction == "hvt" ? g_canonical_tableaux(lam, n, *cap) : g_canonical_substitution(lam, n, *cap);
    }
    throw invalid_input("unknown construction '" + construction + "'");
}

TableauFamily parse_family(const std::string &family)
{
    if (family == "ssyt") {
        return TableauFamily::ssyt;
    }
    if (family == "svt") {
        return TableauFamily::svt;
    }
    if (family == "hvt") {
        return TableauFamily::hvt;
    }
    throw invalid_input("unknown tableau family '" + family + "'");
}

py::dict result_dict(const CheckResult &r)
{
    py::dict d;
    d["name"] = r.name;
    d["passed"] = r.passed;
    d["text"] = check_text(r);
    if (r.witness) {
        d["witness"] = py::make_tuple(r.witness->where, r.witness->lhs, r.witness->rhs);
    } else {
        d["witness"] = py::none();
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Murnaghan-Nakayama rules for stable and canonical Grothendieck polynomials";

    py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<divisibility_error>(m, "DivisibilityError", PyExc_ArithmeticError);

    m.def(
        "expand",
        [](const std::vector<int> &lambda, int k, int n, const std::string &mode, std::optional<int> row) {
            const auto e = run_expand(lambda, k, n, mode, row);
            py::dict out;
            for (const auto &[nu, coeff] : e.terms) {
                py::dict c;
                for (const auto &[mono, z] : coeff.terms()) {
                    c[py::make_tuple(mono.a, mono.b)] = to_py(z);
                }
                out[part_tuple(nu)] = c;
            }
            return out;
        },
        py::arg("lam"), py::arg("k"), py::arg("n"), py::arg("mode") = "stable", py::arg("row") = py::none(),
        "Coefficients {nu: {(alpha_exp, beta_exp): int}} of p_k times the lambda basis element.");

    m.def(
        "expand_render",
        [](const std::vector<int> &lambda, int k, int n, const std::string &mode, std::optional<int> row,
           const std::string &format) {
            const auto e = run_expand(lambda, k, n, mode, row);
            switch (parse_output_format(format)) {
            case OutputFormat::json:
                return expansion_json(e).dump(2);
            case OutputFormat::latex:
                return expansion_latex(e);
            case OutputFormat::text:
                return expansion_text(e);
            }
            return std::string{};
        },
        py::arg("lam"), py::arg("k"), py::arg("n"), py::arg("mode") = "stable", py::arg("row") = py::none(),
        py::arg("format") = "text");

    m.def(
        "poly",
        [](const std::vector<int> &lambda, int n, const std::string &construction, std::optional<unsigned> cap) {
            return poly_dict(run_poly(lambda, n, construction, cap));
        },
        py::arg("lam"), py::arg("n"), py::arg("construction") = "svt", py::arg("cap") = py::none(),
        "Terms {(x_exponents, alpha_exp, beta_exp): int}.");

    m.def(
        "poly_text",
        [](const std::vector<int> &lambda, int n, const std::string &construction, std::optional<unsigned> cap) {
            return poly_text(run_poly(lambda, n, construction, cap));
        },
        py::arg("lam"), py::arg("n"), py::arg("construction") = "svt", py::arg("cap") = py::none());

    m.def(
        "count_tableaux",
        [](const std::vector<int> &lambda, int n, const std::string &family, std::optional<int> cap) {
            return count_tableaux(Partition(lambda), n, parse_family(family), cap);
        },
        py::arg("lam"), py::arg("n"), py::arg("family") = "ssyt", py::arg("cap") = py::none());

    m.def(
        "tableaux",
        [](const std::vector<int> &lambda, int n, const std::string &family, std::optional<int> cap) {
            std::vector<std::string> out;
            for_each_tableau(Partition(lambda), n, parse_family(family), cap,
                             [&](const HookValuedTableau &t) { out.push_back(to_text(t)); });
            return out;
        },
        py::arg("lam"), py::arg("n"), py::arg("family") = "ssyt", py::arg("cap") = py::none());

    m.def(
        "tableau_statistics",
        [](const std::string &text, int n) {
            const auto t = parse_tableau(text);
            if (!is_valid(t)) {
                throw invalid_input("not a hook-valued tableau: " + text);
            }
            const auto st = statistics(t, n);
            py::dict d;
            d["weight"] = st.weight;
            d["arm_total"] = st.arm_total;
            d["leg_total"] = st.leg_total;
            d["total_entries"] = st.total_entries;
            return d;
        },
        py::arg("text"), py::arg("n"));

    m.def(
        "shape_stats",
        [](const std::vector<int> &outer, const std::vector<int> &inner) {
            const auto st = shape_stats(skew(Partition(outer), Partition(inner)));
            py::dict d;
            d["size"] = st.size;
            d["rows_occupied"] = st.rows_occupied;
            d["cols_occupied"] = st.cols_occupied;
            d["connected"] = st.connected;
            return d;
        },
        py::arg("outer"), py::arg("inner"));

    m.def(
        "max_nw_ribbon_size",
        [](const std::vector<int> &outer, const std::vector<int> &inner) {
            return max_nw_ribbon_size(skew(Partition(outer), Partition(inner)));
        },
        py::arg("outer"), py::arg("inner"));

    m.def(
        "enumerate_mn_outer",
        [](const std::vector<int> &lambda, int k, int n, std::optional<int> row) {
            const auto nus = row ? enumerate_mn_outer_row(Partition(lambda), k, n, *row)
                                 : enumerate_mn_outer(Partition(lambda), k, n);
            py::list out;
            for (const auto &nu : nus) {
                out.append(part_tuple(nu));
            }
            return out;
        },
        py::arg("lam"), py::arg("k"), py::arg("n"), py::arg("row") = py::none());

    m.def(
        "check_theorem_stable",
        [](const std::vector<int> &lambda, int k, int n) { return result_dict(check_theorem_stable(Partition(lambda), k, n)); },
        py::arg("lam"), py::arg("k"), py::arg("n"));

    m.def(
        "check_lemma",
        [](const std::vector<int> &gamma, int r, int n) { return result_dict(check_lemma(gamma, r, n)); },
        py::arg("gamma"), py::arg("r"), py::arg("n"));

    m.def(
        "verify",
        [](std::optional<std::vector<std::string>> identities, int max_size, int k_max, int n_max, unsigned threads,
           bool mutated) {
            auto cfg = SweepConfig::desk_default();
            cfg.max_size = max_size;
            cfg.k_max = k_max;
            cfg.n_max = n_max;
            cfg.threads = threads;
            if (identities) {
                cfg.identities.clear();
                for (const auto &name : *identities) {
                    cfg.identities.insert(parse_identity(name));
                }
            }
            SweepReport rep;
            bool detected = false;
            {
                py::gil_scoped_release release;
                if (mutated) {
                    auto st = self_test(cfg);
                    rep = std::move(st.mutated);
                    detected = st.detected;
                } else {
                    rep = sweep(cfg);
                }
            }
            py::dict d;
            d["total"] = rep.summary.total;
            d["passed"] = rep.summary.passed;
            d["failed"] = rep.summary.failed;
            py::list failures;
            for (const auto &r : rep.results) {
                if (!r.passed) {
                    failures.append(result_dict(r));
                }
            }
            d["failures"] = failures;
            if (mutated) {
                d["detected"] = detected;
            }
            return d;
        },
        py::arg("identities") = py::none(), py::arg("max_size") = 5, py::arg("k_max") = 4, py::arg("n_max") = 3,
        py::arg("threads") = 0, py::arg("self_test") = false,
        "Run the verification sweep and return a summary with any failures.");
}
