// grothmn: Murnaghan-Nakayama expansions for stable and canonical
// Grothendieck polynomials, with an exact-arithmetic verifier.
//
// Exit status: 0 success, 1 a check failed, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <grothmn/error.hpp>
#include <grothmn/grothendieck.hpp>
#include <grothmn/mnrule.hpp>
#include <grothmn/render.hpp>
#include <grothmn/tableaux.hpp>
#include <grothmn/verify.hpp>

namespace
{

using namespace grothmn;

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_usage = 2;

struct Global {
    std::string format = "text";
    std::string output;
};

struct ExpandArgs {
    std::string lambda;
    int k = 0;
    int n = 0;
    std::string mode = "stable";
    std::optional<int> row;
    bool show_vanishing = false;
};

struct PolyArgs {
    std::string lambda;
    int n = 0;
    std::string construction = "svt";
    std::optional<int> cap;
};

struct TableauxArgs {
    std::string lambda;
    int n = 0;
    std::string family = "ssyt";
    std::optional<int> cap;
    bool count_only = false;
};

struct VerifyArgs {
    std::string max_box = "3x3";
    SweepConfig cfg;
    std::vector<std::string> identities;
    std::optional<std::string> lambda;
    std::optional<std::string> gamma;
    std::optional<int> k;
    std::optional<int> r;
    std::optional<int> n;
    std::optional<int> j;
    std::optional<int> cap;
    bool self_test = false;
};

std::vector<int> parse_int_list(const std::string &text)
{
    std::vector<int> out;
    std::size_t pos = 0;
    if (text.empty()) {
        return out;
    }
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception &) {
            throw invalid_input("malformed integer list '" + text + "'");
        }
        if (used != token.size() || v < 0) {
            throw invalid_input("malformed integer list '" + text + "'");
        }
        out.push_back(v);
        if (comma == std::string::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::pair<int, int> parse_box(const std::string &text)
{
    auto x = text.find('x');
    if (x == std::string::npos) {
        throw invalid_input("box must look like ROWSxCOLS, got '" + text + "'");
    }
    auto rows = parse_int_list(text.substr(0, x));
    auto cols = parse_int_list(text.substr(x + 1));
    if (rows.size() != 1 || cols.size() != 1) {
        throw invalid_input("box must look like ROWSxCOLS, got '" + text + "'");
    }
    return {rows[0], cols[0]};
}

class Output
{
public:
    explicit Output(const std::string &path)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
            if (!*file_) {
                throw invalid_input("cannot open output file '" + path + "'");
            }
        }
    }
    std::ostream &stream()
    {
        return file_ ? *file_ : std::cout;
    }

private:
    std::unique_ptr<std::ofstream> file_;
};

int run_expand(const Global &g, const ExpandArgs &a)
{
    const auto lambda = Partition::parse(a.lambda);
    const auto fmt = parse_output_format(g.format);
    const auto mode = parse_expansion_mode(a.mode);
    Expansion e;
    if (a.row) {
        if (mode != ExpansionMode::stable) {
            throw invalid_input("--row applies to the stable mode only");
        }
        e = expand_proposition_row(lambda, a.k, a.n, *a.row);
    } else if (mode == ExpansionMode::classical) {
        e = expand_classical(lambda, a.k, a.n);
    } else if (mode == ExpansionMode::stable) {
        e = expand_stable(lambda, a.k, a.n);
    } else {
        e = expand_canonical(lambda, a.k, a.n);
    }
    Output out(g.output);
    auto &os = out.stream();
    switch (fmt) {
    case OutputFormat::json:
        os << expansion_json(e).dump(2) << '\n';
        break;
    case OutputFormat::latex:
        os << expansion_latex(e) << '\n';
        break;
    case OutputFormat::text:
        os << expansion_text(e) << '\n';
        if (a.show_vanishing) {
            for (const auto &nu : e.vanishing) {
                os << "vanishing " << nu.str() << '\n';
            }
        }
        break;
    }
    return exit_ok;
}

int run_poly(const Global &g, const PolyArgs &a)
{
    const auto lambda = Partition::parse(a.lambda);
    const auto fmt = parse_output_format(g.format);
    const bool series = a.construction == "hvt" || a.construction == "subst";
    if (series && !a.cap) {
        throw invalid_input("--cap is required for the " + a.construction + " construction");
    }
    Poly p;
    if (a.construction == "schur") {
        p = schur(lambda, a.n);
    } else if (a.construction == "svt") {
        p = g_stable_tableaux(lambda, a.n);
    } else if (a.construction == "det") {
        p = g_stable_determinant(lambda, a.n);
    } else if (a.construction == "hvt") {
        p = g_canonical_tableaux(lambda, a.n, static_cast<unsigned>(*a.cap));
    } else if (a.construction == "subst") {
        p = g_canonical_substitution(lambda, a.n, static_cast<unsigned>(*a.cap));
    } else {
        throw invalid_input("unknown construction '" + a.construction + "'");
    }
    if (a.cap && !series) {
        p = p.with_cap(static_cast<unsigned>(*a.cap));
    }
    Output out(g.output);
    auto &os = out.stream();
    switch (fmt) {
    case OutputFormat::json:
        os << poly_json(p).dump(2) << '\n';
        break;
    case OutputFormat::latex:
        os << poly_latex(p) << '\n';
        break;
    case OutputFormat::text:
        os << poly_text(p) << '\n';
        break;
    }
    return exit_ok;
}

int run_tableaux(const Global &g, const TableauxArgs &a)
{
    const auto lambda = Partition::parse(a.lambda);
    const auto fmt = parse_output_format(g.format);
    TableauFamily family;
    if (a.family == "ssyt") {
        family = TableauFamily::ssyt;
    } else if (a.family == "svt") {
        family = TableauFamily::svt;
    } else if (a.family == "hvt") {
        family = TableauFamily::hvt;
    } else {
        throw invalid_input("unknown tableau family '" + a.family + "'");
    }
    if (family == TableauFamily::hvt && !a.cap) {
        throw invalid_input("--cap is required for hook-valued tableaux");
    }
    if (a.n < 0) {
        throw invalid_input("--n must be non-negative");
    }
    Output out(g.output);
    auto &os = out.stream();
    if (a.count_only) {
        const auto count = count_tableaux(lambda, a.n, family, a.cap);
        if (fmt == OutputFormat::json) {
            ordered_json j;
            j["schema_version"] = schema_version;
            j["count"] = count;
            os << j.dump(2) << '\n';
        } else {
            os << count << '\n';
        }
        return exit_ok;
    }
    if (fmt == OutputFormat::json) {
        // Streamed by hand so large families are never materialised.
        os << "{\n  \"schema_version\": " << schema_version << ",\n  \"tableaux\": [";
        std::uint64_t count = 0;
        for_each_tableau(lambda, a.n, family, a.cap, [&](const HookValuedTableau &t) {
            os << (count++ ? ",\n    " : "\n    ") << ordered_json(to_text(t)).dump();
        });
        os << (count ? "\n  ]" : "]") << ",\n  \"count\": " << count << "\n}\n";
    } else {
        for_each_tableau(lambda, a.n, family, a.cap, [&](const HookValuedTableau &t) { os << to_text(t) << '\n'; });
    }
    return exit_ok;
}

SweepReport single_instance(const VerifyArgs &a)
{
    if (a.identities.size() != 1) {
        throw invalid_input("a single-instance check needs exactly one --identity");
    }
    const auto id = parse_identity(a.identities.front());
    auto need = [](const auto &opt, const char *flag) {
        if (!opt) {
            throw invalid_input(std::string("--") + flag + " is required for this check");
        }
        return *opt;
    };
    SweepReport rep;
    const int n = need(a.n, "n");
    if (id == Identity::lemma) {
        rep.results.push_back(check_lemma(parse_int_list(need(a.gamma, "gamma")), need(a.r, "r"), n));
    } else {
        const auto lambda = Partition::parse(need(a.lambda, "lambda"));
        switch (id) {
        case Identity::theorem_stable:
            rep.results.push_back(check_theorem_stable(lambda, need(a.k, "k"), n));
            break;
        case Identity::classical:
            rep.results.push_back(check_classical(lambda, need(a.k, "k"), n));
            break;
        case Identity::proposition:
            if (a.j) {
                rep.results.push_back(check_proposition(lambda, need(a.k, "k"), n, *a.j));
            } else {
                for (int j = 1; j <= n; ++j) {
                    rep.results.push_back(check_proposition(lambda, need(a.k, "k"), n, j));
                }
            }
            break;
        case Identity::canonical: {
            const int k = need(a.k, "k");
            rep.results.push_back(check_canonical(lambda, k, n, a.cap.value_or(lambda.size() + k + 3)));
            break;
        }
        case Identity::construction:
            rep.results.push_back(check_construction_equality(lambda, n));
            break;
        case Identity::remark_substitution:
            rep.results.push_back(check_remark_substitution(lambda, n, a.cap.value_or(lambda.size() + 3)));
            break;
        case Identity::reduction: {
            const int k = need(a.k, "k");
            rep.results.push_back(check_stable_reduces_to_classical(lambda, k, n));
            rep.results.push_back(check_canonical_reduces_to_stable(lambda, k, n));
            rep.results.push_back(check_schur_specialization(lambda, n, a.cap.value_or(lambda.size() + 3)));
            break;
        }
        case Identity::lemma:
            break;
        }
    }
    for (const auto &r : rep.results) {
        ++rep.summary.total;
        ++(r.passed ? rep.summary.passed : rep.summary.failed);
    }
    return rep;
}

int run_verify(const Global &g, VerifyArgs a)
{
    const auto fmt = parse_output_format(g.format);
    if (fmt == OutputFormat::latex) {
        throw invalid_input("verify reports are available as text or json");
    }
    auto [rows, cols] = parse_box(a.max_box);
    a.cfg.box_rows = rows;
    a.cfg.box_cols = cols;
    if (a.identities.empty()) {
        a.cfg.identities.insert(all_identities().begin(), all_identities().end());
    } else {
        for (const auto &name : a.identities) {
            a.cfg.identities.insert(parse_identity(name));
        }
    }

    Output out(g.output);
    auto &os = out.stream();
    auto emit = [&](const SweepReport &rep) {
        if (fmt == OutputFormat::json) {
            os << report_json(rep).dump(2) << '\n';
        } else {
            os << report_text(rep);
        }
    };

    if (a.self_test) {
        const auto st = self_test(a.cfg);
        emit(st.mutated);
        if (fmt == OutputFormat::text) {
            os << (st.detected ? "self-test: mutated coefficient rule detected\n"
                               : "self-test: mutated coefficient rule NOT detected\n");
        }
        return st.detected ? exit_ok : exit_check_failed;
    }

    const bool single = a.lambda || a.gamma;
    const auto rep = single ? single_instance(a) : sweep(a.cfg);
    emit(rep);
    return rep.summary.failed == 0 ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Murnaghan-Nakayama rules for stable and canonical Grothendieck polynomials"};
    app.require_subcommand(1);
    app.fallthrough();

    Global global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"json", "latex", "text"}));
    app.add_option("--output", global.output, "Write output to this file instead of stdout");

    ExpandArgs ex;
    auto *expand = app.add_subcommand("expand", "Expand p_k times a basis element");
    expand->add_option("--lambda", ex.lambda, "Partition, comma separated (empty string for the empty partition)")
        ->required();
    expand->add_option("--k", ex.k, "Power sum degree")->required();
    expand->add_option("--n", ex.n, "Number of variables")->required();
    expand->add_option("--mode", ex.mode, "classical, stable or canonical")
        ->check(CLI::IsMember({"classical", "stable", "canonical"}));
    expand->add_option("--row,--j", ex.row, "Restrict to nu whose skew shape ends in this row");
    expand->add_flag("--show-vanishing", ex.show_vanishing, "List admissible nu with a zero coefficient");

    PolyArgs po;
    auto *poly = app.add_subcommand("poly", "Print a Schur or Grothendieck polynomial");
    poly->add_option("--lambda", po.lambda, "Partition")->required();
    poly->add_option("--n", po.n, "Number of variables")->required();
    poly->add_option("--construction", po.construction, "schur, svt, det, hvt or subst")
        ->check(CLI::IsMember({"schur", "svt", "det", "hvt", "subst"}));
    poly->add_option("--cap", po.cap, "Truncate at this total x-degree");

    TableauxArgs ta;
    auto *tab = app.add_subcommand("tableaux", "List or count tableaux");
    tab->add_option("--lambda", ta.lambda, "Shape")->required();
    tab->add_option("--n", ta.n, "Largest entry")->required();
    tab->add_option("--family", ta.family, "ssyt, svt or hvt")->check(CLI::IsMember({"ssyt", "svt", "hvt"}));
    tab->add_option("--cap", ta.cap, "Largest total number of entries");
    tab->add_flag("--count-only", ta.count_only, "Print only the number of tableaux");

    VerifyArgs ve;
    ve.cfg = SweepConfig{};
    auto *ver = app.add_subcommand("verify", "Check the identities by exact polynomial arithmetic");
    ver->add_option("--max-box", ve.max_box, "Box bounding lambda, ROWSxCOLS");
    ver->add_option("--max-size", ve.cfg.max_size, "Largest |lambda| in the main grid");
    ver->add_option("--k-max", ve.cfg.k_max, "Largest k");
    ver->add_option("--n-max", ve.cfg.n_max, "Largest number of variables");
    ver->add_option("--gamma-max", ve.cfg.gamma_max, "Largest exponent in the lemma grid");
    ver->add_option("--r-max", ve.cfg.r_max, "Largest r in the lemma grid");
    ver->add_option("--canonical-max-size", ve.cfg.canonical_max_size, "Largest |lambda| for canonical checks");
    ver->add_option("--canonical-k-max", ve.cfg.canonical_k_max, "Largest k for canonical checks");
    ver->add_option("--canonical-n-max", ve.cfg.canonical_n_max, "Largest n for canonical checks");
    ver->add_option("--cap-slack", ve.cfg.cap_slack, "Canonical cap is |lambda| + k + slack");
    ver->add_option("--threads", ve.cfg.threads, "Worker threads (default GROTHMN_THREADS or all cores)");
    ver->add_option("--identity", ve.identities,
                    "theorem, classical, lemma, proposition, canonical, construction, remark, reduction");
    ver->add_option("--lambda", ve.lambda, "Single instance: partition");
    ver->add_option("--gamma", ve.gamma, "Single instance: exponent vector for the lemma");
    ver->add_option("--k", ve.k, "Single instance: k");
    ver->add_option("--r", ve.r, "Single instance: r");
    ver->add_option("--n", ve.n, "Single instance: number of variables");
    ver->add_option("--j", ve.j, "Single instance: row for the proposition");
    ver->add_option("--cap", ve.cap, "Single instance: degree cap");
    ver->add_flag("--self-test", ve.self_test, "Run with a deliberately broken coefficient rule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (expand->parsed()) {
            return run_expand(global, ex);
        }
        if (poly->parsed()) {
            return run_poly(global, po);
        }
        if (tab->parsed()) {
            return run_tableaux(global, ta);
        }
        if (ver->parsed()) {
            return run_verify(global, ve);
        }
    } catch (const invalid_input &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
