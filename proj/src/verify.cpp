#include <grothmn/verify.hpp>

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include <grothmn/error.hpp>
#include <grothmn/grothendieck.hpp>

namespace grothmn
{

std::string to_string(Identity id)
{
    switch (id) {
    case Identity::theorem_stable:
        return "theorem";
    case Identity::classical:
        return "classical";
    case Identity::lemma:
        return "lemma";
    case Identity::proposition:
        return "proposition";
    case Identity::canonical:
        return "canonical";
    case Identity::construction:
        return "construction";
    case Identity::remark_substitution:
        return "remark";
    case Identity::reduction:
        return "reduction";
    }
    return "unknown";
}

const std::vector<Identity> &all_identities()
{
    static const std::vector<Identity> ids{Identity::theorem_stable, Identity::classical,    Identity::lemma,
                                           Identity::proposition,    Identity::canonical,    Identity::construction,
                                           Identity::remark_substitution, Identity::reduction};
    return ids;
}

Identity parse_identity(const std::string &text)
{
    for (auto id : all_identities()) {
        if (to_string(id) == text) {
            return id;
        }
    }
    throw invalid_input("unknown identity '" + text + "'");
}

CheckResult compare_polys(std::string name, CheckParams params, const Poly &lhs, const Poly &rhs,
                          std::optional<unsigned> up_to)
{
    CheckResult res{std::move(name), std::move(params), true, std::nullopt};
    const Poly diff = lhs - rhs;
    for (const auto &[m, c] : diff.terms()) {
        if (up_to && m.x_degree() > *up_to) {
            // Terms are ordered by x-degree, nothing further is in range.
            break;
        }
        res.passed = false;
        res.witness = Witness{monomial_text(m), lhs.coeff(m).get_str(), rhs.coeff(m).get_str()};
        break;
    }
    return res;
}

namespace
{

CheckParams lkn(const Partition &lambda, int k, int n)
{
    CheckParams p;
    p.lambda = lambda;
    p.k = k;
    p.n = n;
    return p;
}

std::vector<int> plus(std::vector<int> a, const std::vector<int> &b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

// Term-by-term comparison of two expansions' coefficient maps.
CheckResult compare_terms(std::string name, CheckParams params, const std::map<Partition, Poly, GradedLex> &lhs,
                          const std::map<Partition, Poly, GradedLex> &rhs)
{
    CheckResult res{std::move(name), std::move(params), true, std::nullopt};
    std::set<Partition, GradedLex> keys;
    for (const auto &t : lhs) {
        keys.insert(t.first);
    }
    for (const auto &t : rhs) {
        keys.insert(t.first);
    }
    for (const auto &nu : keys) {
        auto l = lhs.find(nu);
        auto r = rhs.find(nu);
        const bool same = l != lhs.end() && r != rhs.end() && l->second == r->second;
        if (!same) {
            res.passed = false;
            res.witness = Witness{"nu=" + nu.str(), l == lhs.end() ? "0" : poly_text(l->second),
                                  r == rhs.end() ? "0" : poly_text(r->second)};
            break;
        }
    }
    return res;
}

std::map<Partition, Poly, GradedLex> specialize(const std::map<Partition, Poly, GradedLex> &terms,
                                                Poly (Poly::*drop)() const)
{
    std::map<Partition, Poly, GradedLex> out;
    for (const auto &[nu, c] : terms) {
        Poly s = (c.*drop)();
        if (!s.is_zero()) {
            out.emplace(nu, std::move(s));
        }
    }
    return out;
}

} // namespace

CheckResult check_theorem_stable(const Partition &lambda, int k, int n, CoefficientRule rule)
{
    const Poly lhs = power_sum(k, n) * g_stable_tableaux(lambda, n);
    const Poly rhs =
        expansion_sum(expand_stable(lambda, k, n, rule), [n](const Partition &nu) { return g_stable_tableaux(nu, n); });
    return compare_polys("theorem", lkn(lambda, k, n), lhs, rhs);
}

CheckResult check_classical(const Partition &lambda, int k, int n)
{
    const Poly lhs = power_sum(k, n) * schur(lambda, n);
    const Poly rhs =
        expansion_sum(expand_classical(lambda, k, n), [n](const Partition &nu) { return schur(nu, n); });
    return compare_polys("classical", lkn(lambda, k, n), lhs, rhs);
}

CheckResult check_lemma(const std::vector<int> &gamma, int r, int n)
{
    CheckParams p;
    p.gamma = gamma;
    p.r = r;
    p.n = n;
    const Poly lhs = power_sum(r, n) * a_function(gamma, n);
    Poly rhs(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < gamma.size(); ++j) {
        auto shifted = gamma;
        shifted[j] += r;
        rhs += a_function(shifted, n);
    }
    return compare_polys("lemma", std::move(p), lhs, rhs);
}

CheckResult check_proposition(const Partition &lambda, int k, int n, int j)
{
    auto p = lkn(lambda, k, n);
    p.j = j;
    const auto delta = staircase(n);
    auto gamma = plus(lambda.padded(n), delta);
    gamma[static_cast<std::size_t>(j - 1)] += k;
    const Poly lhs = a_function(gamma, n);
    const Poly rhs = expansion_sum(expand_proposition_row(lambda, k, n, j), [&](const Partition &nu) {
        return a_function(plus(nu.padded(n), delta), n);
    });
    return compare_polys("proposition", std::move(p), lhs, rhs);
}

CheckResult check_canonical(const Partition &lambda, int k, int n, int cap)
{
    auto p = lkn(lambda, k, n);
    p.cap = cap;
    if (cap < lambda.size() + k) {
        throw invalid_input("canonical check needs cap >= |lambda| + k");
    }
    const auto D = static_cast<unsigned>(cap);
    const Poly lhs = power_sum_alpha(k, n, D) * g_canonical_tableaux(lambda, n, D);
    const Poly rhs = expansion_sum(expand_canonical(lambda, k, n),
                                   [&](const Partition &nu) { return g_canonical_tableaux(nu, n, D); });
    return compare_polys("canonical", std::move(p), lhs, rhs, D - static_cast<unsigned>(k));
}

CheckResult check_construction_equality(const Partition &lambda, int n)
{
    CheckParams p;
    p.lambda = lambda;
    p.n = n;
    return compare_polys("construction", std::move(p), g_stable_tableaux(lambda, n), g_stable_determinant(lambda, n));
}

CheckResult check_remark_substitution(const Partition &lambda, int n, int cap)
{
    CheckParams p;
    p.lambda = lambda;
    p.n = n;
    p.cap = cap;
    const auto D = static_cast<unsigned>(cap);
    return compare_polys("remark", std::move(p), g_canonical_tableaux(lambda, n, D),
                         g_canonical_substitution(lambda, n, D));
}

CheckResult check_stable_reduces_to_classical(const Partition &lambda, int k, int n)
{
    const auto stable = specialize(expand_stable(lambda, k, n).terms, &Poly::without_beta);
    return compare_terms("reduction_classical", lkn(lambda, k, n), stable, expand_classical(lambda, k, n).terms);
}

CheckResult check_canonical_reduces_to_stable(const Partition &lambda, int k, int n)
{
    const auto canonical = specialize(expand_canonical(lambda, k, n).terms, &Poly::without_alpha);
    return compare_terms("reduction_canonical", lkn(lambda, k, n), canonical, expand_stable(lambda, k, n).terms);
}

CheckResult check_schur_specialization(const Partition &lambda, int n, int cap)
{
    CheckParams p;
    p.lambda = lambda;
    p.n = n;
    p.cap = cap;
    const Poly s = schur(lambda, n);
    const Poly stable = g_stable_tableaux(lambda, n);
    auto res = compare_polys("reduction_schur", p, stable.without_beta(), s);
    if (!res.passed) {
        return res;
    }
    res = compare_polys("reduction_schur", p, stable.homogeneous_part(static_cast<unsigned>(lambda.size())), s);
    if (!res.passed) {
        return res;
    }
    const Poly canonical = g_canonical_tableaux(lambda, n, static_cast<unsigned>(cap));
    return compare_polys("reduction_schur", p, canonical.without_alpha().without_beta(), s);
}

void SweepConfig::validate() const
{
    const int bounds[] = {box_rows, box_cols, max_size, k_max, n_max, gamma_max, r_max, canonical_max_size,
                          canonical_k_max, canonical_n_max};
    for (int b : bounds) {
        if (b < 1) {
            throw invalid_input("sweep bounds must be positive");
        }
    }
    if (cap_slack < 0) {
        throw invalid_input("cap slack must be non-negative");
    }
}

SweepConfig SweepConfig::desk_default()
{
    SweepConfig cfg;
    cfg.identities.insert(all_identities().begin(), all_identities().end());
    return cfg;
}

unsigned worker_count(unsigned requested)
{
    if (requested > 0) {
        return requested;
    }
    if (const char *env = std::getenv("GROTHMN_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace
{

using Task = std::function<CheckResult()>;

std::vector<Task> build_tasks(const SweepConfig &cfg, CoefficientRule rule)
{
    std::vector<Task> tasks;
    auto wants = [&](Identity id) { return cfg.identities.count(id) > 0; };
    const auto main_grid = partitions_in_box(cfg.box_rows, cfg.box_cols, cfg.max_size);

    for (int n = 1; n <= cfg.n_max; ++n) {
        for (const auto &lambda : main_grid) {
            if (!lambda.fits_in(n)) {
                continue;
            }
            for (int k = 1; k <= cfg.k_max; ++k) {
                if (wants(Identity::theorem_stable)) {
                    tasks.emplace_back([=] { return check_theorem_stable(lambda, k, n, rule); });
                }
                if (wants(Identity::classical)) {
                    tasks.emplace_back([=] { return check_classical(lambda, k, n); });
                }
                if (wants(Identity::proposition)) {
                    for (int j = 1; j <= n; ++j) {
                        tasks.emplace_back([=] { return check_proposition(lambda, k, n, j); });
                    }
                }
                if (wants(Identity::reduction)) {
                    tasks.emplace_back([=] { return check_stable_reduces_to_classical(lambda, k, n); });
                    tasks.emplace_back([=] { return check_canonical_reduces_to_stable(lambda, k, n); });
                }
            }
            if (wants(Identity::construction)) {
                tasks.emplace_back([=] { return check_construction_equality(lambda, n); });
            }
            if (wants(Identity::reduction)) {
                const int cap = lambda.size() + cfg.cap_slack;
                tasks.emplace_back([=] { return check_schur_specialization(lambda, n, cap); });
            }
        }
    }

    if (wants(Identity::lemma)) {
        for (int n = 1; n <= cfg.n_max; ++n) {
            std::vector<int> gamma(static_cast<std::size_t>(n), 0);
            std::function<void(std::size_t)> rec = [&](std::size_t pos) {
                if (pos == gamma.size()) {
                    for (int r = 1; r <= cfg.r_max; ++r) {
                        tasks.emplace_back([gamma, r, n] { return check_lemma(gamma, r, n); });
                    }
                    return;
                }
                for (int v = 0; v <= cfg.gamma_max; ++v) {
                    gamma[pos] = v;
                    rec(pos + 1);
                }
            };
            rec(0);
        }
    }

    if (wants(Identity::canonical) || wants(Identity::remark_substitution)) {
        const auto small_grid = partitions_in_box(cfg.box_rows, cfg.box_cols, cfg.canonical_max_size);
        for (int n = 1; n <= cfg.canonical_n_max; ++n) {
            for (const auto &lambda : small_grid) {
                if (!lambda.fits_in(n)) {
                    continue;
                }
                for (int k = 1; k <= cfg.canonical_k_max; ++k) {
                    const int cap = lambda.size() + k + cfg.cap_slack;
                    if (wants(Identity::canonical)) {
                        tasks.emplace_back([=] { return check_canonical(lambda, k, n, cap); });
                    }
                    if (wants(Identity::remark_substitution)) {
                        tasks.emplace_back([=] { return check_remark_substitution(lambda, n, cap); });
                    }
                }
            }
        }
    }
    return tasks;
}

SweepReport run_tasks(const std::vector<Task> &tasks, unsigned threads)
{
    SweepReport report;
    report.results.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                report.results[i] = tasks[i]();
            } catch (const std::exception &ex) {
                report.results[i] = CheckResult{"error", {}, false, Witness{"exception", ex.what(), ""}};
            }
        }
    };
    const unsigned count = std::min<unsigned>(worker_count(threads), static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (const auto &r : report.results) {
        ++report.summary.total;
        ++(r.passed ? report.summary.passed : report.summary.failed);
    }
    return report;
}

} // namespace

SweepReport sweep(const SweepConfig &cfg)
{
    cfg.validate();
    return run_tasks(build_tasks(cfg, CoefficientRule::exact), cfg.threads);
}

SelfTestReport self_test(const SweepConfig &cfg)
{
    cfg.validate();
    SweepConfig only_theorem = cfg;
    only_theorem.identities = {Identity::theorem_stable};
    SelfTestReport out;
    out.mutated = run_tasks(build_tasks(only_theorem, CoefficientRule::drop_column_sign), cfg.threads);
    for (const auto &r : out.mutated.results) {
        if (!r.passed && r.witness) {
            out.detected = true;
            break;
        }
    }
    return out;
}

ordered_json check_json(const CheckResult &r)
{
    ordered_json j;
    j["name"] = r.name;
    ordered_json p = ordered_json::object();
    if (r.params.lambda) {
        p["lambda"] = partition_json(*r.params.lambda);
    }
    if (r.params.gamma) {
        p["gamma"] = *r.params.gamma;
    }
    const std::pair<const char *, const std::optional<int> *> scalars[] = {
        {"k", &r.params.k}, {"r", &r.params.r}, {"n", &r.params.n}, {"j", &r.params.j}, {"cap", &r.params.cap}};
    for (const auto &[key, value] : scalars) {
        if (*value) {
            p[key] = **value;
        }
    }
    j["params"] = std::move(p);
    j["passed"] = r.passed;
    if (r.witness) {
        j["witness"] = ordered_json{{"where", r.witness->where}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string check_text(const CheckResult &r)
{
    std::string out = (r.passed ? "PASS " : "FAIL ") + r.name;
    if (r.params.lambda) {
        out += " lambda=" + r.params.lambda->str();
    }
    if (r.params.gamma) {
        out += " gamma=(";
        for (std::size_t i = 0; i < r.params.gamma->size(); ++i) {
            out += (i ? "," : "") + std::to_string((*r.params.gamma)[i]);
        }
        out += ")";
    }
    const std::pair<const char *, const std::optional<int> *> scalars[] = {
        {"k", &r.params.k}, {"r", &r.params.r}, {"n", &r.params.n}, {"j", &r.params.j}, {"cap", &r.params.cap}};
    for (const auto &[key, value] : scalars) {
        if (*value) {
            out += std::string(" ") + key + "=" + std::to_string(**value);
        }
    }
    if (r.witness) {
        out += " witness " + r.witness->where + ": lhs=" + r.witness->lhs + " rhs=" + r.witness->rhs;
    }
    return out;
}

ordered_json report_json(const SweepReport &report)
{
    ordered_json j;
    j["schema_version"] = schema_version;
    auto results = ordered_json::array();
    for (const auto &r : report.results) {
        results.push_back(check_json(r));
    }
    j["results"] = std::move(results);
    j["summary"] = ordered_json{
        {"total", report.summary.total}, {"passed", report.summary.passed}, {"failed", report.summary.failed}};
    return j;
}

std::string report_text(const SweepReport &report)
{
    std::string out;
    for (const auto &r : report.results) {
        out += check_text(r) + "\n";
    }
    out += "total " + std::to_string(report.summary.total) + ", passed " + std::to_string(report.summary.passed) +
           ", failed " + std::to_string(report.summary.failed) + "\n";
    return out;
}

} // namespace grothmn
