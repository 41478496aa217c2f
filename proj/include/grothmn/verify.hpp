#ifndef GROTHMN_VERIFY_HPP
#define GROTHMN_VERIFY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <grothmn/mnrule.hpp>
#include <grothmn/poly.hpp>
#include <grothmn/render.hpp>
#include <grothmn/shapes.hpp>

namespace grothmn
{

// Identities the verifier knows how to check.
enum class Identity {
    theorem_stable,      // p_k G_lambda = sum coeff G_nu, tableaux on both sides
    classical,           // p_k s_lambda = sum (-1)^ht s_nu
    lemma,               // p_r A_gamma = sum_j A_{gamma + r e_j}
    proposition,         // per-row alternant refinement
    canonical,           // p_k^alpha G^{(a,b)}_lambda = sum coeff G^{(a,b)}_nu, modulo the cap
    construction,        // set-valued tableaux vs bialternant
    remark_substitution, // hook-valued tableaux vs substitution into the bialternant
    reduction,           // beta = 0, alpha = 0 and alpha = beta = 0 specialisations
};

std::string to_string(Identity id);
Identity parse_identity(const std::string &text);
const std::vector<Identity> &all_identities();

struct CheckParams {
    std::optional<Partition> lambda;
    std::optional<std::vector<int>> gamma;
    std::optional<int> k;
    std::optional<int> r;
    std::optional<int> n;
    std::optional<int> j;
    std::optional<int> cap;
};

// First point of disagreement: a monomial (or, for expansion comparisons, a
// partition) with the value seen on each side.
struct Witness {
    std::string where;
    std::string lhs;
    std::string rhs;
};

struct CheckResult {
    std::string name;
    CheckParams params;
    bool passed = true;
    std::optional<Witness> witness;
};

// Compares two polynomials, optionally only up to x-degree `up_to`. The
// witness is the smallest differing monomial in canonical order.
CheckResult compare_polys(std::string name, CheckParams params, const Poly &lhs, const Poly &rhs,
                          std::optional<unsigned> up_to = std::nullopt);

CheckResult check_theorem_stable(const Partition &lambda, int k, int n, CoefficientRule rule = CoefficientRule::exact);
CheckResult check_classical(const Partition &lambda, int k, int n);
CheckResult check_lemma(const std::vector<int> &gamma, int r, int n);
CheckResult check_proposition(const Partition &lambda, int k, int n, int j);
CheckResult check_canonical(const Partition &lambda, int k, int n, int cap);
CheckResult check_construction_equality(const Partition &lambda, int n);
CheckResult check_remark_substitution(const Partition &lambda, int n, int cap);
// Expansion at beta = 0 vs classical expansion.
CheckResult check_stable_reduces_to_classical(const Partition &lambda, int k, int n);
// Canonical expansion at alpha = 0 vs stable expansion.
CheckResult check_canonical_reduces_to_stable(const Partition &lambda, int k, int n);
// G^{(a,b)} at alpha = beta = 0 and G^beta at beta = 0 vs the Schur polynomial.
CheckResult check_schur_specialization(const Partition &lambda, int n, int cap);

struct SweepConfig {
    // Grid for the stable, classical, proposition, construction and
    // reduction identities: lambda in a box_rows x box_cols box with
    // |lambda| <= max_size and at most n parts, 1 <= k <= k_max, 1 <= n <= n_max.
    int box_rows = 3;
    int box_cols = 3;
    int max_size = 5;
    int k_max = 4;
    int n_max = 3;
    // Lemma grid: gamma entries in [0, gamma_max], 1 <= r <= r_max, n <= n_max.
    int gamma_max = 4;
    int r_max = 3;
    // Canonical grid: |lambda| <= canonical_max_size inside the box,
    // k <= canonical_k_max, n <= canonical_n_max, cap = |lambda| + k + cap_slack.
    int canonical_max_size = 3;
    int canonical_k_max = 3;
    int canonical_n_max = 2;
    int cap_slack = 3;
    std::set<Identity> identities;
    // Worker threads; 0 means GROTHMN_THREADS or the machine's parallelism.
    unsigned threads = 0;

    // Throws invalid_input on non-positive bounds.
    void validate() const;
    static SweepConfig desk_default();
};

struct SweepSummary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct SweepReport {
    std::vector<CheckResult> results;
    SweepSummary summary;
};

SweepReport sweep(const SweepConfig &cfg);

// Runs the stable theorem grid with the (-1)^{k-c} factor removed. The
// harness is sound when at least one instance fails with a witness.
struct SelfTestReport {
    SweepReport mutated;
    bool detected = false;
};

SelfTestReport self_test(const SweepConfig &cfg);

unsigned worker_count(unsigned requested);

ordered_json check_json(const CheckResult &r);
std::string check_text(const CheckResult &r);
ordered_json report_json(const SweepReport &report);
std::string report_text(const SweepReport &report);

} // namespace grothmn

#endif
