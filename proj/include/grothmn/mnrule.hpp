#ifndef GROTHMN_MNRULE_HPP
#define GROTHMN_MNRULE_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <grothmn/poly.hpp>
#include <grothmn/shapes.hpp>

namespace grothmn
{

enum class ExpansionMode { classical, stable, canonical };

// Selects the coefficient formula. drop_column_sign omits the (-1)^{k-c}
// factor and exists only so the verifier can prove it notices a wrong rule.
enum class CoefficientRule { exact, drop_column_sign };

// p_k * B_lambda = sum_nu terms[nu] * B_nu, with B the Schur, stable or
// canonical basis. When row is set the identity is the per-row alternant
// refinement A_{lambda+delta+k e_row} = sum_nu terms[nu] * A_{nu+delta}.
struct Expansion {
    Partition lambda;
    int k = 1;
    int nvars = 1;
    ExpansionMode mode = ExpansionMode::stable;
    std::optional<int> row;
    // Coefficients are polynomials in alpha and beta only (nvars x-slots,
    // all exponents zero). No zero coefficient is stored.
    std::map<Partition, Poly, GradedLex> terms;
    // Admissible nu whose coefficient vanishes (binomial is zero).
    std::vector<Partition> vanishing;

    friend bool operator==(const Expansion &, const Expansion &) = default;
};

// (-beta)^{|s|-k} (-1)^{k-c} C(r-1, k-c) for an admissible shape s.
// Throws invalid_input if s is disconnected, has more than k columns or its
// maximal northwest ribbon is shorter than k.
Poly stable_coefficient(const SkewShape &s, int k, int nvars, CoefficientRule rule = CoefficientRule::exact);

Expansion expand_classical(const Partition &lambda, int k, int n);
Expansion expand_stable(const Partition &lambda, int k, int n, CoefficientRule rule = CoefficientRule::exact);
Expansion expand_proposition_row(const Partition &lambda, int k, int n, int j,
                                 CoefficientRule rule = CoefficientRule::exact);
Expansion expand_canonical(const Partition &lambda, int k, int n);

// sum_nu terms[nu] * basis(nu)
Poly expansion_sum(const Expansion &e, const std::function<Poly(const Partition &)> &basis);

std::string to_string(ExpansionMode mode);
ExpansionMode parse_expansion_mode(const std::string &text);

} // namespace grothmn

#endif
