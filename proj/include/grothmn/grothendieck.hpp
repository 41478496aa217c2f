#ifndef GROTHMN_GROTHENDIECK_HPP
#define GROTHMN_GROTHENDIECK_HPP

#include <optional>
#include <vector>

#include <grothmn/poly.hpp>
#include <grothmn/shapes.hpp>

namespace grothmn
{

enum class GrothendieckMode { schur, stable_beta, canonical_alpha_beta };

struct GrothendieckSpec {
    Partition lambda;
    int nvars = 1;
    GrothendieckMode mode = GrothendieckMode::stable_beta;
    // Required for canonical_alpha_beta: total x-degree truncation.
    std::optional<unsigned> cap;
};

// p_k(x_1..x_n); p_0 = 1.
Poly power_sum(int k, int n);

// p_k evaluated at x_i/(1 - alpha x_i), truncated at x-degree D. k >= 1.
Poly power_sum_alpha(int k, int n, unsigned D);

// (n-1, n-2, ..., 1, 0)
std::vector<int> staircase(int n);

// det( x_i^{gamma_j} (1 + beta x_i)^{j-1} ), 1 <= i, j <= n.
Poly a_function(const std::vector<int> &gamma, int n);

// prod_{i<j} (x_i - x_j)
Poly vandermonde(int n);

// Generating function of set-valued tableaux: sum beta^{|T|-|lambda|} x^wt(T).
Poly g_stable_tableaux(const Partition &lambda, int n);

// Bialternant A_{lambda + delta}/prod(x_i - x_j), by exact linear division.
Poly g_stable_determinant(const Partition &lambda, int n);

// Generating function of semistandard tableaux.
Poly schur(const Partition &lambda, int n);

// Generating function of hook-valued tableaux, truncated at x-degree D.
Poly g_canonical_tableaux(const Partition &lambda, int n, unsigned D);

// G^{(0, alpha+beta)} evaluated at x_i/(1 - alpha x_i), truncated at D,
// starting from the bialternant.
Poly g_canonical_substitution(const Partition &lambda, int n, unsigned D);

// Dispatches on spec.mode using the tableau constructions.
Poly grothendieck(const GrothendieckSpec &spec);

} // namespace grothmn

#endif
