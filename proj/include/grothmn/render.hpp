#ifndef GROTHMN_RENDER_HPP
#define GROTHMN_RENDER_HPP

#include <string>

#include <json.hpp>

#include <grothmn/mnrule.hpp>
#include <grothmn/poly.hpp>
#include <grothmn/shapes.hpp>

namespace grothmn
{

using ordered_json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

enum class OutputFormat { json, latex, text };

OutputFormat parse_output_format(const std::string &text);

// "a^2*b*x1^3", "1" for the unit monomial.
std::string monomial_text(const Monomial &m);

// Canonical term order, e.g. "x1 + x2 + b*x1*x2"; "0" for zero.
std::string poly_text(const Poly &p);
std::string poly_latex(const Poly &p);
ordered_json poly_json(const Poly &p);

std::string expansion_text(const Expansion &e);
std::string expansion_latex(const Expansion &e);
ordered_json expansion_json(const Expansion &e);
// Inverse of expansion_json. Throws invalid_input on schema violations.
Expansion expansion_from_json(const ordered_json &j);

ordered_json partition_json(const Partition &p);

} // namespace grothmn

#endif
