#pragma once

#include <string>

#include "schurkit/combinatorics.hpp"
#include "schurkit/factored_rational.hpp"
#include "schurkit/semisimplicity.hpp"
#include "schurkit/sparse_poly.hpp"

namespace schurkit {

enum class OutputFormat { Json, Latex, Text };

/// "json", "latex", "text"; throws Parse.
[[nodiscard]] OutputFormat parse_output_format(const std::string& text);

// Text uses ASCII names (q1, x); LaTeX uses q_{1}. Factors always appear in
// canonical order, e.g. 2(-1+q1-q2)(q1-q2)(1+q1-q2).
[[nodiscard]] std::string to_text(const LinearForm& form);
[[nodiscard]] std::string to_latex(const LinearForm& form);
[[nodiscard]] std::string to_text(const FactoredRational& value);
[[nodiscard]] std::string to_latex(const FactoredRational& value);
[[nodiscard]] std::string to_text(const SparsePoly& poly);
[[nodiscard]] std::string to_latex(const SparsePoly& poly);

/// (3,1); the empty partition prints as (0).
[[nodiscard]] std::string to_text(const Partition& lambda);
/// ((2);(1,1))
[[nodiscard]] std::string to_text(const Multipartition& lambda);
[[nodiscard]] std::string to_text(const SemisimplicityReport& report);

}  // namespace schurkit
