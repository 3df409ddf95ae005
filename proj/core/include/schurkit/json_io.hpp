#pragma once

#include <nlohmann/json.hpp>

#include "schurkit/combinatorics.hpp"
#include "schurkit/factored_rational.hpp"
#include "schurkit/semisimplicity.hpp"
#include "schurkit/sparse_poly.hpp"

namespace schurkit {

// Wire encodings:
//   partition        [3,1]
//   multipartition   [[2],[1,1]]
//   node             [i,j,s]
//   linear form      {"c":1,"pos":"q1","neg":"q2"}     (absent variable = null)
//   factored value   {"num":"2","den":"1","factors":[[form,exp],...]}
//   polynomial       [[[e1,..,ek],"coeff"],...]          graded-lex order
// Big integers travel as decimal strings. Readers throw Parse on malformed input.

[[nodiscard]] nlohmann::json to_json(const Partition& lambda);
[[nodiscard]] nlohmann::json to_json(const Multipartition& lambda);
[[nodiscard]] nlohmann::json to_json(const Node& node);
[[nodiscard]] nlohmann::json to_json(const LinearForm& form);
[[nodiscard]] nlohmann::json to_json(const FactoredRational& value);
[[nodiscard]] nlohmann::json to_json(const SparsePoly& poly);
[[nodiscard]] nlohmann::json to_json(const SemisimplicityReport& report);

[[nodiscard]] Partition partition_from_json(const nlohmann::json& j);
[[nodiscard]] Multipartition multipartition_from_json(const nlohmann::json& j);
[[nodiscard]] Node node_from_json(const nlohmann::json& j);
/// Accepts any orientation and returns the value sign * canonical form.
[[nodiscard]] FactoredRational linear_form_from_json(const nlohmann::json& j);
[[nodiscard]] FactoredRational factored_from_json(const nlohmann::json& j);
/// The exponent vector length must equal alphabet.size().
[[nodiscard]] SparsePoly sparse_poly_from_json(const nlohmann::json& j, Alphabet alphabet);

}  // namespace schurkit
