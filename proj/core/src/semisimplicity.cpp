#include "schurkit/semisimplicity.hpp"

#include <algorithm>
#include <string>

#include "schurkit/error.hpp"
#include "schurkit/factored_rational.hpp"
#include "schurkit/schur.hpp"

namespace schurkit {

namespace {

void require_assignment(int m, int n, const Specialization& theta) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "need m >= 1 and n >= 1");
  if (theta.level() < m)
    throw Error(ErrorCode::InvalidArgument,
                "specialization assigns " + std::to_string(theta.level()) + " parameters, level is " +
                    std::to_string(m));
}

Multipartition single_row_at(int m, int n, int slot) {
  std::vector<Partition> components(static_cast<std::size_t>(m));
  components[static_cast<std::size_t>(slot - 1)] = Partition{n};
  return Multipartition(std::move(components));
}

}  // namespace

bool is_semisimple(int m, int n, const Specialization& theta) {
  require_assignment(m, n, theta);
  return !fr_eval(p_invariant(m, n), theta).is_zero();
}

std::vector<Multipartition> vanishing_schur_elements(int m, int n, const Specialization& theta) {
  require_assignment(m, n, theta);
  std::vector<Multipartition> out;
  for_each_multipartition(m, n, [&](const Multipartition& lambda) {
    if (fr_eval(schur_element(lambda, SchurFormula::cancellation_free()), theta).is_zero()) out.push_back(lambda);
  });
  return out;
}

SemisimplicityReport cross_check_criterion(int m, int n, const Specialization& theta, bool scan) {
  require_assignment(m, n, theta);
  SemisimplicityReport report;
  report.field = theta.field();
  report.p_value = fr_eval(p_invariant(m, n), theta);
  report.semisimple = !report.p_value.is_zero();
  report.factorial_vanishes = FieldElement(theta.field(), mpq_class(factorial(n))).is_zero();
  if (scan) {
    report.vanishing = vanishing_schur_elements(m, n, theta);
    report.agreement = report.semisimple == report.vanishing->empty();
  }
  return report;
}

std::vector<Multipartition> proof_witnesses(int m, int n, const Specialization& theta) {
  require_assignment(m, n, theta);
  const Field field = theta.field();
  std::vector<Multipartition> out;
  if (FieldElement(field, mpq_class(factorial(n))).is_zero()) out.push_back(single_row_at(m, n, 1));
  for (int s = 1; s <= m; ++s)
    for (int t = s + 1; t <= m; ++t)
      for (int k = -(n - 1); k <= n - 1; ++k) {
        const FieldElement value = FieldElement(field, k) + theta.param(s) - theta.param(t);
        if (value.is_zero()) out.push_back(single_row_at(m, n, k >= 0 ? s : t));
      }

  // enumeration order puts the row in an earlier slot first
  std::sort(out.begin(), out.end(), [](const Multipartition& a, const Multipartition& b) { return b < a; });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Specialization random_specialization(int m, int n, Field field, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> whole(-n, n);
  std::uniform_int_distribution<int> doubled(-2 * n, 2 * n);
  std::bernoulli_distribution use_half(0.25);
  std::vector<mpq_class> params;
  params.reserve(static_cast<std::size_t>(m));
  for (int s = 0; s < m; ++s) {
    if (field.is_rationals() && use_half(rng))
      params.emplace_back(doubled(rng), 2);
    else
      params.emplace_back(whole(rng));
  }
  for (auto& p : params) p.canonicalize();
  return Specialization(field, params);
}

}  // namespace schurkit
