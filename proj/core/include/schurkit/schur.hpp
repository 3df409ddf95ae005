#pragma once

#include <optional>
#include <string>

#include "schurkit/combinatorics.hpp"
#include "schurkit/factored_rational.hpp"

namespace schurkit {

/// Which closed form evaluates a Schur element.
struct SchurFormula {
  enum class Kind { Product, Symbol, CancellationFree };

  Kind kind = Kind::CancellationFree;
  /// Symbol length L; unset means l(Lambda).
  std::optional<int> symbol_length;

  static SchurFormula product() { return {Kind::Product, std::nullopt}; }
  static SchurFormula symbol(std::optional<int> L = std::nullopt) { return {Kind::Symbol, L}; }
  static SchurFormula cancellation_free() { return {Kind::CancellationFree, std::nullopt}; }

  /// "product", "symbol" or "symbol:L", "cancellation"
  [[nodiscard]] std::string name() const;
  /// Inverse of name(); throws Parse.
  static SchurFormula parse(const std::string& text);
};

// Two-partition kernels, rational functions in x. All three agree; x_kernel is
// the node-by-node product, y_kernel the beta-number quotient at length L, and
// z_kernel the generalized-hook product with no denominator.
[[nodiscard]] FactoredRational x_kernel(const Partition& lambda, const Partition& mu);
/// Throws LTooSmall when L < max(l(lambda), l(mu)).
[[nodiscard]] FactoredRational y_kernel(const Partition& lambda, const Partition& mu, int L);
[[nodiscard]] FactoredRational z_kernel(const Partition& lambda, const Partition& mu);

/// Product of all ordinary hook lengths over the nodes of every component.
[[nodiscard]] mpz_class hook_product(const Multipartition& lambda);

/// Schur element of lambda as a factored function of q_1..q_m.
[[nodiscard]] FactoredRational schur_element(const Multipartition& lambda, const SchurFormula& formula);

/// n! * prod_{i<j} prod_{|d|<n} (d + q_i - q_j)
[[nodiscard]] FactoredRational p_invariant(int m, int n);

/// Compares the two sides of the column/row telescoping identity for mu and
/// 1 <= ell <= mu_1 as rational functions of one indeterminate (x plays y).
/// Throws PreconditionViolation outside that range.
[[nodiscard]] bool verify_mu_identity(const Partition& mu, int ell);

/// prod hooks * prod_{i<j} (beta_i - beta_j) == prod beta_i! as integers.
[[nodiscard]] bool verify_hook_beta_identity(const Partition& lambda, int L);

/// X_{lambda,mu}(x) == X_{mu,lambda}(-x)
[[nodiscard]] bool verify_x_symmetry(const Partition& lambda, const Partition& mu);

/// sum over all m-multipartitions of n of f^Lambda / s_Lambda, over a common
/// factored denominator.
[[nodiscard]] ExpandedFraction trace_at_identity(int m, int n);
/// The trace sum equals 1 for m = 1 and 0 otherwise.
[[nodiscard]] bool verify_trace_identity(int m, int n);

}  // namespace schurkit
