#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace schurkit {

/// A partition stored as its positive parts, weakly decreasing.
/// The empty sequence is the empty partition (0). Rows and columns are 1-based.
class Partition {
 public:
  Partition() = default;
  /// Accepts trailing zeros and drops them; throws InvalidArgument on negative
  /// or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
  [[nodiscard]] int size() const noexcept;
  [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

  /// lambda_i, zero past the last stored part.
  [[nodiscard]] int part(int i) const noexcept;
  /// Conjugate part: number of rows with lambda_i >= j (zero for j > lambda_1).
  [[nodiscard]] int column_length(int j) const noexcept;
  [[nodiscard]] int first() const noexcept { return part(1); }
  [[nodiscard]] bool contains(int i, int j) const noexcept;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Ordered tuple of m >= 1 partitions; empty components are allowed.
class Multipartition {
 public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);

  [[nodiscard]] const std::vector<Partition>& components() const noexcept { return components_; }
  [[nodiscard]] int level() const noexcept { return static_cast<int>(components_.size()); }
  [[nodiscard]] int size() const noexcept;
  /// max_s l(lambda^s)
  [[nodiscard]] int length() const noexcept;
  /// 1-based component access.
  [[nodiscard]] const Partition& component(int s) const { return components_.at(static_cast<std::size_t>(s - 1)); }

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend auto operator<=>(const Multipartition&, const Multipartition&) = default;

 private:
  std::vector<Partition> components_;
};

struct Node {
  int row = 0;
  int col = 0;
  int component = 0;  // 0 when the context is a single partition

  friend bool operator==(const Node&, const Node&) = default;
  friend auto operator<=>(const Node&, const Node&) = default;
};

/// Strictly decreasing non-negative integers; the length L is part of the value,
/// so the beta sets of one partition at different L compare unequal.
class BetaSet {
 public:
  BetaSet() = default;
  explicit BetaSet(std::vector<int> entries);

  [[nodiscard]] const std::vector<int>& entries() const noexcept { return entries_; }
  [[nodiscard]] int length() const noexcept { return static_cast<int>(entries_.size()); }

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<int> entries_;
};

struct LSymbol {
  int L = 0;
  std::vector<BetaSet> rows;

  friend bool operator==(const LSymbol&, const LSymbol&) = default;
};

[[nodiscard]] Partition conjugate(const Partition& lambda);

/// Nodes of the diagram in row-major order.
[[nodiscard]] std::vector<Node> nodes(const Partition& lambda);
[[nodiscard]] std::vector<Node> nodes(const Multipartition& lambda);

/// lambda_i - i + lambda'_j - j + 1; throws NodeOutsideDiagram.
[[nodiscard]] int hook_length(const Partition& lambda, int i, int j);

/// lambda_i - i + mu'_j - j + 1 for (i,j) in [lambda]; may be zero or negative.
[[nodiscard]] int generalized_hook_length(const Partition& lambda, const Partition& mu, int i, int j);

[[nodiscard]] std::vector<Node> removable_nodes(const Partition& lambda);

/// beta_i = lambda_i + L - i, i = 1..L. Throws LTooSmall when L < l(lambda).
[[nodiscard]] BetaSet beta_set(const Partition& lambda, int L);
[[nodiscard]] Partition partition_from_beta(const BetaSet& beta);
/// {b + 1 : b in B} u {0}
[[nodiscard]] BetaSet shift_beta(const BetaSet& beta);
[[nodiscard]] LSymbol l_symbol(const Multipartition& lambda, int L);

/// Partitions of n, parts compared lexicographically, largest first.
[[nodiscard]] std::vector<Partition> partitions_of(int n);
/// Every partition of every size 0..max_size.
[[nodiscard]] std::vector<Partition> partitions_up_to(int max_size);

/// Visits each m-multipartition of n once. Order: compositions (|lambda^1|,..,|lambda^m|)
/// lexicographically largest first, then each component in partitions_of order.
void for_each_multipartition(int m, int n, const std::function<void(const Multipartition&)>& visit);
[[nodiscard]] std::vector<Multipartition> enumerate_multipartitions(int m, int n);

/// Throws InvalidArgument unless sigma is a bijection of {1..sigma.size()}.
void check_permutation(std::span<const int> sigma);

/// Component s of the result holds component sigma^{-1}(s) of lambda, i.e.
/// component s of lambda moves to slot sigma(s). sigma is 1-based.
[[nodiscard]] Multipartition permute_components(const Multipartition& lambda, std::span<const int> sigma);

/// Number of standard multitableaux: multinomial(n; |lambda^s|) * prod_s f^{lambda^s}.
[[nodiscard]] mpz_class num_standard_tableaux(const Multipartition& lambda);
[[nodiscard]] mpz_class num_standard_tableaux(const Partition& lambda);

[[nodiscard]] mpz_class factorial(int n);

}  // namespace schurkit
