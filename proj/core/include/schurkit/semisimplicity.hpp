#pragma once

#include <optional>
#include <random>
#include <vector>

#include "schurkit/combinatorics.hpp"
#include "schurkit/field.hpp"

namespace schurkit {

struct SemisimplicityReport {
  Field field = Field::rationals();
  /// theta(P_H(Q))
  FieldElement p_value;
  bool semisimple = false;
  /// Multipartitions whose Schur element vanishes, when a scan was run.
  std::optional<std::vector<Multipartition>> vanishing;
  /// p_value != 0 iff vanishing is empty; unset without a scan.
  std::optional<bool> agreement;
  /// theta(n!) == 0, i.e. the characteristic is at most n.
  bool factorial_vanishes = false;
};

/// theta(P_H(Q)) != 0. theta must assign q_1..q_m.
[[nodiscard]] bool is_semisimple(int m, int n, const Specialization& theta);

/// Every Lambda in P_{m,n}, in enumeration order, whose cancellation-free
/// Schur element vanishes under theta.
[[nodiscard]] std::vector<Multipartition> vanishing_schur_elements(int m, int n, const Specialization& theta);

/// Evaluates the criterion and, when scan is set, checks it against the
/// exhaustive vanishing scan.
[[nodiscard]] SemisimplicityReport cross_check_criterion(int m, int n, const Specialization& theta, bool scan = true);

/// The multipartitions singled out by the case analysis of the criterion's
/// proof: ((n);(0);..) when theta(n!) = 0, and for theta(k + q_s - q_t) = 0
/// with s < t the multipartition with (n) in slot s (0 <= k < n) or in slot t
/// (-n < k < 0), all other slots empty. Sorted in enumeration order, no repeats.
[[nodiscard]] std::vector<Multipartition> proof_witnesses(int m, int n, const Specialization& theta);

/// Parameters drawn from the integers in [-n, n] (over Q, occasionally halves
/// of integers in [-2n, 2n]); reduced mod p over a prime field.
[[nodiscard]] Specialization random_specialization(int m, int n, Field field, std::mt19937_64& rng);

}  // namespace schurkit
