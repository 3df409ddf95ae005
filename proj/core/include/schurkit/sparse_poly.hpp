#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "schurkit/field.hpp"
#include "schurkit/linear_form.hpp"

namespace schurkit {

/// Variables of a polynomial ring: q_1..q_params, then x when with_x is set.
struct Alphabet {
  int params = 0;
  bool with_x = false;

  [[nodiscard]] int size() const noexcept { return params + (with_x ? 1 : 0); }
  /// Slot of v in an exponent vector; throws InvalidArgument when v is outside.
  [[nodiscard]] int slot(const Variable& v) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

using Exponents = std::vector<int>;

/// Graded lexicographic: lower total degree first, then the larger power of
/// the earlier variable first (so q1^2 precedes q1 q2 precedes q2^2).
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

/// Expanded polynomial with integer coefficients. Zero coefficients are never stored.
class SparsePoly {
 public:
  using Terms = std::map<Exponents, mpz_class, GradedLexLess>;

  explicit SparsePoly(Alphabet alphabet = {}) : alphabet_(alphabet) {}

  static SparsePoly constant(Alphabet alphabet, const mpz_class& value);
  static SparsePoly variable(Alphabet alphabet, const Variable& v);
  static SparsePoly from_form(Alphabet alphabet, const LinearForm& form);

  [[nodiscard]] const Alphabet& alphabet() const noexcept { return alphabet_; }
  [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int total_degree() const noexcept;
  [[nodiscard]] mpz_class coefficient(const Exponents& exponents) const;

  /// Adds coeff * monomial; throws InvalidArgument on a wrong-length exponent vector.
  void add_term(const Exponents& exponents, const mpz_class& coeff);

  SparsePoly& operator+=(const SparsePoly& other);
  SparsePoly& operator-=(const SparsePoly& other);
  SparsePoly& operator*=(const mpz_class& scalar);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Multiplies by a linear form; cheaper than a general product.
  [[nodiscard]] SparsePoly times(const LinearForm& form) const;

  /// Quotient when form divides this polynomial exactly, nullopt otherwise.
  [[nodiscard]] std::optional<SparsePoly> divide_exact(const LinearForm& form) const;

  [[nodiscard]] FieldElement evaluate(const Specialization& theta) const;

  /// q_s -> q_{sigma(s)}; sigma is 1-based over the alphabet's parameters.
  [[nodiscard]] SparsePoly permuted(std::span<const int> sigma) const;

  /// Same polynomial over a larger alphabet.
  [[nodiscard]] SparsePoly widened(Alphabet alphabet) const;

 private:
  void check_length(const Exponents& exponents) const;

  Alphabet alphabet_;
  Terms terms_;
};

/// Apply the same permutation convention as for factored values.
[[nodiscard]] inline SparsePoly apply_permutation(std::span<const int> sigma, const SparsePoly& poly) {
  return poly.permuted(sigma);
}

}  // namespace schurkit
