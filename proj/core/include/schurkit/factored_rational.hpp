#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "schurkit/field.hpp"
#include "schurkit/linear_form.hpp"
#include "schurkit/sparse_poly.hpp"

namespace schurkit {

/// constant * prod form^exponent with canonical linear forms.
///
/// Canonical forms are pairwise non-associate irreducibles, so two values are
/// equal exactly when their constants and factor maps coincide. Every mutation
/// keeps that representation: no zero exponents, no pure-constant factors, and
/// orientation flips folded into the constant as (-1)^exponent. Zero is the
/// constant 0 with no factors.
class FactoredRational {
 public:
  using Factors = std::map<LinearForm, int>;

  FactoredRational() = default;  // the value 1
  explicit FactoredRational(const mpq_class& constant);

  /// (c + pos - neg)^exponent, canonicalized. Raising a zero constant to a
  /// negative power throws Pole.
  static FactoredRational form(long c, std::optional<Variable> pos, std::optional<Variable> neg, int exponent = 1);
  static FactoredRational form(const LinearForm& f, int exponent = 1);

  [[nodiscard]] const mpq_class& constant() const noexcept { return constant_; }
  [[nodiscard]] const Factors& factors() const noexcept { return factors_; }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(constant_) == 0; }
  [[nodiscard]] bool is_constant() const noexcept { return factors_.empty(); }
  [[nodiscard]] bool has_denominator_factors() const noexcept;
  /// Sum of positive exponents minus sum of negative ones.
  [[nodiscard]] int degree() const noexcept;
  /// Largest parameter index among the factors, and whether x occurs.
  [[nodiscard]] Alphabet alphabet() const noexcept;

  /// Multiplies in (c + pos - neg)^exponent.
  void multiply_form(long c, std::optional<Variable> pos, std::optional<Variable> neg, int exponent = 1);
  void multiply_form(const LinearForm& f, int exponent = 1);
  void multiply_constant(const mpq_class& value);

  FactoredRational& operator*=(const FactoredRational& other);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  /// Throws Pole on zero.
  [[nodiscard]] FactoredRational inverse() const;
  [[nodiscard]] FactoredRational pow(int exponent) const;

  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

 private:
  mpq_class constant_ = 1;
  Factors factors_;
};

/// An expanded numerator over a factored denominator with positive integer constant.
struct ExpandedFraction {
  SparsePoly numerator;
  FactoredRational denominator;
};

[[nodiscard]] FactoredRational fr_mul(const FactoredRational& a, const FactoredRational& b);
[[nodiscard]] bool fr_equal(const FactoredRational& a, const FactoredRational& b);

/// Expanded integer polynomial. Throws NotAPolynomial when a denominator factor
/// does not divide the numerator and NonIntegerConstant when the content is
/// not integral. The alphabet defaults to the smallest one covering a.
[[nodiscard]] SparsePoly fr_expand(const FactoredRational& a, std::optional<Alphabet> alphabet = std::nullopt);

/// Throws Pole when a denominator factor vanishes and
/// ConstantDenominatorVanishes when the constant is undefined mod p.
[[nodiscard]] FieldElement fr_eval(const FactoredRational& a, const Specialization& theta);

/// q_s -> q_{sigma(s)} for s = 1..sigma.size(); other variables are untouched.
[[nodiscard]] FactoredRational apply_permutation(std::span<const int> sigma, const FactoredRational& a);

/// x -> q_s - q_t. Throws ThreeVariableForm if x shares a form with a parameter.
[[nodiscard]] FactoredRational substitute_x(const FactoredRational& a, int s, int t);

/// x -> -x
[[nodiscard]] FactoredRational negate_x(const FactoredRational& a);

/// Sum of terms over their least common factored denominator.
[[nodiscard]] ExpandedFraction fr_sum(std::span<const FactoredRational> terms, std::optional<Alphabet> alphabet = std::nullopt);

}  // namespace schurkit
