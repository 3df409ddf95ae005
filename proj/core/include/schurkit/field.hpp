#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace schurkit {

class Variable;

/// Either the rationals or a prime field F_p.
class Field {
 public:
  static Field rationals() noexcept { return Field(0); }
  /// Throws InvalidArgument when p is not prime.
  static Field prime(std::uint64_t p);

  [[nodiscard]] bool is_rationals() const noexcept { return modulus_ == 0; }
  [[nodiscard]] std::uint64_t modulus() const noexcept { return modulus_; }
  /// "Q" or "Fp:<p>"
  [[nodiscard]] std::string tag() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t modulus) noexcept : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// An element of a Field. Over F_p the value is kept reduced in [0, p).
class FieldElement {
 public:
  FieldElement() = default;
  /// Throws ConstantDenominatorVanishes when the denominator is 0 mod p.
  FieldElement(Field field, const mpq_class& value);

  static FieldElement zero(Field field) { return FieldElement(field, 0); }
  static FieldElement one(Field field) { return FieldElement(field, 1); }

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
  [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
  [[nodiscard]] std::string to_string() const { return value_.get_str(); }

  /// Throws Pole on zero.
  [[nodiscard]] FieldElement inverse() const;
  [[nodiscard]] FieldElement pow(long exponent) const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }

 private:
  void reduce();

  Field field_ = Field::rationals();
  mpq_class value_ = 0;
};

/// Assignment q_s -> field element for every parameter of the level, plus an
/// optional value for the indeterminate x.
class Specialization {
 public:
  Specialization(Field field, const std::vector<mpq_class>& params, std::optional<mpq_class> x = std::nullopt);

  [[nodiscard]] const Field& field() const noexcept { return field_; }
  [[nodiscard]] int level() const noexcept { return static_cast<int>(params_.size()); }
  /// 1-based
  [[nodiscard]] const FieldElement& param(int s) const;
  [[nodiscard]] const std::optional<FieldElement>& x() const noexcept { return x_; }
  /// Throws InvalidArgument when the variable is not assigned.
  [[nodiscard]] const FieldElement& value(const Variable& v) const;

 private:
  Field field_;
  std::vector<FieldElement> params_;
  std::optional<FieldElement> x_;
};

}  // namespace schurkit
