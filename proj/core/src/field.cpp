#include "schurkit/field.hpp"

#include <string>

#include "schurkit/error.hpp"
#include "schurkit/linear_form.hpp"

namespace schurkit {

Field Field::prime(std::uint64_t p) {
  mpz_class candidate(std::to_string(p));
  if (p < 2 || mpz_probab_prime_p(candidate.get_mpz_t(), 30) == 0)
    throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::tag() const { return is_rationals() ? "Q" : "Fp:" + std::to_string(modulus_); }

FieldElement::FieldElement(Field field, const mpq_class& value) : field_(field), value_(value) {
  value_.canonicalize();
  reduce();
}

void FieldElement::reduce() {
  if (field_.is_rationals()) return;
  const mpz_class p(std::to_string(field_.modulus()));
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  if (den != 1) {
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw Error(ErrorCode::ConstantDenominatorVanishes,
                  "denominator " + den.get_str() + " vanishes in " + field_.tag());
    num *= inv;
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Pole, "division by zero in " + field_.tag());
  return FieldElement(field_, 1 / value_);
}

FieldElement FieldElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  FieldElement result = one(field_);
  FieldElement base = *this;
  auto e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

namespace {

void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(ErrorCode::InvalidArgument, "mixing elements of " + a.tag() + " and " + b.tag());
}

}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  require_same_field(field_, other.field_);
  value_ += other.value_;
  reduce();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  require_same_field(field_, other.field_);
  value_ -= other.value_;
  reduce();
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  require_same_field(field_, other.field_);
  value_ *= other.value_;
  reduce();
  return *this;
}

Specialization::Specialization(Field field, const std::vector<mpq_class>& params, std::optional<mpq_class> x)
    : field_(field) {
  if (params.empty()) throw Error(ErrorCode::InvalidArgument, "a specialization needs at least one parameter");
  params_.reserve(params.size());
  for (const auto& value : params) params_.emplace_back(field, value);
  if (x) x_ = FieldElement(field, *x);
}

const FieldElement& Specialization::param(int s) const {
  if (s < 1 || s > level())
    throw Error(ErrorCode::InvalidArgument, "q" + std::to_string(s) + " is not assigned by the specialization");
  return params_[static_cast<std::size_t>(s - 1)];
}

const FieldElement& Specialization::value(const Variable& v) const {
  if (v.is_x()) {
    if (!x_) throw Error(ErrorCode::InvalidArgument, "x is not assigned by the specialization");
    return *x_;
  }
  return param(v.index());
}

}  // namespace schurkit
