#include "schurkit/factored_rational.hpp"

#include <algorithm>
#include <string>

#include "schurkit/combinatorics.hpp"
#include "schurkit/error.hpp"

namespace schurkit {

namespace {

mpq_class power(const mpq_class& base, int exponent) {
  mpz_class num;
  mpz_class den;
  const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class out(exponent < 0 ? den : num, exponent < 0 ? num : den);
  out.canonicalize();
  return out;
}

// Rebuilds c + sum coeff_v * v as a signed canonical form. Only shapes
// c + v - w are representable; anything else is a three-variable form.
LinearForm::Normalized from_combination(long c, const std::map<Variable, int>& coeffs) {
  std::optional<Variable> pos;
  std::optional<Variable> neg;
  for (const auto& [v, k] : coeffs) {
    if (k == 0) continue;
    if (k == 1 && !pos) {
      pos = v;
    } else if (k == -1 && !neg) {
      neg = v;
    } else {
      throw Error(ErrorCode::ThreeVariableForm, "substitution leaves a form outside c + v - w");
    }
  }
  return LinearForm::normalize(c, pos, neg);
}

std::map<Variable, int> coefficients_of(const LinearForm& f) {
  std::map<Variable, int> coeffs;
  coeffs[f.pos()] += 1;
  if (f.neg()) coeffs[*f.neg()] -= 1;
  return coeffs;
}

template <typename Rewrite>
FactoredRational rewrite_factors(const FactoredRational& a, Rewrite rewrite) {
  FactoredRational out(a.constant());
  for (const auto& [form, exponent] : a.factors()) {
    const LinearForm::Normalized n = rewrite(form);
    if (n.form) {
      out.multiply_form(*n.form, exponent);
      if (n.sign < 0 && exponent % 2 != 0) out.multiply_constant(-1);
    } else {
      out.multiply_form(n.constant, std::nullopt, std::nullopt, exponent);
    }
  }
  return out;
}

}  // namespace

FactoredRational::FactoredRational(const mpq_class& constant) : constant_(constant) { constant_.canonicalize(); }

FactoredRational FactoredRational::form(long c, std::optional<Variable> pos, std::optional<Variable> neg,
                                        int exponent) {
  FactoredRational out;
  out.multiply_form(c, pos, neg, exponent);
  return out;
}

FactoredRational FactoredRational::form(const LinearForm& f, int exponent) {
  FactoredRational out;
  out.multiply_form(f, exponent);
  return out;
}

bool FactoredRational::has_denominator_factors() const noexcept {
  return std::any_of(factors_.begin(), factors_.end(), [](const auto& kv) { return kv.second < 0; });
}

int FactoredRational::degree() const noexcept {
  int d = 0;
  for (const auto& [form, exponent] : factors_) d += exponent;
  return d;
}

Alphabet FactoredRational::alphabet() const noexcept {
  Alphabet alphabet;
  auto visit = [&](const Variable& v) {
    if (v.is_x())
      alphabet.with_x = true;
    else
      alphabet.params = std::max(alphabet.params, v.index());
  };
  for (const auto& [form, exponent] : factors_) {
    visit(form.pos());
    if (form.neg()) visit(*form.neg());
  }
  return alphabet;
}

void FactoredRational::multiply_form(long c, std::optional<Variable> pos, std::optional<Variable> neg,
                                     int exponent) {
  if (exponent == 0) return;
  const LinearForm::Normalized n = LinearForm::normalize(c, pos, neg);
  if (!n.form) {
    if (n.constant == 0 && exponent < 0) throw Error(ErrorCode::Pole, "division by the constant 0");
    multiply_constant(power(mpq_class(n.constant), exponent));
    return;
  }
  if (n.sign < 0 && exponent % 2 != 0) constant_ = -constant_;
  multiply_form(*n.form, exponent);
}

void FactoredRational::multiply_form(const LinearForm& f, int exponent) {
  if (exponent == 0 || is_zero()) return;
  auto [it, inserted] = factors_.try_emplace(f, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) factors_.erase(it);
  }
}

void FactoredRational::multiply_constant(const mpq_class& value) {
  constant_ *= value;
  if (sgn(constant_) == 0) factors_.clear();
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& other) {
  multiply_constant(other.constant_);
  for (const auto& [form, exponent] : other.factors_) multiply_form(form, exponent);
  return *this;
}

FactoredRational FactoredRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Pole, "inverse of zero");
  FactoredRational out(1 / constant_);
  for (const auto& [form, exponent] : factors_) out.factors_.emplace(form, -exponent);
  return out;
}

FactoredRational FactoredRational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  if (exponent == 0) return FactoredRational();
  FactoredRational out(power(constant_, exponent));
  for (const auto& [form, e] : factors_) out.factors_.emplace(form, e * exponent);
  return out;
}

FactoredRational fr_mul(const FactoredRational& a, const FactoredRational& b) { return a * b; }

bool fr_equal(const FactoredRational& a, const FactoredRational& b) { return a == b; }

SparsePoly fr_expand(const FactoredRational& a, std::optional<Alphabet> alphabet) {
  const Alphabet needed = a.alphabet();
  const Alphabet target = alphabet.value_or(needed);
  if (target.params < needed.params || (needed.with_x && !target.with_x))
    throw Error(ErrorCode::InvalidArgument, "alphabet does not cover the factors");
  if (a.is_zero()) return SparsePoly(target);

  SparsePoly poly = SparsePoly::constant(target, 1);
  for (const auto& [form, exponent] : a.factors())
    for (int k = 0; k < exponent; ++k) poly = poly.times(form);
  for (const auto& [form, exponent] : a.factors())
    for (int k = 0; k < -exponent; ++k) {
      auto quotient = poly.divide_exact(form);
      if (!quotient) throw Error(ErrorCode::NotAPolynomial, "a denominator factor leaves a remainder");
      poly = std::move(*quotient);
    }

  poly *= a.constant().get_num();
  const mpz_class& den = a.constant().get_den();
  if (den != 1) {
    SparsePoly reduced(target);
    for (const auto& [e, c] : poly.terms()) {
      if (!mpz_divisible_p(c.get_mpz_t(), den.get_mpz_t()))
        throw Error(ErrorCode::NonIntegerConstant, "coefficient is not divisible by " + den.get_str());
      reduced.add_term(e, c / den);
    }
    poly = std::move(reduced);
  }
  return poly;
}

FieldElement fr_eval(const FactoredRational& a, const Specialization& theta) {
  const Field field = theta.field();
  FieldElement result(field, a.constant());
  bool vanishes = false;
  for (const auto& [form, exponent] : a.factors()) {
    FieldElement value = FieldElement(field, mpq_class(form.constant())) + theta.value(form.pos());
    if (form.neg()) value -= theta.value(*form.neg());
    if (value.is_zero()) {
      if (exponent < 0) throw Error(ErrorCode::Pole, "a denominator factor vanishes under the specialization");
      vanishes = true;
      continue;
    }
    result *= value.pow(exponent);
  }
  return vanishes ? FieldElement::zero(field) : result;
}

FactoredRational apply_permutation(std::span<const int> sigma, const FactoredRational& a) {
  check_permutation(sigma);
  const auto image = [&](const Variable& v) {
    if (v.is_x() || v.index() > static_cast<int>(sigma.size())) return v;
    return Variable::q(sigma[static_cast<std::size_t>(v.index() - 1)]);
  };
  return rewrite_factors(a, [&](const LinearForm& f) {
    return LinearForm::normalize(f.constant(), image(f.pos()),
                                 f.neg() ? std::optional<Variable>(image(*f.neg())) : std::nullopt);
  });
}

FactoredRational substitute_x(const FactoredRational& a, int s, int t) {
  if (s == t) throw Error(ErrorCode::PreconditionViolation, "substitute_x needs two distinct parameters");
  const Variable qs = Variable::q(s);
  const Variable qt = Variable::q(t);
  return rewrite_factors(a, [&](const LinearForm& f) {
    if (!f.mentions(Variable::x())) return LinearForm::Normalized{1, f, 0};
    auto coeffs = coefficients_of(f);
    const int kx = coeffs[Variable::x()];
    coeffs.erase(Variable::x());
    coeffs[qs] += kx;
    coeffs[qt] -= kx;
    return from_combination(f.constant(), coeffs);
  });
}

FactoredRational negate_x(const FactoredRational& a) {
  return rewrite_factors(a, [&](const LinearForm& f) {
    if (!f.mentions(Variable::x())) return LinearForm::Normalized{1, f, 0};
    auto coeffs = coefficients_of(f);
    coeffs[Variable::x()] = -coeffs[Variable::x()];
    return from_combination(f.constant(), coeffs);
  });
}

ExpandedFraction fr_sum(std::span<const FactoredRational> terms, std::optional<Alphabet> alphabet) {
  Alphabet target = alphabet.value_or(Alphabet{});
  if (!alphabet)
    for (const auto& term : terms) {
      const Alphabet a = term.alphabet();
      target.params = std::max(target.params, a.params);
      target.with_x = target.with_x || a.with_x;
    }

  FactoredRational common;
  std::map<LinearForm, int> denominator_exponents;
  for (const auto& term : terms)
    for (const auto& [form, exponent] : term.factors())
      if (exponent < 0) {
        int& slot = denominator_exponents[form];
        slot = std::max(slot, -exponent);
      }
  for (const auto& [form, exponent] : denominator_exponents) common.multiply_form(form, exponent);

  std::vector<FactoredRational> scaled;
  mpz_class scale = 1;
  for (const auto& term : terms) {
    if (term.is_zero()) continue;
    scaled.push_back(term * common);
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), scaled.back().constant().get_den_mpz_t());
  }

  SparsePoly numerator(target);
  for (auto& term : scaled) {
    term.multiply_constant(mpq_class(scale));
    numerator += fr_expand(term, target);
  }
  common.multiply_constant(mpq_class(scale));
  return {std::move(numerator), std::move(common)};
}

}  // namespace schurkit
