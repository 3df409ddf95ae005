#include "schurkit/sparse_poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schurkit/combinatorics.hpp"
#include "schurkit/error.hpp"

namespace schurkit {

int Alphabet::slot(const Variable& v) const {
  if (v.is_x()) {
    if (!with_x) throw Error(ErrorCode::InvalidArgument, "x is not in the alphabet");
    return params;
  }
  if (v.index() > params) throw Error(ErrorCode::InvalidArgument, v.name() + " is not in the alphabet");
  return v.index() - 1;
}

namespace {

int degree_of(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const noexcept {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

SparsePoly SparsePoly::constant(Alphabet alphabet, const mpz_class& value) {
  SparsePoly p(alphabet);
  p.add_term(Exponents(static_cast<std::size_t>(alphabet.size()), 0), value);
  return p;
}

SparsePoly SparsePoly::variable(Alphabet alphabet, const Variable& v) {
  SparsePoly p(alphabet);
  Exponents e(static_cast<std::size_t>(alphabet.size()), 0);
  e[static_cast<std::size_t>(alphabet.slot(v))] = 1;
  p.add_term(e, 1);
  return p;
}

SparsePoly SparsePoly::from_form(Alphabet alphabet, const LinearForm& form) {
  SparsePoly p = constant(alphabet, form.constant());
  p += variable(alphabet, form.pos());
  if (form.neg()) p -= variable(alphabet, *form.neg());
  return p;
}

int SparsePoly::total_degree() const noexcept {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

mpz_class SparsePoly::coefficient(const Exponents& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparsePoly::check_length(const Exponents& exponents) const {
  if (static_cast<int>(exponents.size()) != alphabet_.size())
    throw Error(ErrorCode::InvalidArgument, "exponent vector has length " + std::to_string(exponents.size()) +
                                                ", expected " + std::to_string(alphabet_.size()));
  for (int e : exponents)
    if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent in a polynomial term");
}

void SparsePoly::add_term(const Exponents& exponents, const mpz_class& coeff) {
  check_length(exponents);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& other) {
  if (!(alphabet_ == other.alphabet_)) throw Error(ErrorCode::InvalidArgument, "alphabet mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& other) {
  if (!(alphabet_ == other.alphabet_)) throw Error(ErrorCode::InvalidArgument, "alphabet mismatch");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

SparsePoly& SparsePoly::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  if (!(a.alphabet_ == b.alphabet_)) throw Error(ErrorCode::InvalidArgument, "alphabet mismatch");
  SparsePoly out(a.alphabet_);
  Exponents e(static_cast<std::size_t>(a.alphabet_.size()));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      out.add_term(e, ca * cb);
    }
  return out;
}

SparsePoly SparsePoly::times(const LinearForm& form) const {
  SparsePoly out(alphabet_);
  const auto pos = static_cast<std::size_t>(alphabet_.slot(form.pos()));
  const std::optional<std::size_t> neg =
      form.neg() ? std::optional<std::size_t>(static_cast<std::size_t>(alphabet_.slot(*form.neg()))) : std::nullopt;
  for (const auto& [e, c] : terms_) {
    if (form.constant() != 0) out.add_term(e, c * form.constant());
    Exponents shifted = e;
    ++shifted[pos];
    out.add_term(shifted, c);
    if (neg) {
      shifted = e;
      ++shifted[*neg];
      out.add_term(shifted, -c);
    }
  }
  return out;
}

std::optional<SparsePoly> SparsePoly::divide_exact(const LinearForm& form) const {
  // Divide by (v + r) with v = pos and r = c - neg, viewing this polynomial
  // in v over the remaining variables (synthetic division).
  if (is_zero()) return *this;
  const auto v = static_cast<std::size_t>(alphabet_.slot(form.pos()));
  SparsePoly r = constant(alphabet_, form.constant());
  if (form.neg()) r -= variable(alphabet_, *form.neg());

  int top = 0;
  for (const auto& [e, c] : terms_) top = std::max(top, e[v]);
  if (top == 0) return std::nullopt;

  std::vector<SparsePoly> coeffs(static_cast<std::size_t>(top + 1), SparsePoly(alphabet_));
  for (const auto& [e, c] : terms_) {
    Exponents stripped = e;
    stripped[v] = 0;
    coeffs[static_cast<std::size_t>(e[v])].add_term(stripped, c);
  }

  std::vector<SparsePoly> quotient(static_cast<std::size_t>(top), SparsePoly(alphabet_));
  quotient[static_cast<std::size_t>(top - 1)] = coeffs[static_cast<std::size_t>(top)];
  for (int k = top - 1; k >= 1; --k)
    quotient[static_cast<std::size_t>(k - 1)] =
        coeffs[static_cast<std::size_t>(k)] - r * quotient[static_cast<std::size_t>(k)];
  if (!(coeffs[0] - r * quotient[0]).is_zero()) return std::nullopt;

  SparsePoly out(alphabet_);
  for (int k = 0; k < top; ++k)
    for (const auto& [e, c] : quotient[static_cast<std::size_t>(k)].terms_) {
      Exponents raised = e;
      raised[v] += k;
      out.add_term(raised, c);
    }
  return out;
}

FieldElement SparsePoly::evaluate(const Specialization& theta) const {
  const Field field = theta.field();
  std::vector<FieldElement> values;
  values.reserve(static_cast<std::size_t>(alphabet_.size()));
  for (int s = 1; s <= alphabet_.params; ++s) values.push_back(theta.param(s));
  if (alphabet_.with_x) values.push_back(theta.value(Variable::x()));

  FieldElement sum = FieldElement::zero(field);
  for (const auto& [e, c] : terms_) {
    FieldElement term(field, mpq_class(c));
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] != 0) term *= values[k].pow(e[k]);
    sum += term;
  }
  return sum;
}

SparsePoly SparsePoly::permuted(std::span<const int> sigma) const {
  check_permutation(sigma);
  Alphabet target = alphabet_;
  target.params = std::max(alphabet_.params, static_cast<int>(sigma.size()));
  const SparsePoly source = widened(target);
  SparsePoly out(target);
  for (const auto& [e, c] : source.terms_) {
    Exponents moved = e;
    for (std::size_t s = 0; s < sigma.size(); ++s) moved[static_cast<std::size_t>(sigma[s] - 1)] = e[s];
    out.add_term(moved, c);
  }
  return out;
}

SparsePoly SparsePoly::widened(Alphabet alphabet) const {
  if (alphabet.params < alphabet_.params || (alphabet_.with_x && !alphabet.with_x))
    throw Error(ErrorCode::InvalidArgument, "cannot narrow a polynomial's alphabet");
  if (alphabet == alphabet_) return *this;
  SparsePoly out(alphabet);
  for (const auto& [e, c] : terms_) {
    Exponents wide(static_cast<std::size_t>(alphabet.size()), 0);
    std::copy_n(e.begin(), alphabet_.params, wide.begin());
    if (alphabet_.with_x) wide.back() = e.back();
    out.add_term(wide, c);
  }
  return out;
}

}  // namespace schurkit
