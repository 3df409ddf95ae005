#include "schurkit/format.hpp"

#include <sstream>

#include "schurkit/error.hpp"

namespace schurkit {

namespace {

enum class Style { Text, Latex };

std::string variable_name(const Variable& v, Style style) {
  if (v.is_x()) return "x";
  return style == Style::Text ? v.name() : "q_{" + std::to_string(v.index()) + "}";
}

std::string form_string(const LinearForm& form, Style style) {
  std::string out;
  if (form.constant() != 0) out = std::to_string(form.constant()) + "+";
  out += variable_name(form.pos(), style);
  if (form.neg()) out += "-" + variable_name(*form.neg(), style);
  return out;
}

std::string rational_string(const mpq_class& q, Style style) {
  if (style == Style::Text || q.get_den() == 1) return q.get_str();
  const bool negative = sgn(q) < 0;
  return std::string(negative ? "-" : "") + "\\frac{" + mpz_class(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() +
         "}";
}

std::string factored_string(const FactoredRational& value, Style style) {
  if (value.is_zero()) return "0";
  const mpq_class& c = value.constant();
  if (value.is_constant()) return rational_string(c, style);

  std::string out;
  if (c == -1)
    out = "-";
  else if (c != 1)
    out = rational_string(c, style);
  for (const auto& [form, exponent] : value.factors()) {
    out += "(" + form_string(form, style) + ")";
    if (exponent == 1) continue;
    if (style == Style::Latex)
      out += "^{" + std::to_string(exponent) + "}";
    else
      out += exponent < 0 ? "^(" + std::to_string(exponent) + ")" : "^" + std::to_string(exponent);
  }
  return out;
}

std::string monomial_string(const Alphabet& alphabet, const Exponents& e, Style style) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    const Variable v =
        static_cast<int>(k) < alphabet.params ? Variable::q(static_cast<int>(k) + 1) : Variable::x();
    if (!out.empty() && style == Style::Text) out += "*";
    out += variable_name(v, style);
    if (e[k] != 1) out += style == Style::Text ? "^" + std::to_string(e[k]) : "^{" + std::to_string(e[k]) + "}";
  }
  return out;
}

std::string poly_string(const SparsePoly& poly, Style style) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    const bool negative = sgn(c) < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    const mpz_class magnitude = abs(c);
    const std::string monomial = monomial_string(poly.alphabet(), e, style);
    if (monomial.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += magnitude.get_str() + (style == Style::Text ? "*" : "") + monomial;
    }
  }
  return out;
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "latex") return OutputFormat::Latex;
  if (text == "text") return OutputFormat::Text;
  throw Error(ErrorCode::Parse, "unknown output format '" + text + "'");
}

std::string to_text(const LinearForm& form) { return form_string(form, Style::Text); }
std::string to_latex(const LinearForm& form) { return form_string(form, Style::Latex); }
std::string to_text(const FactoredRational& value) { return factored_string(value, Style::Text); }
std::string to_latex(const FactoredRational& value) { return factored_string(value, Style::Latex); }
std::string to_text(const SparsePoly& poly) { return poly_string(poly, Style::Text); }
std::string to_latex(const SparsePoly& poly) { return poly_string(poly, Style::Latex); }

std::string to_text(const Partition& lambda) {
  if (lambda.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(lambda.parts()[i]);
  }
  return out + ")";
}

std::string to_text(const Multipartition& lambda) {
  std::string out = "(";
  for (int s = 1; s <= lambda.level(); ++s) {
    if (s != 1) out += ";";
    out += to_text(lambda.component(s));
  }
  return out + ")";
}

std::string to_text(const SemisimplicityReport& report) {
  std::ostringstream out;
  out << "field: " << report.field.tag() << '\n';
  out << "p_value: " << report.p_value.to_string() << '\n';
  out << "semisimple: " << (report.semisimple ? "true" : "false") << '\n';
  if (report.factorial_vanishes) out << "note: n! vanishes in this field\n";
  if (report.vanishing) {
    out << "vanishing:";
    for (const auto& lambda : *report.vanishing) out << ' ' << to_text(lambda);
    out << '\n';
  }
  if (report.agreement) out << "agreement: " << (*report.agreement ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace schurkit
