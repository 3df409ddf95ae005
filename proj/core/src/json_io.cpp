#include "schurkit/json_io.hpp"

#include <string>

#include "schurkit/error.hpp"

namespace schurkit {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::Parse, what); }

mpz_class integer_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (!j.is_string()) malformed("expected a decimal integer string");
  mpz_class value;
  if (value.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer '" + j.get<std::string>() + "'");
  return value;
}

std::optional<Variable> variable_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  if (!j.is_string()) malformed("variable must be a string or null");
  return Variable::parse(j.get<std::string>());
}

json variable_to_json(const std::optional<Variable>& v) { return v ? json(v->name()) : json(nullptr); }

}  // namespace

json to_json(const Partition& lambda) { return json(lambda.parts()); }

json to_json(const Multipartition& lambda) {
  json out = json::array();
  for (const auto& component : lambda.components()) out.push_back(to_json(component));
  return out;
}

json to_json(const Node& node) { return json::array({node.row, node.col, node.component}); }

json to_json(const LinearForm& form) {
  return json{{"c", form.constant()}, {"pos", form.pos().name()}, {"neg", variable_to_json(form.neg())}};
}

json to_json(const FactoredRational& value) {
  json factors = json::array();
  for (const auto& [form, exponent] : value.factors()) factors.push_back(json::array({to_json(form), exponent}));
  return json{{"num", value.constant().get_num().get_str()},
              {"den", value.constant().get_den().get_str()},
              {"factors", std::move(factors)}};
}

json to_json(const SparsePoly& poly) {
  json out = json::array();
  for (const auto& [e, c] : poly.terms()) out.push_back(json::array({e, c.get_str()}));
  return out;
}

json to_json(const SemisimplicityReport& report) {
  json vanishing = nullptr;
  if (report.vanishing) {
    vanishing = json::array();
    for (const auto& lambda : *report.vanishing) vanishing.push_back(to_json(lambda));
  }
  return json{{"p_value", report.p_value.to_string()},
              {"semisimple", report.semisimple},
              {"vanishing", std::move(vanishing)},
              {"agreement", report.agreement ? json(*report.agreement) : json(nullptr)},
              {"field", report.field.tag()}};
}

Partition partition_from_json(const json& j) {
  if (!j.is_array()) malformed("partition must be an array of integers");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer()) malformed("partition parts must be integers");
    parts.push_back(p.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const Error& e) {
    malformed(e.what());
  }
}

Multipartition multipartition_from_json(const json& j) {
  if (!j.is_array() || j.empty()) malformed("multipartition must be a non-empty array of partitions");
  std::vector<Partition> components;
  for (const auto& c : j) components.push_back(partition_from_json(c));
  return Multipartition(std::move(components));
}

Node node_from_json(const json& j) {
  if (!j.is_array() || j.size() < 2 || j.size() > 3) malformed("node must be [i,j] or [i,j,s]");
  for (const auto& k : j)
    if (!k.is_number_integer()) malformed("node entries must be integers");
  return Node{j[0].get<int>(), j[1].get<int>(), j.size() == 3 ? j[2].get<int>() : 0};
}

FactoredRational linear_form_from_json(const json& j) {
  if (!j.is_object() || !j.contains("c") || !j["c"].is_number_integer())
    malformed("linear form needs an integer field \"c\"");
  const auto pos = variable_from_json(j.value("pos", json(nullptr)));
  const auto neg = variable_from_json(j.value("neg", json(nullptr)));
  return FactoredRational::form(j["c"].get<long>(), pos, neg);
}

FactoredRational factored_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j.contains("factors"))
    malformed("factored value needs num, den and factors");
  const mpz_class num = integer_from_json(j["num"]);
  const mpz_class den = integer_from_json(j["den"]);
  if (den == 0) malformed("zero denominator");
  FactoredRational out(mpq_class(num, den));
  if (!j["factors"].is_array()) malformed("factors must be an array");
  for (const auto& entry : j["factors"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[1].is_number_integer())
      malformed("factor entries are [form, exponent]");
    out *= linear_form_from_json(entry[0]).pow(entry[1].get<int>());
  }
  return out;
}

SparsePoly sparse_poly_from_json(const json& j, Alphabet alphabet) {
  if (!j.is_array()) malformed("polynomial must be an array of terms");
  SparsePoly out(alphabet);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_array()) malformed("terms are [exponents, coeff]");
    Exponents e;
    for (const auto& k : term[0]) {
      if (!k.is_number_integer()) malformed("exponents must be integers");
      e.push_back(k.get<int>());
    }
    try {
      out.add_term(e, integer_from_json(term[1]));
    } catch (const Error& err) {
      if (err.code() == ErrorCode::Parse) throw;
      malformed(err.what());
    }
  }
  return out;
}

}  // namespace schurkit
