#include <gtest/gtest.h>

#include "schurkit/error.hpp"
#include "schurkit/format.hpp"
#include "schurkit/json_io.hpp"
#include "schurkit/schur.hpp"

namespace schurkit {
namespace {

using nlohmann::json;

const Variable q1 = Variable::q(1);
const Variable q2 = Variable::q(2);
const Variable X = Variable::x();

FactoredRational F(long c, std::optional<Variable> pos, std::optional<Variable> neg, int e = 1) {
  return FactoredRational::form(c, pos, neg, e);
}

Multipartition MP(std::vector<Partition> components) { return Multipartition(std::move(components)); }

TEST(Text, Examples) {
  EXPECT_EQ(to_text(F(0, q1, q2)), "(q1-q2)");
  EXPECT_EQ(to_text(p_invariant(2, 2)), "2(-1+q1-q2)(q1-q2)(1+q1-q2)");
  EXPECT_EQ(to_text(F(1, q1, q2) * F(1, q2, q1)), "-(-1+q1-q2)(1+q1-q2)");
  EXPECT_EQ(to_text(F(1, q1, q2, 2)), "(1+q1-q2)^2");
  EXPECT_EQ(to_text(F(-2, X, std::nullopt, -1)), "(-2+x)^(-1)");
  EXPECT_EQ(to_text(FactoredRational(mpq_class(-3, 4))), "-3/4");
  FactoredRational zero;
  zero.multiply_constant(0);
  EXPECT_EQ(to_text(zero), "0");
  EXPECT_EQ(to_text(fr_expand(F(1, q1, q2) * F(1, q2, q1))), "1 - q1^2 + 2*q1*q2 - q2^2");
  EXPECT_EQ(to_text(SparsePoly(Alphabet{2, false})), "0");
}

TEST(Latex, Examples) {
  EXPECT_EQ(to_latex(FactoredRational(mpq_class(6))), "6");
  EXPECT_EQ(to_latex(F(0, q1, q2)), "(q_{1}-q_{2})");
  EXPECT_EQ(to_latex(F(1, q1, q2, 2)), "(1+q_{1}-q_{2})^{2}");
  EXPECT_EQ(to_latex(FactoredRational(mpq_class(-1, 2))), "-\\frac{1}{2}");
  EXPECT_EQ(to_latex(fr_expand(F(0, q1, q2, 2))), "q_{1}^{2} - 2q_{1}q_{2} + q_{2}^{2}");
}

TEST(Text, Partitions) {
  EXPECT_EQ(to_text(Partition{3, 1}), "(3,1)");
  EXPECT_EQ(to_text(Partition{}), "(0)");
  EXPECT_EQ(to_text(MP({Partition{2}, Partition{1, 1}})), "((2);(1,1))");
}

TEST(OutputFormat, Parse) {
  EXPECT_EQ(parse_output_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_output_format("latex"), OutputFormat::Latex);
  EXPECT_EQ(parse_output_format("text"), OutputFormat::Text);
  EXPECT_THROW((void)parse_output_format("xml"), Error);
}

TEST(Json, FactoredExample) {
  const json j = to_json(F(1, q1, q2, 2));
  EXPECT_EQ(j["factors"], json::parse(R"([[{"c":1,"pos":"q1","neg":"q2"},2]])"));
  EXPECT_EQ(j["num"], "1");
  EXPECT_EQ(j["den"], "1");
  EXPECT_EQ(to_json(LinearForm(-2, X)), json::parse(R"({"c":-2,"pos":"x","neg":null})"));
}

TEST(Json, BigIntegersAreStrings) {
  const mpz_class top = factorial(30) + 1;
  const FactoredRational big(mpq_class(top, 7));
  const json j = to_json(big);
  EXPECT_EQ(j["num"], top.get_str());
  EXPECT_EQ(j["den"], "7");
  EXPECT_EQ(factored_from_json(j), big);
}

TEST(Json, CombinatoricsRoundTrip) {
  for (const auto& lambda : enumerate_multipartitions(3, 4)) {
    EXPECT_EQ(multipartition_from_json(to_json(lambda)), lambda);
    EXPECT_EQ(multipartition_from_json(json::parse(to_json(lambda).dump())), lambda);
  }
  EXPECT_EQ(partition_from_json(json::parse("[3,1]")), Partition({3, 1}));
  const Node node{2, 3, 1};
  EXPECT_EQ(node_from_json(to_json(node)), node);
}

TEST(Json, SchurValuesRoundTrip) {
  for (int m = 1; m <= 3; ++m)
    for (const auto& lambda : enumerate_multipartitions(m, 3))
      for (const auto& route : {SchurFormula::product(), SchurFormula::symbol(), SchurFormula::cancellation_free()}) {
        const FactoredRational s = schur_element(lambda, route);
        const FactoredRational back = factored_from_json(json::parse(to_json(s).dump()));
        EXPECT_TRUE(fr_equal(back, s));
        const SparsePoly poly = fr_expand(s, Alphabet{m, false});
        EXPECT_EQ(sparse_poly_from_json(json::parse(to_json(poly).dump()), Alphabet{m, false}), poly);
      }
}

TEST(Json, NonCanonicalFormsAreAccepted) {
  EXPECT_EQ(linear_form_from_json(json::parse(R"({"c":0,"pos":"q2","neg":"q1"})")), F(0, q2, q1));
  EXPECT_EQ(linear_form_from_json(json::parse(R"({"c":3,"pos":null,"neg":"x"})")), F(3, std::nullopt, X));
  const json j = json::parse(R"({"num":"1","den":"1","factors":[[{"c":1,"pos":"q2","neg":"q1"},1]]})");
  EXPECT_EQ(factored_from_json(j), F(1, q2, q1));
}

TEST(Json, MalformedInputThrowsParse) {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  EXPECT_EQ(code([] { (void)partition_from_json(json::parse("[1,2]")); }), ErrorCode::Parse);
  EXPECT_EQ(code([] { (void)partition_from_json(json::parse(R"("x")")); }), ErrorCode::Parse);
  EXPECT_EQ(code([] { (void)multipartition_from_json(json::parse("[]")); }), ErrorCode::Parse);
  EXPECT_EQ(code([] { (void)factored_from_json(json::parse(R"({"num":"1"})")); }), ErrorCode::Parse);
  EXPECT_EQ(code([] { (void)factored_from_json(json::parse(R"({"num":"1","den":"0","factors":[]})")); }),
            ErrorCode::Parse);
  EXPECT_EQ(code([] { (void)linear_form_from_json(json::parse(R"({"c":1,"pos":"z","neg":null})")); }),
            ErrorCode::Parse);
  EXPECT_EQ(code([] { (void)sparse_poly_from_json(json::parse(R"([[[1],"2"]])"), Alphabet{2, false}); }),
            ErrorCode::Parse);
}

TEST(Json, Report) {
  SemisimplicityReport r;
  r.field = Field::prime(7);
  r.p_value = FieldElement(Field::prime(7), 3);
  r.semisimple = true;
  r.vanishing = std::vector<Multipartition>{};
  r.agreement = true;
  EXPECT_EQ(to_json(r), json::parse(R"({"p_value":"3","semisimple":true,"vanishing":[],"agreement":true,"field":"Fp:7"})"));
  r.vanishing.reset();
  r.agreement.reset();
  EXPECT_TRUE(to_json(r)["vanishing"].is_null());
  EXPECT_TRUE(to_json(r)["agreement"].is_null());
}

}  // namespace
}  // namespace schurkit
