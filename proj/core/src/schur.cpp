#include "schurkit/schur.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "schurkit/error.hpp"

namespace schurkit {

namespace {

const Variable kX = Variable::x();

long binom2(long n) { return n * (n - 1) / 2; }

mpq_class sign_of_parity(long exponent) { return exponent % 2 == 0 ? mpq_class(1) : mpq_class(-1); }

void require_symbol_length(int L, int needed) {
  if (L < needed)
    throw Error(ErrorCode::LTooSmall,
                "L=" + std::to_string(L) + " is smaller than the required length " + std::to_string(needed));
}

FactoredRational product_route(const Multipartition& lambda) {
  FactoredRational result{mpq_class(hook_product(lambda))};
  const int m = lambda.level();
  for (int s = 1; s <= m; ++s)
    for (int t = s + 1; t <= m; ++t)
      result *= substitute_x(x_kernel(lambda.component(s), lambda.component(t)), s, t);
  return result;
}

FactoredRational symbol_route(const Multipartition& lambda, int L) {
  require_symbol_length(L, lambda.length());
  const int m = lambda.level();
  const LSymbol symbol = l_symbol(lambda, L);
  const auto row = [&](int s) -> const std::vector<int>& {
    return symbol.rows[static_cast<std::size_t>(s - 1)].entries();
  };

  FactoredRational result{sign_of_parity(binom2(m) * binom2(L))};
  for (int s = 1; s <= m; ++s)
    for (int t = s + 1; t <= m; ++t) result.multiply_form(0, Variable::q(s), Variable::q(t), L);

  // the diagonal s = t contributes the integers k, i.e. alpha!
  for (int s = 1; s <= m; ++s)
    for (int t = 1; t <= m; ++t)
      for (int alpha : row(s))
        for (int k = 1; k <= alpha; ++k) result.multiply_form(k, Variable::q(s), Variable::q(t));

  for (int s = 1; s <= m; ++s)
    for (int t = s + 1; t <= m; ++t)
      for (int alpha_s : row(s))
        for (int alpha_t : row(t)) result.multiply_form(alpha_s - alpha_t, Variable::q(s), Variable::q(t), -1);

  mpz_class vandermonde = 1;
  for (int s = 1; s <= m; ++s) {
    const auto& beta = row(s);
    for (std::size_t i = 0; i < beta.size(); ++i)
      for (std::size_t j = i + 1; j < beta.size(); ++j) vandermonde *= beta[i] - beta[j];
  }
  result.multiply_constant(mpq_class(1, 1) / mpq_class(vandermonde));
  return result;
}

FactoredRational cancellation_free_route(const Multipartition& lambda) {
  FactoredRational result;
  const int m = lambda.level();
  for (int s = 1; s <= m; ++s) {
    const Partition& ls = lambda.component(s);
    for (const Node& node : nodes(ls))
      for (int t = 1; t <= m; ++t)
        result.multiply_form(generalized_hook_length(ls, lambda.component(t), node.row, node.col), Variable::q(s),
                             Variable::q(t));
  }
  return result;
}

}  // namespace

std::string SchurFormula::name() const {
  switch (kind) {
    case Kind::Product: return "product";
    case Kind::Symbol: return symbol_length ? "symbol:" + std::to_string(*symbol_length) : "symbol";
    case Kind::CancellationFree: return "cancellation";
  }
  return "unknown";
}

SchurFormula SchurFormula::parse(const std::string& text) {
  if (text == "product") return product();
  if (text == "cancellation" || text == "cancellation-free") return cancellation_free();
  if (text == "symbol") return symbol();
  if (text.rfind("symbol:", 0) == 0) {
    int L = 0;
    const char* first = text.data() + 7;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, L);
    if (ec == std::errc() && ptr == last && L >= 0) return symbol(L);
  }
  throw Error(ErrorCode::Parse, "unknown formula '" + text + "'");
}

FactoredRational x_kernel(const Partition& lambda, const Partition& mu) {
  FactoredRational result;
  for (const Node& node : nodes(mu)) result.multiply_form(node.col - node.row, std::nullopt, kX);

  const int mu1 = mu.first();
  for (const Node& node : nodes(lambda)) {
    const int content = node.col - node.row;
    result.multiply_form(content - mu1, kX, std::nullopt);
    for (int k = 1; k <= mu1; ++k) {
      const int shift = content + mu.column_length(k) - k;
      result.multiply_form(shift + 1, kX, std::nullopt);
      result.multiply_form(shift, kX, std::nullopt, -1);
    }
  }
  return result;
}

FactoredRational y_kernel(const Partition& lambda, const Partition& mu, int L) {
  require_symbol_length(L, std::max(lambda.length(), mu.length()));
  const BetaSet a_set = beta_set(lambda, L);
  const BetaSet b_set = beta_set(mu, L);

  FactoredRational result{sign_of_parity(binom2(L))};
  result.multiply_form(0, kX, std::nullopt, L);
  for (int a : a_set.entries())
    for (int i = 1; i <= a; ++i) result.multiply_form(i, kX, std::nullopt);
  for (int b : b_set.entries())
    for (int j = 1; j <= b; ++j) result.multiply_form(j, std::nullopt, kX);
  for (int a : a_set.entries())
    for (int b : b_set.entries()) result.multiply_form(a - b, kX, std::nullopt, -1);
  return result;
}

FactoredRational z_kernel(const Partition& lambda, const Partition& mu) {
  FactoredRational result;
  for (const Node& node : nodes(lambda))
    result.multiply_form(generalized_hook_length(lambda, mu, node.row, node.col), kX, std::nullopt);
  for (const Node& node : nodes(mu))
    result.multiply_form(generalized_hook_length(mu, lambda, node.row, node.col), std::nullopt, kX);
  return result;
}

mpz_class hook_product(const Multipartition& lambda) {
  mpz_class product = 1;
  for (const auto& component : lambda.components())
    for (const Node& node : nodes(component)) product *= hook_length(component, node.row, node.col);
  return product;
}

FactoredRational schur_element(const Multipartition& lambda, const SchurFormula& formula) {
  switch (formula.kind) {
    case SchurFormula::Kind::Product: return product_route(lambda);
    case SchurFormula::Kind::Symbol: return symbol_route(lambda, formula.symbol_length.value_or(lambda.length()));
    case SchurFormula::Kind::CancellationFree: return cancellation_free_route(lambda);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown formula");
}

FactoredRational p_invariant(int m, int n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "p_invariant needs m >= 1 and n >= 1");
  FactoredRational result{mpq_class(factorial(n))};
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int d = -(n - 1); d <= n - 1; ++d) result.multiply_form(d, Variable::q(i), Variable::q(j));
  return result;
}

bool verify_mu_identity(const Partition& mu, int ell) {
  if (mu.empty() || ell < 1 || ell > mu.first())
    throw Error(ErrorCode::PreconditionViolation, "need a non-empty mu and 1 <= ell <= mu_1");
  const Variable y = kX;

  FactoredRational lhs = FactoredRational::form(mu.first(), y, std::nullopt, -1);
  for (int i = 1; i <= mu.column_length(ell); ++i) {
    lhs.multiply_form(mu.part(i) - i + 1, y, std::nullopt);
    lhs.multiply_form(mu.part(i) - i, y, std::nullopt, -1);
  }

  FactoredRational rhs = FactoredRational::form(ell - mu.column_length(ell) - 1, y, std::nullopt, -1);
  for (int j = ell; j <= mu.first(); ++j) {
    rhs.multiply_form(j - mu.column_length(j) - 1, y, std::nullopt);
    rhs.multiply_form(j - mu.column_length(j), y, std::nullopt, -1);
  }
  return fr_equal(lhs, rhs);
}

bool verify_hook_beta_identity(const Partition& lambda, int L) {
  const BetaSet beta = beta_set(lambda, L);
  mpz_class lhs = hook_product(Multipartition(std::vector<Partition>{lambda}));
  const auto& b = beta.entries();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j) lhs *= b[i] - b[j];
  mpz_class rhs = 1;
  for (int entry : b) rhs *= factorial(entry);
  return lhs == rhs;
}

bool verify_x_symmetry(const Partition& lambda, const Partition& mu) {
  return fr_equal(x_kernel(lambda, mu), negate_x(x_kernel(mu, lambda)));
}

ExpandedFraction trace_at_identity(int m, int n) {
  std::vector<FactoredRational> terms;
  for_each_multipartition(m, n, [&](const Multipartition& lambda) {
    FactoredRational term{mpq_class(num_standard_tableaux(lambda))};
    term *= schur_element(lambda, SchurFormula::cancellation_free()).inverse();
    terms.push_back(std::move(term));
  });
  return fr_sum(terms, Alphabet{m, false});
}

bool verify_trace_identity(int m, int n) {
  const ExpandedFraction sum = trace_at_identity(m, n);
  const Alphabet alphabet{m, false};
  const SparsePoly expected = m == 1 ? fr_expand(sum.denominator, alphabet) : SparsePoly(alphabet);
  return sum.numerator == expected;
}

}  // namespace schurkit
