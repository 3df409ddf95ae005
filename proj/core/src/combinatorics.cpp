#include "schurkit/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "schurkit/error.hpp"

namespace schurkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative part in partition");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw Error(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
  }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const noexcept {
  if (i < 1 || i > length()) return 0;
  return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column_length(int j) const noexcept {
  if (j < 1) return 0;
  int count = 0;
  for (int p : parts_) {
    if (p < j) break;
    ++count;
  }
  return count;
}

bool Partition::contains(int i, int j) const noexcept { return i >= 1 && j >= 1 && j <= part(i); }

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
  if (components_.empty()) throw Error(ErrorCode::InvalidArgument, "a multipartition needs at least one component");
}

int Multipartition::size() const noexcept {
  int n = 0;
  for (const auto& c : components_) n += c.size();
  return n;
}

int Multipartition::length() const noexcept {
  int len = 0;
  for (const auto& c : components_) len = std::max(len, c.length());
  return len;
}

BetaSet::BetaSet(std::vector<int> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0) throw Error(ErrorCode::InvalidArgument, "beta numbers must be non-negative");
    if (i + 1 < entries_.size() && entries_[i] <= entries_[i + 1])
      throw Error(ErrorCode::InvalidArgument, "beta numbers must be strictly decreasing");
  }
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> result;
  for (int j = 1; j <= lambda.first(); ++j) result.push_back(lambda.column_length(j));
  return Partition(std::move(result));
}

std::vector<Node> nodes(const Partition& lambda) {
  std::vector<Node> out;
  out.reserve(static_cast<std::size_t>(lambda.size()));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) out.push_back({i, j, 0});
  return out;
}

std::vector<Node> nodes(const Multipartition& lambda) {
  std::vector<Node> out;
  for (int s = 1; s <= lambda.level(); ++s)
    for (Node node : nodes(lambda.component(s))) {
      node.component = s;
      out.push_back(node);
    }
  return out;
}

namespace {

void require_node(const Partition& lambda, int i, int j) {
  if (!lambda.contains(i, j))
    throw Error(ErrorCode::NodeOutsideDiagram,
                "node (" + std::to_string(i) + "," + std::to_string(j) + ") is not in the diagram");
}

}  // namespace

int hook_length(const Partition& lambda, int i, int j) {
  require_node(lambda, i, j);
  return lambda.part(i) - i + lambda.column_length(j) - j + 1;
}

int generalized_hook_length(const Partition& lambda, const Partition& mu, int i, int j) {
  require_node(lambda, i, j);
  return lambda.part(i) - i + mu.column_length(j) - j + 1;
}

std::vector<Node> removable_nodes(const Partition& lambda) {
  std::vector<Node> out;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) > lambda.part(i + 1)) out.push_back({i, lambda.part(i), 0});
  return out;
}

BetaSet beta_set(const Partition& lambda, int L) {
  if (L < lambda.length())
    throw Error(ErrorCode::LTooSmall,
                "L=" + std::to_string(L) + " is smaller than the length " + std::to_string(lambda.length()));
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(L));
  for (int i = 1; i <= L; ++i) entries.push_back(lambda.part(i) + L - i);
  return BetaSet(std::move(entries));
}

Partition partition_from_beta(const BetaSet& beta) {
  const int L = beta.length();
  std::vector<int> parts;
  for (int i = 1; i <= L; ++i) parts.push_back(beta.entries()[static_cast<std::size_t>(i - 1)] - L + i);
  return Partition(std::move(parts));
}

BetaSet shift_beta(const BetaSet& beta) {
  std::vector<int> entries;
  entries.reserve(beta.entries().size() + 1);
  for (int b : beta.entries()) entries.push_back(b + 1);
  entries.push_back(0);
  return BetaSet(std::move(entries));
}

LSymbol l_symbol(const Multipartition& lambda, int L) {
  if (L < lambda.length())
    throw Error(ErrorCode::LTooSmall,
                "L=" + std::to_string(L) + " is smaller than the length " + std::to_string(lambda.length()));
  LSymbol symbol{L, {}};
  for (const auto& component : lambda.components()) symbol.rows.push_back(beta_set(component, L));
  return symbol;
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

// Compositions of n into m non-negative parts, lexicographically largest first.
void compositions_rec(int m, int remaining, std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& visit) {
  if (static_cast<int>(current.size()) == m - 1) {
    current.push_back(remaining);
    visit(current);
    current.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    current.push_back(k);
    compositions_rec(m, remaining - k, current, visit);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto level = partitions_of(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

void for_each_multipartition(int m, int n, const std::function<void(const Multipartition&)>& visit) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "level m must be at least 1");
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "size n must be non-negative");

  std::vector<std::vector<Partition>> by_size;
  for (int k = 0; k <= n; ++k) by_size.push_back(partitions_of(k));

  std::vector<int> composition;
  compositions_rec(m, n, composition, [&](const std::vector<int>& sizes) {
    // odometer over the component choices, last component fastest
    std::vector<std::size_t> index(static_cast<std::size_t>(m), 0);
    while (true) {
      std::vector<Partition> components;
      components.reserve(static_cast<std::size_t>(m));
      for (std::size_t s = 0; s < index.size(); ++s)
        components.push_back(by_size[static_cast<std::size_t>(sizes[s])][index[s]]);
      visit(Multipartition(std::move(components)));

      std::size_t s = index.size();
      while (s > 0) {
        --s;
        if (++index[s] < by_size[static_cast<std::size_t>(sizes[s])].size()) break;
        index[s] = 0;
        if (s == 0) return;
      }
    }
  });
}

std::vector<Multipartition> enumerate_multipartitions(int m, int n) {
  std::vector<Multipartition> out;
  for_each_multipartition(m, n, [&](const Multipartition& lambda) { out.push_back(lambda); });
  return out;
}

void check_permutation(std::span<const int> sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (int image : sigma) {
    if (image < 1 || image > static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(image)])
      throw Error(ErrorCode::InvalidArgument, "not a permutation of 1.." + std::to_string(sigma.size()));
    seen[static_cast<std::size_t>(image)] = true;
  }
}

Multipartition permute_components(const Multipartition& lambda, std::span<const int> sigma) {
  check_permutation(sigma);
  if (static_cast<int>(sigma.size()) != lambda.level())
    throw Error(ErrorCode::InvalidArgument, "permutation size does not match the level");
  std::vector<Partition> components(sigma.size());
  for (int s = 1; s <= lambda.level(); ++s)
    components[static_cast<std::size_t>(sigma[static_cast<std::size_t>(s - 1)] - 1)] = lambda.component(s);
  return Multipartition(std::move(components));
}

mpz_class factorial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "factorial of a negative number");
  mpz_class result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

mpz_class num_standard_tableaux(const Partition& lambda) {
  mpz_class hooks = 1;
  for (const Node& node : nodes(lambda)) hooks *= hook_length(lambda, node.row, node.col);
  return factorial(lambda.size()) / hooks;
}

mpz_class num_standard_tableaux(const Multipartition& lambda) {
  mpz_class result = factorial(lambda.size());
  for (const auto& component : lambda.components())
    result = result / factorial(component.size()) * num_standard_tableaux(component);
  return result;
}

}  // namespace schurkit
