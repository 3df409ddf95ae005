#pragma once

#include <climits>
#include <compare>
#include <optional>
#include <string>

namespace schurkit {

/// A parameter q_s (s >= 1) or the indeterminate x.
/// Ranked q_1 < q_2 < ... < x; the rank fixes the orientation of linear forms.
class Variable {
 public:
  static Variable q(int s);
  static Variable x() noexcept { return Variable(kX); }

  [[nodiscard]] bool is_x() const noexcept { return code_ == kX; }
  /// Parameter index s for q_s; 0 for x.
  [[nodiscard]] int index() const noexcept { return is_x() ? 0 : code_; }
  [[nodiscard]] int rank() const noexcept { return code_; }
  /// "q3" or "x"
  [[nodiscard]] std::string name() const;
  /// Inverse of name(); throws Parse.
  static Variable parse(const std::string& text);

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  static constexpr int kX = INT_MAX;
  explicit Variable(int code) noexcept : code_(code) {}
  int code_;
};

struct NormalizedForm;

/// c + pos - neg with at least one variable present. Only canonical forms are
/// constructible: a lone variable sits in pos, and when both are present pos
/// has the smaller rank. Constructing anything else goes through normalize().
class LinearForm {
 public:
  using Normalized = NormalizedForm;

  static Normalized normalize(long c, std::optional<Variable> pos, std::optional<Variable> neg);

  /// Throws InvalidArgument when (c, pos, neg) is not already canonical.
  LinearForm(long c, Variable pos, std::optional<Variable> neg = std::nullopt);

  [[nodiscard]] long constant() const noexcept { return c_; }
  [[nodiscard]] const Variable& pos() const noexcept { return pos_; }
  [[nodiscard]] const std::optional<Variable>& neg() const noexcept { return neg_; }
  [[nodiscard]] bool mentions(const Variable& v) const noexcept { return pos_ == v || neg_ == v; }

  /// Canonical factor order: by pos, then neg (absent first), then constant.
  friend std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) noexcept;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  long c_;
  Variable pos_;
  std::optional<Variable> neg_;
};

/// Result of bringing c + pos - neg into canonical shape:
/// value == sign * form, or value == constant when no variable survives.
struct NormalizedForm {
  int sign = 1;
  std::optional<LinearForm> form;
  long constant = 0;
};

}  // namespace schurkit
