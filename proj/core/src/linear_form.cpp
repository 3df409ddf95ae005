#include "schurkit/linear_form.hpp"

#include <charconv>

#include "schurkit/error.hpp"

namespace schurkit {

Variable Variable::q(int s) {
  if (s < 1 || s == kX) throw Error(ErrorCode::InvalidArgument, "parameter index must be positive");
  return Variable(s);
}

std::string Variable::name() const { return is_x() ? "x" : "q" + std::to_string(code_); }

Variable Variable::parse(const std::string& text) {
  if (text == "x") return x();
  if (text.size() >= 2 && text[0] == 'q') {
    int s = 0;
    const char* first = text.data() + 1;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, s);
    if (ec == std::errc() && ptr == last && s >= 1) return q(s);
  }
  throw Error(ErrorCode::Parse, "unknown variable '" + text + "'");
}

LinearForm::Normalized LinearForm::normalize(long c, std::optional<Variable> pos, std::optional<Variable> neg) {
  if (pos && neg && *pos == *neg) {
    pos.reset();
    neg.reset();
  }
  if (!pos && !neg) return {1, std::nullopt, c};
  if (!pos) return {-1, LinearForm(-c, *neg), 0};  // c - v = -(-c + v)
  if (neg && neg->rank() < pos->rank()) return {-1, LinearForm(-c, *neg, *pos), 0};
  return {1, LinearForm(c, *pos, neg), 0};
}

LinearForm::LinearForm(long c, Variable pos, std::optional<Variable> neg) : c_(c), pos_(pos), neg_(neg) {
  if (neg_ && neg_->rank() <= pos_.rank())
    throw Error(ErrorCode::InvalidArgument, "linear form is not in canonical orientation");
}

std::strong_ordering operator<=>(const LinearForm& a, const LinearForm& b) noexcept {
  if (auto cmp = a.pos_ <=> b.pos_; cmp != 0) return cmp;
  const int a_neg = a.neg_ ? a.neg_->rank() : 0;
  const int b_neg = b.neg_ ? b.neg_->rank() : 0;
  if (auto cmp = a_neg <=> b_neg; cmp != 0) return cmp;
  return a.c_ <=> b.c_;
}

}  // namespace schurkit
