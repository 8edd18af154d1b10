#include "zeroapn/int_expr.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace zapn {

namespace {

class IntParser {
 public:
  IntParser(std::string_view text, const std::map<char, std::int64_t>& vars) : text_(text), vars_(vars) {}

  std::int64_t parse() {
    if (peek() == '\0') fail("empty expression");
    const auto v = expr();
    if (peek() != '\0') fail("unexpected character");
    return v;
  }

 private:
  std::int64_t expr() {
    auto v = term();
    while (true) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        v = checked_add(v, term());
      } else if (c == '-') {
        ++pos_;
        v = checked_sub(v, term());
      } else {
        return v;
      }
    }
  }

  std::int64_t term() {
    auto v = unary();
    while (true) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = checked_mul(v, unary());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        v = checked_mul(v, unary());
      } else {
        return v;
      }
    }
  }

  std::int64_t unary() {
    if (peek() == '-') {
      ++pos_;
      return checked_sub(0, unary());
    }
    if (peek() == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  std::int64_t power() {
    const auto base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const auto e = unary_power_operand();
    if (e < 0) fail("negative exponent");
    if (base == 0) return e == 0 ? 1 : 0;
    if (base == 1) return 1;
    if (base == -1) return e % 2 == 0 ? 1 : -1;
    std::int64_t result = 1;
    for (std::int64_t i = 0; i < e; ++i) result = checked_mul(result, base);
    return result;
  }

  // Right operand of ^: another power, so 2^3^2 = 2^9.
  std::int64_t unary_power_operand() {
    if (peek() == '-') {
      ++pos_;
      return checked_sub(0, power());
    }
    return power();
  }

  std::int64_t primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const auto v = expr();
      if (peek() != ')') fail("missing ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
        ++pos_;
      }
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      const auto it = vars_.find(c);
      if (it == vars_.end()) fail(std::string("unbound variable '") + c + "'");
      return it->second;
    }
    fail(c == '\0' ? "unexpected end of expression" : "unexpected character");
  }

  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer expression overflows int64");
    return r;
  }
  static std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer expression overflows int64");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer expression overflows int64");
    return r;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("expression error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  std::string_view text_;
  const std::map<char, std::int64_t>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::int64_t evaluate_int_expression(std::string_view text, const std::map<char, std::int64_t>& vars) {
  return IntParser(text, vars).parse();
}

}  // namespace zapn
