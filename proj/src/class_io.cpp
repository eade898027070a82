#include "vortexmod/class_io.hpp"

#include "vortexmod/errors.hpp"

#include <cctype>
#include <string>

namespace vortexmod {

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!digits(num, true)) throw ParseError("not a rational number: '" + std::string(text) + "'");
  std::string ns(num);
  if (!ns.empty() && ns.front() == '+') ns.erase(0, 1);
  if (slash == std::string_view::npos) return Rational(BigInt(ns));
  const auto den = text.substr(slash + 1);
  if (!digits(den, false)) throw ParseError("not a rational number: '" + std::string(text) + "'");
  const BigInt q{std::string(den)};
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(BigInt(ns), q);
}

}  // namespace vortexmod

namespace vortexmod::symring {

std::string to_string(const Monomial& m) {
  std::string out;
  if (m.eta_power > 0) {
    out += "eta";
    if (m.eta_power > 1) out += "^" + std::to_string(m.eta_power);
  }
  if (!m.xi.empty()) {
    if (!out.empty()) out += "*";
    out += "xi[";
    for (std::size_t i = 0; i < m.xi.size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string(m.xi[i]);
    }
    out += "]";
  }
  return out;
}

std::string to_string(const Terms& terms) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = to_string(m);
    if (mono.empty()) {
      out += vortexmod::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += vortexmod::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const FreeClass& a) { return to_string(a.terms()); }
std::string to_string(const CohomologyClass& a) { return to_string(a.terms()); }

namespace {

class Parser {
 public:
  Parser(RingParams p, std::string_view text) : p_(p), s_(text) {}

  FreeClass parse() {
    skip();
    FreeClass total(p_);
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = get() == '-';
    }
    total = total + signed_term(negate);
    while (true) {
      skip();
      if (at_end()) break;
      const char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      total = total + signed_term(op == '-');
    }
    return total;
  }

 private:
  FreeClass signed_term(bool negate) {
    FreeClass t = term();
    return negate ? -t : t;
  }

  FreeClass term() {
    FreeClass acc = FreeClass::monomial(p_, Monomial{});
    acc = acc * factor();
    while (true) {
      skip();
      if (peek() != '*') break;
      get();
      acc = acc * factor();
    }
    return acc;
  }

  FreeClass factor() {
    skip();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') get();
      return FreeClass::monomial(p_, Monomial{}, parse_rational(s_.substr(start, pos_ - start)));
    }
    if (consume("eta")) return power_of(free_eta(p_));
    if (consume("xi")) {
      const auto idx = index_list();
      FreeClass acc = FreeClass::monomial(p_, Monomial{});
      for (int j : idx) acc = acc * checked([&] { return free_xi(p_, j); });
      return acc;
    }
    if (consume("sigma")) {
      skip();
      if (peek() == '[') {
        const auto idx = index_list();
        if (idx.size() != 1) fail("sigma[...] takes exactly one index");
        return power_of(checked([&] { return free_sigma_j(p_, idx.front()); }));
      }
      return power_of(free_sigma(p_));
    }
    fail("expected a number, eta, xi[...] or sigma");
  }

  template <typename F>
  FreeClass checked(F&& make) {
    try {
      return make();
    } catch (const ParameterError& e) {
      fail(e.what());
    }
  }

  FreeClass power_of(const FreeClass& base) {
    skip();
    if (peek() != '^') return base;
    get();
    const int k = integer();
    FreeClass acc = FreeClass::monomial(p_, Monomial{});
    for (int i = 0; i < k; ++i) acc = acc * base;
    return acc;
  }

  std::vector<int> index_list() {
    skip();
    if (get() != '[') fail("expected '['");
    std::vector<int> out;
    while (true) {
      out.push_back(integer());
      skip();
      const char c = get();
      if (c == ']') break;
      if (c != ',') fail("expected ',' or ']'");
    }
    return out;
  }

  int integer() {
    skip();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) get();
    if (start == pos_) fail("expected an integer");
    const auto digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6) fail("integer too large");
    return std::stoi(std::string(digits));
  }

  bool consume(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("class expression, position " + std::to_string(pos_) + ": " + why);
  }

  RingParams p_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FreeClass parse_class(RingParams p, std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty class expression");
  return Parser(p, text).parse();
}

}  // namespace vortexmod::symring
