#include "naklab/notation.hpp"

#include <cctype>

namespace naklab {

std::string format_monomial(const GradedFrobeniusAlgebra& alg, CentralSign sign, const NakajimaMonomial& m) {
  std::string out;
  for (const auto& f : m.factors()) {
    out += mode_letter(sign);
    out += "[" + std::to_string(-f.mode) + "](" + alg.basis_name(f.basis) + ") ";
  }
  return out + "|0>";
}

std::string format_vector(const GradedFrobeniusAlgebra& alg, CentralSign sign, const FockVector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : v.terms()) {
    if (!out.empty()) out += " + ";
    if (c != Scalar(1)) {
      const bool mixed = !c.is_real() && sgn(c.re()) != 0;
      out += mixed ? "(" + c.str() + ")" : c.str();
      out += "*";
    }
    out += format_monomial(alg, sign, m);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(const GradedFrobeniusAlgebra& alg, CentralSign sign, std::string_view text)
      : alg_(alg), sign_(sign), s_(text) {}

  FockVector vector() {
    skip();
    FockVector out;
    if (s_.substr(pos_) == "0") return out;
    bool negate = false;
    if (peek() == '-' || peek() == '+') {
      negate = get() == '-';
      skip();
    }
    for (;;) {
      auto [c, m] = term();
      out.add(m, negate ? -c : c);
      skip();
      if (pos_ == s_.size()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negate = op == '-';
      skip();
      if (peek() == '-' || peek() == '+') {
        if (get() == '-') negate = !negate;
        skip();
      }
    }
    return out;
  }

  std::optional<ClassRef> class_ref() {
    skip();
    if (pos_ >= s_.size() || (peek() != 'O' && peek() != 'G')) return std::nullopt;
    char letter = get();
    if ((letter == 'O') != (sign_ == CentralSign::Orbifold))
      fail(std::string("class ") + letter + " does not belong to this side");
    expect('[');
    int k = integer();
    if (k < 0) fail("class index must be nonnegative");
    expect(']');
    ClassRef ref{k, basis_ref()};
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return ref;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse \"" + std::string(s_) + "\" at position " + std::to_string(pos_) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  char get() {
    if (pos_ >= s_.size()) fail("unexpected end of input");
    return s_[pos_++];
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (get() != c) fail(std::string("expected '") + c + "'");
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start || !std::isdigit(static_cast<unsigned char>(s_[pos_ - 1]))) fail("expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  int basis_ref() {
    expect('(');
    std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    expect(')');
    if (auto idx = alg_.index_of(name)) return *idx;
    fail("unknown basis element '" + name + "'");
  }

  Scalar coefficient() {
    if (peek() == '(') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
      std::string inner(s_.substr(start, pos_ - start));
      expect(')');
      try {
        return Scalar::parse(inner);
      } catch (const std::exception& e) {
        fail(e.what());
      }
    }
    if (peek() == 'i') {
      ++pos_;
      return Scalar::i();
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/') ++pos_;
    Rational r;
    try {
      r = parse_rational(s_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      fail(e.what());
    }
    if (s_.substr(pos_, 2) == "*i") {
      pos_ += 2;
      return Scalar(Rational(0), r);
    }
    return Scalar(r);
  }

  std::pair<Scalar, NakajimaMonomial> term() {
    Scalar c(1);
    char p = peek();
    if (std::isdigit(static_cast<unsigned char>(p)) || p == '(' || (p == 'i' && s_.substr(pos_, 2) != "i[")) {
      c = coefficient();
      skip();
      if (get() != '*') fail("expected '*' after coefficient");
      skip();
    }
    std::vector<Factor> factors;
    for (;;) {
      skip();
      if (s_.substr(pos_, 3) == "|0>") {
        pos_ += 3;
        break;
      }
      char letter = get();
      if (letter != 'a' && letter != 'p') fail("expected a creation factor or |0>");
      if (letter != mode_letter(sign_)) fail(std::string("mode letter '") + letter + "' does not belong to this side");
      expect('[');
      int mode = integer();
      expect(']');
      if (mode >= 0) fail("only creation modes (negative) may appear in a state");
      factors.push_back(Factor{-mode, basis_ref()});
    }
    return {c, NakajimaMonomial(std::move(factors))};
  }

  const GradedFrobeniusAlgebra& alg_;
  CentralSign sign_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FockVector parse_vector(const GradedFrobeniusAlgebra& alg, CentralSign sign, std::string_view text) {
  return Parser(alg, sign, text).vector();
}

std::variant<ClassRef, FockVector> parse_operand(const GradedFrobeniusAlgebra& alg, CentralSign sign,
                                                 std::string_view text) {
  if (auto ref = Parser(alg, sign, text).class_ref()) return *ref;
  return parse_vector(alg, sign, text);
}

}  // namespace naklab
