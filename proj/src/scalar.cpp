#include "naklab/scalar.hpp"

#include <cctype>

namespace naklab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw InputError("malformed rational '" + std::string(text) + "'");
  std::string canon(s.front() == '+' ? s.substr(1) : s);
  Rational q;
  q.set_str(canon, 10);
  if (slash != std::string_view::npos && sgn(q.get_den()) == 0)
    throw InputError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string rational_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string rational_string(const Rational& q) { return q.get_str(); }

Rational factorial(int n) {
  Rational r(1);
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

Scalar Scalar::i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return Scalar(1);
    case 1: return Scalar(Rational(0), Rational(1));
    case 2: return Scalar(-1);
    default: return Scalar(Rational(0), Rational(-1));
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real()) return Scalar(Rational(1) / re_);
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::str() const {
  if (is_real()) return rational_string(re_);
  const Rational mag = abs(im_);
  std::string im_part = mag == 1 ? "i" : rational_string(mag) + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + im_part;
  return rational_string(re_) + (sgn(im_) < 0 ? "-" : "+") + im_part;
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw InputError("empty scalar");
  // Split at the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  auto parse_imag = [&](std::string_view part) -> Rational {
    part = trim(part);
    std::string_view body = part.substr(0, part.size() - 1);  // drop 'i'
    if (!body.empty() && body.back() == '*') body.remove_suffix(1);
    if (body.empty() || body == "+") return Rational(1);
    if (body == "-") return Rational(-1);
    return parse_rational(body);
  };
  auto is_imag = [](std::string_view part) {
    part = trim(part);
    return !part.empty() && part.back() == 'i';
  };
  if (split == std::string_view::npos) {
    if (is_imag(s)) return Scalar(Rational(0), parse_imag(s));
    return Scalar(parse_rational(s));
  }
  std::string_view lhs = s.substr(0, split);
  std::string_view rhs = s.substr(split);
  if (!is_imag(rhs) || is_imag(lhs)) throw InputError("malformed scalar '" + std::string(text) + "'");
  return Scalar(parse_rational(lhs), parse_imag(rhs));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Rational fraction(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace naklab
