#include "entrec/rational.hpp"

#include <cctype>
#include <cstddef>

namespace entrec {
namespace {

bool is_integer_literal(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(const std::string& s) {
  if (!is_integer_literal(s)) {
    fail(ErrorKind::ParseError, "not an integer literal: '" + s + "'");
  }
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den == 0 ? 1 : den) {
  if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  if (text.empty()) fail(ErrorKind::ParseError, "empty number literal");

  const std::size_t slash = text.find('/');
  if (slash != std::string::npos) {
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (sgn(den) == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  const std::size_t dot = text.find('.');
  if (dot != std::string::npos) {
    std::string head = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    bool negative = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      negative = head[0] == '-';
      head = head.substr(1);
    }
    if (head.empty()) head = "0";
    if (frac.empty()) fail(ErrorKind::ParseError, "trailing dot in '" + text + "'");
    mpz_class num = parse_integer(head + frac);
    mpz_class den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    if (negative) num = -num;
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(q);
  }

  return Rational(mpq_class(parse_integer(text)));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) fail(ErrorKind::ParseError, "division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::pow(unsigned long exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), exponent);
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(q);
}

}  // namespace entrec
