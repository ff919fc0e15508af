#include "safeset/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace safeset {

namespace {

[[noreturn]] void bad_rational(std::string_view text) {
  throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_rational(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) bad_rational(text);

  Rational r;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(text);
    mpz_class p(std::string(num), 10), q(std::string(den), 10);
    if (q == 0) bad_rational(text);
    r.v_ = mpq_class(p) / mpq_class(q);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view intpart = s.substr(0, dot), frac = s.substr(dot + 1);
    if (intpart.empty() && frac.empty()) bad_rational(text);
    if (!intpart.empty() && !all_digits(intpart)) bad_rational(text);
    if (!frac.empty() && !all_digits(frac)) bad_rational(text);
    std::string digits = std::string(intpart) + std::string(frac);
    if (digits.empty()) bad_rational(text);
    mpz_class p(digits, 10);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), 10, frac.size());
    r.v_ = mpq_class(p) / mpq_class(q);
  } else {
    if (!all_digits(s)) bad_rational(text);
    r.v_ = mpq_class(mpz_class(std::string(s), 10));
  }
  if (negative) r.v_ = -r.v_;
  r.v_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace safeset
