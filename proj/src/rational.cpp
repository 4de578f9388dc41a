#include "helly/rational.hpp"

#include "helly/errors.hpp"

namespace helly {

Rational rat(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidInput, "rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(ErrorKind::Parse, "empty rational literal");
  std::string num = text;
  std::string den = "1";
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  auto is_int_literal = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!is_int_literal(num) || !is_int_literal(den))
    fail(ErrorKind::Parse, "bad rational literal '" + text + "'");
  mpz_class n(num), d(den);
  if (d == 0) fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Rational& value) {
  if (!is_integer(value)) fail(ErrorKind::Internal, "expected integer, got " + to_string(value));
  const mpz_class& n = value.get_num();
  if (!n.fits_slong_p()) fail(ErrorKind::Internal, "integer out of int64 range: " + to_string(value));
  return static_cast<std::int64_t>(n.get_si());
}

Rational rat_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

Rational rat_ceil(const Rational& value) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return Rational(q);
}

} // namespace helly
