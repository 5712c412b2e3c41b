#include "hopfcore/rational.hpp"

#include "hopfcore/errors.hpp"

#include <cctype>

namespace hopfcore {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      return false;
  return true;
}

} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw FormatError("malformed rational: '" + std::string(text) + "'");

  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0)
    throw FormatError("zero denominator: '" + std::string(text) + "'");
  if (!text.empty() && text.front() == '-')
    n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

} // namespace hopfcore
