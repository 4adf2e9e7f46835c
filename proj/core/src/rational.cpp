#include "operads/rational.hpp"

#include <cctype>
#include <ostream>

#include "operads/error.hpp"

namespace operads {

Rational::Rational(long n, long d) {
  if (d == 0) throw Error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view s) {
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char c : t)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  const auto slash = s.find('/');
  const std::string num(s.substr(0, slash));
  if (!valid_int(num)) throw ParseError("bad rational: '" + std::string(s) + "'");
  if (slash == std::string_view::npos) return Rational(mpq_class(mpz_class(num)));
  const std::string den(s.substr(slash + 1));
  if (!valid_int(den)) throw ParseError("bad rational: '" + std::string(s) + "'");
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(s) + "'");
  return Rational(mpq_class(mpz_class(num), d));
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace operads
