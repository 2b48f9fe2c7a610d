#include "rncdr/rational.hpp"

#include <cctype>
#include <cmath>

#include "rncdr/error.hpp"

namespace rncdr {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto bad = [&] { fail(ErrorKind::InvalidInput, "not a rational number: '" + std::string(text) + "'"); };
  std::string_view s = text;
  if (s.empty()) bad();
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational out;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad();
    mpz_class d{std::string(den), 10};
    if (d == 0) bad();
    out = Rational(mpz_class{std::string(num), 10}, d);
    out.canonicalize();
  } else {
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      auto es = s.substr(e + 1);
      bool eneg = false;
      if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
        eneg = es.front() == '-';
        es.remove_prefix(1);
      }
      if (!all_digits(es) || es.size() > 6) bad();
      exp10 = std::stol(std::string(es));
      if (eneg) exp10 = -exp10;
      s = s.substr(0, e);
    }
    std::string digits;
    auto dot = s.find('.');
    if (dot != std::string_view::npos) {
      auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) bad();
      digits = std::string(ip) + std::string(fp);
      exp10 -= static_cast<long>(fp.size());
    } else {
      if (!all_digits(s)) bad();
      digits = std::string(s);
    }
    out = Rational(mpz_class(digits, 10)) * pow10(exp10);
  }
  return neg ? Rational(-out) : out;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

Rational from_double(double x) {
  if (!std::isfinite(x)) fail(ErrorKind::InvalidInput, "non-finite value");
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

std::vector<double> to_double(const RVec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_d());
  return out;
}

bool is_zero(const RVec& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

RVec primitive(const RVec& v) {
  mpz_class l = 1, g = 0;
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  RVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    out[i] = v[i] * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_num().get_mpz_t());
  }
  if (g == 0) return out;
  int lead = 0;
  for (const auto& x : out)
    if (sgn(x) != 0) {
      lead = sgn(x);
      break;
    }
  for (auto& x : out) {
    x /= g;
    if (lead < 0) x = -x;
  }
  return out;
}

Rational dot(const RVec& a, const RVec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

}  // namespace rncdr
