#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rncdr {

using Rational = mpq_class;
using RVec = std::vector<Rational>;

// Accepts "3", "-2/6", "0.25", "1e-3", "-.5". Throws Error(InvalidInput) otherwise.
Rational parse_rational(std::string_view text);

// Canonical form: "3", "-1/2".
std::string to_string(const Rational& q);

// Exact value of a finite double.
Rational from_double(double x);

inline int sign(const Rational& q) { return sgn(q); }
inline double to_double(const Rational& q) { return q.get_d(); }

std::vector<double> to_double(const RVec& v);
bool is_zero(const RVec& v);

// Scale to coprime integers with the first nonzero entry positive.
RVec primitive(const RVec& v);

Rational dot(const RVec& a, const RVec& b);

}  // namespace rncdr
