#pragma once

#include <map>
#include <string>
#include <vector>

#include "rncdr/kinetics.hpp"
#include "rncdr/polynomial.hpp"

namespace rncdr {

struct MStar {
  PolyMatrix matrix;                  // m x m
  std::vector<RVec> omega;            // left-kernel basis of N used for replacement
  std::vector<size_t> replaced_rows;  // last d rows
};

// Builds N diag(z) F diag(k) with z over reactions (z1..zr) and k over
// species (k1..km), then replaces the last d = m - s rows by a left-kernel
// basis of N. Bound order symbols are substituted.
MStar build_m_star(const KineticSystem& sys);

// True for generated weighting symbols k<i> and z<j>.
bool is_weight_symbol(const std::string& s);
bool is_k_symbol(const std::string& s);
bool is_z_symbol(const std::string& s);

// Sign sets as bitmasks: 1 negative, 2 zero, 4 positive.
using SignSet = unsigned;
constexpr SignSet kNeg = 1, kZero = 2, kPos = 4, kAny = 7;
std::string sign_name(SignSet s);  // "+", "-", "0", ">=0", "<=0", "?"

enum class InjectivityStatus { Injective, NotInjective, Indeterminate };
const char* to_string(InjectivityStatus s);

struct GroupedTerm {
  Monomial weights;                 // product of k and z symbols
  SparsePolynomial coefficient;     // polynomial in order symbols
  SignSet sign = kAny;
};

struct InjectivityVerdict {
  InjectivityStatus status = InjectivityStatus::Indeterminate;
  std::vector<GroupedTerm> terms;      // all (k,z) groups in canonical order
  std::vector<GroupedTerm> offending;  // minority-sign or unresolved groups
};

InjectivityVerdict injectivity_verdict(const SparsePolynomial& det, const std::map<std::string, Assumption>& assumptions);

struct InjectivityReport {
  MStar mstar;
  SparsePolynomial det;
  InjectivityVerdict verdict;
};

InjectivityReport analyze_injectivity(const KineticSystem& sys);

// Flips the overall sign so the first term has a positive rational coefficient.
SparsePolynomial normalize_leading(const SparsePolynomial& p);

}  // namespace rncdr
