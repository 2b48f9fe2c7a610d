#include "rncdr/injectivity.hpp"

#include <cctype>

#include "rncdr/error.hpp"

namespace rncdr {

namespace {

bool is_order_symbol(const std::string& s);

bool weight_symbol(const std::string& s, char lead) {
  if (s.size() < 2 || s[0] != lead) return false;
  for (size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

SignSet multiply(SignSet a, SignSet b) {
  SignSet out = 0;
  for (int x : {-1, 0, 1})
    for (int y : {-1, 0, 1}) {
      if (!(a & (x < 0 ? kNeg : x == 0 ? kZero : kPos))) continue;
      if (!(b & (y < 0 ? kNeg : y == 0 ? kZero : kPos))) continue;
      int p = x * y;
      out |= p < 0 ? kNeg : p == 0 ? kZero : kPos;
    }
  return out;
}

SignSet add(SignSet a, SignSet b) {
  SignSet out = 0;
  for (int x : {-1, 0, 1})
    for (int y : {-1, 0, 1}) {
      if (!(a & (x < 0 ? kNeg : x == 0 ? kZero : kPos))) continue;
      if (!(b & (y < 0 ? kNeg : y == 0 ? kZero : kPos))) continue;
      if (x == 0) out |= b & (y < 0 ? kNeg : y == 0 ? kZero : kPos);
      else if (y == 0 || x == y) out |= x < 0 ? kNeg : kPos;
      else out |= kAny;
    }
  return out;
}

SignSet symbol_sign(const std::string& s, const std::map<std::string, Assumption>& assumptions) {
  if (is_weight_symbol(s)) return kPos;
  auto it = assumptions.find(s);
  if (it == assumptions.end()) return kAny;
  switch (it->second) {
    case Assumption::Negative: return kNeg;
    case Assumption::Zero: return kZero;
    case Assumption::Positive:
    case Assumption::GreaterThanOne: return kPos;
    case Assumption::NonNegative: return kZero | kPos;
  }
  return kAny;
}

bool is_order_symbol(const std::string& s) { return !is_weight_symbol(s); }

}  // namespace

bool is_k_symbol(const std::string& s) { return weight_symbol(s, 'k'); }
bool is_z_symbol(const std::string& s) { return weight_symbol(s, 'z'); }
bool is_weight_symbol(const std::string& s) { return is_k_symbol(s) || is_z_symbol(s); }

std::string sign_name(SignSet s) {
  switch (s) {
    case kPos: return "+";
    case kNeg: return "-";
    case kZero: return "0";
    case kZero | kPos: return ">=0";
    case kZero | kNeg: return "<=0";
    default: return "?";
  }
}

const char* to_string(InjectivityStatus s) {
  switch (s) {
    case InjectivityStatus::Injective: return "Injective";
    case InjectivityStatus::NotInjective: return "NotInjective";
    case InjectivityStatus::Indeterminate: return "Indeterminate";
  }
  return "?";
}

MStar build_m_star(const KineticSystem& sys) {
  const auto& net = sys.net;
  t_matrix(sys);  // PL-RDK check
  const size_t m = net.m(), r = net.r();
  for (const auto& row : sys.kin.orders)
    for (const auto& o : row)
      if (o.is_symbol() && is_weight_symbol(o.symbol))
        fail(ErrorKind::InvalidInput, "kinetic order symbol " + o.symbol + " clashes with a weighting symbol");
  RMatrix nmat = net.stoichiometric_matrix();
  std::vector<std::vector<SparsePolynomial>> f(r, std::vector<SparsePolynomial>(m));
  for (size_t j = 0; j < r; ++j)
    for (size_t s = 0; s < m; ++s) {
      const auto& o = sys.kin.orders[j][s];
      if (auto v = resolve(sys, o)) f[j][s] = SparsePolynomial(*v);
      else f[j][s] = SparsePolynomial::symbol(o.symbol);
    }
  MStar out;
  out.matrix.assign(m, std::vector<SparsePolynomial>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t c = 0; c < m; ++c) {
      SparsePolynomial acc;
      for (size_t j = 0; j < r; ++j) {
        if (sgn(nmat(i, j)) == 0 || f[j][c].is_zero()) continue;
        acc += SparsePolynomial(nmat(i, j)) * SparsePolynomial::symbol("z" + std::to_string(j + 1)) * f[j][c];
      }
      out.matrix[i][c] = acc * SparsePolynomial::symbol("k" + std::to_string(c + 1));
    }
  out.omega = left_kernel(nmat);
  const size_t d = out.omega.size();
  for (size_t j = 0; j < d; ++j) {
    size_t row = m - d + j;
    out.replaced_rows.push_back(row);
    for (size_t c = 0; c < m; ++c) out.matrix[row][c] = SparsePolynomial(out.omega[j][c]);
  }
  return out;
}

InjectivityVerdict injectivity_verdict(const SparsePolynomial& det, const std::map<std::string, Assumption>& assumptions) {
  std::map<std::string, Rational> zeros;
  for (const auto& [s, a] : assumptions)
    if (a == Assumption::Zero) zeros[s] = 0;
  SparsePolynomial p = det.substitute(zeros);

  std::map<Monomial, SparsePolynomial> groups;
  for (const auto& [mono, c] : p.terms()) {
    Monomial w = mono.filter(is_weight_symbol);
    groups[w] += SparsePolynomial::term(mono.filter(is_order_symbol), c);
  }

  InjectivityVerdict v;
  bool has_pos = false, has_neg = false, all_nonneg = true, all_nonpos = true;
  for (const auto& [w, coef] : groups) {
    if (coef.is_zero()) continue;
    SignSet total = kZero;
    for (const auto& [mono, c] : coef.terms()) {
      SignSet t = sgn(c) > 0 ? kPos : kNeg;
      for (const auto& [s, e] : mono.factors())
        for (int i = 0; i < e; ++i) t = multiply(t, symbol_sign(s, assumptions));
      total = add(total, t);
    }
    v.terms.push_back({w, coef, total});
    has_pos = has_pos || total == kPos;
    has_neg = has_neg || total == kNeg;
    all_nonneg = all_nonneg && (total & kNeg) == 0;
    all_nonpos = all_nonpos && (total & kPos) == 0;
  }
  if (v.terms.empty() || (has_pos && has_neg)) v.status = InjectivityStatus::NotInjective;
  else if ((all_nonneg && has_pos) || (all_nonpos && has_neg)) v.status = InjectivityStatus::Injective;
  else v.status = InjectivityStatus::Indeterminate;

  for (const auto& t : v.terms) {
    bool offend = false;
    if (v.status == InjectivityStatus::NotInjective) {
      size_t npos = 0, nneg = 0;
      for (const auto& u : v.terms) {
        npos += u.sign == kPos;
        nneg += u.sign == kNeg;
      }
      offend = t.sign == (npos >= nneg ? kNeg : kPos);
    } else if (v.status == InjectivityStatus::Indeterminate) {
      offend = t.sign != kPos && t.sign != kNeg;
    }
    if (offend) v.offending.push_back(t);
  }
  return v;
}

InjectivityReport analyze_injectivity(const KineticSystem& sys) {
  InjectivityReport rep;
  rep.mstar = build_m_star(sys);
  rep.det = determinant(rep.mstar.matrix);
  rep.verdict = injectivity_verdict(rep.det, sys.kin.assumptions);
  return rep;
}

SparsePolynomial normalize_leading(const SparsePolynomial& p) {
  if (p.is_zero() || sgn(p.terms().begin()->second) > 0) return p;
  return -p;
}

}  // namespace rncdr
