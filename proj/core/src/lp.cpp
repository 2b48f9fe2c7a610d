#include "rncdr/lp.hpp"

#include "rncdr/error.hpp"
#include "rncdr/parallel.hpp"

namespace rncdr {

void LinearProgram::fix(size_t var, const Rational& value) {
  RVec c(num_vars);
  c[var] = 1;
  add(std::move(c), Rel::Eq, value);
}

void LinearProgram::at_least(size_t var, const Rational& value) {
  RVec c(num_vars);
  c[var] = 1;
  add(std::move(c), Rel::Ge, value);
}

void LinearProgram::at_most(size_t var, const Rational& value) {
  RVec c(num_vars);
  c[var] = 1;
  add(std::move(c), Rel::Le, value);
}

namespace {

class Tableau {
 public:
  // rows: constraint rows then the objective row; last column is the rhs.
  std::vector<RVec> t;
  std::vector<size_t> basis;
  size_t ncols = 0;  // structural columns, excluding rhs

  void pivot(size_t pr, size_t pc) {
    RVec& prow = t[pr];
    Rational inv = 1 / prow[pc];
    std::vector<size_t> nz;
    for (size_t j = 0; j <= ncols; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    for (size_t i = 0; i < t.size(); ++i) {
      if (i == pr || sgn(t[i][pc]) == 0) continue;
      Rational f = t[i][pc];
      for (size_t j : nz) t[i][j] -= f * prow[j];
    }
    basis[pr] = pc;
  }

  // Minimizes the objective row (reduced costs stored in the last row, value
  // in its rhs as the negated objective). Returns false when unbounded.
  bool run(const std::vector<bool>& allowed) {
    const size_t obj = t.size() - 1;
    for (;;) {
      size_t enter = ncols;
      for (size_t j = 0; j < ncols; ++j)
        if (allowed[j] && sgn(t[obj][j]) < 0) {
          enter = j;
          break;
        }
      if (enter == ncols) return true;
      size_t leave = obj;
      Rational best;
      for (size_t i = 0; i < obj; ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave == obj || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == obj) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  const size_t n = lp.num_vars;
  // Column layout: per variable one (nonneg) or two (free) columns, then one
  // slack per inequality, then one artificial per row.
  std::vector<size_t> pos_col(n), neg_col(n, SIZE_MAX);
  size_t col = 0;
  for (size_t v = 0; v < n; ++v) {
    pos_col[v] = col++;
    if (!lp.nonneg[v]) neg_col[v] = col++;
  }
  const size_t nstruct = col;
  size_t nslack = 0;
  for (const auto& c : lp.constraints)
    if (c.rel != Rel::Eq) ++nslack;
  const size_t m = lp.constraints.size();
  const size_t art0 = nstruct + nslack;
  Tableau tab;
  tab.ncols = art0 + m;
  tab.t.assign(m + 1, RVec(tab.ncols + 1));
  tab.basis.assign(m, 0);
  size_t slack = nstruct;
  for (size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    if (c.coeffs.size() != n) fail(ErrorKind::InvalidInput, "constraint width mismatch");
    RVec& row = tab.t[i];
    for (size_t v = 0; v < n; ++v) {
      if (sgn(c.coeffs[v]) == 0) continue;
      row[pos_col[v]] = c.coeffs[v];
      if (neg_col[v] != SIZE_MAX) row[neg_col[v]] = -c.coeffs[v];
    }
    if (c.rel == Rel::Ge) row[slack++] = -1;
    if (c.rel == Rel::Le) row[slack++] = 1;
    row[tab.ncols] = c.rhs;
    if (sgn(c.rhs) < 0)
      for (auto& x : row) x = -x;
    row[art0 + i] = 1;
    tab.basis[i] = art0 + i;
  }
  // Phase 1 objective: sum of artificials, priced out.
  RVec& obj = tab.t[m];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j <= tab.ncols; ++j)
      if (j < art0 || j == tab.ncols) obj[j] -= tab.t[i][j];
  std::vector<bool> allowed(tab.ncols, true);
  tab.run(allowed);
  LpResult res;
  if (sgn(obj[tab.ncols]) != 0) {
    res.status = LpStatus::Infeasible;
    return res;
  }
  // Drive artificials out of the basis; drop redundant rows.
  for (size_t i = 0; i < tab.basis.size();) {
    if (tab.basis[i] < art0) {
      ++i;
      continue;
    }
    size_t pc = art0;
    for (size_t j = 0; j < art0; ++j)
      if (sgn(tab.t[i][j]) != 0) {
        pc = j;
        break;
      }
    if (pc < art0) {
      tab.pivot(i, pc);
      ++i;
    } else {
      tab.t.erase(tab.t.begin() + static_cast<long>(i));
      tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
    }
  }
  for (size_t j = art0; j < tab.ncols; ++j) allowed[j] = false;
  const size_t rows = tab.basis.size();
  if (lp.minimize) {
    RVec& o = tab.t[rows];
    std::fill(o.begin(), o.end(), Rational(0));
    for (size_t v = 0; v < n; ++v) {
      o[pos_col[v]] = (*lp.minimize)[v];
      if (neg_col[v] != SIZE_MAX) o[neg_col[v]] = -(*lp.minimize)[v];
    }
    for (size_t i = 0; i < rows; ++i) {
      Rational f = o[tab.basis[i]];
      if (sgn(f) == 0) continue;
      for (size_t j = 0; j <= tab.ncols; ++j)
        if (sgn(tab.t[i][j]) != 0) o[j] -= f * tab.t[i][j];
    }
    if (!tab.run(allowed)) {
      res.status = LpStatus::Unbounded;
      return res;
    }
  }
  RVec cols(tab.ncols);
  for (size_t i = 0; i < rows; ++i) cols[tab.basis[i]] = tab.t[i][tab.ncols];
  res.x.assign(n, Rational(0));
  for (size_t v = 0; v < n; ++v) {
    res.x[v] = cols[pos_col[v]];
    if (neg_col[v] != SIZE_MAX) res.x[v] -= cols[neg_col[v]];
  }
  res.status = LpStatus::Optimal;
  return res;
}

std::optional<RVec> find_feasible(const LinearProgram& lp) {
  LinearProgram copy = lp;
  copy.minimize.reset();
  auto r = solve(copy);
  if (r.status == LpStatus::Infeasible) return std::nullopt;
  return r.x;
}

SignPattern pattern_from_index(unsigned long index, size_t dim) {
  SignPattern p(dim);
  for (size_t i = 0; i < dim; ++i) {
    int d = static_cast<int>(index % 3);
    p[i] = d == 0 ? 0 : (d == 1 ? 1 : -1);
    index /= 3;
  }
  return p;
}

std::optional<RVec> realize_sign_pattern(const std::vector<RVec>& basis_perp, const SignPattern& pattern) {
  const size_t dim = pattern.size();
  LinearProgram lp(dim);
  for (const auto& w : basis_perp) lp.add(w, Rel::Eq, 0);
  for (size_t i = 0; i < dim; ++i) {
    if (pattern[i] > 0) lp.at_least(i, 1);
    else if (pattern[i] < 0) lp.at_most(i, -1);
    else lp.fix(i, 0);
  }
  return find_feasible(lp);
}

std::vector<SignPattern> realizable_sign_patterns(const std::vector<RVec>& basis_perp, size_t dim) {
  unsigned long total = 1;
  for (size_t i = 0; i < dim; ++i) total *= 3;
  std::vector<char> ok(total, 0);
  parallel_for(total - 1, [&](size_t k) {
    auto p = pattern_from_index(k + 1, dim);
    ok[k + 1] = realize_sign_pattern(basis_perp, p).has_value();
  });
  std::vector<SignPattern> out;
  for (unsigned long k = 1; k < total; ++k)
    if (ok[k]) out.push_back(pattern_from_index(k, dim));
  return out;
}

}  // namespace rncdr
