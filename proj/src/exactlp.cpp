// Copyright 2026 The boxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "boxlab/exactlp.hpp"

#include <limits>
#include <string>

namespace boxlab::lp {

void LinearProgram::add_eq(std::vector<Rational> row, Rational rhs) {
  eq_rows.push_back(std::move(row));
  eq_rhs.push_back(std::move(rhs));
}

void LinearProgram::add_le(std::vector<Rational> row, Rational rhs) {
  le_rows.push_back(std::move(row));
  le_rhs.push_back(std::move(rhs));
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_well_formed(const LinearProgram& p) {
  if (!p.objective.empty() && p.objective.size() != p.num_vars) {
    throw MalformedProgram("objective has " + std::to_string(p.objective.size()) + " coefficients for " +
                           std::to_string(p.num_vars) + " variables");
  }
  if (p.eq_rows.size() != p.eq_rhs.size() || p.le_rows.size() != p.le_rhs.size()) {
    throw MalformedProgram("constraint rows and right-hand sides differ in count");
  }
  for (const auto& r : p.eq_rows) {
    if (r.size() != p.num_vars) throw MalformedProgram("equality row has the wrong width");
  }
  for (const auto& r : p.le_rows) {
    if (r.size() != p.num_vars) throw MalformedProgram("inequality row has the wrong width");
  }
  if (!p.nonneg.empty() && p.nonneg.size() != p.num_vars) {
    throw MalformedProgram("nonnegativity flags do not match the variable count");
  }
}

// Standard form  A x = b, x >= 0, b >= 0. Original variable j maps to column
// pos[j], plus column neg[j] (subtracted) when it is free; le row i gets a
// slack column. Rows are negated where needed to make b nonnegative.
struct Standard {
  std::size_t m = 0, n = 0;
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  std::vector<mpq_class> c;
  std::vector<int> row_sign;  // +1 or -1 applied to each original row
  std::vector<std::size_t> pos, neg;
};

Standard standardize(const LinearProgram& p) {
  Standard s;
  s.pos.resize(p.num_vars);
  s.neg.assign(p.num_vars, kNone);
  std::size_t col = 0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    s.pos[j] = col++;
    if (!p.is_nonneg(j)) s.neg[j] = col++;
  }
  const std::size_t first_slack = col;
  s.m = p.eq_rows.size() + p.le_rows.size();
  s.n = first_slack + p.le_rows.size();
  s.a.assign(s.m, std::vector<mpq_class>(s.n));
  s.b.resize(s.m);
  s.row_sign.resize(s.m);
  auto fill = [&](std::size_t i, const std::vector<Rational>& row, const Rational& rhs) {
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      s.a[i][s.pos[j]] = row[j].raw();
      if (s.neg[j] != kNone) s.a[i][s.neg[j]] = -row[j].raw();
    }
    s.b[i] = rhs.raw();
  };
  for (std::size_t i = 0; i < p.eq_rows.size(); ++i) fill(i, p.eq_rows[i], p.eq_rhs[i]);
  for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
    const std::size_t r = p.eq_rows.size() + i;
    fill(r, p.le_rows[i], p.le_rhs[i]);
    s.a[r][first_slack + i] = 1;
  }
  for (std::size_t i = 0; i < s.m; ++i) {
    s.row_sign[i] = sgn(s.b[i]) < 0 ? -1 : 1;
    if (s.row_sign[i] < 0) {
      for (auto& v : s.a[i]) v = -v;
      s.b[i] = -s.b[i];
    }
  }
  s.c.assign(s.n, 0);
  if (!p.objective.empty()) {
    const bool flip = p.sense == Sense::Maximize;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      mpq_class cj = p.objective[j].raw();
      if (flip) cj = -cj;
      s.c[s.pos[j]] = cj;
      if (s.neg[j] != kNone) s.c[s.neg[j]] = -cj;
    }
  }
  return s;
}

// Tableau over `cols` columns. Row 0 of the classical layout is kept
// separately as reduced costs `rc` with right-hand side `neg_obj` = -z.
struct Tableau {
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  std::vector<std::size_t> basis;
  std::vector<mpq_class> rc;
  mpq_class neg_obj;
  std::size_t pivots = 0;

  void pivot(std::size_t r, std::size_t c) {
    const mpq_class piv = a[r][c];
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < a[r].size(); ++k) {
      if (sgn(a[r][k]) != 0) {
        a[r][k] /= piv;
        nz.push_back(k);
      }
    }
    b[r] /= piv;
    mpq_class f;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      f = a[i][c];
      for (std::size_t k : nz) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    if (sgn(rc[c]) != 0) {
      f = rc[c];
      for (std::size_t k : nz) rc[k] -= f * a[r][k];
      neg_obj -= f * b[r];
    }
    basis[r] = c;
    ++pivots;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool run(std::size_t limit) {
    mpq_class best, ratio;
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < limit; ++j) {
        if (sgn(rc[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i][enter]) <= 0) continue;
        ratio = b[i] / a[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

Result solve(const LinearProgram& program) {
  check_well_formed(program);
  const Standard s = standardize(program);
  Result result;

  // Phase 1: minimise the sum of one artificial per row.
  Tableau t;
  t.a.assign(s.m, std::vector<mpq_class>(s.n + s.m));
  t.b = s.b;
  t.basis.resize(s.m);
  t.rc.assign(s.n + s.m, 0);
  for (std::size_t i = 0; i < s.m; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      t.a[i][j] = s.a[i][j];
      t.rc[j] -= s.a[i][j];
    }
    t.a[i][s.n + i] = 1;
    t.basis[i] = s.n + i;
    t.neg_obj -= s.b[i];
  }
  // Phase 1 is bounded below by 0, so run() cannot report unboundedness.
  t.run(s.n + s.m);

  if (sgn(t.neg_obj) != 0) {
    // Phase-1 optimum > 0. Simplex multipliers y_i = 1 - rc(artificial i)
    // satisfy A^T y <= 0 < b^T y on the standard form.
    std::vector<Rational> farkas(s.m);
    for (std::size_t i = 0; i < s.m; ++i) {
      const mpq_class y = 1 - t.rc[s.n + i];
      // Map back to original rows: w = sign * y; u = -w (eq), v = -w (le).
      farkas[i] = Rational(mpq_class(-(s.row_sign[i] * y)));
    }
    if (!certifies_infeasibility(program, farkas)) {
      throw std::logic_error("exactlp: phase-1 infeasibility certificate failed verification");
    }
    result.status = Status::Infeasible;
    result.farkas = std::move(farkas);
    result.pivots = t.pivots;
    return result;
  }

  // Drive zero-valued artificials out of the basis; drop redundant rows.
  for (std::size_t r = 0; r < t.a.size();) {
    if (t.basis[r] < s.n) {
      ++r;
      continue;
    }
    std::size_t col = kNone;
    for (std::size_t j = 0; j < s.n; ++j) {
      if (sgn(t.a[r][j]) != 0) {
        col = j;
        break;
      }
    }
    if (col == kNone) {
      t.a.erase(t.a.begin() + static_cast<std::ptrdiff_t>(r));
      t.b.erase(t.b.begin() + static_cast<std::ptrdiff_t>(r));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
      continue;
    }
    t.pivot(r, col);
    ++r;
  }
  for (auto& row : t.a) row.resize(s.n);

  // Phase 2.
  t.rc = s.c;
  t.rc.resize(s.n);
  t.neg_obj = 0;
  for (std::size_t i = 0; i < t.a.size(); ++i) {
    const mpq_class& cb = s.c[t.basis[i]];
    if (sgn(cb) == 0) continue;
    for (std::size_t j = 0; j < s.n; ++j) t.rc[j] -= cb * t.a[i][j];
    t.neg_obj -= cb * t.b[i];
  }
  const bool bounded = t.run(s.n);
  result.pivots = t.pivots;
  if (!bounded) {
    result.status = Status::Unbounded;
    return result;
  }

  std::vector<mpq_class> xs(s.n);
  for (std::size_t i = 0; i < t.a.size(); ++i) xs[t.basis[i]] = t.b[i];
  result.solution.resize(program.num_vars);
  for (std::size_t j = 0; j < program.num_vars; ++j) {
    mpq_class v = xs[s.pos[j]];
    if (s.neg[j] != kNone) v -= xs[s.neg[j]];
    result.solution[j] = Rational(v);
  }
  if (!satisfies(program, result.solution)) {
    throw std::logic_error("exactlp: optimal solution failed exact verification");
  }
  Rational value;
  if (!program.objective.empty()) {
    for (std::size_t j = 0; j < program.num_vars; ++j) value += program.objective[j] * result.solution[j];
  }
  result.value = value;
  result.status = Status::Optimal;
  return result;
}

bool satisfies(const LinearProgram& p, const std::vector<Rational>& x) {
  if (x.size() != p.num_vars) return false;
  auto dot = [&](const std::vector<Rational>& row) {
    mpq_class acc;
    for (std::size_t j = 0; j < p.num_vars; ++j) acc += row[j].raw() * x[j].raw();
    return acc;
  };
  for (std::size_t i = 0; i < p.eq_rows.size(); ++i) {
    if (dot(p.eq_rows[i]) != p.eq_rhs[i].raw()) return false;
  }
  for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
    if (dot(p.le_rows[i]) > p.le_rhs[i].raw()) return false;
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (p.is_nonneg(j) && x[j].sign() < 0) return false;
  }
  return true;
}

bool certifies_infeasibility(const LinearProgram& p, const std::vector<Rational>& y) {
  const std::size_t ne = p.eq_rows.size();
  if (y.size() != ne + p.le_rows.size()) return false;
  for (std::size_t i = 0; i < p.le_rows.size(); ++i) {
    if (y[ne + i].sign() < 0) return false;
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    mpq_class col;
    for (std::size_t i = 0; i < ne; ++i) col += y[i].raw() * p.eq_rows[i][j].raw();
    for (std::size_t i = 0; i < p.le_rows.size(); ++i) col += y[ne + i].raw() * p.le_rows[i][j].raw();
    if (p.is_nonneg(j) ? sgn(col) < 0 : sgn(col) != 0) return false;
  }
  mpq_class rhs;
  for (std::size_t i = 0; i < ne; ++i) rhs += y[i].raw() * p.eq_rhs[i].raw();
  for (std::size_t i = 0; i < p.le_rows.size(); ++i) rhs += y[ne + i].raw() * p.le_rhs[i].raw();
  return sgn(rhs) < 0;
}

namespace {

// Incremental row echelon basis: each stored row has a leading 1 at its pivot
// column and zeros at the pivot columns of the other rows.
class EchelonBasis {
 public:
  bool insert(std::vector<mpq_class> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t pc = pivots_[k];
      if (sgn(v[pc]) == 0) continue;
      const mpq_class f = v[pc];
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[k][j];
    }
    std::size_t pc = kNone;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (sgn(v[j]) != 0) {
        pc = j;
        break;
      }
    }
    if (pc == kNone) return false;
    const mpq_class piv = v[pc];
    for (auto& e : v) e /= piv;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      if (sgn(rows_[k][pc]) == 0) continue;
      const mpq_class f = rows_[k][pc];
      for (std::size_t j = 0; j < v.size(); ++j) rows_[k][j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(pc);
    return true;
  }

 private:
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<mpq_class> to_mpq(const std::vector<Rational>& row) {
  std::vector<mpq_class> v(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) v[j] = row[j].raw();
  return v;
}

}  // namespace

std::vector<std::size_t> independent_rows(const std::vector<std::vector<Rational>>& rows) {
  EchelonBasis basis;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (basis.insert(to_mpq(rows[i]))) keep.push_back(i);
  }
  return keep;
}

std::size_t rank(std::vector<std::vector<Rational>> rows) { return independent_rows(rows).size(); }

}  // namespace boxlab::lp
