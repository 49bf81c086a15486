// Copyright 2026 The inball Authors
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

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

namespace inball::lp {

// Dense LP support for the inscribed-ball problems: at most 4 free
// variables, a few thousand inequality rows. Maximization runs the
// two-phase primal simplex on the dual (k equality rows, one column per
// inequality), with Bland's rule so degenerate vertices cannot cycle. The
// reported point is recovered from the final basis against the original
// unscaled data, so it carries no accumulated pivot error.

inline constexpr int kMaxVars = 4;

enum class Status { Optimal, Infeasible, Unbounded, NumericalFailure };

// One inequality dot(a, v) <= b; only the first k entries of a are used.
struct Constraint {
  std::array<double, kMaxVars> a{};
  double b = 0.0;
};

struct Solution {
  Status status = Status::NumericalFailure;
  std::array<double, kMaxVars> point{};
  double value = 0.0;
  // Rows whose columns form the final dual basis. A subset of the tight
  // rows; callers wanting the full active set should recompute slacks.
  std::vector<int> tight;
};

namespace detail {

// Gaussian elimination with partial pivoting on a k x k system stored
// row-major. Returns false when the matrix is numerically singular.
inline bool solve_square(int k, std::vector<double>& m, std::vector<double>& rhs) {
  for (int col = 0; col < k; ++col) {
    int piv = col;
    for (int r = col + 1; r < k; ++r) {
      if (std::abs(m[r * k + col]) > std::abs(m[piv * k + col])) piv = r;
    }
    if (std::abs(m[piv * k + col]) < 1e-13) return false;
    if (piv != col) {
      for (int c = 0; c < k; ++c) std::swap(m[piv * k + c], m[col * k + c]);
      std::swap(rhs[piv], rhs[col]);
    }
    for (int r = 0; r < k; ++r) {
      if (r == col) continue;
      const double factor = m[r * k + col] / m[col * k + col];
      if (factor == 0.0) continue;
      for (int c = col; c < k; ++c) m[r * k + c] -= factor * m[col * k + c];
      rhs[r] -= factor * rhs[col];
    }
  }
  for (int r = 0; r < k; ++r) rhs[r] /= m[r * k + r];
  return true;
}

}  // namespace detail

// Maximizes dot(c, v) over {v : dot(rows[j].a, v) <= rows[j].b} with v free
// in R^k, 1 <= k <= kMaxVars.
inline Solution maximize(int k, const std::array<double, kMaxVars>& c,
                         const std::vector<Constraint>& rows) {
  Solution out;

  // Columns of the dual system, L2-normalized. Row scaling changes neither
  // the feasible set nor the recovered optimum; it keeps one pivot
  // tolerance meaningful for every column.
  std::vector<int> cols;
  std::vector<std::array<double, kMaxVars>> col_a;
  std::vector<double> col_f;
  cols.reserve(rows.size());
  for (std::size_t j = 0; j < rows.size(); ++j) {
    double nrm = 0.0;
    for (int i = 0; i < k; ++i) nrm += rows[j].a[i] * rows[j].a[i];
    nrm = std::sqrt(nrm);
    if (nrm <= 1e-14) {
      if (rows[j].b < -1e-12) {
        out.status = Status::Infeasible;
        return out;
      }
      continue;  // 0 <= b is vacuous
    }
    std::array<double, kMaxVars> a{};
    for (int i = 0; i < k; ++i) a[i] = rows[j].a[i] / nrm;
    cols.push_back(static_cast<int>(j));
    col_a.push_back(a);
    col_f.push_back(rows[j].b / nrm);
  }
  const int m = static_cast<int>(cols.size());

  double cmax = 0.0;
  for (int i = 0; i < k; ++i) cmax = std::max(cmax, std::abs(c[i]));
  if (m == 0) {
    if (cmax <= 1e-14) {
      out.status = Status::Optimal;
      return out;
    }
    out.status = Status::Unbounded;
    return out;
  }

  // Dual: min col_f . y  subject to  sum_j y_j col_a[j] = c, y >= 0.
  // Tableau row i is equation i, sign-flipped so the right side is >= 0;
  // columns m..m+k-1 are the phase-1 artificials.
  const int width = m + k;
  std::vector<double> tab(static_cast<std::size_t>(k) * width, 0.0);
  std::vector<double> rhs(k, 0.0);
  std::vector<int> basis(k);
  std::array<double, kMaxVars> sigma{};
  for (int i = 0; i < k; ++i) {
    sigma[i] = (c[i] < 0.0) ? -1.0 : 1.0;
    for (int j = 0; j < m; ++j) tab[i * width + j] = sigma[i] * col_a[j][i];
    tab[i * width + m + i] = 1.0;
    rhs[i] = sigma[i] * c[i];
    basis[i] = m + i;
  }

  double fmax = 1.0;
  for (double f : col_f) fmax = std::max(fmax, std::abs(f));
  const double tol_pivot = 1e-11;
  const double tol_reduced_1 = 1e-10;
  const double tol_reduced_2 = 1e-10 * fmax;
  const double tol_feas = 1e-9 * std::max(1.0, cmax);

  const int iter_cap = 100 * (m + k) + 1000;
  int iters = 0;

  auto pivot = [&](int pr, int pc) {
    const double p = tab[pr * width + pc];
    for (int j = 0; j < width; ++j) tab[pr * width + j] /= p;
    rhs[pr] /= p;
    for (int r = 0; r < k; ++r) {
      if (r == pr) continue;
      const double factor = tab[r * width + pc];
      if (factor == 0.0) continue;
      for (int j = 0; j < width; ++j) tab[r * width + j] -= factor * tab[pr * width + j];
      rhs[r] -= factor * rhs[pr];
    }
    basis[pr] = pc;
  };

  // Phase 1 prices artificials at 1, phase 2 prices real columns at col_f
  // and bars artificials from entering.
  auto run_simplex = [&](bool phase1) -> int {
    const int limit = phase1 ? width : m;
    while (iters++ < iter_cap) {
      int enter = -1;
      const double tol_reduced = phase1 ? tol_reduced_1 : tol_reduced_2;
      for (int j = 0; j < limit; ++j) {
        double cost_j = phase1 ? (j >= m ? 1.0 : 0.0) : col_f[j];
        double reduced = cost_j;
        for (int i = 0; i < k; ++i) {
          const int b = basis[i];
          const double cb = phase1 ? (b >= m ? 1.0 : 0.0) : (b < m ? col_f[b] : 0.0);
          if (cb != 0.0) reduced -= cb * tab[i * width + j];
        }
        if (reduced < -tol_reduced) {
          enter = j;  // Bland: smallest eligible index
          break;
        }
      }
      if (enter < 0) return 0;

      int leave = -1;
      double best = 0.0;
      for (int i = 0; i < k; ++i) {
        const double t = tab[i * width + enter];
        if (t > tol_pivot) {
          const double ratio = rhs[i] / t;
          if (leave < 0 || ratio < best - 1e-15 ||
              (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return 1;  // unbounded in this phase
      pivot(leave, enter);
    }
    return 2;  // iteration cap
  };

  int rc = run_simplex(true);
  if (rc == 2) return out;  // NumericalFailure
  if (rc == 1) {
    // Phase 1 minimizes a sum of nonnegatives; it cannot be unbounded
    // unless arithmetic has gone bad.
    return out;
  }
  double w = 0.0;
  for (int i = 0; i < k; ++i) {
    if (basis[i] >= m) w += rhs[i];
  }
  if (w > tol_feas) {
    // Dual infeasible. The primal has feasible points (the ball problems
    // always do), so the objective is unbounded above.
    out.status = Status::Unbounded;
    return out;
  }
  for (int i = 0; i < k; ++i) {
    if (basis[i] < m) continue;
    for (int j = 0; j < m; ++j) {
      if (std::abs(tab[i * width + j]) > tol_pivot) {
        pivot(i, j);
        break;
      }
    }
    // No real pivot: the equation row is redundant; the artificial stays
    // basic at zero and prices as zero in phase 2.
  }

  rc = run_simplex(false);
  if (rc == 2) return out;
  if (rc == 1) {
    // Dual unbounded below, so the primal is infeasible.
    out.status = Status::Infeasible;
    return out;
  }

  // Recover the primal point: complementary slackness pins dot(a_j, v) = b_j
  // for every basic column j; redundant rows contribute v_i = 0 equations
  // from their artificial (in original coordinates the artificial column is
  // sigma_i * e_i with zero cost).
  std::vector<double> mat(static_cast<std::size_t>(k) * k, 0.0);
  std::vector<double> vrhs(k, 0.0);
  for (int i = 0; i < k; ++i) {
    if (basis[i] < m) {
      const Constraint& row = rows[cols[basis[i]]];
      for (int col = 0; col < k; ++col) mat[i * k + col] = row.a[col];
      vrhs[i] = row.b;
      out.tight.push_back(cols[basis[i]]);
    } else {
      mat[i * k + (basis[i] - m)] = 1.0;
      vrhs[i] = 0.0;
    }
  }
  if (!detail::solve_square(k, mat, vrhs)) {
    out.status = Status::NumericalFailure;
    return out;
  }
  std::sort(out.tight.begin(), out.tight.end());
  out.status = Status::Optimal;
  for (int i = 0; i < k; ++i) out.point[i] = vrhs[i];
  out.value = 0.0;
  for (int i = 0; i < k; ++i) out.value += c[i] * out.point[i];
  return out;
}

}  // namespace inball::lp
