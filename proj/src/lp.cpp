#include "eix/lp.hpp"

#include "eix/check.hpp"

namespace eix {
namespace {

// Dense tableau simplex over exact rationals. Columns: the problem's
// variables followed by one artificial per row; the last column is the
// right-hand side. Bland's rule guarantees termination.
class Tableau {
 public:
  Tableau(const LpProblem& p) : m_(p.rows), n_(p.cols), sign_(p.rows, 1) {
    tab_.assign(m_, std::vector<Rat>(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const bool flip = p.b[i] < 0;
      sign_[i] = flip ? -1 : 1;
      for (int j = 0; j < n_; ++j) tab_[i][j] = flip ? -p.a[i][j] : p.a[i][j];
      tab_[i][n_ + i] = 1;
      tab_[i][n_ + m_] = flip ? -p.b[i] : p.b[i];
      basis_[i] = n_ + i;
    }
  }

  // minimize cost (over all n_+m_ columns); returns false on unbounded.
  bool run(const std::vector<Rat>& cost, bool allow_artificial_enter) {
    for (;;) {
      // reduced costs via the current basis
      std::vector<Rat> y(m_);
      for (int i = 0; i < m_; ++i) y[i] = cost[basis_[i]];
      int enter = -1;
      Rat enter_red;
      for (int j = 0; j < n_ + m_; ++j) {
        if (!allow_artificial_enter && j >= n_) continue;
        if (is_basic(j)) continue;
        Rat red = cost[j];
        for (int i = 0; i < m_; ++i) red -= y[i] * tab_[i][j];
        if (red < 0) {
          enter = j;
          enter_red = red;
          break;  // Bland: smallest index
        }
      }
      if (enter < 0) return true;  // optimal
      int leave = -1;
      Rat best;
      for (int i = 0; i < m_; ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rat ratio = tab_[i][n_ + m_] / tab_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    const Rat d = tab_[row][col];
    for (auto& v : tab_[row]) v /= d;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      const Rat f = tab_[i][col];
      for (int j = 0; j <= n_ + m_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    basis_[row] = col;
  }

  bool is_basic(int j) const {
    for (int i = 0; i < m_; ++i)
      if (basis_[i] == j) return true;
    return false;
  }

  Rat objective(const std::vector<Rat>& cost) const {
    Rat v(0);
    for (int i = 0; i < m_; ++i) v += cost[basis_[i]] * tab_[i][n_ + m_];
    return v;
  }

  std::vector<Rat> solution() const {
    std::vector<Rat> x(n_, Rat(0));
    for (int i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = tab_[i][n_ + m_];
    return x;
  }

  // Simplex multipliers for the phase-1 cost, mapped back to the original
  // row signs: a Farkas certificate when phase 1 ends positive.
  std::vector<Rat> farkas(const std::vector<Rat>& cost) const {
    std::vector<Rat> y(m_);
    for (int i = 0; i < m_; ++i) {
      // reduced cost of artificial column i is c - y_i
      Rat red = cost[n_ + i];
      std::vector<Rat> yb(m_);
      for (int r = 0; r < m_; ++r) yb[r] = cost[basis_[r]];
      for (int r = 0; r < m_; ++r) red -= yb[r] * tab_[r][n_ + i];
      y[i] = (cost[n_ + i] - red) * sign_[i];
    }
    return y;
  }

  // Remove artificials from the basis after a successful phase 1 so that
  // phase 2 never reintroduces them. Rows that cannot be repaired are
  // redundant and are blanked out.
  void purge_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j)
        if (!is_basic(j) && tab_[i][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) {
        pivot(i, col);
      } else {
        for (int j = 0; j <= n_ + m_; ++j) tab_[i][j] = 0;
        tab_[i][basis_[i]] = 1;  // keep the zero-valued artificial basic
      }
    }
  }

  int m_, n_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<int> basis_;
  std::vector<int> sign_;
};

std::vector<Rat> phase1_cost(int n, int m) {
  std::vector<Rat> c(n + m, Rat(0));
  for (int i = 0; i < m; ++i) c[n + i] = 1;
  return c;
}

}  // namespace

LpFeasibility lp_feasible(const LpProblem& p) {
  CHECK(static_cast<int>(p.a.size()) == p.rows && static_cast<int>(p.b.size()) == p.rows,
        "LP shape");
  Tableau t(p);
  const auto c1 = phase1_cost(p.cols, p.rows);
  const bool bounded = t.run(c1, true);
  CHECK(bounded, "phase 1 is always bounded");
  LpFeasibility r;
  if (t.objective(c1) > 0) {
    r.feasible = false;
    r.farkas = t.farkas(c1);
  } else {
    r.feasible = true;
    r.x = t.solution();
  }
  return r;
}

LpOptimum lp_minimize(const LpProblem& p, const std::vector<Rat>& c) {
  CHECK(static_cast<int>(c.size()) == p.cols, "cost size");
  Tableau t(p);
  const auto c1 = phase1_cost(p.cols, p.rows);
  CHECK(t.run(c1, true), "phase 1 is always bounded");
  LpOptimum r;
  if (t.objective(c1) > 0) {
    r.feasible = false;
    r.farkas = t.farkas(c1);
    return r;
  }
  r.feasible = true;
  t.purge_artificials();
  std::vector<Rat> c2(p.cols + p.rows, Rat(0));
  for (int j = 0; j < p.cols; ++j) c2[j] = c[j];
  if (!t.run(c2, false)) {
    r.unbounded = true;
    return r;
  }
  r.value = t.objective(c2);
  r.x = t.solution();
  return r;
}

}  // namespace eix
