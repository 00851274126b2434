#ifndef EIX_LP_HPP
#define EIX_LP_HPP

#include <vector>

#include "eix/rational.hpp"

namespace eix {

/// A x = b with x >= 0, dense exact-rational data.
struct LpProblem {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<Rat>> a;  // rows x cols
  std::vector<Rat> b;               // rows
};

struct LpFeasibility {
  bool feasible = false;
  std::vector<Rat> x;       // a feasible point when feasible
  std::vector<Rat> farkas;  // y with y^T A <= 0 (componentwise) and y^T b > 0
};

/// Phase-1 simplex with Bland's rule; exact and always terminating.
LpFeasibility lp_feasible(const LpProblem& p);

struct LpOptimum {
  bool feasible = false;
  bool unbounded = false;
  Rat value;
  std::vector<Rat> x;
  std::vector<Rat> farkas;
};

/// minimize c^T x subject to A x = b, x >= 0.
LpOptimum lp_minimize(const LpProblem& p, const std::vector<Rat>& c);

}  // namespace eix

#endif
