#ifndef EIX_DIRAC_HPP
#define EIX_DIRAC_HPP

#include <vector>

#include "eix/context.hpp"

namespace eix {

/// A dominant integral k-weight in omega coordinates. group_level is true
/// exactly when b+e+g+h is even, i.e. the k-type integrates to K.
struct KType {
  IVec8 coords{};
  bool group_level = false;

  KType() = default;
  explicit KType(const IVec8& c);

  Weight weight() const { return weight_i64(coords, Basis::Omega); }
  bool operator==(const KType& o) const { return coords == o.coords; }
};

struct SpinNormResult {
  Rat spin_norm_sq;
  std::vector<int> minimizers;  // all j attaining the minimum, ascending
  std::vector<Weight> gammas;   // deduplicated dominantized {mu - rho_n^(j)}
};

/// min over the 120 positive systems of |{mu - rho_n^(j)} + rho_c|^2,
/// with every minimizing index and the contributed dominant weights.
SpinNormResult spin_norm(const Context& c, const KType& mu);

/// Integer fast path: 2 * spin_norm_sq. Reference and kernel agree exactly;
/// this one powers the large enumerations.
std::int64_t spin_sq2_i64(const Context& c, const IVec8& mu);

/// Nearest point of the closed chamber w_j(C_g) under the invariant form.
Weight project_to_chamber(const Context& c, const Weight& y, int j);

/// Exact projection onto the dominant cone of g, input and output in zeta
/// coordinates. Active-set with KKT verification; falls back to exhaustive
/// wall-subset search if the working-set iteration stalls.
Vec8 project_dominant_zeta(const Context& c, const Vec8& y);

struct LambdaResult {
  Weight lambda_a;      // the projected point (zeta basis)
  Rat norm_sq;          // |lambda_a|^2
  std::vector<int> js;  // all chambers containing mu + 2 rho_c
};

/// Vogan lambda parameters: project mu + 2 rho_c - rho^(j) to the chamber
/// containing mu + 2 rho_c. Asserts the result is chamber-independent when
/// several chambers apply.
LambdaResult lambda_params(const Context& c, const KType& mu);

/// A g-dominant infinitesimal character in zeta coordinates.
struct InfChar {
  Vec8 zeta = vec_zero();

  InfChar() = default;
  explicit InfChar(Vec8 z);
  static InfChar from_ints(const IVec8& v) { return InfChar(vec_from_i64(v)); }

  Weight weight() const { return Weight(zeta, Basis::Zeta); }
};

Rat norm_sq_infchar(const Context& c, const InfChar& l);

/// spin_norm(mu)^2 - |Lambda|^2; zero exactly on Dirac-inequality equality.
Rat dirac_gap(const Context& c, const KType& mu, const InfChar& l);

/// Nonnegative integer coordinates plus the fourteen positivity conditions
/// cutting out characters that can carry Dirac cohomology.
bool hp_integral(const InfChar& l);

/// True iff every one of the 120 transported characters w_j(Lambda) has a
/// zero omega coordinate.
bool hp_zero_witness(const Context& c, const InfChar& l);

}  // namespace eix

#endif
