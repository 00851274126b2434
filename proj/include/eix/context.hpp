#ifndef EIX_CONTEXT_HPP
#define EIX_CONTEXT_HPP

#include <optional>
#include <vector>

#include "eix/weyl.hpp"

namespace eix {

/// Inverse of one principal submatrix of the g Cartan matrix, used by the
/// chamber projection. Indexed by the bitmask of selected walls.
struct CartanSubInverse {
  int size = 0;
  std::array<int, kRank> idx{};  // selected wall indices, ascending
  std::array<std::array<Rat, kRank>, kRank> inv{};  // top-left size x size
};

/// Everything the metric and search layers need, built once and immutable
/// afterwards. All integer tables are exact images of the rational datum;
/// integrality is asserted during construction.
struct Context {
  RootDatum datum;
  std::vector<CosetRep> w1;

  // omega-coordinate integer tables
  std::array<IVec8, 120> rho_omega;    // rho^(j)
  std::array<IVec8, 120> rho_n_omega;  // rho_n^(j) = rho^(j) - rho_c
  IVec8 rho_c_omega{};                 // [1,...,1]
  IVec8 beta_omega{};                  // [0,...,0,1,1]
  IMat8 cartan_k{};                    // integer reflections in omega coords
  IMat8 cartan_g{};
  IMat8 gram2_omega{};      // 2 * Gram(omega), integer
  IMat8 gram_zeta_int{};    // Gram(zeta) = inverse g Cartan, integer
  IMat8 zeta2_from_omega{};  // doubled zeta coords of an omega-integral point
  IMat8 omega_from_zeta{};   // omega coords of a zeta-integral point

  // Row j: integer matrix taking zeta coords of x to zeta coords of
  // w_j^{-1} x (rows are pairings against w_j alpha_i). Doubling carries
  // through linearly.
  std::vector<IMat8> chamber_rows;
  // Row j: omega coords of w_j x from zeta coords of x.
  std::vector<IMat8> omega_rows;

  std::array<CartanSubInverse, 256> cartan_sub_inv;

  static Context create();

  Rat norm_sq_zeta(const Vec8& z) const;
  Rat norm_sq_omega(const Vec8& w) const;
};

}  // namespace eix

#endif
