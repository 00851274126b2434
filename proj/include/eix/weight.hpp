#ifndef EIX_WEIGHT_HPP
#define EIX_WEIGHT_HPP

#include <string>

#include "eix/linalg.hpp"

namespace eix {

/// Coordinate systems on t_f*. EUCLIDEAN is the canonical internal basis;
/// the others are derived from it by fixed exact matrices.
enum class Basis {
  Euclidean,  // the e-coordinates the simple roots are written in
  SimpleG,    // coefficients on the simple roots of g
  Zeta,       // fundamental-weight coordinates of g
  Omega,      // fundamental-weight coordinates of k
};

inline const char* basis_name(Basis b) {
  switch (b) {
    case Basis::Euclidean: return "euclidean";
    case Basis::SimpleG: return "simple_g";
    case Basis::Zeta: return "zeta";
    case Basis::Omega: return "omega";
  }
  return "?";
}

/// A point of t_f* tagged with the basis its coordinates are written in.
struct Weight {
  Vec8 coords = vec_zero();
  Basis basis = Basis::Euclidean;

  Weight() = default;
  Weight(Vec8 c, Basis b) : coords(std::move(c)), basis(b) {}

  /// Raw comparison: same basis tag and identical coordinates.
  bool operator==(const Weight& o) const {
    return basis == o.basis && vec_eq(coords, o.coords);
  }
};

inline Weight weight_i64(const IVec8& v, Basis b) {
  return Weight(vec_from_i64(v), b);
}

}  // namespace eix

#endif
