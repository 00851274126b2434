#ifndef EIX_WEYL_HPP
#define EIX_WEYL_HPP

#include <vector>

#include "eix/rootdata.hpp"

namespace eix {

/// Which simple system the reflection indices of a word refer to.
enum class ReflFlavor { G, K };

/// A Weyl group element: an orthogonal matrix acting on Euclidean
/// coordinates together with one (not necessarily reduced) word of simple
/// reflections producing it. Equality is matrix equality; words are
/// bookkeeping.
struct WeylElement {
  Mat8 matrix = mat_identity();
  std::vector<int> word;  // simple-reflection indices, 0-based
  ReflFlavor flavor = ReflFlavor::G;

  bool operator==(const WeylElement& o) const { return mat_eq(matrix, o.matrix); }
  bool is_identity() const { return mat_eq(matrix, mat_identity()); }
};

/// Reflection in the (norm-2) root r, as a matrix on Euclidean coordinates.
Mat8 reflection_matrix(const Vec8& root_euclid);

WeylElement simple_reflection(const RootDatum& d, ReflFlavor f, int i);

/// Linear action w.x, preserving the invariant form.
Weight apply(const RootDatum& d, const WeylElement& w, const Weight& x);

struct DomResult {
  Weight dom;     // the unique dominant orbit representative
  WeylElement w;  // dom = w.x
};

/// Move x to the closed dominant chamber of k (resp. g) by simple
/// reflections. Idempotent on dominant inputs.
DomResult dominantize_k(const RootDatum& d, const Weight& x);
DomResult dominantize_g(const RootDatum& d, const Weight& x);

/// True iff x and y lie in the same W(g)-orbit.
bool conjugate_under_Wg(const RootDatum& d, const Weight& x, const Weight& y);

/// One element of W(g,t_f)^1 with its cached derived data.
struct CosetRep {
  int j = 0;
  WeylElement w;
  Weight rho;     // w . rho^(0), Euclidean
  Weight rho_n;   // rho^(j) - rho_c = half sum of w(positive noncompact)
  Weight vertex;  // k-dominant representative of 2 rho_n^(j)
};

/// The 120 minimal coset representatives w with w C_g^(0) inside the
/// k-dominant chamber. Element 0 is the identity; the rest are ordered by
/// (length, lexicographic reduced word). Throws if the count is not 120.
std::vector<CosetRep> enumerate_w1(const RootDatum& d);

}  // namespace eix

#endif
