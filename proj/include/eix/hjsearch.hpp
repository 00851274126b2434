#ifndef EIX_HJSEARCH_HPP
#define EIX_HJSEARCH_HPP

#include "eix/pencil.hpp"

namespace eix {

/// Constants consumed from the literature rather than derived here: the
/// worst spin-lambda defect over the positive systems and the previous
/// norm bound for infinite-dimensional unitary representations.
inline const Rat kMaxSpinLambdaDefect = Rat(212);
inline const Rat kNuBoundSqInfDim = Rat(723, 2);
/// Defect threshold defining the certificate set (= 212.5).
inline const Rat kCertsGapMin = Rat(425, 2);
/// Norm window for candidate characters: [14 + 212.5, 178 + 361.5].
inline const Rat kOmegaNormSqLo = Rat(453, 2);
inline const Rat kOmegaNormSqHi = Rat(1079, 2);
/// The squared continuous-parameter norms of the three exceptional
/// unitary representations.
inline const std::array<Rat, 3> kExceptionalNuSq = {Rat(443, 2), Rat(246), Rat(723, 2)};

struct CertsEntry {
  KType mu;
  Rat spin_sq;
  Rat lambda_sq;
  Rat gap;  // spin_sq - lambda_sq, at least 425/2 by the defining filter
};

struct CertsResult {
  std::vector<CertsEntry> entries;  // lexicographic in mu
  std::uint64_t usmall_total = 0;   // size of the enumerated u-small set
  Rat lambda_sq_min, lambda_sq_max;
};

/// Filter the u-small K-types by spin-lambda gap >= 425/2.
CertsResult compute_certs(const Context& c, const USmallHull& h, int threads = 0);

/// Same filter over an already-enumerated member list (lexicographic).
CertsResult compute_certs_from_members(const Context& c, const std::vector<IVec8>& members,
                                       int threads = 0);

struct OmegaEntry {
  InfChar lambda;
  Rat norm_sq;
};

/// All HP-integral characters with squared norm in [453/2, 1079/2],
/// lexicographic. Complete by branch-and-bound on the positive-definite
/// norm form.
std::vector<OmegaEntry> compute_omega(const Context& c, int threads = 0);

struct Phi1Report {
  int count = 0;
  std::vector<std::string> failures;  // "index: reason"
  bool ok() const { return failures.empty(); }
};

/// Validate the shipped candidate-character list: each entry must be
/// HP-integral with minimum coordinate 0 and maximum coordinate 1.
Phi1Report validate_phi1(const std::vector<InfChar>& data);

/// Brute-force count of zero-one characters that are HP-integral and have
/// at least one zero coordinate. Reported for comparison against the
/// shipped list; never asserted equal.
int hp_count_01();

}  // namespace eix

#endif
