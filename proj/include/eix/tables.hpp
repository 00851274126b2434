#ifndef EIX_TABLES_HPP
#define EIX_TABLES_HPP

#include <string>

#include "eix/hjsearch.hpp"

namespace eix {

/// One FS-scattered representation from the shipped dataset. The atlas
/// parameter (x, lambda, nu) is opaque provenance: the caption character is
/// authoritative and the parameter vectors are never recomputed here.
struct TableRow {
  std::string table_id;
  InfChar inf_char;  // caption character, zeta coordinates
  long x = 0;
  Vec8 lambda_param = vec_zero();
  Vec8 nu_param = vec_zero();
  std::vector<KType> spin_lkts;
  std::vector<bool> bold;  // spin LKT is also a lowest K-type
  bool unipotent = false;
  bool cancellation = false;
};

/// Parse the dataset. Throws std::runtime_error with a row locus on
/// malformed input; duplicate (x, lambda, nu) triples are rejected.
std::vector<TableRow> load_tables(const std::string& path);

/// Shared contributed weights of two K-types: the intersection of their
/// spin-norm gamma sets.
std::vector<Weight> pairing_evidence(const Context& c, const KType& mu1, const KType& mu2);

struct RowReport {
  std::string table_id;
  long x = 0;
  bool parity_ok = false;      // (a) every spin LKT satisfies the parity condition
  bool gap_zero_ok = false;    // (b) dirac gap vanishes for every spin LKT
  bool usmall_ok = false;      // (c) every spin LKT is u-small
  bool hp_ok = false;          // (d) the caption character is HP integral
  bool conj_ok = false;        // (e) gamma + rho_c conjugate to the caption
  bool pass = false;           // conjunction of (a)-(e)
  bool cancellation = false;   // row carries the cancellation flag
  bool cancellation_evidence = false;  // some spin-LKT pair shares a gamma
  bool caption_in_phi1 = false;
  bool caption_is_rho = false;  // the strongly regular caption handled apart
};

RowReport validate_row(const Context& c, const USmallHull& h, const TableRow& row,
                       const std::vector<InfChar>& phi1);

struct ValidationReport {
  std::vector<RowReport> rows;  // sorted by (table_id, x)
  int total = 0;
  int failures = 0;
  int cancellation_rows = 0;
  int cancellation_evidence_rows = 0;
  int captions_outside_phi1 = 0;  // rho-caption rows, reported not failed
  bool all_pass() const { return failures == 0; }
};

ValidationReport validate_tables(const Context& c, const USmallHull& h,
                                 const std::vector<TableRow>& rows,
                                 const std::vector<InfChar>& phi1, int threads = 0);

/// Load the shipped candidate-character list (a JSON array of 8-vectors).
std::vector<InfChar> load_phi1(const std::string& path);

}  // namespace eix

#endif
