#ifndef EIX_AUDIT_HPP
#define EIX_AUDIT_HPP

#include "eix/tables.hpp"

namespace eix {

struct AuditOptions {
  bool full = false;  // include the u-small enumeration, Certs and Omega
  int threads = 0;
  std::string data_dir;  // location of fs_scattered.json and phi1.json
};

struct AuditCheck {
  std::string id;
  std::string name;
  bool pass = false;
  std::string measured;
  std::string expected;
  double seconds = 0.0;
};

struct AuditManifest {
  std::string tier;
  std::vector<AuditCheck> checks;
  bool all_pass = true;
};

/// Run the audit suite. Quick tier: structure, the pencil table, norms and
/// pairings, table validation, cancellation evidence, property suites.
/// Full tier adds the u-small census, the certificate set and the
/// candidate-character window.
AuditManifest run_audit(const Context& c, const AuditOptions& opt);

/// EIX_DATA_DIR, a CLI override, or the built-in default, in that order of
/// preference (override wins).
std::string resolve_data_dir(const std::string& override_dir);

}  // namespace eix

#endif
