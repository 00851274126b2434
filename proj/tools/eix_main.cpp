// Command-line front end: every operation of the library exposed as a
// subcommand with canonical JSON output.

#include <fstream>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "eix/audit.hpp"
#include "json.hpp"

namespace {

using eix::Basis;
using eix::IVec8;
using eix::InfChar;
using eix::KType;
using eix::kRank;
using eix::Rat;
using eix::Vec8;
using eix::Weight;
using nlohmann::json;

Vec8 parse_vec(const std::string& csv) {
  Vec8 v = eix::vec_zero();
  std::stringstream ss(csv);
  std::string tok;
  int i = 0;
  while (std::getline(ss, tok, ',')) {
    if (i >= kRank) throw CLI::ValidationError("expected 8 comma-separated rationals");
    v[i++] = eix::rat_parse(tok);
  }
  if (i != kRank) throw CLI::ValidationError("expected 8 comma-separated rationals");
  return v;
}

IVec8 parse_ivec(const std::string& csv) {
  const Vec8 v = parse_vec(csv);
  IVec8 r{};
  for (int i = 0; i < kRank; ++i) {
    if (!eix::rat_is_integer(v[i]))
      throw CLI::ValidationError("expected integer coordinates");
    r[i] = eix::to_i64(mpz_class(v[i].get_num()));
  }
  return r;
}

json vec_json(const Vec8& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(eix::rat_str(r));
  return a;
}

json ivec_json(const IVec8& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

json weight_json(const eix::RootDatum& d, const Weight& w) {
  json o;
  o["euclidean"] = vec_json(d.convert(w, Basis::Euclidean).coords);
  o["simple_g"] = vec_json(d.convert(w, Basis::SimpleG).coords);
  o["zeta"] = vec_json(d.convert(w, Basis::Zeta).coords);
  o["omega"] = vec_json(d.convert(w, Basis::Omega).coords);
  return o;
}

void emit(const json& j, bool pretty) {
  if (pretty) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump() << "\n";
  }
}

Basis basis_from_name(const std::string& s) {
  if (s == "euclidean") return Basis::Euclidean;
  if (s == "simple_g") return Basis::SimpleG;
  if (s == "zeta") return Basis::Zeta;
  if (s == "omega") return Basis::Omega;
  throw CLI::ValidationError("unknown basis: " + s);
}

struct Shared {
  bool pretty = false;
  int threads = 0;
};

void apply_threads(int threads) {
#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure, spin norms and classification audits for E8(-24)"};
  app.require_subcommand(1);
  Shared sh;
  app.add_flag("--pretty", sh.pretty, "indent JSON output");
  app.add_option("--threads", sh.threads, "worker threads for enumerations (default: all)");

  // roots info
  auto* roots = app.add_subcommand("roots", "root datum queries");
  auto* roots_info = roots->add_subcommand("info", "counts and distinguished weights");

  // wone list
  auto* wone = app.add_subcommand("wone", "minimal coset representatives");
  auto* wone_list = wone->add_subcommand("list", "all 120 representatives as JSON lines");

  // spin-norm
  std::string mu_csv, basis_name_opt = "omega";
  auto* spin = app.add_subcommand("spin-norm", "spin norm of a k-type");
  spin->add_option("--mu", mu_csv, "8 comma-separated nonnegative integers")->required();
  spin->add_option("--basis", basis_name_opt, "coordinate basis of --mu (omega)");

  // lambda-norm
  std::string lmu_csv;
  auto* lam = app.add_subcommand("lambda-norm", "lambda parameters of a k-type");
  lam->add_option("--mu", lmu_csv, "8 comma-separated nonnegative integers")->required();

  // hp-check
  std::string hp_csv;
  auto* hp = app.add_subcommand("hp-check", "integrality conditions on a character");
  hp->add_option("--lambda", hp_csv, "8 comma-separated rationals (zeta basis)")->required();

  // pencil
  std::string pencil_csv;
  std::int64_t guard = 2;
  auto* pen = app.add_subcommand("pencil", "spin norms along mu + n*beta");
  pen->add_option("--mu", pencil_csv, "8 comma-separated nonnegative integers")->required();
  pen->add_option("--guard", guard, "entries past the u-small boundary (default 2)");

  // usmall test/count
  auto* us = app.add_subcommand("usmall", "u-small hull membership");
  std::string us_mu;
  auto* us_test = us->add_subcommand("test", "membership of one k-type");
  us_test->add_option("--mu", us_mu, "8 comma-separated nonnegative integers")->required();
  std::string us_emit;
  auto* us_count = us->add_subcommand("count", "census of all u-small K-types");
  us_count->add_option("--emit", us_emit, "also write members as JSON lines");

  // hj
  auto* hj = app.add_subcommand("hj", "bound-sharpening search sets");
  std::string certs_emit, omega_emit, phi1_path;
  auto* hj_certs = hj->add_subcommand("certs", "u-small K-types with large spin-lambda gap");
  hj_certs->add_option("--emit", certs_emit, "also write entries as JSON lines");
  auto* hj_omega = hj->add_subcommand("omega", "HP-integral characters in the norm window");
  hj_omega->add_option("--emit", omega_emit, "also write entries as JSON lines");
  auto* hj_phi1 = hj->add_subcommand("phi1", "validate the shipped candidate list");
  hj_phi1->add_option("--data", phi1_path, "path to phi1.json");

  // unimodality
  std::int64_t max_height = 6;
  auto* uni = app.add_subcommand("unimodality", "scan pencils for unimodality violations");
  uni->add_option("--max-height", max_height, "coordinate-sum bound on pencil starts");

  // validate
  std::string tables_path, report_path;
  auto* val = app.add_subcommand("validate", "validate the FS-scattered dataset");
  val->add_option("--data", tables_path, "path to fs_scattered.json");
  val->add_option("--report", report_path, "write the full report JSON here");

  // audit
  bool audit_quick = false, audit_full = false;
  std::string audit_data_dir;
  auto* aud = app.add_subcommand("audit", "run the acceptance checks");
  aud->add_flag("--quick", audit_quick, "fast tier only (default)");
  aud->add_flag("--full", audit_full, "include the u-small census, Certs and Omega");
  aud->add_option("--data-dir", audit_data_dir, "directory with the shipped datasets");

  CLI11_PARSE(app, argc, argv);
  apply_threads(sh.threads);

  try {
    const eix::Context ctx = eix::Context::create();
    const eix::RootDatum& d = ctx.datum;

    if (*roots_info) {
      json o;
      o["positive_roots_g"] = d.positive_g.size();
      o["positive_roots_k"] = d.positive_k.size();
      o["noncompact_positive_roots"] = d.noncompact_pos.size();
      o["dim_k"] = 2 * d.positive_k.size() + kRank;
      o["dim_p"] = 2 * d.noncompact_pos.size();
      o["beta"] = weight_json(d, Weight(d.beta, Basis::Euclidean));
      o["rho"] = weight_json(d, Weight(d.rho, Basis::Euclidean));
      o["rho_c"] = weight_json(d, Weight(d.rho_c, Basis::Euclidean));
      o["rho_norm_sq"] = eix::rat_str(d.norm_sq(Weight(d.rho, Basis::Euclidean)));
      o["rho_c_norm_sq"] = eix::rat_str(d.norm_sq(Weight(d.rho_c, Basis::Euclidean)));
      emit(o, sh.pretty);
      return 0;
    }

    if (*wone_list) {
      for (const eix::CosetRep& r : ctx.w1) {
        json o;
        o["j"] = r.j;
        o["length"] = r.w.word.size();
        o["rho"] = vec_json(d.convert(r.rho, Basis::Omega).coords);
        o["rho_n"] = vec_json(d.convert(r.rho_n, Basis::Omega).coords);
        emit(o, false);
      }
      return 0;
    }

    if (*spin) {
      const Basis b = basis_from_name(basis_name_opt);
      IVec8 mu{};
      if (b == Basis::Omega) {
        mu = parse_ivec(mu_csv);
      } else {
        const Weight w = d.convert(Weight(parse_vec(mu_csv), b), Basis::Omega);
        for (int i = 0; i < kRank; ++i) {
          if (!eix::rat_is_integer(w.coords[i]))
            throw CLI::ValidationError("k-type must have integral omega coordinates");
          mu[i] = eix::to_i64(mpz_class(w.coords[i].get_num()));
        }
      }
      const eix::SpinNormResult r = eix::spin_norm(ctx, KType(mu));
      json o;
      o["mu"] = ivec_json(mu);
      o["spin_norm_sq"] = eix::rat_str(r.spin_norm_sq);
      o["spin_norm_approx"] = std::sqrt(eix::rat_approx(r.spin_norm_sq));
      o["minimizing_j"] = r.minimizers;
      json g = json::array();
      for (const Weight& w : r.gammas) g.push_back(vec_json(w.coords));
      o["gammas"] = g;
      emit(o, sh.pretty);
      return 0;
    }

    if (*lam) {
      const KType mu(parse_ivec(lmu_csv));
      const eix::LambdaResult r = eix::lambda_params(ctx, mu);
      json o;
      o["mu"] = ivec_json(mu.coords);
      o["lambda_a"] = vec_json(r.lambda_a.coords);
      o["norm_sq"] = eix::rat_str(r.norm_sq);
      o["norm_approx"] = std::sqrt(eix::rat_approx(r.norm_sq));
      o["js"] = r.js;
      emit(o, sh.pretty);
      return 0;
    }

    if (*hp) {
      const InfChar l(parse_vec(hp_csv));
      json o;
      o["lambda"] = vec_json(l.zeta);
      o["hp_integral"] = eix::hp_integral(l);
      o["zero_witness"] = eix::hp_zero_witness(ctx, l);
      emit(o, sh.pretty);
      return 0;
    }

    if (*pen) {
      const eix::USmallHull hull = eix::build_usmall_hull(ctx);
      const eix::PencilReport r = eix::mp(ctx, hull, KType(parse_ivec(pencil_csv)), guard);
      json o;
      o["mu"] = ivec_json(r.mu.coords);
      json entries = json::array();
      for (const eix::PencilEntry& e : r.entries) {
        json je;
        je["n"] = e.n;
        je["spin_norm_sq"] = eix::rat_str(e.spin_sq);
        je["u_small"] = e.u_small;
        entries.push_back(je);
      }
      o["entries"] = entries;
      o["mp_sq"] = eix::rat_str(r.mp_sq);
      o["argmin_n"] = r.argmin_n;
      o["unimodal"] = r.unimodal;
      emit(o, sh.pretty);
      return 0;
    }

    if (*us_test) {
      const eix::USmallHull hull = eix::build_usmall_hull(ctx);
      const IVec8 mu = parse_ivec(us_mu);
      json o;
      o["mu"] = ivec_json(mu);
      o["u_small"] = eix::usmall(ctx, hull, mu);
      emit(o, sh.pretty);
      return 0;
    }

    if (*us_count) {
      const eix::USmallHull hull = eix::build_usmall_hull(ctx);
      std::ofstream out;
      std::function<void(const IVec8&)> sink;
      if (!us_emit.empty()) {
        out.open(us_emit);
        if (!out) throw std::runtime_error("cannot write " + us_emit);
        sink = [&](const IVec8& v) { out << ivec_json(v).dump() << "\n"; };
      }
      const std::uint64_t n = eix::enumerate_usmall(ctx, hull, sink, sh.threads);
      json o;
      o["count"] = n;
      if (!us_emit.empty()) o["emitted"] = us_emit;
      emit(o, sh.pretty);
      return 0;
    }

    if (*hj_certs) {
      const eix::USmallHull hull = eix::build_usmall_hull(ctx);
      const eix::CertsResult r = eix::compute_certs(ctx, hull, sh.threads);
      if (!certs_emit.empty()) {
        std::ofstream out(certs_emit);
        if (!out) throw std::runtime_error("cannot write " + certs_emit);
        for (const eix::CertsEntry& e : r.entries) {
          json je;
          je["mu"] = ivec_json(e.mu.coords);
          je["spin_sq"] = eix::rat_str(e.spin_sq);
          je["lambda_sq"] = eix::rat_str(e.lambda_sq);
          je["gap"] = eix::rat_str(e.gap);
          out << je.dump() << "\n";
        }
      }
      json o;
      o["count"] = r.entries.size();
      o["usmall_total"] = r.usmall_total;
      o["lambda_sq_min"] = eix::rat_str(r.lambda_sq_min);
      o["lambda_sq_max"] = eix::rat_str(r.lambda_sq_max);
      if (!certs_emit.empty()) o["emitted"] = certs_emit;
      emit(o, sh.pretty);
      return 0;
    }

    if (*hj_omega) {
      const auto entries = eix::compute_omega(ctx, sh.threads);
      if (!omega_emit.empty()) {
        std::ofstream out(omega_emit);
        if (!out) throw std::runtime_error("cannot write " + omega_emit);
        for (const eix::OmegaEntry& e : entries) {
          json je;
          je["lambda"] = vec_json(e.lambda.zeta);
          je["norm_sq"] = eix::rat_str(e.norm_sq);
          out << je.dump() << "\n";
        }
      }
      json o;
      o["count"] = entries.size();
      if (!omega_emit.empty()) o["emitted"] = omega_emit;
      emit(o, sh.pretty);
      return 0;
    }

    if (*hj_phi1) {
      const std::string path =
          phi1_path.empty() ? eix::resolve_data_dir("") + "/phi1.json" : phi1_path;
      const auto data = eix::load_phi1(path);
      const eix::Phi1Report r = eix::validate_phi1(data);
      json o;
      o["count"] = r.count;
      o["failures"] = r.failures;
      o["hp_zero_one_count"] = eix::hp_count_01();
      emit(o, sh.pretty);
      return r.ok() ? 0 : 1;
    }

    if (*uni) {
      const eix::USmallHull hull = eix::build_usmall_hull(ctx);
      const eix::UnimodalityReport r = eix::unimodality_scan(ctx, hull, max_height, sh.threads);
      json o;
      o["max_height"] = r.max_height;
      o["scanned"] = r.scanned;
      json v = json::array();
      for (const KType& k : r.violations) v.push_back(ivec_json(k.coords));
      o["violations"] = v;
      emit(o, sh.pretty);
      return 0;
    }

    if (*val) {
      const std::string dir = eix::resolve_data_dir("");
      const std::string path = tables_path.empty() ? dir + "/fs_scattered.json" : tables_path;
      const auto rows = eix::load_tables(path);
      const auto phi1 = eix::load_phi1(dir + "/phi1.json");
      const eix::USmallHull hull = eix::build_usmall_hull(ctx);
      const eix::ValidationReport rep = eix::validate_tables(ctx, hull, rows, phi1, sh.threads);
      json o;
      o["total"] = rep.total;
      o["failures"] = rep.failures;
      o["cancellation_rows"] = rep.cancellation_rows;
      o["cancellation_evidence_rows"] = rep.cancellation_evidence_rows;
      o["captions_outside_phi1"] = rep.captions_outside_phi1;
      json rows_json = json::array();
      for (const eix::RowReport& r : rep.rows) {
        json jr;
        jr["table_id"] = r.table_id;
        jr["x"] = r.x;
        jr["parity_ok"] = r.parity_ok;
        jr["gap_zero_ok"] = r.gap_zero_ok;
        jr["usmall_ok"] = r.usmall_ok;
        jr["hp_ok"] = r.hp_ok;
        jr["conj_ok"] = r.conj_ok;
        jr["pass"] = r.pass;
        jr["cancellation"] = r.cancellation;
        jr["cancellation_evidence"] = r.cancellation_evidence;
        jr["caption_in_phi1"] = r.caption_in_phi1;
        jr["caption_is_rho"] = r.caption_is_rho;
        rows_json.push_back(jr);
      }
      o["rows"] = rows_json;
      if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::runtime_error("cannot write " + report_path);
        out << o.dump(2) << "\n";
        json brief;
        brief["total"] = rep.total;
        brief["failures"] = rep.failures;
        brief["report"] = report_path;
        emit(brief, sh.pretty);
      } else {
        emit(o, sh.pretty);
      }
      return rep.all_pass() ? 0 : 1;
    }

    if (*aud) {
      eix::AuditOptions ao;
      ao.full = audit_full && !audit_quick;
      ao.threads = sh.threads;
      ao.data_dir = audit_data_dir;
      const eix::AuditManifest man = eix::run_audit(ctx, ao);
      json o;
      o["tier"] = man.tier;
      o["all_pass"] = man.all_pass;
      json checks = json::array();
      for (const eix::AuditCheck& ck : man.checks) {
        json jc;
        jc["id"] = ck.id;
        jc["name"] = ck.name;
        jc["status"] = ck.pass ? "pass" : "fail";
        jc["measured"] = ck.measured;
        jc["expected"] = ck.expected;
        jc["elapsed_sec"] = ck.seconds;
        checks.push_back(jc);
        if (sh.pretty)
          std::cerr << (ck.pass ? "PASS " : "FAIL ") << ck.id << "  " << ck.name << "  ["
                    << ck.measured << "]\n";
      }
      o["checks"] = checks;
      emit(o, sh.pretty);
      return man.all_pass ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand executed\n";
  return 2;
}
