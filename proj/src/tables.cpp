#include "eix/tables.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "json.hpp"

namespace eix {
namespace {

using nlohmann::json;

Vec8 vec_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() != kRank)
    throw std::runtime_error(where + ": expected an 8-vector");
  Vec8 v;
  for (int i = 0; i < kRank; ++i) {
    const json& e = arr[i];
    if (e.is_number_integer()) {
      v[i] = Rat(static_cast<long>(e.get<std::int64_t>()));
    } else if (e.is_string()) {
      v[i] = rat_parse(e.get<std::string>());
    } else {
      throw std::runtime_error(where + ": entries must be integers or 'p/q' strings");
    }
  }
  return v;
}

IVec8 ivec_from_json(const json& arr, const std::string& where) {
  if (!arr.is_array() || arr.size() != kRank)
    throw std::runtime_error(where + ": expected an 8-vector");
  IVec8 v{};
  for (int i = 0; i < kRank; ++i) {
    if (!arr[i].is_number_integer())
      throw std::runtime_error(where + ": entries must be integers");
    v[i] = arr[i].get<std::int64_t>();
  }
  return v;
}

}  // namespace

std::vector<TableRow> load_tables(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error(path + ": expected a row array");

  std::vector<TableRow> rows;
  std::set<std::string> triples;
  for (size_t i = 0; i < doc.size(); ++i) {
    const std::string where = path + " row " + std::to_string(i);
    const json& r = doc[i];
    try {
      TableRow row;
      row.table_id = r.at("table_id").get<std::string>();
      row.inf_char = InfChar(vec_from_json(r.at("inf_char"), where + " inf_char"));
      row.x = r.at("x").get<long>();
      row.lambda_param = vec_from_json(r.at("lambda"), where + " lambda");
      row.nu_param = vec_from_json(r.at("nu"), where + " nu");
      for (const json& lkt : r.at("spin_lkts"))
        row.spin_lkts.emplace_back(ivec_from_json(lkt, where + " spin_lkts"));
      if (row.spin_lkts.empty()) throw std::runtime_error(where + ": no spin LKTs");
      for (const json& b : r.at("bold")) row.bold.push_back(b.get<bool>());
      if (row.bold.size() != row.spin_lkts.size())
        throw std::runtime_error(where + ": bold flags do not match spin LKTs");
      row.unipotent = r.at("unipotent").get<bool>();
      row.cancellation = r.at("cancellation").get<bool>();

      std::string key = std::to_string(row.x);
      for (int m = 0; m < kRank; ++m)
        key += "|" + rat_str(row.lambda_param[m]) + "|" + rat_str(row.nu_param[m]);
      if (!triples.insert(key).second)
        throw std::runtime_error(where + ": duplicate (x, lambda, nu) parameter");
      rows.push_back(std::move(row));
    } catch (const json::exception& e) {
      throw std::runtime_error(where + ": " + e.what());
    }
  }
  return rows;
}

std::vector<InfChar> load_phi1(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  if (!doc.is_array()) throw std::runtime_error(path + ": expected an array");
  std::vector<InfChar> out;
  for (size_t i = 0; i < doc.size(); ++i)
    out.emplace_back(vec_from_json(doc[i], path + " entry " + std::to_string(i)));
  return out;
}

std::vector<Weight> pairing_evidence(const Context& c, const KType& mu1, const KType& mu2) {
  const SpinNormResult a = spin_norm(c, mu1);
  const SpinNormResult b = spin_norm(c, mu2);
  std::vector<Weight> shared;
  for (const Weight& g : a.gammas) {
    for (const Weight& gb : b.gammas) {
      if (vec_eq(g.coords, gb.coords)) {
        shared.push_back(g);
        break;
      }
    }
  }
  return shared;
}

RowReport validate_row(const Context& c, const USmallHull& h, const TableRow& row,
                       const std::vector<InfChar>& phi1) {
  RowReport rep;
  rep.table_id = row.table_id;
  rep.x = row.x;
  rep.cancellation = row.cancellation;

  rep.parity_ok = std::all_of(row.spin_lkts.begin(), row.spin_lkts.end(),
                              [](const KType& m) { return m.group_level; });

  const Rat cap_norm = norm_sq_infchar(c, row.inf_char);
  const Weight cap = row.inf_char.weight();

  rep.gap_zero_ok = true;
  rep.usmall_ok = true;
  rep.conj_ok = true;
  std::vector<SpinNormResult> spins;
  for (const KType& mu : row.spin_lkts) {
    SpinNormResult s = spin_norm(c, mu);
    if (s.spin_norm_sq != cap_norm) rep.gap_zero_ok = false;
    if (!usmall(c, h, mu)) rep.usmall_ok = false;
    for (const Weight& g : s.gammas) {
      const Weight gpc(vec_add(c.datum.euclid(g), c.datum.rho_c), Basis::Euclidean);
      if (!conjugate_under_Wg(c.datum, gpc, cap)) rep.conj_ok = false;
    }
    spins.push_back(std::move(s));
  }

  rep.hp_ok = hp_integral(row.inf_char);

  if (row.cancellation) {
    for (size_t i = 0; i < spins.size() && !rep.cancellation_evidence; ++i)
      for (size_t j = i + 1; j < spins.size() && !rep.cancellation_evidence; ++j)
        for (const Weight& g : spins[i].gammas)
          if (std::any_of(spins[j].gammas.begin(), spins[j].gammas.end(),
                          [&](const Weight& gb) { return vec_eq(g.coords, gb.coords); })) {
            rep.cancellation_evidence = true;
            break;
          }
  }

  rep.caption_is_rho = vec_eq(c.datum.euclid(cap), c.datum.rho);
  rep.caption_in_phi1 =
      std::any_of(phi1.begin(), phi1.end(),
                  [&](const InfChar& l) { return vec_eq(l.zeta, row.inf_char.zeta); });

  rep.pass = rep.parity_ok && rep.gap_zero_ok && rep.usmall_ok && rep.hp_ok && rep.conj_ok;
  return rep;
}

ValidationReport validate_tables(const Context& c, const USmallHull& h,
                                 const std::vector<TableRow>& rows,
                                 const std::vector<InfChar>& phi1, int threads) {
  ValidationReport rep;
  rep.total = static_cast<int>(rows.size());
  rep.rows.resize(rows.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads > 0 ? threads : omp_get_max_threads())
#endif
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(rows.size()); ++i)
    rep.rows[i] = validate_row(c, h, rows[i], phi1);

  std::sort(rep.rows.begin(), rep.rows.end(), [](const RowReport& a, const RowReport& b) {
    if (a.table_id != b.table_id) return a.table_id < b.table_id;
    return a.x < b.x;
  });
  for (const RowReport& r : rep.rows) {
    if (!r.pass) ++rep.failures;
    if (r.cancellation) {
      ++rep.cancellation_rows;
      if (r.cancellation_evidence) ++rep.cancellation_evidence_rows;
    }
    if (!r.caption_in_phi1) ++rep.captions_outside_phi1;
  }
  return rep;
}

}  // namespace eix
