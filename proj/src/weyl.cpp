#include "eix/weyl.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "eix/check.hpp"

namespace eix {

Mat8 reflection_matrix(const Vec8& r) {
  // s_r(x) = x - <x,r> r for <r,r> = 2.
  Mat8 m = mat_identity();
  for (int i = 0; i < kRank; ++i)
    for (int j = 0; j < kRank; ++j) m[i][j] -= r[i] * r[j];
  return m;
}

WeylElement simple_reflection(const RootDatum& d, ReflFlavor f, int i) {
  WeylElement w;
  w.flavor = f;
  w.word = {i};
  w.matrix = reflection_matrix(f == ReflFlavor::G ? d.simple_g[i] : d.simple_k[i]);
  return w;
}

Weight apply(const RootDatum& d, const WeylElement& w, const Weight& x) {
  const Vec8 e = d.euclid(x);
  return d.convert(Weight(mat_vec(w.matrix, e), Basis::Euclidean), x.basis);
}

namespace {

DomResult dominantize(const RootDatum& d, const Weight& x, ReflFlavor f) {
  const auto& simples = (f == ReflFlavor::G) ? d.simple_g : d.simple_k;
  Vec8 e = d.euclid(x);
  WeylElement w;
  w.flavor = f;
  // Each step makes exactly one previously separating wall non-separating,
  // so the loop runs at most l(w0) times.
  for (int guard = 0; guard < 256; ++guard) {
    int neg = -1;
    for (int i = 0; i < kRank; ++i) {
      if (dot(e, simples[i]) < 0) {
        neg = i;
        break;
      }
    }
    if (neg < 0) {
      w.matrix = [&] {
        Mat8 m = mat_identity();
        for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
          m = mat_mul(reflection_matrix(simples[*it]), m);
        return m;
      }();
      return DomResult{d.convert(Weight(e, Basis::Euclidean), x.basis), w};
    }
    const Rat p = dot(e, simples[neg]);
    e = vec_sub(e, vec_scale(p, simples[neg]));
    w.word.push_back(neg);
  }
  throw std::logic_error("dominantize did not terminate");
}

}  // namespace

DomResult dominantize_k(const RootDatum& d, const Weight& x) {
  return dominantize(d, x, ReflFlavor::K);
}

DomResult dominantize_g(const RootDatum& d, const Weight& x) {
  return dominantize(d, x, ReflFlavor::G);
}

bool conjugate_under_Wg(const RootDatum& d, const Weight& x, const Weight& y) {
  return vec_eq(d.euclid(dominantize_g(d, x).dom), d.euclid(dominantize_g(d, y).dom));
}

std::vector<CosetRep> enumerate_w1(const RootDatum& d) {
  // Membership: w^{-1} gamma_i is a positive g-root for all eight k-simple
  // roots. The filtered BFS in the weak right order is exhaustive because
  // minimal galleries between chambers inside the (convex) k-chamber stay
  // inside it.
  const auto member = [&](const Mat8& m) {
    const Mat8 minv = mat_transpose(m);  // orthogonal for the form
    for (int i = 0; i < kRank; ++i) {
      if (!d.is_positive_root_g(mat_vec(minv, d.simple_k[i]))) return false;
    }
    return true;
  };

  std::array<Mat8, kRank> srefl;
  for (int i = 0; i < kRank; ++i) srefl[i] = reflection_matrix(d.simple_g[i]);

  struct Entry {
    Mat8 m;
    std::vector<int> word;
  };
  std::map<Mat8, std::vector<int>, bool (*)(const Mat8&, const Mat8&)> seen(mat_less);

  std::vector<Entry> layer{{mat_identity(), {}}};
  seen.emplace(mat_identity(), std::vector<int>{});
  CHECK(member(mat_identity()), "identity lies in W1");

  std::vector<Entry> all = layer;
  while (!layer.empty()) {
    std::map<Mat8, std::vector<int>, bool (*)(const Mat8&, const Mat8&)> next(mat_less);
    for (const Entry& e : layer) {
      for (int j = 0; j < kRank; ++j) {
        // length increases iff w(alpha_j) is positive
        if (!d.is_positive_root_g(mat_vec(e.m, d.simple_g[j]))) continue;
        Mat8 m2 = mat_mul(e.m, srefl[j]);
        if (seen.count(m2) || !member(m2)) continue;
        std::vector<int> wrd = e.word;
        wrd.push_back(j);
        auto it = next.find(m2);
        if (it == next.end()) {
          next.emplace(std::move(m2), std::move(wrd));
        } else if (wrd < it->second) {
          it->second = std::move(wrd);
        }
      }
    }
    layer.clear();
    for (auto& [m, wrd] : next) {
      seen.emplace(m, wrd);
      layer.push_back({m, wrd});
      all.push_back({m, wrd});
    }
  }
  CHECK(all.size() == 120, "#W1 = 120");

  std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });

  const Weight rho0(d.rho, Basis::Euclidean);
  const Weight rhoc(d.rho_c, Basis::Euclidean);
  std::vector<CosetRep> reps;
  reps.reserve(120);
  for (int j = 0; j < static_cast<int>(all.size()); ++j) {
    CosetRep r;
    r.j = j;
    r.w.matrix = all[j].m;
    r.w.word = all[j].word;
    r.w.flavor = ReflFlavor::G;
    r.rho = Weight(mat_vec(all[j].m, d.rho), Basis::Euclidean);
    r.rho_n = Weight(vec_sub(r.rho.coords, d.rho_c), Basis::Euclidean);

    // The positive system attached to w is w(positive g-roots). Its compact
    // half is exactly the positive k-roots, so the half sum of its
    // noncompact half equals w.rho - rho_c. Assert both routes.
    Vec8 compact_half = vec_zero(), noncompact_half = vec_zero();
    for (const Vec8& pr : d.positive_g) {
      const Vec8 img = mat_vec(all[j].m, pr);
      if (d.is_root_k(img)) {
        compact_half = vec_add(compact_half, img);
      } else {
        noncompact_half = vec_add(noncompact_half, img);
      }
    }
    compact_half = vec_scale(Rat(1, 2), compact_half);
    noncompact_half = vec_scale(Rat(1, 2), noncompact_half);
    CHECK(vec_eq(compact_half, d.rho_c), "compact half of w(Delta+) is rho_c");
    CHECK(vec_eq(noncompact_half, r.rho_n.coords), "rho_n^(j) both ways");

    r.vertex = dominantize_k(d, Weight(vec_scale(2, r.rho_n.coords), Basis::Euclidean)).dom;
    reps.push_back(std::move(r));
  }
  CHECK(reps[0].w.is_identity(), "w^(0) is the identity");

  // The 120 rho^(j) are pairwise distinct and k-dominant.
  for (size_t a = 0; a < reps.size(); ++a) {
    for (int i = 0; i < kRank; ++i)
      CHECK(dot(reps[a].rho.coords, d.simple_k[i]) >= 0, "rho^(j) k-dominant");
    for (size_t b = a + 1; b < reps.size(); ++b)
      CHECK(!vec_eq(reps[a].rho.coords, reps[b].rho.coords), "rho^(j) distinct");
  }
  return reps;
}

}  // namespace eix
