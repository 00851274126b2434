#ifndef EIX_TEST_UTIL_HPP
#define EIX_TEST_UTIL_HPP

#include "eix/audit.hpp"

namespace eixtest {

inline const eix::Context& ctx() {
  static const eix::Context c = eix::Context::create();
  return c;
}

inline const eix::USmallHull& hull() {
  static const eix::USmallHull h = eix::build_usmall_hull(ctx());
  return h;
}

inline eix::IVec8 iv(std::initializer_list<std::int64_t> xs) {
  eix::IVec8 v{};
  int i = 0;
  for (auto x : xs) v[i++] = x;
  return v;
}

inline eix::Vec8 rv(std::initializer_list<long> xs) {
  eix::Vec8 v = eix::vec_zero();
  int i = 0;
  for (auto x : xs) v[i++] = eix::Rat(x);
  return v;
}

}  // namespace eixtest

#endif
