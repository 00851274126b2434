#ifndef EIX_CHECK_HPP
#define EIX_CHECK_HPP

#include <stdexcept>
#include <string>

namespace eix {

// Internal invariant check. These guard hard-coded constructions and
// algorithm postconditions; a failure means the build itself is wrong,
// so we throw rather than return an error state.
#define CHECK(cond, what)                                                  \
  do {                                                                     \
    if (!(cond))                                                           \
      throw std::logic_error(std::string("invariant failed: ") + (what) + \
                             " at " + __FILE__ + ":" +                     \
                             std::to_string(__LINE__));                    \
  } while (0)

}  // namespace eix

#endif
