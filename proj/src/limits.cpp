#include "pargroup/limits.hpp"

#include <cstdlib>
#include <string>

namespace pargroup {

const Limits& Limits::defaults() {
  static const Limits lim = [] {
    Limits l;
    if (const char* env = std::getenv("PARGROUP_MAX_DIRECT")) {
      try {
        int v = std::stoi(env);
        // Single-word subset masks: one bit per group element.
        if (v >= 1 && v <= 63) l.max_direct = v;
      } catch (...) {
      }
    }
    return l;
  }();
  return lim;
}

}  // namespace pargroup
