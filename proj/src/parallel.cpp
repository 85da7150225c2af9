#include "fibspec/parallel.hpp"

#include <cstdlib>
#include <string>

namespace fibspec {

int resolve_workers(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("FIBSPEC_PARALLELISM")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
      // fall through to hardware default on junk
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace fibspec
