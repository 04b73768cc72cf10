#include "charloci/parallel.hpp"

#include <cstdlib>
#include <string>

namespace charloci {

int thread_cap() {
  const char* env = std::getenv("CHARLOCI_THREADS");
  if (env && *env) {
    try {
      int v = std::stoi(env);
      return v <= 0 ? 1 : v;
    } catch (...) {
      return 1;
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace charloci
