#include "smt/parallel.hpp"

#include <cstdlib>
#include <string>

namespace smt {

namespace {
std::atomic<int> configured{0};
}

void set_default_threads(int threads) { configured.store(threads > 0 ? threads : 0); }

int thread_count(int fallback) {
  if (const char* env = std::getenv("SMT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  if (fallback > 0) return fallback;
  if (const int c = configured.load(); c > 0) return c;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

}  // namespace smt
