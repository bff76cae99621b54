#include "latcurve/parallel.hpp"

namespace latcurve {

namespace {
std::atomic<unsigned> configured{0};
}

void set_thread_count(unsigned threads) { configured = threads; }

unsigned thread_count() {
  const unsigned t = configured;
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace latcurve
