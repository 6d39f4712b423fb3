#include "leibniz/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace leibniz {

namespace {

int threads_from_env() {
  const char* env = std::getenv("LEIBNIZ_LAB_THREADS");
  if (env == nullptr) return 0;
  try {
    int value = std::stoi(env);
    return value > 0 ? value : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

std::atomic<int>& configured() {
  static std::atomic<int> value{threads_from_env()};
  return value;
}

}  // namespace

int thread_count() {
  int value = configured().load();
  return value > 0 ? value : omp_get_max_threads();
}

void set_thread_count(int threads) { configured().store(threads > 0 ? threads : 0); }

}  // namespace leibniz
