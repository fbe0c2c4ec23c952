#include "fourier/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>
#include <vector>

namespace fourier {

namespace {

// Reduces t to s in [-1/4, 1/4] and a quarter-turn count q in [0, 4) with
// pi t = pi s + q pi/2 (mod 2 pi).
void reduce(double t, double& s, int& q) {
  double r = std::fmod(t, 2.0);  // exact
  const double quarter = std::nearbyint(2.0 * r);
  s = r - 0.5 * quarter;
  q = static_cast<int>(quarter) % 4;
  if (q < 0) q += 4;
}

}  // namespace

Complex unit_phase(double t) {
  double s;
  int q;
  reduce(t, s, q);
  const double c = (s == 0.0) ? 1.0 : std::cos(std::numbers::pi * s);
  const double sn = (s == 0.0) ? 0.0 : std::sin(std::numbers::pi * s);
  switch (q) {
    case 0: return {c, sn};
    case 1: return {-sn, c};
    case 2: return {-c, -sn};
    default: return {sn, -c};
  }
}

double sinpi(double t) { return unit_phase(t).imag(); }
double cospi(double t) { return unit_phase(t).real(); }

std::size_t default_worker_count() {
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)>& body) {
  if (workers == 0) workers = default_worker_count();
  workers = std::min(workers, count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex failure_mutex;
  std::exception_ptr failure;
  auto drain = [&] {
    try {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = count;
    }
  };
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(drain);
    drain();
  }
  if (failure) std::rethrow_exception(failure);
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace fourier
