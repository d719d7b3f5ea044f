#include "krk0/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "krk0/number_theory.hpp"

namespace krk0 {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Node-based map: references handed out stay valid across inserts.
std::map<std::uint64_t, IntPoly>& cache() {
  static std::map<std::uint64_t, IntPoly> c;
  return c;
}

}  // namespace

const IntPoly& cyclotomic(std::uint64_t n) {
  if (n == 0) throw InvalidRange("n must be >= 1");
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache().find(n); it != cache().end()) return it->second;
  }
  IntPoly denominator = IntPoly::constant(1);
  for (auto d : divisors(n)) {
    if (d != n) denominator *= cyclotomic(d);
  }
  IntPoly phi = divide_exact(IntPoly::power_minus_one(n), denominator);
  std::lock_guard lock(cache_mutex());
  return cache().emplace(n, std::move(phi)).first->second;
}

}  // namespace krk0
