#include "krk0/fixed_points.hpp"

#include <numeric>

#include "krk0/errors.hpp"

namespace krk0 {

namespace {

std::uint64_t magnitude(std::int64_t a) {
  return a < 0 ? static_cast<std::uint64_t>(0) - static_cast<std::uint64_t>(a) : static_cast<std::uint64_t>(a);
}

}  // namespace

IndexSet mu_fixed_indices(const WeightVector& w, std::uint64_t n) {
  if (n == 0) throw InvalidRange("n must be >= 1");
  IndexSet out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (magnitude(w[i]) % n == 0) out.push_back(i);
  return out;
}

IndexSet torus_fixed_indices(const WeightVector& w) {
  IndexSet out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 0) out.push_back(i);
  return out;
}

bool coprime_predicate(const WeightVector& w, std::uint64_t n) {
  if (n == 0) throw InvalidRange("n must be >= 1");
  for (auto a : w.weights())
    if (a != 0 && std::gcd(magnitude(a), n) != 1) return false;
  return true;
}

FixedPointReport verify_fixed_point_prop(const WeightVector& w, std::uint64_t bound) {
  FixedPointReport report;
  report.weights = w.weights();
  report.bound = bound;
  const IndexSet torus = torus_fixed_indices(w);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (!coprime_predicate(w, n)) continue;
    ++report.checked;
    IndexSet mu = mu_fixed_indices(w, n);
    if (mu != torus) {
      report.counterexample = FixedPointCounterexample{n, std::move(mu), torus};
      break;
    }
  }
  return report;
}

}  // namespace krk0
