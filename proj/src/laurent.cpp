#include "krk0/polynomial.hpp"

namespace krk0 {

LaurentPoly::LaurentPoly(IntPoly poly, long shift) : shift_(shift) {
  if (poly.is_zero()) {
    shift_ = 0;
    return;
  }
  const auto& c = poly.coefficients();
  std::size_t low = 0;
  while (c[low] == 0) ++low;
  poly_ = IntPoly(std::vector<Integer>(c.begin() + static_cast<long>(low), c.end()));
  shift_ += static_cast<long>(low);
}

Integer LaurentPoly::coeff(long e) const {
  if (e < shift_) return 0;
  return poly_.coeff(static_cast<std::size_t>(e - shift_));
}

namespace {

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  if (a.is_zero()) return subtract ? LaurentPoly(-b.poly(), b.shift()) : b;
  if (b.is_zero()) return a;
  const long low = std::min(a.shift(), b.shift());
  IntPoly pa = a.poly() * IntPoly::monomial(static_cast<std::size_t>(a.shift() - low));
  IntPoly pb = b.poly() * IntPoly::monomial(static_cast<std::size_t>(b.shift() - low));
  return LaurentPoly(subtract ? pa - pb : pa + pb, low);
}

}  // namespace

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return combine(a, b, true); }
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  return LaurentPoly(a.poly() * b.poly(), a.shift() + b.shift());
}

}  // namespace krk0
