#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

// Eigen 3.4 declares `const_iterator` as void on non-vector expressions,
// which breaks Boost's byte-container probe when mixed scalar/matrix
// operators are considered. A void iterator never names a byte container.
namespace boost::multiprecision::detail {
template <class C>
  requires std::is_void_v<typename C::const_iterator>
struct is_byte_container<C> : boost::false_type {};
}  // namespace boost::multiprecision::detail

namespace krk0 {

/// Arbitrary-precision signed integer. Expression templates are off so the
/// type behaves as a plain value inside Eigen expressions.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Dense dynamic matrix over a scalar ring.
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;

inline std::string to_string(const Integer& x) { return x.str(); }

/// Parses an optionally signed decimal integer. Returns nullopt on any
/// malformed input instead of throwing.
std::optional<Integer> parse_integer(std::string_view text);

/// Narrowing conversion; nullopt if the value does not fit.
std::optional<std::int64_t> to_int64(const Integer& x);

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Non-negative gcd.
inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

}  // namespace krk0
