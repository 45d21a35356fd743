#include "oddpres/eisenstein.hpp"

#include <stdexcept>

#include "checked_math.hpp"

namespace oddpres::eisenstein {

using detail::add;
using detail::mul;
using detail::sub;

std::string EisensteinInteger::to_string() const {
  if (b == 0) return std::to_string(a);
  std::string s = a != 0 ? std::to_string(a) + (b > 0 ? "+" : "-") : (b < 0 ? "-" : "");
  const std::int64_t mag = b < 0 ? -b : b;
  if (mag != 1) s += std::to_string(mag);
  return s + "w";
}

EisensteinInteger operator+(EisensteinInteger x, EisensteinInteger y) {
  return {add(x.a, y.a), add(x.b, y.b)};
}

EisensteinInteger operator-(EisensteinInteger x, EisensteinInteger y) {
  return {sub(x.a, y.a), sub(x.b, y.b)};
}

EisensteinInteger operator-(EisensteinInteger x) { return {-x.a, -x.b}; }

EisensteinInteger operator*(EisensteinInteger x, EisensteinInteger y) {
  const std::int64_t bd = mul(x.b, y.b);
  return {sub(mul(x.a, y.a), bd), sub(add(mul(x.a, y.b), mul(x.b, y.a)), bd)};
}

EisensteinVector operator+(const EisensteinVector& u, const EisensteinVector& v) {
  EisensteinVector r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

EisensteinVector operator*(EisensteinInteger k, const EisensteinVector& v) {
  EisensteinVector r;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = k * v[i];
  return r;
}

EisensteinInteger hermitian(const EisensteinVector& u, const EisensteinVector& v) {
  EisensteinInteger acc = -(u[0] * v[0].conj());
  for (std::size_t i = 1; i < u.size(); ++i) acc = acc + u[i] * v[i].conj();
  return acc;
}

EisensteinVector hexaflection(const EisensteinVector& e, const EisensteinVector& l) {
  if (hermitian(e, e) != EisensteinInteger{1, 0}) {
    throw std::invalid_argument("hexaflection mirror must have norm one");
  }
  const EisensteinInteger w = EisensteinInteger::omega();
  const EisensteinInteger coeff = w * w + EisensteinInteger{1, 0};  // equals -w
  return l + (-(coeff * hermitian(l, e))) * e;
}

}  // namespace oddpres::eisenstein
