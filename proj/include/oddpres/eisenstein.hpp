#pragma once

// Eisenstein integers Z[w], w^2 + w + 1 = 0, and the hexaflection on the
// Lorentzian Eisenstein lattice E (x) Z^{3,1}.

#include <array>
#include <cstdint>
#include <string>

namespace oddpres::eisenstein {

/// a + b w with w = (-1 + i sqrt 3) / 2.
struct EisensteinInteger {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static constexpr EisensteinInteger omega() { return {0, 1}; }

  EisensteinInteger conj() const { return {a - b, -b}; }
  /// |a + b w|^2 = a^2 - ab + b^2.
  std::int64_t norm() const { return a * a - a * b + b * b; }

  friend bool operator==(const EisensteinInteger&, const EisensteinInteger&) = default;

  std::string to_string() const;
};

EisensteinInteger operator+(EisensteinInteger x, EisensteinInteger y);
EisensteinInteger operator-(EisensteinInteger x, EisensteinInteger y);
EisensteinInteger operator-(EisensteinInteger x);
/// (a + b w)(c + d w) = (ac - bd) + (ad + bc - bd) w
EisensteinInteger operator*(EisensteinInteger x, EisensteinInteger y);
inline EisensteinInteger eis_mul(EisensteinInteger x, EisensteinInteger y) { return x * y; }

/// Coordinates of a vector of L = E (x) Z^{3,1}; index 0 is the timelike one.
using EisensteinVector = std::array<EisensteinInteger, 4>;

EisensteinVector operator+(const EisensteinVector& u, const EisensteinVector& v);
EisensteinVector operator*(EisensteinInteger k, const EisensteinVector& v);

/// <u, v> = -u_0 conj(v_0) + sum_{i=1..3} u_i conj(v_i); linear in u.
EisensteinInteger hermitian(const EisensteinVector& u, const EisensteinVector& v);

/// h_e(l) = l - (w^2 + 1) <l, e> e.  Requires <e, e> = 1, else std::invalid_argument.
EisensteinVector hexaflection(const EisensteinVector& e, const EisensteinVector& l);

}  // namespace oddpres::eisenstein
