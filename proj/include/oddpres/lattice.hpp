#pragma once

// Exact arithmetic on the odd unimodular Lorentzian lattice Z^{n,1}.
//
// Coordinates are taken in the standard basis e_0..e_n with (e_i, e_j) = delta_ij
// except (e_0, e_0) = -1.  Every vector carries its dimension parameter n so that
// mixing vectors of different lattices fails immediately.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace oddpres::lattice {

inline constexpr int kMinDimension = 2;
inline constexpr int kMaxDimension = 8;

/// Throws std::invalid_argument unless kMinDimension <= n <= kMaxDimension.
void require_dimension(int n);

class LatticeVector {
 public:
  /// coords[0] is the e_0 coordinate; n is deduced as coords.size() - 1.
  explicit LatticeVector(std::vector<std::int64_t> coords);
  LatticeVector(std::initializer_list<std::int64_t> coords)
      : LatticeVector(std::vector<std::int64_t>(coords)) {}

  static LatticeVector zero(int n);
  static LatticeVector basis(int n, int i);

  int dimension() const { return static_cast<int>(coords_.size()) - 1; }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }

  LatticeVector operator+(const LatticeVector& other) const;
  LatticeVector operator-(const LatticeVector& other) const;
  LatticeVector operator-() const;
  friend LatticeVector operator*(std::int64_t k, const LatticeVector& v);

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  /// Human-readable form such as "3e0-2e1-2e2"; the zero vector prints as "0".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

/// -u_0 v_0 + sum_{i>=1} u_i v_i.  Throws on dimension mismatch.
std::int64_t inner(const LatticeVector& u, const LatticeVector& v);
inline std::int64_t norm(const LatticeVector& v) { return inner(v, v); }

/// A lattice vector of norm 1 or 2; these are the only roots used anywhere.
class Root {
 public:
  /// Throws std::invalid_argument if the norm is not 1 or 2.
  explicit Root(LatticeVector v);

  const LatticeVector& vector() const { return vector_; }
  int norm() const { return norm_; }
  int dimension() const { return vector_.dimension(); }

  friend bool operator==(const Root&, const Root&) = default;

 private:
  LatticeVector vector_;
  int norm_;
};

/// s_alpha(lambda) = lambda - (2 (lambda, alpha) / alpha^2) alpha, exactly.
LatticeVector reflect(const Root& alpha, const LatticeVector& lambda);

/// Simple roots alpha_0..alpha_n of the fundamental chamber of O+(Z^{n,1}).
/// alpha_0 = e0-e1-e2-e3 for n >= 3 and the norm-one e0-e1-e2 for n = 2.
std::vector<Root> simple_roots(int n);

/// Chamber vertices v_0..v_n: e0, e0-e1, 2e0-e1-e2, and 3e0-e1-..-e_j for j >= 3.
std::vector<LatticeVector> chamber_vertices(int n);

}  // namespace oddpres::lattice
