#include "oddpres/lattice.hpp"

#include <stdexcept>

#include "checked_math.hpp"

namespace oddpres::lattice {

namespace {

void require_same_dimension(const LatticeVector& u, const LatticeVector& v) {
  if (u.dimension() != v.dimension()) {
    throw std::invalid_argument("lattice vectors of different dimension: " +
                                std::to_string(u.dimension()) + " vs " +
                                std::to_string(v.dimension()));
  }
}

}  // namespace

void require_dimension(int n) {
  if (n < kMinDimension || n > kMaxDimension) {
    throw std::invalid_argument("dimension n=" + std::to_string(n) +
                                " outside supported range 2..8");
  }
}

LatticeVector::LatticeVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  require_dimension(static_cast<int>(coords_.size()) - 1);
}

LatticeVector LatticeVector::zero(int n) {
  require_dimension(n);
  return LatticeVector(std::vector<std::int64_t>(n + 1, 0));
}

LatticeVector LatticeVector::basis(int n, int i) {
  require_dimension(n);
  if (i < 0 || i > n) throw std::invalid_argument("basis index out of range");
  std::vector<std::int64_t> c(n + 1, 0);
  c[i] = 1;
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator+(const LatticeVector& other) const {
  require_same_dimension(*this, other);
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::add(coords_[i], other.coords_[i]);
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-(const LatticeVector& other) const {
  require_same_dimension(*this, other);
  std::vector<std::int64_t> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::sub(coords_[i], other.coords_[i]);
  return LatticeVector(std::move(c));
}

LatticeVector LatticeVector::operator-() const { return -1 * *this; }

LatticeVector operator*(std::int64_t k, const LatticeVector& v) {
  std::vector<std::int64_t> c(v.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = detail::mul(k, v.coords_[i]);
  return LatticeVector(std::move(c));
}

std::string LatticeVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const std::int64_t c = coords_[i];
    if (c == 0) continue;
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const std::int64_t mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += 'e' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::int64_t inner(const LatticeVector& u, const LatticeVector& v) {
  require_same_dimension(u, v);
  std::int64_t acc = -detail::mul(u[0], v[0]);
  for (std::size_t i = 1; i < u.coords().size(); ++i) acc = detail::add(acc, detail::mul(u[i], v[i]));
  return acc;
}

Root::Root(LatticeVector v) : vector_(std::move(v)), norm_(0) {
  const std::int64_t n = lattice::norm(vector_);
  if (n != 1 && n != 2) {
    throw std::invalid_argument("not a root (norm " + std::to_string(n) + "): " +
                                vector_.to_string());
  }
  norm_ = static_cast<int>(n);
}

LatticeVector reflect(const Root& alpha, const LatticeVector& lambda) {
  // 2(lambda,alpha)/alpha^2 is integral for alpha^2 in {1,2}.
  const std::int64_t coeff = 2 * inner(lambda, alpha.vector()) / alpha.norm();
  return lambda - coeff * alpha.vector();
}

std::vector<Root> simple_roots(int n) {
  require_dimension(n);
  std::vector<Root> roots;
  roots.reserve(n + 1);

  std::vector<std::int64_t> a0(n + 1, 0);
  a0[0] = 1;
  const int tail = n == 2 ? 2 : 3;
  for (int i = 1; i <= tail; ++i) a0[i] = -1;
  roots.emplace_back(LatticeVector(std::move(a0)));

  for (int i = 1; i < n; ++i) {
    roots.emplace_back(LatticeVector::basis(n, i) - LatticeVector::basis(n, i + 1));
  }
  roots.emplace_back(LatticeVector::basis(n, n));
  return roots;
}

std::vector<LatticeVector> chamber_vertices(int n) {
  require_dimension(n);
  std::vector<LatticeVector> v;
  v.reserve(n + 1);
  std::vector<std::int64_t> c(n + 1, 0);
  c[0] = 1;
  v.emplace_back(c);  // e0
  c[1] = -1;
  v.emplace_back(c);  // e0-e1
  c[0] = 2;
  c[2] = -1;
  v.emplace_back(c);  // 2e0-e1-e2
  c[0] = 3;
  for (int j = 3; j <= n; ++j) {
    c[j] = -1;
    v.emplace_back(c);
  }
  return v;
}

}  // namespace oddpres::lattice
