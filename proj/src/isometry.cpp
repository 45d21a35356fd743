#include "oddpres/isometry.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "checked_math.hpp"

namespace oddpres::isometry {

namespace {

int form_sign(int i) { return i == 0 ? -1 : 1; }

}  // namespace

bool preserves_form(int n, std::span<const std::int64_t> m) {
  const int s = n + 1;
  if (m.size() != static_cast<std::size_t>(s * s)) return false;
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < s; ++k) {
        acc = detail::add(acc, detail::mul(form_sign(k), detail::mul(m[k * s + i], m[k * s + j])));
      }
      const std::int64_t want = i == j ? form_sign(i) : 0;
      if (acc != want) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// LatticeIsometry

LatticeIsometry::LatticeIsometry(int n, std::vector<std::int64_t> row_major)
    : n_(n), entries_(std::move(row_major)) {
  lattice::require_dimension(n);
  if (!preserves_form(n, entries_)) {
    throw std::invalid_argument("matrix does not preserve the Lorentzian form");
  }
  if (entries_[0] < 1) {
    throw std::invalid_argument("matrix does not preserve the forward cone");
  }
}

LatticeIsometry LatticeIsometry::identity(int n) {
  lattice::require_dimension(n);
  std::vector<std::int64_t> e((n + 1) * (n + 1), 0);
  for (int i = 0; i <= n; ++i) e[i * (n + 1) + i] = 1;
  return {Unchecked{}, n, std::move(e)};
}

LatticeVector LatticeIsometry::apply(const LatticeVector& v) const {
  if (v.dimension() != n_) throw std::invalid_argument("dimension mismatch in apply");
  const int s = size();
  std::vector<std::int64_t> out(s, 0);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) out[r] = detail::add(out[r], detail::mul(at(r, c), v[c]));
  }
  return LatticeVector(std::move(out));
}

bool LatticeIsometry::is_identity() const {
  const int s = size();
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      if (at(r, c) != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

std::int64_t LatticeIsometry::determinant() const {
  // Bareiss: every division below is exact.
  const int s = size();
  std::vector<std::int64_t> a = entries_;
  std::int64_t sign = 1;
  std::int64_t prev = 1;
  for (int k = 0; k < s - 1; ++k) {
    if (a[k * s + k] == 0) {
      int p = k + 1;
      while (p < s && a[p * s + k] == 0) ++p;
      if (p == s) return 0;
      for (int c = 0; c < s; ++c) std::swap(a[k * s + c], a[p * s + c]);
      sign = -sign;
    }
    for (int i = k + 1; i < s; ++i) {
      for (int j = k + 1; j < s; ++j) {
        a[i * s + j] = detail::sub(detail::mul(a[i * s + j], a[k * s + k]),
                                   detail::mul(a[i * s + k], a[k * s + j])) /
                       prev;
      }
    }
    prev = a[k * s + k];
  }
  return sign * a[(s - 1) * s + (s - 1)];
}

LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in product");
  const int s = a.size();
  std::vector<std::int64_t> out(s * s, 0);
  for (int r = 0; r < s; ++r) {
    for (int k = 0; k < s; ++k) {
      const std::int64_t x = a.at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < s; ++c) {
        out[r * s + c] = detail::add(out[r * s + c], detail::mul(x, b.at(k, c)));
      }
    }
  }
  return {LatticeIsometry::Unchecked{}, a.n_, std::move(out)};
}

std::string LatticeIsometry::to_string() const {
  std::string out = "[";
  for (int r = 0; r < size(); ++r) {
    out += r == 0 ? "[" : ", [";
    for (int c = 0; c < size(); ++c) {
      if (c) out += ", ";
      out += std::to_string(at(r, c));
    }
    out += "]";
  }
  return out + "]";
}

// ---------------------------------------------------------------------------
// ModularMatrix

ModularMatrix::ModularMatrix(int size, int modulus, std::span<const std::int64_t> row_major)
    : ModularMatrix(size, modulus) {
  if (modulus != 2 && modulus != 3) throw std::invalid_argument("modulus must be 2 or 3");
  if (row_major.size() != static_cast<std::size_t>(size * size)) {
    throw std::invalid_argument("wrong entry count for modular matrix");
  }
  for (std::size_t i = 0; i < row_major.size(); ++i) {
    const std::int64_t r = row_major[i] % modulus;
    entries_[i] = static_cast<std::uint8_t>(r < 0 ? r + modulus : r);
  }
}

ModularMatrix ModularMatrix::identity(int size, int modulus) {
  if (modulus != 2 && modulus != 3) throw std::invalid_argument("modulus must be 2 or 3");
  ModularMatrix m(size, modulus);
  for (int i = 0; i < size; ++i) m.entries_[i * size + i] = 1;
  return m;
}

ModularMatrix ModularMatrix::from_bytes(int size, int modulus, std::span<const std::uint8_t> bytes) {
  ModularMatrix m(size, modulus);
  std::copy(bytes.begin(), bytes.end(), m.entries_.begin());
  return m;
}

bool ModularMatrix::is_identity() const { return *this == identity(size_, modulus_); }

ModularMatrix ModularMatrix::negated() const {
  ModularMatrix m(size_, modulus_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    m.entries_[i] = static_cast<std::uint8_t>((modulus_ - entries_[i]) % modulus_);
  }
  return m;
}

ModularMatrix operator*(const ModularMatrix& a, const ModularMatrix& b) {
  if (a.size_ != b.size_ || a.modulus_ != b.modulus_) {
    throw std::invalid_argument("modular matrices of different shape or modulus");
  }
  const int s = a.size_;
  ModularMatrix out(s, a.modulus_);
  for (int r = 0; r < s; ++r) {
    for (int c = 0; c < s; ++c) {
      int acc = 0;
      for (int k = 0; k < s; ++k) acc += a.entries_[r * s + k] * b.entries_[k * s + c];
      out.entries_[r * s + c] = static_cast<std::uint8_t>(acc % a.modulus_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closures

ModularMatrix GroupClosure::element(std::uint32_t index) const {
  return ModularMatrix::from_bytes(size_, modulus_, store_[index]);
}

std::optional<std::uint32_t> GroupClosure::index_of(const ModularMatrix& m) const {
  if (m.size() != size_ || m.modulus() != modulus_) return std::nullopt;
  return store_.find(m.bytes());
}

bool GroupClosure::contains_minus_identity() const {
  return contains(ModularMatrix::identity(size_, modulus_).negated());
}

GroupClosure closure(std::span<const ModularMatrix> generators, std::size_t budget) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  const int s = generators.front().size();
  const int m = generators.front().modulus();
  for (const auto& g : generators) {
    if (g.size() != s || g.modulus() != m) {
      throw std::invalid_argument("closure generators differ in size or modulus");
    }
  }
  std::vector<ModularMatrix> gens(generators.begin(), generators.end());
  const ModularMatrix id = ModularMatrix::identity(s, m);

  auto step = [&](std::span<const std::uint8_t> x, std::size_t gi, std::span<std::uint8_t> out) {
    const auto g = gens[gi].bytes();
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) {
        int acc = 0;
        for (int k = 0; k < s; ++k) acc += x[r * s + k] * g[k * s + c];
        out[r * s + c] = static_cast<std::uint8_t>(acc % m);
      }
    }
  };
  ElementStore store = bfs_closure(id.bytes(), gens.size(), step, budget);
  return GroupClosure(s, m, std::move(gens), std::move(store));
}

std::uint64_t projective_order(const GroupClosure& g) {
  return g.contains_minus_identity() ? g.order() / 2 : g.order();
}

LatticeIsometry FiniteMatrixGroup::element(std::uint32_t index) const {
  const auto rec = store_[index];
  std::vector<std::int64_t> e(rec.size());
  for (std::size_t i = 0; i < rec.size(); ++i) e[i] = static_cast<std::int8_t>(rec[i]);
  return LatticeIsometry(n_, std::move(e));
}

bool FiniteMatrixGroup::contains(const LatticeIsometry& m) const {
  if (m.dimension() != n_) return false;
  std::vector<std::uint8_t> rec(m.entries().size());
  for (std::size_t i = 0; i < rec.size(); ++i) {
    const std::int64_t v = m.entries()[i];
    if (v < std::numeric_limits<std::int8_t>::min() || v > std::numeric_limits<std::int8_t>::max()) {
      return false;
    }
    rec[i] = static_cast<std::uint8_t>(static_cast<std::int8_t>(v));
  }
  return store_.find(rec).has_value();
}

FiniteMatrixGroup finite_group_elements(std::span<const LatticeIsometry> generators,
                                        std::size_t budget) {
  if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
  const int n = generators.front().dimension();
  const int s = n + 1;
  for (const auto& g : generators) {
    if (g.dimension() != n) throw std::invalid_argument("closure generators differ in dimension");
  }

  // Generators are sparse (reflections), so store each column's nonzeros.
  struct Term {
    int row;
    std::int64_t value;
  };
  std::vector<std::vector<std::vector<Term>>> columns(generators.size());
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    columns[gi].resize(s);
    for (int c = 0; c < s; ++c) {
      for (int k = 0; k < s; ++k) {
        if (const auto v = generators[gi].at(k, c); v != 0) columns[gi][c].push_back({k, v});
      }
    }
  }

  auto step = [&](std::span<const std::uint8_t> x, std::size_t gi, std::span<std::uint8_t> out) {
    const auto* xs = reinterpret_cast<const std::int8_t*>(x.data());
    for (int c = 0; c < s; ++c) {
      for (int r = 0; r < s; ++r) {
        std::int64_t acc = 0;
        for (const Term& t : columns[gi][c]) acc += xs[r * s + t.row] * t.value;
        if (acc < std::numeric_limits<std::int8_t>::min() ||
            acc > std::numeric_limits<std::int8_t>::max()) {
          throw std::overflow_error("matrix entry exceeds int8 storage");
        }
        out[r * s + c] = static_cast<std::uint8_t>(static_cast<std::int8_t>(acc));
      }
    }
  };

  std::vector<std::uint8_t> id(s * s, 0);
  for (int i = 0; i < s; ++i) id[i * s + i] = 1;
  return FiniteMatrixGroup(n, bfs_closure(id, generators.size(), step, budget));
}

// ---------------------------------------------------------------------------

LatticeIsometry reflection_matrix(const Root& alpha) {
  const int n = alpha.dimension();
  const int s = n + 1;
  std::vector<std::int64_t> e(s * s);
  for (int c = 0; c < s; ++c) {
    const LatticeVector img = lattice::reflect(alpha, LatticeVector::basis(n, c));
    for (int r = 0; r < s; ++r) e[r * s + c] = img[r];
  }
  return LatticeIsometry(n, std::move(e));
}

ModularMatrix reduce_mod(const LatticeIsometry& m, int modulus) {
  return ModularMatrix(m.size(), modulus, m.entries());
}

std::vector<LatticeIsometry> simple_reflections(int n) {
  std::vector<LatticeIsometry> out;
  for (const Root& r : lattice::simple_roots(n)) out.push_back(reflection_matrix(r));
  return out;
}

std::vector<LatticeIsometry> long_simple_reflections(int n) {
  std::vector<LatticeIsometry> out;
  for (const Root& r : lattice::simple_roots(n)) {
    if (r.norm() == 2) out.push_back(reflection_matrix(r));
  }
  return out;
}

CongruenceKernelReport check_congruence_kernels(int n, bool allow_n7, std::size_t budget) {
  if (n < 2 || n > 7) {
    throw std::invalid_argument("congruence kernel check supports 2 <= n <= 7");
  }
  if (n == 7 && !allow_n7) {
    throw std::invalid_argument("n = 7 congruence kernel check requires explicit opt-in");
  }
  const auto gens = long_simple_reflections(n);
  const FiniteMatrixGroup group = finite_group_elements(gens, budget);

  CongruenceKernelReport report;
  report.n = n;
  report.group_order = group.order();
  const int s = n + 1;
  group.for_each_raw([&](std::span<const std::int8_t> m) {
    bool id2 = true;
    bool id3 = true;
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) {
        const int d = m[r * s + c] - (r == c ? 1 : 0);
        id2 = id2 && d % 2 == 0;
        id3 = id3 && d % 3 == 0;
      }
    }
    report.kernel_mod2 += id2;
    report.kernel_mod3 += id3;
  });
  return report;
}

CosetSpace coset_space(const GroupClosure& g, std::span<const ModularMatrix> subgroup_generators) {
  for (const auto& h : subgroup_generators) {
    if (!g.contains(h)) throw std::invalid_argument("subgroup generator not in the group");
  }
  const ModularMatrix id = ModularMatrix::identity(g.matrix_size(), g.modulus());
  std::vector<ModularMatrix> h_elements;
  if (subgroup_generators.empty()) {
    h_elements.push_back(id);
  } else {
    const GroupClosure h = closure(subgroup_generators);
    for (std::uint32_t i = 0; i < h.order(); ++i) h_elements.push_back(h.element(i));
  }

  const bool has_minus = g.contains_minus_identity();
  const auto order = static_cast<std::uint32_t>(g.order());
  constexpr std::uint32_t kUnset = 0xffffffffu;

  CosetSpace out;
  out.subgroup_order = h_elements.size();
  out.coset_of.assign(order, kUnset);

  auto label = [&](const ModularMatrix& m, std::uint32_t coset) {
    out.coset_of[*g.index_of(m)] = coset;
    if (has_minus) out.coset_of[*g.index_of(m.negated())] = coset;
  };

  for (std::uint32_t i = 0; i < order; ++i) {
    if (out.coset_of[i] != kUnset) continue;
    const auto c = static_cast<std::uint32_t>(out.representatives.size());
    out.representatives.push_back(i);
    const ModularMatrix rep = g.element(i);
    for (const auto& h : h_elements) label(rep * h, c);
  }
  out.count = out.representatives.size();
  const std::uint64_t projective = has_minus ? order / 2 : order;
  out.projective_subgroup_order = projective / out.count;
  return out;
}

}  // namespace oddpres::isometry
