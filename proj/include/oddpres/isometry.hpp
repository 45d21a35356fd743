#pragma once

// Integer isometries of Z^{n,1}, their reductions mod 2 and mod 3, and
// exhaustive closures of finite matrix groups.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oddpres/element_store.hpp"
#include "oddpres/lattice.hpp"

namespace oddpres::isometry {

using lattice::LatticeVector;
using lattice::Root;

inline constexpr std::size_t kDefaultClosureBudget = 10'000'000;

/// An (n+1)x(n+1) integer matrix whose column j is the image of e_j.  The
/// checked constructor enforces M^T J M = J and M(0,0) >= 1.
class LatticeIsometry {
 public:
  /// Throws std::invalid_argument if the matrix is not a forward isometry.
  LatticeIsometry(int n, std::vector<std::int64_t> row_major);

  static LatticeIsometry identity(int n);

  int dimension() const { return n_; }
  int size() const { return n_ + 1; }
  std::int64_t at(int row, int col) const { return entries_[row * size() + col]; }
  std::span<const std::int64_t> entries() const { return entries_; }

  LatticeVector apply(const LatticeVector& v) const;
  bool is_identity() const;
  /// Exact determinant (fraction-free Gaussian elimination).
  std::int64_t determinant() const;

  friend LatticeIsometry operator*(const LatticeIsometry& a, const LatticeIsometry& b);
  friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;

  std::string to_string() const;

 private:
  struct Unchecked {};
  LatticeIsometry(Unchecked, int n, std::vector<std::int64_t> row_major)
      : n_(n), entries_(std::move(row_major)) {}

  int n_;
  std::vector<std::int64_t> entries_;
};

/// True when M^T J M = J for J = diag(-1, 1, ..., 1).
bool preserves_form(int n, std::span<const std::int64_t> row_major);

/// Square matrix over Z/m with residues stored in [0, m).
class ModularMatrix {
 public:
  ModularMatrix(int size, int modulus, std::span<const std::int64_t> row_major);

  static ModularMatrix identity(int size, int modulus);
  /// Rebuilds a matrix from its canonical byte encoding.
  static ModularMatrix from_bytes(int size, int modulus, std::span<const std::uint8_t> bytes);

  int size() const { return size_; }
  int modulus() const { return modulus_; }
  int at(int row, int col) const { return entries_[row * size_ + col]; }
  /// Canonical row-major encoding; equal matrices have equal bytes.
  std::span<const std::uint8_t> bytes() const { return entries_; }

  bool is_identity() const;
  ModularMatrix negated() const;

  friend ModularMatrix operator*(const ModularMatrix& a, const ModularMatrix& b);
  friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;

 private:
  ModularMatrix(int size, int modulus) : size_(size), modulus_(modulus), entries_(size * size, 0) {}

  int size_;
  int modulus_;
  std::vector<std::uint8_t> entries_;
};

/// The finite group generated by a list of modular matrices.
class GroupClosure {
 public:
  int modulus() const { return modulus_; }
  int matrix_size() const { return size_; }
  std::uint64_t order() const { return store_.size(); }
  const std::vector<ModularMatrix>& generators() const { return generators_; }

  ModularMatrix element(std::uint32_t index) const;
  std::optional<std::uint32_t> index_of(const ModularMatrix& m) const;
  bool contains(const ModularMatrix& m) const { return index_of(m).has_value(); }
  bool contains_minus_identity() const;

 private:
  friend GroupClosure closure(std::span<const ModularMatrix> generators, std::size_t budget);
  GroupClosure(int size, int modulus, std::vector<ModularMatrix> gens, ElementStore store)
      : size_(size), modulus_(modulus), generators_(std::move(gens)), store_(std::move(store)) {}

  int size_;
  int modulus_;
  std::vector<ModularMatrix> generators_;
  ElementStore store_;
};

/// The finite integer matrix group generated by lattice isometries.  Entries
/// are stored as int8; std::overflow_error if an element leaves that range.
class FiniteMatrixGroup {
 public:
  int dimension() const { return n_; }
  std::uint64_t order() const { return store_.size(); }
  LatticeIsometry element(std::uint32_t index) const;
  bool contains(const LatticeIsometry& m) const;

  /// Visits each element as a row-major int8 span without materializing it.
  template <class Fn>
  void for_each_raw(Fn&& fn) const {
    for (std::uint32_t i = 0; i < store_.size(); ++i) {
      const auto rec = store_[i];
      fn(std::span<const std::int8_t>(reinterpret_cast<const std::int8_t*>(rec.data()), rec.size()));
    }
  }

 private:
  friend FiniteMatrixGroup finite_group_elements(std::span<const LatticeIsometry> generators,
                                                 std::size_t budget);
  FiniteMatrixGroup(int n, ElementStore store) : n_(n), store_(std::move(store)) {}

  int n_;
  ElementStore store_;
};

LatticeIsometry reflection_matrix(const Root& alpha);
ModularMatrix reduce_mod(const LatticeIsometry& m, int modulus);

/// Breadth-first multiplicative closure.  Throws std::invalid_argument on an
/// empty or inconsistent generator list and BudgetExceeded past the budget.
GroupClosure closure(std::span<const ModularMatrix> generators,
                     std::size_t budget = kDefaultClosureBudget);

/// |G / (G intersect {+-I})|.
std::uint64_t projective_order(const GroupClosure& g);

FiniteMatrixGroup finite_group_elements(std::span<const LatticeIsometry> generators,
                                        std::size_t budget = kDefaultClosureBudget);

/// Reflection matrices of the simple roots of O+(Z^{n,1}).
std::vector<LatticeIsometry> simple_reflections(int n);
/// Reflection matrices of the norm-2 simple roots; they generate the finite
/// stabilizer of the distinguished face of the chamber.
std::vector<LatticeIsometry> long_simple_reflections(int n);

struct CongruenceKernelReport {
  int n = 0;
  std::uint64_t group_order = 0;
  /// Elements congruent to the identity modulo 2 and modulo 3 (identity included).
  std::uint64_t kernel_mod2 = 0;
  std::uint64_t kernel_mod3 = 0;

  bool passed() const { return kernel_mod2 == 1 && kernel_mod3 == 1; }
};

/// Enumerates the group generated by the long simple reflections and counts
/// its elements congruent to I mod 2 and mod 3.  Supports 2 <= n <= 6, and
/// n = 7 only when allow_n7 is set; anything else is std::invalid_argument.
CongruenceKernelReport check_congruence_kernels(int n, bool allow_n7 = false,
                                                std::size_t budget = kDefaultClosureBudget);

/// Left cosets gHZ of a subgroup H in G, where Z = G intersect {+-I}; i.e. the
/// coset space of the image of H in the projective group G/Z.
struct CosetSpace {
  std::uint64_t count = 0;
  std::uint64_t subgroup_order = 0;             // |H|
  std::uint64_t projective_subgroup_order = 0;  // |HZ/Z|
  std::vector<std::uint32_t> coset_of;          // indexed by element index of G
  std::vector<std::uint32_t> representatives;   // element index of G, one per coset
};

/// Throws std::invalid_argument if some generator of H does not lie in G.
CosetSpace coset_space(const GroupClosure& g, std::span<const ModularMatrix> subgroup_generators);

}  // namespace oddpres::isometry
