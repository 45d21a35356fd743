#pragma once

// Todd-Coxeter coset enumeration for presentations whose generators are all
// involutions (every presentation in this library).  Felsch strategy: cosets
// are defined at the first undefined table entry, and every definition or
// deduction is pushed through all relator rotations that contain its
// generator.  Coincidences are resolved with a union-find over coset numbers.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "oddpres/isometry.hpp"
#include "oddpres/presentation.hpp"

namespace oddpres::coset_enum {

using presentation::Word;

inline constexpr std::size_t kDefaultCosetBudget = 200'000;

enum class Status { in_progress, closed, budget_exceeded };

std::string to_string(Status s);

/// Result of an enumeration.  A closed table is standardized: cosets are
/// numbered breadth-first from the subgroup coset 0, scanning generators in
/// order.  A table that hit its budget carries no action data.
class CosetTable {
 public:
  int generator_count() const { return generators_; }
  Status status() const { return status_; }
  bool closed() const { return status_ == Status::closed; }
  /// Live cosets: the subgroup index once closed.
  std::uint64_t live_count() const { return live_; }
  /// Total cosets ever defined, including those later found coincident.
  std::uint64_t total_defined() const { return defined_; }

  /// Image of coset c under generator g (closed tables only).
  std::uint32_t image(std::uint32_t coset, int generator) const {
    return static_cast<std::uint32_t>(table_[static_cast<std::size_t>(coset) * generators_ + generator]);
  }

  /// Every relator traced from every coset returns to its start.
  bool satisfies(std::span<const Word> relators) const;
  /// Each generator acts as an involutive permutation of the cosets.
  bool is_involutive() const;

  /// Line-oriented dump: a header comment, then "c: img_0 img_1 ..." per coset.
  std::string to_text(std::span<const std::string> generator_labels = {}) const;

 private:
  friend class Enumerator;

  int generators_ = 0;
  Status status_ = Status::in_progress;
  std::uint64_t live_ = 0;
  std::uint64_t defined_ = 0;
  std::vector<std::int32_t> table_;
};

/// Enumerates cosets of the subgroup generated by subgroup_words.  The budget
/// bounds live cosets; exceeding it yields Status::budget_exceeded, never an
/// order.  std::invalid_argument for empty relators, a zero budget or letters
/// outside [0, generator_count).
CosetTable todd_coxeter(int generator_count, std::span<const Word> relators, std::span<const Word> subgroup_words,
                        std::size_t budget = kDefaultCosetBudget);

CosetTable todd_coxeter(const presentation::Presentation& p, std::span<const Word> subgroup_words = {},
                        std::size_t budget = kDefaultCosetBudget);

struct ActionCheck {
  bool ok = false;
  std::uint64_t cosets = 0;
  std::uint64_t matrix_order = 0;  // projective order of the generated matrix group
  std::string detail;
};

/// For a closed table of the trivial subgroup: checks that sending coset
/// "word w" to the product of the assigned matrices along w is a well-defined
/// bijection onto the projective image of the generated matrix group.
ActionCheck verify_action_against_matrices(const CosetTable& table,
                                           std::span<const isometry::ModularMatrix> assignment);

}  // namespace oddpres::coset_enum
