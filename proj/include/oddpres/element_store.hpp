#pragma once

// Fixed-width byte records in one contiguous arena, indexed by an
// open-addressing hash table.  This is the backing store for every exhaustive
// group closure: elements are encoded canonically as bytes, and insertion order
// doubles as breadth-first order.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "oddpres/errors.hpp"

namespace oddpres {

class ElementStore {
 public:
  explicit ElementStore(std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t size() const { return count_; }

  std::span<const std::uint8_t> operator[](std::uint32_t i) const {
    return {data_.data() + static_cast<std::size_t>(i) * width_, width_};
  }

  /// Returns the record index and whether it was newly inserted.  The argument
  /// must not alias storage owned by this store.
  std::pair<std::uint32_t, bool> insert(std::span<const std::uint8_t> record);
  std::optional<std::uint32_t> find(std::span<const std::uint8_t> record) const;

  void reserve(std::size_t n);

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  std::size_t hash(std::span<const std::uint8_t> record) const;
  void rehash(std::size_t slot_count);

  std::size_t width_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> slots_;
};

/// Breadth-first closure of the identity record under right multiplication by
/// each generator.  step(current, generator_index, out) writes current * g into
/// out.  The result lists every element exactly once, in BFS order, and is
/// deterministic for a fixed generator order.  Throws BudgetExceeded once more
/// than budget elements are found.
template <class Step>
ElementStore bfs_closure(std::span<const std::uint8_t> identity, std::size_t generator_count,
                         Step&& step, std::size_t budget) {
  ElementStore store(identity.size());
  store.insert(identity);
  std::vector<std::uint8_t> current(identity.size());
  std::vector<std::uint8_t> next(identity.size());
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    const auto rec = store[i];
    current.assign(rec.begin(), rec.end());
    for (std::size_t g = 0; g < generator_count; ++g) {
      step(std::span<const std::uint8_t>(current), g, std::span<std::uint8_t>(next));
      if (store.insert(next).second && store.size() > budget) {
        throw BudgetExceeded("closure exceeded element budget of " + std::to_string(budget));
      }
    }
  }
  return store;
}

}  // namespace oddpres
