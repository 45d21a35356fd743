#include "oddpres/element_store.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <string_view>

namespace oddpres {

ElementStore::ElementStore(std::size_t width) : width_(width) { rehash(1024); }

std::size_t ElementStore::hash(std::span<const std::uint8_t> record) const {
  return std::hash<std::string_view>{}(
      std::string_view(reinterpret_cast<const char*>(record.data()), record.size()));
}

void ElementStore::reserve(std::size_t n) {
  data_.reserve(n * width_);
  std::size_t want = slots_.size();
  while (want < 2 * n) want *= 2;
  if (want != slots_.size()) rehash(want);
}

void ElementStore::rehash(std::size_t slot_count) {
  slots_.assign(slot_count, kEmpty);
  const std::size_t mask = slot_count - 1;
  for (std::uint32_t i = 0; i < count_; ++i) {
    std::size_t s = hash((*this)[i]) & mask;
    while (slots_[s] != kEmpty) s = (s + 1) & mask;
    slots_[s] = i;
  }
}

std::optional<std::uint32_t> ElementStore::find(std::span<const std::uint8_t> record) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t s = hash(record) & mask;; s = (s + 1) & mask) {
    const std::uint32_t idx = slots_[s];
    if (idx == kEmpty) return std::nullopt;
    if (std::memcmp(data_.data() + static_cast<std::size_t>(idx) * width_, record.data(), width_) == 0) {
      return idx;
    }
  }
}

std::pair<std::uint32_t, bool> ElementStore::insert(std::span<const std::uint8_t> record) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t s = hash(record) & mask;
  for (;; s = (s + 1) & mask) {
    const std::uint32_t idx = slots_[s];
    if (idx == kEmpty) break;
    if (std::memcmp(data_.data() + static_cast<std::size_t>(idx) * width_, record.data(), width_) == 0) {
      return {idx, false};
    }
  }
  const auto idx = static_cast<std::uint32_t>(count_);
  data_.insert(data_.end(), record.begin(), record.end());
  ++count_;
  slots_[s] = idx;
  if (2 * count_ > slots_.size()) rehash(slots_.size() * 2);
  return {idx, true};
}

}  // namespace oddpres
