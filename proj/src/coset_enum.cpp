#include "oddpres/coset_enum.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oddpres::coset_enum {

std::string to_string(Status s) {
  switch (s) {
    case Status::in_progress:
      return "in_progress";
    case Status::closed:
      return "closed";
    case Status::budget_exceeded:
      return "budget_exceeded";
  }
  return "?";
}

namespace {

struct OverBudget {};

}  // namespace

class Enumerator {
 public:
  Enumerator(int gens, std::span<const Word> relators, std::size_t budget)
      : gens_(gens), budget_(budget), occurrences_(gens) {
    for (const Word& w : relators) {
      if (w.letters.empty()) continue;
      const auto r = static_cast<std::uint32_t>(relators_.size());
      relators_.push_back(w.letters);
      for (std::uint32_t p = 0; p < w.letters.size(); ++p) occurrences_[w.letters[p]].push_back({r, p});
    }
  }

  CosetTable run(std::span<const Word> subgroup_words) {
    CosetTable out;
    out.generators_ = gens_;
    try {
      new_coset();
      for (const Word& w : subgroup_words) {
        fill_subgroup_word(w.letters);
        process_deductions();
      }
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t c = 0; c < parent_.size(); ++c) {
          for (int g = 0; g < gens_; ++g) {
            if (!alive(c)) break;
            if (at(c, g) >= 0) continue;
            define(static_cast<std::int32_t>(c), g);
            process_deductions();
            changed = true;
          }
        }
      }
    } catch (const OverBudget&) {
      out.status_ = Status::budget_exceeded;
      out.live_ = live_;
      out.defined_ = parent_.size();
      return out;
    }
    standardize(out);
    return out;
  }

 private:
  struct Occurrence {
    std::uint32_t relator;
    std::uint32_t position;
  };

  bool alive(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }
  std::int32_t& at(std::size_t c, int g) { return table_[c * gens_ + g]; }

  std::int32_t find(std::int32_t c) {
    std::int32_t root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const std::int32_t next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  std::int32_t new_coset() {
    // Dead rows are never reclaimed, so also bound the total allocation.
    if (live_ >= budget_ || parent_.size() >= 8 * budget_ + 1024) throw OverBudget{};
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + gens_, -1);
    ++live_;
    return c;
  }

  void define(std::int32_t c, int g) {
    const std::int32_t d = new_coset();
    at(c, g) = d;
    at(d, g) = c;
    deductions_.push_back({c, g});
  }

  // Traces w from coset 0, defining new cosets wherever the path is undefined
  // and closing the loop with a deduction or coincidence at the end.
  void fill_subgroup_word(const std::vector<int>& w) {
    if (w.empty()) return;
    std::int32_t f = 0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      f = find(f);
      if (at(f, w[i]) < 0) define(f, w[i]);
      f = at(f, w[i]);
    }
    f = find(f);
    const int g = w.back();
    const std::int32_t t = at(f, g);
    if (t < 0) {
      if (at(0, g) >= 0) {
        coincidence(f, at(0, g));
      } else {
        at(f, g) = 0;
        at(0, g) = f;
        deductions_.push_back({f, g});
      }
    } else if (find(t) != 0) {
      coincidence(t, 0);
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [c0, g] = deductions_.front();
      deductions_.pop_front();
      if (!alive(c0)) continue;
      const std::int32_t d0 = at(c0, g);
      if (d0 < 0) continue;
      for (const Occurrence& occ : occurrences_[g]) {
        scan(find(c0), occ);
        scan(find(d0), occ);
      }
    }
  }

  // Scans the rotation of a relator that starts at occ.position, from coset x.
  void scan(std::int32_t x, const Occurrence& occ) {
    const std::vector<int>& r = relators_[occ.relator];
    const std::size_t len = r.size();
    auto letter = [&](std::size_t i) { return r[(occ.position + i) % len]; };

    std::int32_t f = x;
    std::size_t i = 0;
    while (i < len) {
      const std::int32_t nf = at(f, letter(i));
      if (nf < 0) break;
      f = nf;
      ++i;
    }
    if (i == len) {
      if (f != x) coincidence(f, x);
      return;
    }
    std::int32_t b = x;
    std::size_t j = len;  // one past the next letter to consume backwards
    while (j > i) {
      const std::int32_t nb = at(b, letter(j - 1));
      if (nb < 0) break;
      b = nb;
      --j;
    }
    if (j == i) {
      if (f != b) coincidence(f, b);
    } else if (j == i + 1) {
      const int g = letter(i);
      at(f, g) = b;
      at(b, g) = f;
      deductions_.push_back({f, g});
    }
  }

  void merge(std::int32_t k, std::int32_t l, std::deque<std::int32_t>& queue) {
    k = find(k);
    l = find(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[l] = k;
    --live_;
    queue.push_back(l);
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::deque<std::int32_t> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const std::int32_t e = queue.front();
      queue.pop_front();
      for (int g = 0; g < gens_; ++g) {
        const std::int32_t f = at(e, g);
        if (f < 0) continue;
        at(f, g) = -1;  // generators are involutions: f.g was e
        const std::int32_t e1 = find(e);
        const std::int32_t f1 = find(f);
        if (at(e1, g) >= 0) {
          merge(f1, at(e1, g), queue);
        } else if (at(f1, g) >= 0) {
          merge(e1, at(f1, g), queue);
        } else {
          at(e1, g) = f1;
          at(f1, g) = e1;
          deductions_.push_back({e1, g});
        }
      }
    }
  }

  void standardize(CosetTable& out) {
    std::vector<std::int32_t> renumber(parent_.size(), -1);
    std::vector<std::int32_t> order;
    order.reserve(live_);
    renumber[0] = 0;
    order.push_back(0);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int g = 0; g < gens_; ++g) {
        const std::int32_t d = find(at(order[k], g));
        if (renumber[d] < 0) {
          renumber[d] = static_cast<std::int32_t>(order.size());
          order.push_back(d);
        }
      }
    }
    out.table_.resize(order.size() * gens_);
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int g = 0; g < gens_; ++g) out.table_[k * gens_ + g] = renumber[find(at(order[k], g))];
    }
    out.status_ = Status::closed;
    out.live_ = order.size();
    out.defined_ = parent_.size();
  }

  int gens_;
  std::size_t budget_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::uint64_t live_ = 0;
  std::deque<std::pair<std::int32_t, int>> deductions_;
};

CosetTable todd_coxeter(int generator_count, std::span<const Word> relators, std::span<const Word> subgroup_words,
                        std::size_t budget) {
  if (generator_count <= 0) throw std::invalid_argument("need at least one generator");
  if (relators.empty()) throw std::invalid_argument("need at least one relator");
  if (budget < 1) throw std::invalid_argument("coset budget must be positive");
  auto check = [&](const Word& w) {
    for (int l : w.letters) {
      if (l < 0 || l >= generator_count) throw std::invalid_argument("letter outside the generator range");
    }
  };
  std::for_each(relators.begin(), relators.end(), check);
  std::for_each(subgroup_words.begin(), subgroup_words.end(), check);
  return Enumerator(generator_count, relators, budget).run(subgroup_words);
}

CosetTable todd_coxeter(const presentation::Presentation& p, std::span<const Word> subgroup_words,
                        std::size_t budget) {
  return todd_coxeter(p.generator_count(), p.relators, subgroup_words, budget);
}

bool CosetTable::satisfies(std::span<const Word> relators) const {
  if (!closed()) return false;
  for (std::uint32_t c = 0; c < live_; ++c) {
    for (const Word& w : relators) {
      std::uint32_t x = c;
      for (int l : w.letters) x = image(x, l);
      if (x != c) return false;
    }
  }
  return true;
}

bool CosetTable::is_involutive() const {
  if (!closed()) return false;
  for (std::uint32_t c = 0; c < live_; ++c) {
    for (int g = 0; g < generators_; ++g) {
      if (image(image(c, g), g) != c) return false;
    }
  }
  return true;
}

std::string CosetTable::to_text(std::span<const std::string> labels) const {
  std::ostringstream os;
  os << "# status: " << to_string(status_) << "\n";
  os << "# cosets: " << live_ << "\n";
  os << "# generators:";
  for (int g = 0; g < generators_; ++g) {
    os << ' ' << (static_cast<std::size_t>(g) < labels.size() ? labels[g] : std::to_string(g));
  }
  os << "\n";
  if (!closed()) return os.str();
  for (std::uint32_t c = 0; c < live_; ++c) {
    os << c << ':';
    for (int g = 0; g < generators_; ++g) os << ' ' << image(c, g);
    os << '\n';
  }
  return os.str();
}

ActionCheck verify_action_against_matrices(const CosetTable& table,
                                           std::span<const isometry::ModularMatrix> assignment) {
  using isometry::ModularMatrix;
  ActionCheck out;
  out.cosets = table.live_count();
  if (!table.closed()) {
    out.detail = "coset table is not closed";
    return out;
  }
  if (assignment.size() != static_cast<std::size_t>(table.generator_count())) {
    out.detail = "assignment size differs from generator count";
    return out;
  }
  const auto group = isometry::closure(assignment);
  out.matrix_order = isometry::projective_order(group);

  auto key = [](const ModularMatrix& m) {
    const auto a = m.bytes();
    const ModularMatrix neg = m.negated();
    const auto b = neg.bytes();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end())
               ? std::vector<std::uint8_t>(a.begin(), a.end())
               : std::vector<std::uint8_t>(b.begin(), b.end());
  };

  const auto& first = assignment.front();
  std::vector<std::optional<ModularMatrix>> image(table.live_count());
  image[0] = ModularMatrix::identity(first.size(), first.modulus());
  std::vector<std::uint32_t> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const std::uint32_t c = queue[k];
    for (int g = 0; g < table.generator_count(); ++g) {
      const std::uint32_t d = table.image(c, g);
      const ModularMatrix m = *image[c] * assignment[g];
      if (!image[d]) {
        image[d] = m;
        queue.push_back(d);
      } else if (key(*image[d]) != key(m)) {
        out.detail = "coset action disagrees with matrices at coset " + std::to_string(c) + ", generator " +
                     std::to_string(g);
        return out;
      }
    }
  }
  if (queue.size() != table.live_count()) {
    out.detail = "coset action is not transitive";
    return out;
  }
  std::set<std::vector<std::uint8_t>> distinct;
  for (const auto& m : image) distinct.insert(key(*m));
  if (distinct.size() != table.live_count()) {
    out.detail = "distinct cosets map to the same projective matrix";
    return out;
  }
  if (out.cosets != out.matrix_order) {
    out.detail = "coset count " + std::to_string(out.cosets) + " differs from matrix group order " +
                 std::to_string(out.matrix_order);
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace oddpres::coset_enum
