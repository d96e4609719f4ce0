#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace zonotopal {

inline constexpr std::size_t kMaxGroundSize = 64;

// Subset of a ground set of at most 64 elements, iterated in ascending index
// order. Distinct indices are distinct elements even when their vectors agree.
class IndexSet {
 public:
  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint64_t mask) : mask_(mask) {}
  IndexSet(std::initializer_list<std::size_t> elements) {
    for (auto e : elements) insert(e);
  }
  static IndexSet from_list(const std::vector<std::size_t>& elements) {
    IndexSet s;
    for (auto e : elements) s.insert(e);
    return s;
  }
  // {0, ..., count-1}
  static constexpr IndexSet prefix(std::size_t count) {
    return IndexSet(count >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << count) - 1));
  }
  // {first, ..., first+count-1}
  static constexpr IndexSet range(std::size_t first, std::size_t count) {
    return IndexSet(prefix(count).mask_ << first);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(std::size_t e) const { return (mask_ >> e) & 1u; }
  constexpr bool contains(IndexSet other) const { return (other.mask_ & ~mask_) == 0; }
  constexpr bool intersects(IndexSet other) const { return (mask_ & other.mask_) != 0; }
  void insert(std::size_t e) { mask_ |= std::uint64_t{1} << e; }
  void erase(std::size_t e) { mask_ &= ~(std::uint64_t{1} << e); }
  constexpr IndexSet with(std::size_t e) const { return IndexSet(mask_ | (std::uint64_t{1} << e)); }
  constexpr IndexSet without(std::size_t e) const { return IndexSet(mask_ & ~(std::uint64_t{1} << e)); }
  // Largest element; undefined on the empty set.
  constexpr std::size_t max() const { return 63 - static_cast<std::size_t>(std::countl_zero(mask_)); }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(mask_ | o.mask_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(mask_ & o.mask_); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(mask_ & ~o.mask_); }
  constexpr bool operator==(const IndexSet&) const = default;
  // Orders by size, then by the sorted element lists lexicographically.
  bool operator<(const IndexSet& o) const {
    if (size() != o.size()) return size() < o.size();
    return elements() < o.elements();
  }

  class iterator {
   public:
    using value_type = std::size_t;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(mask_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (auto e : *this) out.push_back(e);
    return out;
  }

 private:
  std::uint64_t mask_ = 0;
};

// Calls f(IndexSet) for every subset of `universe` of size `k`, in
// lexicographic order of the sorted element lists.
template <typename F>
void for_each_subset_of_size(const std::vector<std::size_t>& universe, std::size_t k, F&& f) {
  if (k > universe.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    IndexSet s;
    for (auto p : pick) s.insert(universe[p]);
    f(s);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == universe.size() - k + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Calls f(IndexSet) for every subset of `universe` (any size), in ascending
// mask order.
template <typename F>
void for_each_subset(IndexSet universe, F&& f) {
  const std::uint64_t u = universe.mask();
  std::uint64_t s = 0;
  while (true) {
    f(IndexSet(s));
    if (s == u) return;
    s = (s - u) & u;
  }
}

}  // namespace zonotopal
