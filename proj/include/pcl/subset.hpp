#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace pcl {

/// A subset of {0, ..., universe-1}, stored as a packed bit vector.
///
/// Two subsets compare equal iff they have the same universe and the same
/// members, so a Subset can be used directly as a key in sets and maps.
class Subset {
 public:
  Subset() = default;
  explicit Subset(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  Subset(std::size_t universe, std::initializer_list<std::size_t> members) : Subset(universe) {
    for (auto m : members) insert(m);
  }

  static Subset full(std::size_t universe) {
    Subset s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }
  /// Members given by the low bits of `mask` (universe must be <= 64).
  static Subset from_mask(std::size_t universe, std::uint64_t mask) {
    Subset s(universe);
    if (universe > 0) s.words_[0] = universe == 64 ? mask : (mask & ((std::uint64_t{1} << universe) - 1));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  /// Low 64 bits; exact when universe <= 64.
  std::uint64_t mask() const { return words_.empty() ? 0 : words_[0]; }

  bool is_subset_of(const Subset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Subset& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Subset& operator|=(const Subset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Subset& operator-=(const Subset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  Subset complement() const {
    Subset c(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) c.words_[k] = ~words_[k];
    c.trim();
    return c;
  }

  /// Calls fn(i) for each member in increasing order.
  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return h;
  }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    // Compare as big-endian integers so that masks order numerically.
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (auto c = a.words_[k] <=> b.words_[k]; c != 0) return c;
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace pcl
