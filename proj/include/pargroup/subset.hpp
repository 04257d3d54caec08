#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pargroup {

// Word-packed bitmask over the element indices 0..width-1 of a fixed ambient
// group. Comparisons treat the mask as one big-endian integer so that every
// ordering derived from it is reproducible.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int width) : width_(width), w_((width + 63) / 64, 0) {}

  static Subset single(int width, int i);
  static Subset full(int width);
  static Subset from_mask(int width, std::uint64_t mask);  // width <= 64
  static Subset from_elements(int width, const std::vector<int>& elems);
  static Subset from_hex(int width, std::string_view hex);

  int width() const { return width_; }
  int count() const;
  bool empty() const;

  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  // Valid only when width <= 64.
  std::uint64_t mask64() const { return w_.empty() ? 0 : w_[0]; }

  bool contains(const Subset& other) const;  // other is a subset of *this
  std::vector<int> elements() const;
  int first() const;  // smallest element, -1 when empty

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  Subset& operator|=(const Subset& o);
  Subset& operator&=(const Subset& o);

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.width_ == b.width_ && a.w_ == b.w_;
  }
  friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

  // Numeric comparison of the packed masks, most significant word first.
  static bool bits_less(const Subset& a, const Subset& b);

  std::string to_hex() const;
  std::size_t hash() const;

 private:
  int width_ = 0;
  std::vector<std::uint64_t> w_;
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace pargroup
