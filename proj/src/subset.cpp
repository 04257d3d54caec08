#include "pargroup/subset.hpp"

#include <algorithm>
#include <bit>

#include "pargroup/error.hpp"

namespace pargroup {

Subset Subset::single(int width, int i) {
  Subset s(width);
  s.set(i);
  return s;
}

Subset Subset::full(int width) {
  Subset s(width);
  for (int i = 0; i < width; ++i) s.set(i);
  return s;
}

Subset Subset::from_mask(int width, std::uint64_t mask) {
  Subset s(width);
  if (!s.w_.empty()) s.w_[0] = mask;
  return s;
}

Subset Subset::from_elements(int width, const std::vector<int>& elems) {
  Subset s(width);
  for (int e : elems) s.set(e);
  return s;
}

int Subset::count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(w);
  return c;
}

bool Subset::empty() const {
  for (auto w : w_)
    if (w) return false;
  return true;
}

bool Subset::contains(const Subset& other) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (other.w_[i] & ~w_[i]) return false;
  return true;
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(count());
  for_each([&](int i) { out.push_back(i); });
  return out;
}

int Subset::first() const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

Subset& Subset::operator|=(const Subset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Subset& Subset::operator&=(const Subset& o) {
  for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

bool Subset::bits_less(const Subset& a, const Subset& b) {
  for (std::size_t i = a.w_.size(); i-- > 0;) {
    if (a.w_[i] != b.w_[i]) return a.w_[i] < b.w_[i];
  }
  return false;
}

std::string Subset::to_hex() const {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  bool leading = true;
  for (std::size_t i = w_.size(); i-- > 0;) {
    for (int shift = 60; shift >= 0; shift -= 4) {
      int d = static_cast<int>((w_[i] >> shift) & 0xf);
      if (leading && d == 0) continue;
      leading = false;
      out.push_back(digits[d]);
    }
  }
  if (out.empty()) out = "0";
  return out;
}

Subset Subset::from_hex(int width, std::string_view hex) {
  if (hex.empty()) throw Error(Errc::ParseError, "empty subset hex");
  Subset s(width);
  int bit = 0;
  for (std::size_t i = hex.size(); i-- > 0; bit += 4) {
    char c = hex[i];
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw Error(Errc::ParseError, std::string("bad hex digit '") + c + "'");
    for (int k = 0; k < 4; ++k) {
      if (!(d >> k & 1)) continue;
      if (bit + k >= width) throw Error(Errc::ParseError, "subset hex exceeds group order");
      s.set(bit + k);
    }
  }
  return s;
}

std::size_t Subset::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto w : w_) {
    h ^= static_cast<std::size_t>(w);
    h *= 1099511628211ull;
  }
  return h ^ static_cast<std::size_t>(width_);
}

}  // namespace pargroup
