#pragma once

#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace ringlab {

/// What a subset of a ring's elements is claimed to be.
enum class SubsetRole { raw, subring, left_ideal, right_ideal, two_sided_ideal };

inline const char* role_name(SubsetRole r) {
  switch (r) {
    case SubsetRole::raw: return "raw";
    case SubsetRole::subring: return "subring";
    case SubsetRole::left_ideal: return "left-ideal";
    case SubsetRole::right_ideal: return "right-ideal";
    case SubsetRole::two_sided_ideal: return "two-sided-ideal";
  }
  return "?";
}

/// Bit vector over element indices 0..n-1.
///
/// Ordering is lexicographic on the characteristic vector read from element 0
/// upward, with "absent" before "present"; every enumeration in the library
/// sorts by it, so all outputs are deterministic.
class Subset {
 public:
  Subset() = default;
  explicit Subset(int n, SubsetRole role = SubsetRole::raw)
      : n_(n), role_(role), words_((static_cast<size_t>(n) + 63) / 64, 0) {}

  static Subset full(int n, SubsetRole role = SubsetRole::raw) {
    Subset s(n, role);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
  }
  static Subset of(int n, std::initializer_list<int> elems,
                   SubsetRole role = SubsetRole::raw) {
    Subset s(n, role);
    for (int e : elems) s.set(e);
    return s;
  }

  int universe_size() const { return n_; }
  SubsetRole role() const { return role_; }
  void set_role(SubsetRole r) { role_ = r; }
  Subset with_role(SubsetRole r) const {
    Subset s = *this;
    s.role_ = r;
    return s;
  }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_) if (w) return false;
    return true;
  }
  bool is_full() const { return count() == n_; }

  /// true iff every element of `other` is in *this.
  bool contains(const Subset& other) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (other.words_[i] & ~words_[i]) return false;
    return true;
  }

  bool operator==(const Subset& o) const { return words_ == o.words_; }
  bool operator!=(const Subset& o) const { return words_ != o.words_; }

  bool operator<(const Subset& o) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t d = words_[i] ^ o.words_[i];
      if (d) {
        int bit = std::countr_zero(d);
        // first differing element; the side missing it sorts first
        return !((words_[i] >> bit) & 1u);
      }
    }
    return false;
  }

  Subset& operator|=(const Subset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for_each([&](int e) { out.push_back(e); });
    return out;
  }

  /// Smallest index not in the set, or -1 if the set is full.
  int first_missing() const {
    for (int i = 0; i < n_; ++i)
      if (!test(i)) return i;
    return -1;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64 + static_cast<size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for_each([&](int e) {
      if (!first) os << ',';
      os << e;
      first = false;
    });
    os << '}';
    return os.str();
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto w : words_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  int n_ = 0;
  SubsetRole role_ = SubsetRole::raw;
  std::vector<std::uint64_t> words_;
};

}  // namespace ringlab
