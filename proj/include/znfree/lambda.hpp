#pragma once
// Lengths with values in Z^n, ordered right-lexicographically.
//
// Coordinates are stored least significant first: coord(0) counts base-level
// letters and coord(n-1) counts top-level stable letters.

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace znfree {

class LambdaOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace detail {
inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw LambdaOverflow("length coordinate overflow");
  return r;
}
inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw LambdaOverflow("length coordinate overflow");
  return r;
}
inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw LambdaOverflow("length coordinate overflow");
  return r;
}
}  // namespace detail

class LambdaVec {
 public:
  LambdaVec() = default;
  explicit LambdaVec(int rank) : c_(static_cast<size_t>(rank), 0) {}
  LambdaVec(std::initializer_list<int64_t> coords) : c_(coords) {}
  explicit LambdaVec(std::vector<int64_t> coords) : c_(std::move(coords)) {}

  static LambdaVec unit(int rank, int index) {
    LambdaVec v(rank);
    v.c_.at(static_cast<size_t>(index)) = 1;
    return v;
  }

  int rank() const { return static_cast<int>(c_.size()); }
  int64_t operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  int64_t& operator[](int i) { return c_[static_cast<size_t>(i)]; }
  const std::vector<int64_t>& coords() const { return c_; }
  // Same vector viewed in a larger rank; new coordinates are zero.
  LambdaVec padded(int r) const {
    LambdaVec v(*this);
    if (r > rank()) v.c_.resize(static_cast<size_t>(r), 0);
    return v;
  }

  // 1-based index of the most significant non-zero coordinate, 0 for zero.
  int height() const {
    for (int i = rank(); i > 0; --i)
      if (c_[static_cast<size_t>(i - 1)] != 0) return i;
    return 0;
  }
  bool is_zero() const { return height() == 0; }
  // Top coordinate, which is the stable-letter count of the top level.
  int64_t top() const { return c_.empty() ? 0 : c_.back(); }

  LambdaVec operator-() const {
    LambdaVec r(*this);
    for (auto& x : r.c_) x = detail::checked_sub(0, x);
    return r;
  }
  LambdaVec& operator+=(const LambdaVec& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = detail::checked_add(c_[i], o.c_[i]);
    return *this;
  }
  LambdaVec& operator-=(const LambdaVec& o) {
    match(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = detail::checked_sub(c_[i], o.c_[i]);
    return *this;
  }
  friend LambdaVec operator+(LambdaVec a, const LambdaVec& b) { return a += b; }
  friend LambdaVec operator-(LambdaVec a, const LambdaVec& b) { return a -= b; }
  friend LambdaVec operator*(int64_t k, LambdaVec a) {
    for (auto& x : a.c_) x = detail::checked_mul(k, x);
    return a;
  }

  // Exact halving; returns false when some coordinate is odd.
  bool halve(LambdaVec& out) const {
    out = *this;
    for (auto& x : out.c_) {
      if (x % 2 != 0) return false;
      x /= 2;
    }
    return true;
  }

  friend bool operator==(const LambdaVec& a, const LambdaVec& b) {
    a.match(b);
    return a.c_ == b.c_;
  }
  friend std::strong_ordering operator<=>(const LambdaVec& a, const LambdaVec& b) {
    a.match(b);
    for (size_t i = a.c_.size(); i > 0; --i) {
      if (a.c_[i - 1] != b.c_[i - 1]) return a.c_[i - 1] <=> b.c_[i - 1];
    }
    return std::strong_ordering::equal;
  }

  bool is_positive() const { return *this > LambdaVec(rank()); }
  bool is_nonnegative() const { return *this >= LambdaVec(rank()); }

  LambdaVec abs() const { return is_nonnegative() ? *this : -*this; }

  // Renders as "(c1,c2,...)", least significant coordinate first.
  std::string str() const {
    std::string s = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c_[i]);
    }
    return s + ")";
  }

 private:
  void match(const LambdaVec& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("length rank mismatch");
  }
  std::vector<int64_t> c_;
};

inline int height_of(const LambdaVec& v) { return v.height(); }
inline int64_t lambda_top(const LambdaVec& v) { return v.top(); }

// Euclidean division of a non-negative m by a positive period p of height at
// least ht(m): m = q*p + r with 0 <= r < p. Returns false if ht(m) > ht(p), in
// which case m is not a multiple-plus-remainder of p.
inline bool divide_by_period(const LambdaVec& m, const LambdaVec& p, int64_t& q, LambdaVec& r) {
  int hp = p.height();
  int hm = m.height();
  if (hp == 0) return false;
  if (hm > hp) return false;
  if (hm < hp) {
    q = 0;
    r = m;
    return true;
  }
  int64_t pt = p[hp - 1];
  q = m[hp - 1] / pt;
  r = m - q * p;
  while (r.is_positive() == false && !r.is_zero()) {
    --q;
    r += p;
  }
  while (r >= p) {
    ++q;
    r -= p;
  }
  return true;
}

}  // namespace znfree
