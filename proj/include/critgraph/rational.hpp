#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace critgraph {

struct ArithmeticOverflow : std::runtime_error {
  ArithmeticOverflow() : std::runtime_error("exact arithmetic overflowed 64 bits") {}
};

// Exact rational on 64-bit words, always normalized (gcd 1, positive
// denominator). Every product runs through a 128-bit intermediate and
// throws instead of wrapping; the values in this project stay tiny, so
// a throw here means a bug upstream.
class Rat {
 public:
  Rat() = default;
  Rat(long long num) : num_(num), den_(1) {}
  Rat(long long num, long long den) : num_(num), den_(den) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  Rat operator-() const { return Rat(-num_, den_); }
  Rat operator+(const Rat& o) const {
    return Rat(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
               checked_mul(den_, o.den_));
  }
  Rat operator-(const Rat& o) const { return *this + (-o); }
  Rat operator*(const Rat& o) const {
    return Rat(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
  }
  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("rational division by zero");
    return Rat(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
  }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const {
    return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static long long checked_mul(long long a, long long b) {
    __int128 p = (__int128)a * b;
    if (p > INT64_MAX || p < INT64_MIN) throw ArithmeticOverflow();
    return (long long)p;
  }
  static long long checked_add(long long a, long long b) {
    __int128 s = (__int128)a + b;
    if (s > INT64_MAX || s < INT64_MIN) throw ArithmeticOverflow();
    return (long long)s;
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("rational with zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
  }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace critgraph
