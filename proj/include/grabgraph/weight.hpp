#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>

#include "grabgraph/errors.hpp"

namespace grab {

/// Exact non-negative rational backed by 64-bit integers.
///
/// All game values are sums and differences of vertex weights, so no
/// division is ever required; "at least half" checks double the other
/// side instead. Any operation whose exact result does not fit in 64
/// bits throws CapacityError; nothing is ever rounded.
class Weight {
 public:
  constexpr Weight() = default;
  Weight(long long units) : num_(units) {
    if (units < 0) throw ContractError("weights are non-negative");
  }

  static Weight fraction(long long num, long long den) {
    if (den <= 0) throw ContractError("weight denominator must be positive");
    if (num < 0) throw ContractError("weights are non-negative");
    Weight w;
    w.num_ = num;
    w.den_ = den;
    w.reduce();
    return w;
  }

  /// Accepts "12", "3.25" and "7/2"; anything else is a ContractError.
  static Weight parse(std::string_view text);

  long long numerator() const { return num_; }
  long long denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Weight operator+(const Weight& o) const {
    long long g = std::gcd(den_, o.den_);
    long long den = fit(static_cast<__int128>(den_ / g) * o.den_);
    __int128 num = static_cast<__int128>(num_) * (den / den_) +
                   static_cast<__int128>(o.num_) * (den / o.den_);
    Weight w;
    w.num_ = fit(num);
    w.den_ = den;
    w.reduce();
    return w;
  }
  Weight& operator+=(const Weight& o) { return *this = *this + o; }

  /// Exact difference; going negative is a logic error in the caller.
  Weight operator-(const Weight& o) const {
    long long g = std::gcd(den_, o.den_);
    long long den = fit(static_cast<__int128>(den_ / g) * o.den_);
    __int128 num = static_cast<__int128>(num_) * (den / den_) -
                   static_cast<__int128>(o.num_) * (den / o.den_);
    if (num < 0) throw ContractError("weight difference is negative");
    Weight w;
    w.num_ = fit(num);
    w.den_ = den;
    w.reduce();
    return w;
  }

  Weight doubled() const { return times(2); }

  Weight times(long long c) const {
    if (c < 0) throw ContractError("weight scale factor must be >= 0");
    Weight w;
    w.num_ = fit(static_cast<__int128>(num_) * c);
    w.den_ = den_;
    w.reduce();
    return w;
  }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;  // always reduced
  }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Weight& a, const Weight& b) { return b < a; }
  friend bool operator<=(const Weight& a, const Weight& b) { return !(b < a); }
  friend bool operator>=(const Weight& a, const Weight& b) { return !(a < b); }

  /// Canonical text: integer, exact decimal when the denominator is
  /// 2^a*5^b, otherwise "num/den". parse(str()) round-trips exactly.
  std::string str() const;

 private:
  long long num_ = 0;
  long long den_ = 1;

  static long long fit(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw CapacityError("exact weight arithmetic exceeds 64 bits");
    return static_cast<long long>(v);
  }

  void reduce() {
    long long g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }
};

inline Weight Weight::parse(std::string_view text) {
  auto digits = [](std::string_view s, __int128& out) {
    if (s.empty() || s.size() > 18) return false;
    out = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
      out = out * 10 + (c - '0');
    }
    return true;
  };
  __int128 a = 0, b = 0;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!digits(text.substr(0, slash), a) ||
        !digits(text.substr(slash + 1), b) || b == 0)
      throw ContractError("bad weight literal: " + std::string(text));
    return fraction(static_cast<long long>(a), static_cast<long long>(b));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (!digits(text.substr(0, dot), a) || !digits(frac, b))
      throw ContractError("bad weight literal: " + std::string(text));
    __int128 den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    return fraction(fit(a * den + b), fit(den));
  }
  if (!digits(text, a))
    throw ContractError("bad weight literal: " + std::string(text));
  return Weight(static_cast<long long>(a));
}

inline std::string Weight::str() const {
  if (den_ == 1) return std::to_string(num_);
  long long rest = den_;
  int twos = 0, fives = 0;
  while (rest % 2 == 0) {
    rest /= 2;
    ++twos;
  }
  while (rest % 5 == 0) {
    rest /= 5;
    ++fives;
  }
  if (rest != 1)
    return std::to_string(num_) + "/" + std::to_string(den_);
  int k = twos > fives ? twos : fives;
  __int128 pow10 = 1;
  for (int i = 0; i < k; ++i) pow10 *= 10;
  __int128 scaled = static_cast<__int128>(num_) * (pow10 / den_);
  std::string frac(static_cast<size_t>(k), '0');
  for (int i = k - 1; i >= 0; --i) {
    frac[static_cast<size_t>(i)] = static_cast<char>('0' + static_cast<int>(scaled % 10));
    scaled /= 10;
  }
  while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
  std::string head;
  if (scaled == 0) {
    head = "0";
  } else {
    while (scaled > 0) {
      head.insert(head.begin(), static_cast<char>('0' + static_cast<int>(scaled % 10)));
      scaled /= 10;
    }
  }
  return head + "." + frac;
}

}  // namespace grab
