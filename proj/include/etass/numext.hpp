#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace etass {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : Error {
  using Error::Error;
};
struct FieldMismatchError : Error {
  using Error::Error;
};
struct EnumerationError : Error {
  using Error::Error;
};
struct CompositionError : Error {
  using Error::Error;
};
struct HeadroomError : Error {
  using Error::Error;
};
struct InternalError : Error {
  using Error::Error;
};

/* Natural number extended by infinity. Used for field invariants (level, cd2,
   rho-nilpotence) and profile values. */
class ExtNat {
 public:
  constexpr ExtNat() : v_(0), fin_(true) {}
  constexpr explicit ExtNat(std::uint32_t v) : v_(v), fin_(true) {}
  static constexpr ExtNat infinity() {
    ExtNat e;
    e.fin_ = false;
    return e;
  }
  constexpr bool finite() const { return fin_; }
  std::uint32_t value() const {
    if (!fin_) throw InternalError("ExtNat: value() of infinity");
    return v_;
  }
  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.fin_ == b.fin_ && (!a.fin_ || a.v_ == b.v_);
  }
  friend constexpr bool operator!=(ExtNat a, ExtNat b) { return !(a == b); }
  /* infinity compares greater than every finite value */
  friend constexpr bool operator<(ExtNat a, ExtNat b) {
    if (!a.fin_) return false;
    if (!b.fin_) return true;
    return a.v_ < b.v_;
  }
  friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a < b || a == b; }
  friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
  friend constexpr bool operator>=(ExtNat a, ExtNat b) { return b <= a; }
  std::string str() const { return fin_ ? std::to_string(v_) : "inf"; }

 private:
  std::uint32_t v_;
  bool fin_;
};

/* 2-adic valuation; n must be positive. */
inline int nu2(long long n) {
  if (n <= 0) throw InternalError("nu2: argument must be positive");
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

}  // namespace etass
