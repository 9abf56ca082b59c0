#pragma once

#include <cstdint>
#include <limits>
#include <string>

#include "sp4fix/errors.hpp"

namespace sp4fix {

/// Symbolic valuation of zero.
inline constexpr int kValInf = std::numeric_limits<int>::max();

/// A prime-power modulus ell^n with 2 <= ell <= 97 prime and 1 <= n <= 4.
struct Modulus {
  int64_t ell = 2;
  int n = 1;
  int64_t q = 2;  // cached ell^n

  Modulus() = default;
  Modulus(int64_t ell_, int n_);

  int64_t phi() const { return q / ell * (ell - 1); }

  bool operator==(const Modulus& o) const { return ell == o.ell && n == o.n; }
  bool operator!=(const Modulus& o) const { return !(*this == o); }

  std::string str() const;
};

/// An element of Z/ell^n, stored as its least nonnegative representative.
struct Residue {
  int64_t v = 0;
  Modulus mod;

  Residue() = default;
  Residue(int64_t x, Modulus m) : mod(m) {
    v = x % m.q;
    if (v < 0) v += m.q;
  }

  bool is_zero() const { return v == 0; }
  bool is_unit() const { return v % mod.ell != 0; }

  bool operator==(const Residue& o) const {
    require_same(o);
    return v == o.v;
  }
  bool operator!=(const Residue& o) const { return !(*this == o); }

  Residue operator+(const Residue& o) const {
    require_same(o);
    int64_t s = v + o.v;
    if (s >= mod.q) s -= mod.q;
    return raw(s, mod);
  }
  Residue operator-(const Residue& o) const {
    require_same(o);
    int64_t s = v - o.v;
    if (s < 0) s += mod.q;
    return raw(s, mod);
  }
  Residue operator*(const Residue& o) const {
    require_same(o);
    return raw(mulmod(v, o.v, mod.q), mod);
  }
  Residue operator-() const { return raw(v == 0 ? 0 : mod.q - v, mod); }

  static Residue raw(int64_t canonical, Modulus m) {
    Residue r;
    r.v = canonical;
    r.mod = m;
    return r;
  }

  static int64_t mulmod(int64_t a, int64_t b, int64_t q) {
    return static_cast<int64_t>(static_cast<__int128>(a) * b % q);
  }

  void require_same(const Residue& o) const {
    if (mod != o.mod)
      throw logic_violation("mixed-modulus residue arithmetic: " + mod.str() +
                            " vs " + o.mod.str());
  }
};

/// Largest k <= n with ell^k | r, or kValInf when r = 0.
int val(const Residue& r);

/// min(val(r), n); the truncated valuation used in formulas.
inline int val_capped(const Residue& r) {
  int k = val(r);
  return k > r.mod.n ? r.mod.n : k;
}

/// r^e by binary powering, e >= 0.
Residue pow(const Residue& r, int64_t e);

/// Multiplicative inverse of a unit; throws non_unit otherwise.
Residue inv(const Residue& r);

}  // namespace sp4fix
