#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sp4fix/residue.hpp"

namespace sp4fix {

/// 128-bit canonical encoding of a matrix (16 entries, fixed bit width).
struct Enc128 {
  uint64_t hi = 0, lo = 0;
  bool operator==(const Enc128& o) const { return hi == o.hi && lo == o.lo; }
  bool operator<(const Enc128& o) const {
    return hi != o.hi ? hi < o.hi : lo < o.lo;
  }
};

struct Enc128Hash {
  size_t operator()(const Enc128& e) const {
    uint64_t x = e.hi * 0x9E3779B97F4A7C15ull ^ e.lo;
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 29;
    return static_cast<size_t>(x);
  }
};

/// Column vector in (Z/ell^n)^4.
struct Vec4 {
  Modulus mod;
  std::array<int64_t, 4> a{0, 0, 0, 0};

  Vec4() = default;
  explicit Vec4(Modulus m) : mod(m) {}
  Vec4(Modulus m, std::array<int64_t, 4> vals);

  Residue at(int i) const { return Residue::raw(a[i], mod); }
  bool is_zero() const { return a[0] == 0 && a[1] == 0 && a[2] == 0 && a[3] == 0; }
  bool operator==(const Vec4& o) const { return mod == o.mod && a == o.a; }

  Vec4 operator+(const Vec4& o) const;
  Vec4 operator-(const Vec4& o) const;
  Vec4 scaled(int64_t c) const;
  Vec4 reduced(Modulus target) const;

  static Vec4 basis(Modulus m, int i) {
    Vec4 v(m);
    v.a[i] = 1 % m.q;
    return v;
  }
};

/// 4x4 matrix over Z/ell^n, row-major, acting on column vectors.
struct Mat4 {
  Modulus mod;
  std::array<int64_t, 16> a{};

  Mat4() = default;
  explicit Mat4(Modulus m) : mod(m) {}

  int64_t& at(int i, int j) { return a[4 * i + j]; }
  int64_t at(int i, int j) const { return a[4 * i + j]; }
  Residue entry(int i, int j) const { return Residue::raw(at(i, j), mod); }
  void set(int i, int j, int64_t x) {
    int64_t v = x % mod.q;
    if (v < 0) v += mod.q;
    at(i, j) = v;
  }

  bool operator==(const Mat4& o) const { return mod == o.mod && a == o.a; }
  bool operator!=(const Mat4& o) const { return !(*this == o); }

  static Mat4 identity(Modulus m);
  static Mat4 from_rows(Modulus m, const std::array<std::array<int64_t, 4>, 4>& rows);

  Mat4 operator*(const Mat4& o) const;
  Mat4 operator+(const Mat4& o) const;
  Mat4 operator-(const Mat4& o) const;
  Vec4 operator*(const Vec4& v) const;
  Mat4 transposed() const;
  bool is_identity() const;

  Enc128 encode() const;
  std::string str() const;
};

/// 2x2 matrix over Z/ell (the middle block / SL2 carrier).
struct Mat2 {
  Modulus mod;
  std::array<int64_t, 4> a{};

  Mat2() = default;
  explicit Mat2(Modulus m) : mod(m) {}
  Mat2(Modulus m, std::array<int64_t, 4> vals);

  int64_t at(int i, int j) const { return a[2 * i + j]; }
  bool operator==(const Mat2& o) const { return mod == o.mod && a == o.a; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  static Mat2 identity(Modulus m);
  Mat2 operator*(const Mat2& o) const;
  Residue det() const;
};

/// The fixed Gram matrix J of the symplectic form: <e1,e4> = <e2,e3> = 1.
struct SympForm {
  Mat4 J;
  static SympForm standard(Modulus m);
};

Mat4 symp_J(Modulus m);

/// Exact determinant by cofactor expansion (no division).
Residue mat_det(const Mat4& g);

/// Adjugate (transpose of cofactor matrix); g * adj(g) = det(g) * I.
Mat4 mat_adjugate(const Mat4& g);

/// Inverse via adjugate; requires det(g) a unit.
Mat4 mat_inverse(const Mat4& g);

/// Similitude factor m with g^T J g = m J, if one exists (and is a unit).
std::optional<Residue> similitude_factor(const Mat4& g, const SympForm& form);
std::optional<Residue> similitude_factor(const Mat4& g);

bool is_sp(const Mat4& g);

/// Entrywise reduction mod m; throws bad_modulus unless m = ell^k divides q.
Mat4 reduce_mod(const Mat4& g, int64_t m);
Vec4 reduce_mod(const Vec4& v, int64_t m);

/// Symplectic transvection T_{u,c}: w -> w + c<w,u>u. Symplectic for any u, c.
Mat4 transvection(const Vec4& u, int64_t c);

/// Hensel lift of a symplectic matrix mod ell to a symplectic matrix mod ell^2.
/// Deterministic; throws non_symplectic_generator if the input is not in Sp.
Mat4 sp_lift(const Mat4& gbar, Modulus target);

/// Pairing <v,w> = v^T J w.
Residue pairing(const Vec4& v, const Vec4& w);

}  // namespace sp4fix
