#include "sp4fix/mat.hpp"

#include <sstream>

namespace sp4fix {

namespace {

void require_same(Modulus a, Modulus b, const char* what) {
  if (a != b)
    throw logic_violation(std::string("mixed-modulus ") + what + ": " + a.str() +
                          " vs " + b.str());
}

int bits_for(int64_t q) {
  int b = 0;
  int64_t x = q - 1;
  while (x > 0) {
    ++b;
    x >>= 1;
  }
  return b < 1 ? 1 : b;
}

}  // namespace

Vec4::Vec4(Modulus m, std::array<int64_t, 4> vals) : mod(m) {
  for (int i = 0; i < 4; ++i) {
    int64_t v = vals[i] % m.q;
    if (v < 0) v += m.q;
    a[i] = v;
  }
}

Vec4 Vec4::operator+(const Vec4& o) const {
  require_same(mod, o.mod, "vector addition");
  Vec4 r(mod);
  for (int i = 0; i < 4; ++i) r.a[i] = (a[i] + o.a[i]) % mod.q;
  return r;
}

Vec4 Vec4::operator-(const Vec4& o) const {
  require_same(mod, o.mod, "vector subtraction");
  Vec4 r(mod);
  for (int i = 0; i < 4; ++i) r.a[i] = ((a[i] - o.a[i]) % mod.q + mod.q) % mod.q;
  return r;
}

Vec4 Vec4::scaled(int64_t c) const {
  c %= mod.q;
  if (c < 0) c += mod.q;
  Vec4 r(mod);
  for (int i = 0; i < 4; ++i) r.a[i] = Residue::mulmod(a[i], c, mod.q);
  return r;
}

Vec4 Vec4::reduced(Modulus target) const {
  if (target.ell != mod.ell || mod.q % target.q != 0)
    throw bad_modulus("cannot reduce " + mod.str() + " to " + target.str());
  Vec4 r(target);
  for (int i = 0; i < 4; ++i) r.a[i] = a[i] % target.q;
  return r;
}

Mat4 Mat4::identity(Modulus m) {
  Mat4 g(m);
  for (int i = 0; i < 4; ++i) g.at(i, i) = 1 % m.q;
  return g;
}

Mat4 Mat4::from_rows(Modulus m, const std::array<std::array<int64_t, 4>, 4>& rows) {
  Mat4 g(m);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g.set(i, j, rows[i][j]);
  return g;
}

Mat4 Mat4::operator*(const Mat4& o) const {
  require_same(mod, o.mod, "matrix product");
  Mat4 r(mod);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int64_t acc = 0;  // 4*(q-1)^2 < 2^63 for q <= 97^4
      for (int k = 0; k < 4; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc % mod.q;
    }
  return r;
}

Mat4 Mat4::operator+(const Mat4& o) const {
  require_same(mod, o.mod, "matrix sum");
  Mat4 r(mod);
  for (int i = 0; i < 16; ++i) r.a[i] = (a[i] + o.a[i]) % mod.q;
  return r;
}

Mat4 Mat4::operator-(const Mat4& o) const {
  require_same(mod, o.mod, "matrix difference");
  Mat4 r(mod);
  for (int i = 0; i < 16; ++i) r.a[i] = ((a[i] - o.a[i]) % mod.q + mod.q) % mod.q;
  return r;
}

Vec4 Mat4::operator*(const Vec4& v) const {
  require_same(mod, v.mod, "matrix-vector product");
  Vec4 r(mod);
  for (int i = 0; i < 4; ++i) {
    int64_t acc = 0;
    for (int k = 0; k < 4; ++k) acc += at(i, k) * v.a[k];
    r.a[i] = acc % mod.q;
  }
  return r;
}

Mat4 Mat4::transposed() const {
  Mat4 r(mod);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = at(j, i);
  return r;
}

bool Mat4::is_identity() const { return *this == identity(mod); }

Enc128 Mat4::encode() const {
  int b = bits_for(mod.q);
  if (16 * b > 128)
    throw too_large("modulus " + mod.str() + " too wide for 128-bit encoding");
  Enc128 e;
  for (int i = 0; i < 16; ++i) {
    int pos = i * b;
    uint64_t v = static_cast<uint64_t>(a[i]);
    if (pos < 64) {
      e.lo |= v << pos;
      if (pos + b > 64) e.hi |= v >> (64 - pos);
    } else {
      e.hi |= v << (pos - 64);
    }
  }
  return e;
}

std::string Mat4::str() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (int j = 0; j < 4; ++j) os << at(i, j) << (j == 3 ? "" : ",");
    os << "]" << (i == 3 ? "]" : "\n");
  }
  return os.str();
}

Mat2::Mat2(Modulus m, std::array<int64_t, 4> vals) : mod(m) {
  for (int i = 0; i < 4; ++i) {
    int64_t v = vals[i] % m.q;
    if (v < 0) v += m.q;
    a[i] = v;
  }
}

Mat2 Mat2::identity(Modulus m) { return Mat2(m, {1, 0, 0, 1}); }

Mat2 Mat2::operator*(const Mat2& o) const {
  require_same(mod, o.mod, "2x2 product");
  Mat2 r(mod);
  r.a[0] = (a[0] * o.a[0] + a[1] * o.a[2]) % mod.q;
  r.a[1] = (a[0] * o.a[1] + a[1] * o.a[3]) % mod.q;
  r.a[2] = (a[2] * o.a[0] + a[3] * o.a[2]) % mod.q;
  r.a[3] = (a[2] * o.a[1] + a[3] * o.a[3]) % mod.q;
  return r;
}

Residue Mat2::det() const {
  return Residue(a[0] * a[3] - a[1] * a[2], mod);
}

Mat4 symp_J(Modulus m) {
  Mat4 J(m);
  J.set(0, 3, 1);
  J.set(1, 2, 1);
  J.set(2, 1, -1);
  J.set(3, 0, -1);
  return J;
}

SympForm SympForm::standard(Modulus m) { return SympForm{symp_J(m)}; }

namespace {

// 3x3 determinant of the minor of g deleting row i, col j.
int64_t minor3(const Mat4& g, int i, int j) {
  int r[3], c[3];
  for (int k = 0, t = 0; k < 4; ++k)
    if (k != i) r[t++] = k;
  for (int k = 0, t = 0; k < 4; ++k)
    if (k != j) c[t++] = k;
  const int64_t q = g.mod.q;
  auto e = [&](int x, int y) { return g.at(r[x], c[y]); };
  int64_t d = 0;
  d += e(0, 0) * Residue::mulmod(e(1, 1), e(2, 2), q) % q;
  d -= e(0, 0) * Residue::mulmod(e(1, 2), e(2, 1), q) % q;
  d += e(0, 1) * Residue::mulmod(e(1, 2), e(2, 0), q) % q;
  d -= e(0, 1) * Residue::mulmod(e(1, 0), e(2, 2), q) % q;
  d += e(0, 2) * Residue::mulmod(e(1, 0), e(2, 1), q) % q;
  d -= e(0, 2) * Residue::mulmod(e(1, 1), e(2, 0), q) % q;
  d %= q;
  if (d < 0) d += q;
  return d;
}

}  // namespace

Residue mat_det(const Mat4& g) {
  const int64_t q = g.mod.q;
  int64_t d = 0;
  for (int j = 0; j < 4; ++j) {
    int64_t term = Residue::mulmod(g.at(0, j), minor3(g, 0, j), q);
    d += (j % 2 == 0) ? term : q - term;
  }
  d %= q;
  return Residue::raw(d, g.mod);
}

Mat4 mat_adjugate(const Mat4& g) {
  Mat4 adj(g.mod);
  const int64_t q = g.mod.q;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int64_t cof = minor3(g, i, j);
      if ((i + j) % 2 == 1) cof = (q - cof) % q;
      adj.at(j, i) = cof;
    }
  return adj;
}

Mat4 mat_inverse(const Mat4& g) {
  Residue d = mat_det(g);
  if (!d.is_unit())
    throw non_unit("matrix inverse requires unit determinant, got " +
                   std::to_string(d.v) + " mod " + g.mod.str());
  int64_t di = inv(d).v;
  Mat4 adj = mat_adjugate(g);
  Mat4 r(g.mod);
  for (int i = 0; i < 16; ++i) r.a[i] = Residue::mulmod(adj.a[i], di, g.mod.q);
  return r;
}

std::optional<Residue> similitude_factor(const Mat4& g, const SympForm& form) {
  require_same(g.mod, form.J.mod, "similitude check");
  Mat4 M = g.transposed() * form.J * g;
  Residue m = M.entry(0, 3);
  if (!m.is_unit()) return std::nullopt;
  Mat4 mJ(g.mod);
  for (int i = 0; i < 16; ++i)
    mJ.a[i] = Residue::mulmod(form.J.a[i], m.v, g.mod.q);
  if (M != mJ) return std::nullopt;
  return m;
}

std::optional<Residue> similitude_factor(const Mat4& g) {
  return similitude_factor(g, SympForm::standard(g.mod));
}

bool is_sp(const Mat4& g) {
  auto m = similitude_factor(g);
  return m && m->v == 1 % g.mod.q;
}

Mat4 reduce_mod(const Mat4& g, int64_t m) {
  if (m < 2 || g.mod.q % m != 0)
    throw bad_modulus("reduce_mod: " + std::to_string(m) + " does not divide " +
                      std::to_string(g.mod.q));
  int k = 0;
  int64_t x = m;
  while (x % g.mod.ell == 0) {
    x /= g.mod.ell;
    ++k;
  }
  if (x != 1)
    throw bad_modulus("reduce_mod: " + std::to_string(m) + " is not a power of " +
                      std::to_string(g.mod.ell));
  Mat4 r{Modulus(g.mod.ell, k)};
  for (int i = 0; i < 16; ++i) r.a[i] = g.a[i] % m;
  return r;
}

Vec4 reduce_mod(const Vec4& v, int64_t m) {
  int k = 0;
  int64_t x = m;
  while (x > 1 && x % v.mod.ell == 0) {
    x /= v.mod.ell;
    ++k;
  }
  if (x != 1 || v.mod.q % m != 0)
    throw bad_modulus("reduce_mod: bad target " + std::to_string(m));
  return v.reduced(Modulus(v.mod.ell, k));
}

Residue pairing(const Vec4& v, const Vec4& w) {
  require_same(v.mod, w.mod, "pairing");
  // <v,w> = v^T J w with the standard antidiagonal J.
  const int64_t q = v.mod.q;
  int64_t s = v.a[0] * w.a[3] + v.a[1] * w.a[2] - v.a[2] * w.a[1] - v.a[3] * w.a[0];
  return Residue(s % q, v.mod);
}

Mat4 transvection(const Vec4& u, int64_t c) {
  // T = I - c * u u^T J ; T(w) = w + c<w,u>u.
  Mat4 J = symp_J(u.mod);
  Mat4 T = Mat4::identity(u.mod);
  const int64_t q = u.mod.q;
  int64_t cc = c % q;
  if (cc < 0) cc += q;
  // row of u^T J
  int64_t row[4];
  for (int j = 0; j < 4; ++j) {
    int64_t acc = 0;
    for (int k = 0; k < 4; ++k) acc += u.a[k] * J.at(k, j);
    row[j] = ((acc % q) + q) % q;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int64_t t = Residue::mulmod(Residue::mulmod(u.a[i], row[j], q), cc, q);
      T.at(i, j) = ((T.at(i, j) - t) % q + q) % q;
    }
  return T;
}

Mat4 sp_lift(const Mat4& gbar, Modulus target) {
  if (gbar.mod.n != 1 || target.ell != gbar.mod.ell || target.n != 2)
    throw bad_modulus("sp_lift expects a mod-ell input and a mod-ell^2 target");
  if (!is_sp(gbar))
    throw non_symplectic_generator("sp_lift: input is not symplectic mod " +
                                   gbar.mod.str());
  const int64_t ell = gbar.mod.ell;
  Mat4 g0(target);
  for (int i = 0; i < 16; ++i) g0.a[i] = gbar.a[i];

  // g0^T J g0 = J + ell*A with A alternating mod ell; solve Y^T J + J Y = -A.
  Mat4 E = g0.transposed() * symp_J(target) * g0 - symp_J(target);
  int64_t A[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (E.at(i, j) % ell != 0)
        throw logic_violation("sp_lift: defect not divisible by ell");
      A[i][j] = (E.at(i, j) / ell) % ell;
    }

  // Six equations, entries (i,j) with i<j, over F_ell in 16 unknowns Y[k][l].
  // (Y^T J + J Y)_{ij} = sum_k (J_kj Y_ki + J_ik Y_kj).
  Mat4 Jm = symp_J(gbar.mod);
  int64_t aug[6][17] = {};
  int eq = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j, ++eq)
      for (int k = 0; k < 4; ++k) {
        aug[eq][4 * k + i] = (aug[eq][4 * k + i] + Jm.at(k, j)) % ell;
        aug[eq][4 * k + j] = (aug[eq][4 * k + j] + Jm.at(i, k)) % ell;
        aug[eq][16] = ((ell - A[i][j]) % ell + ell) % ell;
      }
  // Gaussian elimination, free variables zero.
  int pivot_col[6];
  int rank = 0;
  for (int col = 0; col < 16 && rank < 6; ++col) {
    int sel = -1;
    for (int r = rank; r < 6; ++r)
      if (aug[r][col] % ell != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    for (int c = 0; c < 17; ++c) std::swap(aug[sel][c], aug[rank][c]);
    int64_t pinv = inv(Residue(aug[rank][col], gbar.mod)).v;
    for (int c = col; c < 17; ++c)
      aug[rank][c] = Residue::mulmod(aug[rank][c], pinv, ell);
    for (int r = 0; r < 6; ++r) {
      if (r == rank || aug[r][col] == 0) continue;
      int64_t f = aug[r][col];
      for (int c = col; c < 17; ++c)
        aug[r][c] = ((aug[r][c] - f * aug[rank][c]) % ell + ell) % ell;
    }
    pivot_col[rank++] = col;
  }
  for (int r = rank; r < 6; ++r)
    if (aug[r][16] % ell != 0)
      throw logic_violation("sp_lift: inconsistent correction system");

  int64_t Y[16] = {};
  for (int r = 0; r < rank; ++r) Y[pivot_col[r]] = aug[r][16];

  Mat4 corr = Mat4::identity(target);
  for (int k = 0; k < 16; ++k)
    corr.a[k] = (corr.a[k] + ell * Y[k]) % target.q;
  Mat4 lifted = g0 * corr;
  if (!is_sp(lifted)) throw logic_violation("sp_lift: lift failed verification");
  return lifted;
}

}  // namespace sp4fix
