#include "sp4fix/residue.hpp"

namespace sp4fix {

namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Modulus::Modulus(int64_t ell_, int n_) : ell(ell_), n(n_) {
  if (ell < 2 || ell > 97 || !is_prime(ell))
    throw bad_modulus("ell must be a prime in [2,97], got " + std::to_string(ell));
  if (n < 1 || n > 4)
    throw bad_modulus("exponent n must be in [1,4], got " + std::to_string(n));
  q = 1;
  for (int i = 0; i < n; ++i) q *= ell;
}

std::string Modulus::str() const {
  return std::to_string(ell) + "^" + std::to_string(n);
}

int val(const Residue& r) {
  if (r.v == 0) return kValInf;
  int k = 0;
  int64_t x = r.v;
  while (x % r.mod.ell == 0) {
    x /= r.mod.ell;
    ++k;
  }
  return k;
}

Residue pow(const Residue& r, int64_t e) {
  Residue acc = Residue::raw(1 % r.mod.q, r.mod);
  Residue base = r;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// Unit inversion by r^(phi(q)-1); branch-free, no extended-gcd edge cases.
Residue inv(const Residue& r) {
  if (!r.is_unit())
    throw non_unit("inv of non-unit " + std::to_string(r.v) + " mod " + r.mod.str());
  return pow(r, r.mod.phi() - 1);
}

}  // namespace sp4fix
