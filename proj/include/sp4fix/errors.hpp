#pragma once

#include <stdexcept>
#include <string>

namespace sp4fix {

struct error : std::runtime_error {
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Contract violations (mixed moduli, broken invariants). Loud, never coerced.
struct logic_violation : error {
  explicit logic_violation(const std::string& msg) : error(msg) {}
};

struct non_unit : error {
  explicit non_unit(const std::string& msg) : error(msg) {}
};

struct bad_modulus : error {
  explicit bad_modulus(const std::string& msg) : error(msg) {}
};

struct non_symplectic_generator : error {
  explicit non_symplectic_generator(const std::string& msg) : error(msg) {}
};

struct too_large : error {
  explicit too_large(const std::string& msg) : error(msg) {}
};

struct truncated_closure : error {
  explicit truncated_closure(const std::string& msg) : error(msg) {}
};

struct not_parabolic : error {
  explicit not_parabolic(const std::string& msg) : error(msg) {}
};

struct not_in_fix : error {
  explicit not_in_fix(const std::string& msg) : error(msg) {}
};

struct bad_lattice_pair : error {
  explicit bad_lattice_pair(const std::string& msg) : error(msg) {}
};

struct seed_invalid : error {
  explicit seed_invalid(const std::string& msg) : error(msg) {}
};

struct bad_choice : error {
  explicit bad_choice(const std::string& msg) : error(msg) {}
};

struct parse_error : error {
  explicit parse_error(const std::string& msg) : error(msg) {}
};

}  // namespace sp4fix
