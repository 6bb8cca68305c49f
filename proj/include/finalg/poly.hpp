// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finalg/semifield.hpp"

namespace finalg {

// Sparse polynomial over a registered semifield.  Terms map exponent vectors
// (one entry per variable) to nonzero coefficients.  Addition carries the
// absorbing zero globally: if any shared monomial's coefficient sum is zero,
// the whole sum is the zero polynomial, because a zero term absorbs the rest.
struct Poly {
  uint16_t sf = 0;
  uint32_t nvars = 1;
  std::map<std::vector<uint32_t>, Scalar> terms;

  bool is_zero() const { return terms.empty(); }
  const Semifield& semifield() const { return Semifield::by_id(sf); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

Poly poly_zero(const Semifield& S, uint32_t nvars = 1);
Poly poly_const(const Semifield& S, Scalar c, uint32_t nvars = 1);
Poly poly_monomial(const Semifield& S, Scalar c, std::vector<uint32_t> exps);
// Convenience for one variable: c * x^d.
Poly poly_term(const Semifield& S, Scalar c, uint32_t d);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_scal(Scalar s, const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_pow(const Poly& a, uint32_t n);

// Largest total degree among terms; zero polynomial reports -1.
int64_t poly_degree(const Poly& a);

// Canonical rendering: terms ascend by (total degree, exponent vector),
// unit coefficients are folded into the sign, and the sign joins terms as
// " + " / " - ".  `vars` supplies variable names; defaults to x or x1..xn.
std::string poly_to_string(const Poly& a,
                           const std::vector<std::string>& vars = {});

std::vector<std::string> default_var_names(uint32_t nvars);

}  // namespace finalg
