// SPDX-License-Identifier: MIT
#include "finalg/poly.hpp"

#include <algorithm>
#include <numeric>

namespace finalg {
namespace {

void check_same_ring(const Poly& a, const Poly& b) {
  require(a.sf == b.sf, "polynomials over different semifields");
  require(a.nvars == b.nvars, "polynomials in different variable counts");
}

uint64_t total_degree(const std::vector<uint32_t>& exps) {
  uint64_t d = 0;
  for (uint32_t e : exps) d += e;
  return d;
}

}  // namespace

Poly poly_zero(const Semifield& S, uint32_t nvars) {
  require(nvars >= 1, "polynomial ring needs at least one variable");
  return Poly{S.id(), nvars, {}};
}

Poly poly_const(const Semifield& S, Scalar c, uint32_t nvars) {
  return poly_monomial(S, c, std::vector<uint32_t>(nvars, 0));
}

Poly poly_monomial(const Semifield& S, Scalar c, std::vector<uint32_t> exps) {
  require(c.sf == S.id(), "coefficient from the wrong semifield");
  require(!exps.empty(), "polynomial ring needs at least one variable");
  Poly p{S.id(), static_cast<uint32_t>(exps.size()), {}};
  if (!c.zero) p.terms.emplace(std::move(exps), c);
  return p;
}

Poly poly_term(const Semifield& S, Scalar c, uint32_t d) {
  return poly_monomial(S, c, {d});
}

Poly poly_add(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  const Semifield& S = a.semifield();
  if (a.is_zero() || b.is_zero()) return poly_zero(S, a.nvars);
  Poly r = a;
  for (const auto& [exps, c] : b.terms) {
    auto it = r.terms.find(exps);
    if (it == r.terms.end()) {
      r.terms.emplace(exps, c);
    } else {
      Scalar s = S.add(it->second, c);
      if (s.zero) return poly_zero(S, a.nvars);  // a zero term absorbs all
      it->second = s;
    }
  }
  return r;
}

Poly poly_neg(const Poly& a) {
  const Semifield& S = a.semifield();
  Poly r = a;
  for (auto& [exps, c] : r.terms) c = S.neg(c);
  return r;
}

Poly poly_scal(Scalar s, const Poly& a) {
  const Semifield& S = a.semifield();
  require(s.sf == a.sf, "scalar from the wrong semifield");
  if (s.zero) return poly_zero(S, a.nvars);
  Poly r = a;
  for (auto& [exps, c] : r.terms) c = S.mul(s, c);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  const Semifield& S = a.semifield();
  Poly acc = poly_zero(S, a.nvars);
  bool first = true;
  for (const auto& [ea, ca] : a.terms) {
    for (const auto& [eb, cb] : b.terms) {
      std::vector<uint32_t> e(a.nvars);
      for (uint32_t i = 0; i < a.nvars; ++i) {
        uint64_t s = static_cast<uint64_t>(ea[i]) + eb[i];
        require(s <= UINT32_MAX, "exponent overflow in product");
        e[i] = static_cast<uint32_t>(s);
      }
      Poly t = poly_monomial(S, S.mul(ca, cb), std::move(e));
      acc = first ? std::move(t) : poly_add(acc, t);
      first = false;
      // a zero partial sum absorbs every remaining term
      if (acc.is_zero()) return poly_zero(S, a.nvars);
    }
  }
  return acc;
}

Poly poly_pow(const Poly& a, uint32_t n) {
  const Semifield& S = a.semifield();
  Poly acc = poly_const(S, S.one(), a.nvars);
  Poly base = a;
  while (n) {
    if (n & 1) acc = poly_mul(acc, base);
    base = poly_mul(base, base);
    n >>= 1;
  }
  return acc;
}

int64_t poly_degree(const Poly& a) {
  int64_t d = -1;
  for (const auto& [exps, c] : a.terms)
    d = std::max<int64_t>(d, static_cast<int64_t>(total_degree(exps)));
  return d;
}

std::vector<std::string> default_var_names(uint32_t nvars) {
  if (nvars == 1) return {"x"};
  std::vector<std::string> v;
  for (uint32_t i = 1; i <= nvars; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

std::string poly_to_string(const Poly& a, const std::vector<std::string>& vars) {
  if (a.is_zero()) return "0";
  const Semifield& S = a.semifield();
  std::vector<std::string> names =
      vars.empty() ? default_var_names(a.nvars) : vars;
  require(names.size() == a.nvars, "variable name count mismatch");

  std::vector<std::pair<std::vector<uint32_t>, Scalar>> terms(a.terms.begin(),
                                                              a.terms.end());
  std::sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    uint64_t dx = total_degree(x.first), dy = total_degree(y.first);
    if (dx != dy) return dx < dy;
    return x.first < y.first;
  });

  std::string out;
  bool first = true;
  for (const auto& [exps, c] : terms) {
    std::string cs = S.to_string(c);
    bool negative = !cs.empty() && cs[0] == '-';
    if (negative) cs = cs.substr(1);
    std::vector<std::string> factors;
    bool constant = true;
    for (uint32_t i = 0; i < a.nvars; ++i) {
      if (exps[i] == 0) continue;
      constant = false;
      std::string f = names[i];
      if (exps[i] != 1) f += "^" + std::to_string(exps[i]);
      factors.push_back(std::move(f));
    }
    if (cs != "1" || constant) factors.insert(factors.begin(), cs);
    std::string term;
    for (size_t i = 0; i < factors.size(); ++i) {
      if (i) term += "*";
      term += factors[i];
    }
    if (first) {
      out += negative ? "-" + term : term;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out;
}

}  // namespace finalg
