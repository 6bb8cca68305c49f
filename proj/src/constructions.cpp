// SPDX-License-Identifier: MIT
#include "finalg/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "finalg/hom.hpp"

namespace finalg {

namespace {

constexpr size_t kCarrierGuard = 4096;  // largest table we materialize

void finish(FiniteStructure& M) {
  std::set<std::string> seen(M.names.begin(), M.names.end());
  require(seen.size() == M.names.size(), "constructed names are not unique");
  auto rep = check_axioms(M);
  require(rep.ok, "constructed structure failed the axiom suite: " +
                      (rep.failures.empty() ? std::string("?")
                                            : rep.failures[0].law));
}

}  // namespace

FiniteStructure product_module(const FiniteStructure& A,
                               const FiniteStructure& B) {
  require(A.sf == B.sf, "product factors use different semifields");
  const Semifield& S = A.semifield();
  const size_t na = A.size(), nb = B.size(), n = na * nb;
  require(n <= kCarrierGuard, "product carrier too large");

  FiniteStructure M;
  M.sf = A.sf;
  auto at = [&](Elem a, Elem b) { return static_cast<Elem>(a * nb + b); };
  M.names.resize(n);
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < nb; ++b)
      M.names[at(a, b)] = "(" + A.names[a] + "," + B.names[b] + ")";
  M.zero = at(A.zero, B.zero);
  M.add.resize(n * n);
  M.neg.resize(n);
  M.scal.resize(S.unit_count() * n);
  const bool algebra = A.is_algebra() && B.is_algebra();
  if (algebra) {
    M.one = at(*A.one, *B.one);
    M.mul.resize(n * n);
  }
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1) {
      const Elem x = at(a1, b1);
      M.neg[x] = at(A.negf(a1), B.negf(b1));
      for (uint32_t g = 0; g < S.unit_count(); ++g)
        M.scal[g * n + x] = at(A.unit_scalf(g, a1), B.unit_scalf(g, b1));
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2) {
          const Elem y = at(a2, b2);
          M.add[x * n + y] = at(A.addf(a1, a2), B.addf(b1, b2));
          if (algebra) M.mul[x * n + y] = at(A.mulf(a1, a2), B.mulf(b1, b2));
        }
    }
  finish(M);
  return M;
}

FiniteStructure coproduct_module(const FiniteStructure& A,
                                 const FiniteStructure& B) {
  require(A.sf == B.sf, "coproduct factors use different semifields");
  const Semifield& S = A.semifield();
  const size_t na = A.size(), nb = B.size(), n = na * nb;
  require(n <= kCarrierGuard, "coproduct carrier too large");
  const Elem za = A.zero, zb = B.zero;

  // component names: keep them bare unless the factors' nonzero names clash
  bool clash = false;
  {
    std::set<std::string> left;
    for (Elem a = 0; a < na; ++a)
      if (a != za) left.insert(A.names[a]);
    for (Elem b = 0; b < nb; ++b)
      if (b != zb && left.count(B.names[b])) clash = true;
  }
  auto lname = [&](Elem a) { return clash ? "l." + A.names[a] : A.names[a]; };
  auto rname = [&](Elem b) { return clash ? "r." + B.names[b] : B.names[b]; };

  FiniteStructure M;
  M.sf = A.sf;
  auto at = [&](Elem a, Elem b) { return static_cast<Elem>(a * nb + b); };
  M.names.resize(n);
  for (Elem a = 0; a < na; ++a)
    for (Elem b = 0; b < nb; ++b) {
      std::string s;
      if (a == za && b == zb) s = "0";
      else if (b == zb) s = lname(a);
      else if (a == za) s = rname(b);
      else s = lname(a) + "|" + rname(b);
      M.names[at(a, b)] = s;
    }
  M.zero = at(za, zb);
  const Elem zero = M.zero;

  M.add.resize(n * n);
  M.neg.resize(n);
  M.scal.resize(S.unit_count() * n);
  for (Elem a1 = 0; a1 < na; ++a1)
    for (Elem b1 = 0; b1 < nb; ++b1) {
      const Elem x = at(a1, b1);
      M.neg[x] = at(A.negf(a1), B.negf(b1));
      for (uint32_t g = 0; g < S.unit_count(); ++g)
        M.scal[g * n + x] = at(A.unit_scalf(g, a1), B.unit_scalf(g, b1));
      for (Elem a2 = 0; a2 < na; ++a2)
        for (Elem b2 = 0; b2 < nb; ++b2) {
          // zero absorbs; otherwise merge per factor, and a factor
          // collapsing to its local zero absorbs everything as well
          if (x == zero || at(a2, b2) == zero) {
            M.add[x * n + at(a2, b2)] = zero;
            continue;
          }
          Elem av, bv;
          if (a1 != za && a2 != za) {
            av = A.addf(a1, a2);
            if (av == za) {
              M.add[x * n + at(a2, b2)] = zero;
              continue;
            }
          } else {
            av = a1 != za ? a1 : a2;
          }
          if (b1 != zb && b2 != zb) {
            bv = B.addf(b1, b2);
            if (bv == zb) {
              M.add[x * n + at(a2, b2)] = zero;
              continue;
            }
          } else {
            bv = b1 != zb ? b1 : b2;
          }
          M.add[x * n + at(a2, b2)] = at(av, bv);
        }
    }
  finish(M);
  return M;
}

FiniteStructure free_module(const Semifield& S,
                            const std::vector<std::string>& gen_names) {
  require(S.is_finite(), "free module needs a finite scalar semifield");
  const size_t k = gen_names.size();
  require(k >= 1, "free module needs at least one generator");
  const uint32_t u = S.unit_count();
  size_t n = 1;
  for (size_t i = 0; i < k; ++i) {
    n *= 1 + u;
    require(n <= kCarrierGuard, "free module carrier too large");
  }

  // element = one digit per generator: 0 absent, 1+g the unit with index g
  auto digits = [&](Elem e) {
    std::vector<uint32_t> d(k);
    for (size_t i = 0; i < k; ++i) {
      d[i] = e % (1 + u);
      e /= 1 + u;
    }
    return d;
  };
  auto pack = [&](const std::vector<uint32_t>& d) {
    Elem e = 0;
    for (size_t i = k; i-- > 0;) e = e * (1 + u) + d[i];
    return e;
  };

  FiniteStructure M;
  M.sf = S.id();
  M.names.resize(n);
  for (Elem e = 0; e < n; ++e) {
    auto d = digits(e);
    std::string s;
    for (size_t i = 0; i < k; ++i) {
      if (d[i] == 0) continue;
      const uint32_t g = d[i] - 1;
      std::string piece;
      if (g == 0) piece = gen_names[i];  // unit index 0 is one
      else if (g == S.minus_one_g()) piece = "-" + gen_names[i];
      else piece = S.to_string(S.unit(g)) + "*" + gen_names[i];
      if (s.empty()) s = piece;
      else if (piece[0] == '-') s += piece;
      else s += "+" + piece;
    }
    M.names[e] = s.empty() ? "0" : s;
  }
  M.zero = 0;
  M.add.resize(n * n);
  M.neg.resize(n);
  M.scal.resize(u * n);
  for (Elem e1 = 0; e1 < n; ++e1) {
    auto d1 = digits(e1);
    auto nd = d1;
    for (size_t i = 0; i < k; ++i)
      if (d1[i]) nd[i] = 1 + S.neg(S.unit(d1[i] - 1)).g;
    M.neg[e1] = pack(nd);
    for (uint32_t g = 0; g < u; ++g) {
      auto sd = d1;
      for (size_t i = 0; i < k; ++i)
        if (d1[i]) sd[i] = 1 + S.mul(S.unit(g), S.unit(d1[i] - 1)).g;
      M.scal[g * n + e1] = pack(sd);
    }
    for (Elem e2 = 0; e2 < n; ++e2) {
      if (e1 == M.zero || e2 == M.zero) {
        M.add[e1 * n + e2] = M.zero;
        continue;
      }
      auto d2 = digits(e2);
      std::vector<uint32_t> sum(k);
      bool absorbed = false;
      for (size_t i = 0; i < k && !absorbed; ++i) {
        if (d1[i] && d2[i]) {
          Scalar s = S.add(S.unit(d1[i] - 1), S.unit(d2[i] - 1));
          if (s.zero) absorbed = true;
          else sum[i] = 1 + s.g;
        } else {
          sum[i] = d1[i] ? d1[i] : d2[i];
        }
      }
      M.add[e1 * n + e2] = absorbed ? M.zero : pack(sum);
    }
  }
  finish(M);
  return M;
}

HomModule hom_module(const FiniteStructure& M1, const FiniteStructure& M2) {
  require(M1.sf == M2.sf, "hom module needs a common semifield");
  const Semifield& S = M1.semifield();
  HomModule H;
  H.homs = all_module_homs(M1, M2);
  const size_t n = H.homs.size();
  require(n >= 1 && n <= kCarrierGuard, "hom module carrier out of range");
  std::map<std::vector<Elem>, Elem> at;
  for (Elem i = 0; i < n; ++i) at[H.homs[i]] = i;
  auto look = [&](const std::vector<Elem>& f) {
    auto it = at.find(f);
    require(it != at.end(), "pointwise image is not a homomorphism");
    return it->second;
  };

  FiniteStructure& M = H.module;
  M.sf = M1.sf;
  M.names.resize(n);
  std::vector<Elem> zero_map(M1.size(), M2.zero);
  M.zero = look(zero_map);
  for (Elem i = 0; i < n; ++i) M.names[i] = "h" + std::to_string(i);
  M.names[M.zero] = "0";
  M.add.resize(n * n);
  M.neg.resize(n);
  M.scal.resize(S.unit_count() * n);
  const size_t m = M1.size();
  for (Elem i = 0; i < n; ++i) {
    std::vector<Elem> t(m);
    for (size_t a = 0; a < m; ++a) t[a] = M2.negf(H.homs[i][a]);
    M.neg[i] = look(t);
    for (uint32_t g = 0; g < S.unit_count(); ++g) {
      for (size_t a = 0; a < m; ++a) t[a] = M2.unit_scalf(g, H.homs[i][a]);
      M.scal[g * n + i] = look(t);
    }
    for (Elem j = 0; j < n; ++j) {
      for (size_t a = 0; a < m; ++a)
        t[a] = M2.addf(H.homs[i][a], H.homs[j][a]);
      M.add[i * n + j] = look(t);
    }
  }
  finish(M);
  return H;
}

}  // namespace finalg
