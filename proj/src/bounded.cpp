// SPDX-License-Identifier: MIT

#include "finalg/bounded.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "finalg/error.hpp"

namespace finalg {

namespace {

constexpr std::size_t kCarrierLimit = 20'000'000;

uint32_t total_degree(const std::vector<uint32_t>& exps) {
  return std::accumulate(exps.begin(), exps.end(), uint32_t{0});
}

bool graded_less(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  uint32_t sa = total_degree(a), sb = total_degree(b);
  if (sa != sb) return sa < sb;
  return a < b;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  // Keeps the smaller index as root so representatives are canonical.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

// Shared worklist engine: `expand` receives each freshly united pair of
// polynomials and enqueues the rule-generated consequences.
template <typename Expand>
BoundedCongruence close_worklist(const BoundedRing& R,
                                 const std::vector<std::pair<Poly, Poly>>& pairs,
                                 Expand expand) {
  const std::size_t n = R.size();
  UnionFind uf(n);
  std::deque<std::pair<std::size_t, std::size_t>> work;
  for (const auto& [a, b] : pairs) {
    auto ia = R.index_of(a);
    auto ib = R.index_of(b);
    require(ia.has_value() && ib.has_value(), "generator exceeds the degree bound");
    work.emplace_back(*ia, *ib);
  }
  while (!work.empty()) {
    auto [i, j] = work.front();
    work.pop_front();
    if (!uf.unite(i, j)) continue;
    Poly a = R.poly_at(i);
    Poly b = R.poly_at(j);
    expand(a, b, work);
  }
  BoundedCongruence C;
  C.ring = R;
  C.generators = pairs;
  C.block.assign(n, 0);
  std::vector<int64_t> stamp(n, -1);
  uint32_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = uf.find(i);
    if (stamp[r] < 0) stamp[r] = next++;
    C.block[i] = static_cast<uint32_t>(stamp[r]);
  }
  C.block_count = next;
  return C;
}

Scalar map_coefficient(const Semifield& from, const Semifield& to, Scalar c) {
  if (from.id() == to.id()) return c;
  require(from.kind() == SemifieldKind::kFInfinity,
          "coefficients cannot be carried into the substitution target");
  if (c.zero) return to.zero();
  return c == from.one() ? to.one() : to.minus_one();
}

// Candidate substitution values inside one target semifield.
std::vector<Scalar> candidate_values(const Semifield& T) {
  if (T.is_finite()) return T.elements();
  std::vector<Scalar> out = {T.zero()};
  for (uint32_t g = 0; g < T.unit_count(); ++g)
    for (int32_t e = -2; e <= 2; ++e) out.push_back(T.unit(g, e));
  return out;
}

}  // namespace

Poly BoundedRing::poly_at(std::size_t index) const {
  require(index < carrier_size, "carrier index out of range");
  const Semifield& S = semifield();
  const std::size_t radix = 1 + S.unit_count();
  Poly p = poly_zero(S, nvars);
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    std::size_t digit = index % radix;
    index /= radix;
    if (digit == 0) continue;
    p.terms.emplace(monomials[k], S.unit(static_cast<uint32_t>(digit - 1)));
  }
  return p;
}

std::optional<std::size_t> BoundedRing::index_of(const Poly& p) const {
  require(p.sf == sf && p.nvars == nvars,
          "polynomial does not live over this bounded carrier");
  std::size_t index = 0;
  for (const auto& [exps, coeff] : p.terms) {
    if (total_degree(exps) > degree) return std::nullopt;
    auto it = std::lower_bound(monomials.begin(), monomials.end(), exps, graded_less);
    std::size_t pos = static_cast<std::size_t>(it - monomials.begin());
    index += weight[pos] * (1 + static_cast<std::size_t>(coeff.g));
  }
  return index;
}

BoundedRing bounded_ring(const Semifield& S, uint32_t nvars, uint32_t degree) {
  require(S.is_finite(), "bounded carriers need a finite coefficient semifield");
  require(nvars >= 1 && nvars <= 4, "bounded carriers support 1 to 4 variables");
  BoundedRing R;
  R.sf = S.id();
  R.nvars = nvars;
  R.degree = degree;
  std::vector<uint32_t> cur(nvars, 0);
  while (true) {
    if (total_degree(cur) <= degree) R.monomials.push_back(cur);
    uint32_t v = 0;
    for (; v < nvars; ++v) {
      if (cur[v] < degree) {
        ++cur[v];
        break;
      }
      cur[v] = 0;
    }
    if (v == nvars) break;
  }
  std::sort(R.monomials.begin(), R.monomials.end(), graded_less);
  const std::size_t radix = 1 + S.unit_count();
  std::size_t size = 1;
  for (std::size_t k = 0; k < R.monomials.size(); ++k) {
    R.weight.push_back(size);
    require(size <= kCarrierLimit / radix, "bounded carrier too large");
    size *= radix;
  }
  R.carrier_size = size;
  return R;
}

BoundedCongruence cong_closure_bounded(const BoundedRing& R,
                                       const std::vector<std::pair<Poly, Poly>>& pairs) {
  const Semifield& S = R.semifield();
  // Rule alphabet: every single-term polynomial for addition (addition never
  // raises total degree, and summing term by term reaches every carrier
  // element), each variable for multiplication (monomial factors compose
  // from these; unit factors are the scalings).
  std::vector<Poly> adders;
  for (const auto& m : R.monomials)
    for (uint32_t g = 0; g < S.unit_count(); ++g)
      adders.push_back(poly_monomial(S, S.unit(g), m));
  std::vector<Poly> shifts;
  for (uint32_t v = 0; v < R.nvars; ++v) {
    std::vector<uint32_t> e(R.nvars, 0);
    e[v] = 1;
    shifts.push_back(poly_monomial(S, S.one(), e));
  }
  return close_worklist(
      R, pairs, [&](const Poly& a, const Poly& b, auto& work) {
        for (uint32_t g = 0; g < S.unit_count(); ++g) {
          Scalar u = S.unit(g);
          work.emplace_back(*R.index_of(poly_scal(u, a)), *R.index_of(poly_scal(u, b)));
        }
        for (const Poly& x : shifts) {
          auto ia = R.index_of(poly_mul(a, x));
          auto ib = R.index_of(poly_mul(b, x));
          if (ia.has_value() && ib.has_value()) work.emplace_back(*ia, *ib);
        }
        for (const Poly& c : adders)
          work.emplace_back(*R.index_of(poly_add(a, c)), *R.index_of(poly_add(b, c)));
      });
}

BoundedCongruence cong_closure_bounded_naive(const BoundedRing& R,
                                             const std::vector<std::pair<Poly, Poly>>& pairs) {
  const Semifield& S = R.semifield();
  return close_worklist(
      R, pairs, [&](const Poly& a, const Poly& b, auto& work) {
        work.emplace_back(*R.index_of(poly_neg(a)), *R.index_of(poly_neg(b)));
        for (uint32_t g = 0; g < S.unit_count(); ++g) {
          Scalar u = S.unit(g);
          work.emplace_back(*R.index_of(poly_scal(u, a)), *R.index_of(poly_scal(u, b)));
        }
        for (std::size_t k = 0; k < R.size(); ++k) {
          Poly c = R.poly_at(k);
          work.emplace_back(*R.index_of(poly_add(a, c)), *R.index_of(poly_add(b, c)));
          auto ia = R.index_of(poly_mul(a, c));
          auto ib = R.index_of(poly_mul(b, c));
          if (ia.has_value() && ib.has_value()) work.emplace_back(*ia, *ib);
        }
      });
}

Scalar poly_eval(const Poly& p, const Semifield& T, const std::vector<Scalar>& values) {
  require(values.size() == p.nvars, "one substitution value per variable required");
  for (const Scalar& v : values)
    require(v.sf == T.id(), "substitution values must live in the target semifield");
  const Semifield& S = p.semifield();
  bool first = true;
  Scalar acc = T.zero();
  for (const auto& [exps, coeff] : p.terms) {
    Scalar t = map_coefficient(S, T, coeff);
    for (uint32_t v = 0; v < p.nvars; ++v)
      if (exps[v] > 0) t = T.mul(t, T.pow(values[v], exps[v]));
    acc = first ? t : T.add(acc, t);
    first = false;
  }
  return acc;
}

bool substitution_collapses_generators(const BoundedCongruence& C, const Semifield& T,
                                       const std::vector<Scalar>& values) {
  for (const auto& [a, b] : C.generators)
    if (!(poly_eval(a, T, values) == poly_eval(b, T, values))) return false;
  return true;
}

BoundedAnswer bounded_related(const BoundedCongruence& C, const Poly& a, const Poly& b) {
  auto ia = C.ring.index_of(a);
  auto ib = C.ring.index_of(b);
  require(ia.has_value() && ib.has_value(), "query polynomial exceeds the degree bound");
  return C.block[*ia] == C.block[*ib] ? BoundedAnswer::kIn : BoundedAnswer::kUnknown;
}

BoundedMembership bounded_membership(const BoundedCongruence& C, const Poly& a,
                                     const Poly& b) {
  BoundedMembership out;
  if (bounded_related(C, a, b) == BoundedAnswer::kIn) {
    out.answer = BoundedAnswer::kIn;
    return out;
  }
  const Semifield& S = C.ring.semifield();
  std::vector<const Semifield*> targets;
  if (S.kind() == SemifieldKind::kFInfinity) {
    targets = {&Semifield::finfinity(), &Semifield::cyclotomic(2),
               &Semifield::lexmax(Semifield::finfinity())};
  } else {
    targets = {&S};
  }
  const uint32_t nvars = C.ring.nvars;
  for (const Semifield* T : targets) {
    std::vector<Scalar> candidates = candidate_values(*T);
    std::vector<std::size_t> pick(nvars, 0);
    while (true) {
      std::vector<Scalar> values;
      values.reserve(nvars);
      for (uint32_t v = 0; v < nvars; ++v) values.push_back(candidates[pick[v]]);
      if (substitution_collapses_generators(C, *T, values)) {
        Scalar left = poly_eval(a, *T, values);
        Scalar right = poly_eval(b, *T, values);
        if (!(left == right)) {
          out.answer = BoundedAnswer::kNotIn;
          out.refuter = SubstitutionWitness{T->id(), values, left, right};
          return out;
        }
      }
      uint32_t v = 0;
      for (; v < nvars; ++v) {
        if (++pick[v] < candidates.size()) break;
        pick[v] = 0;
      }
      if (v == nvars) break;
    }
  }
  out.answer = BoundedAnswer::kUnknown;
  return out;
}

BoundedKernel bounded_kernel(const BoundedCongruence& C) {
  BoundedKernel K;
  K.members = bounded_block_of(C, poly_zero(C.ring.semifield(), C.ring.nvars));
  K.partial = true;
  return K;
}

std::vector<Poly> bounded_block_of(const BoundedCongruence& C, const Poly& p) {
  auto ip = C.ring.index_of(p);
  require(ip.has_value(), "polynomial exceeds the degree bound");
  uint32_t id = C.block[*ip];
  std::vector<Poly> out;
  for (std::size_t i = 0; i < C.ring.size(); ++i)
    if (C.block[i] == id) out.push_back(C.ring.poly_at(i));
  return out;
}

}  // namespace finalg
