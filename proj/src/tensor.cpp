// SPDX-License-Identifier: MIT
//
// Quotient constructions: tensor products, symmetric powers, projective
// spaces, and graded components of the ring of functions.

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "finalg/congruence.hpp"
#include "finalg/constructions.hpp"
#include "finalg/dual.hpp"
#include "finalg/error.hpp"

namespace finalg {

namespace {

// A formal sum over an abstract basis: slot -> nonzero coefficient.  The
// empty map is zero.  Addition carries the absorbing rule: one cancelling
// slot annihilates the whole sum.
using FormalSum = std::map<std::size_t, Scalar>;

FormalSum fs_add(const Semifield& S, const FormalSum& a, const FormalSum& b) {
  if (a.empty() || b.empty()) return {};  // the zero sum absorbs
  FormalSum out = a;
  for (const auto& [slot, c] : b) {
    auto it = out.find(slot);
    if (it == out.end()) {
      out.emplace(slot, c);
      continue;
    }
    Scalar s = S.add(it->second, c);
    if (s.zero) return {};
    it->second = s;
  }
  return out;
}

// Element encoding of a free module built by free_module over the same
// ordered basis: digit per slot, 0 absent, 1+g for unit g.
Elem fs_pack(const Semifield& S, std::size_t slots, const FormalSum& fs) {
  const std::size_t radix = 1 + S.unit_count();
  Elem e = 0;
  for (const auto& [slot, c] : fs) {
    require(slot < slots, "formal sum slot out of range");
    std::size_t w = 1;
    for (std::size_t i = 0; i < slot; ++i) w *= radix;
    e += static_cast<Elem>(w * (1 + c.g));
  }
  return e;
}

FormalSum fs_unpack(const Semifield& S, std::size_t slots, Elem e) {
  const std::size_t radix = 1 + S.unit_count();
  FormalSum fs;
  for (std::size_t slot = 0; slot < slots; ++slot) {
    std::size_t digit = e % radix;
    e /= radix;
    if (digit) fs.emplace(slot, S.unit(static_cast<uint32_t>(digit - 1)));
  }
  return fs;
}

// Least representatives of the unit orbits of the sum-irreducible elements.
std::vector<Elem> generator_orbit_reps(const FiniteStructure& M) {
  const Semifield& S = M.semifield();
  std::vector<Elem> reps;
  std::set<Elem> seen;
  for (Elem a : sum_irreducibles(M)) {
    if (seen.count(a)) continue;
    for (uint32_t g = 0; g < S.unit_count(); ++g) seen.insert(M.unit_scalf(g, a));
    reps.push_back(a);
  }
  return reps;
}

// Write m as the sum of the orbit-scaled generators above it: orbit index ->
// the unit carrying that orbit's generator onto a summand.
std::map<uint32_t, Scalar> decompose(const FiniteStructure& M,
                                     const std::vector<Elem>& reps, Elem m) {
  const Semifield& S = M.semifield();
  std::map<uint32_t, Scalar> out;
  if (m == M.zero) return out;
  for (uint32_t k = 0; k < reps.size(); ++k) {
    std::optional<Scalar> found;
    for (uint32_t g = 0; g < S.unit_count(); ++g) {
      if (M.addf(m, M.unit_scalf(g, reps[k])) == m) {
        require(!found.has_value(), "two units of one orbit lie above an element");
        found = S.unit(g);
      }
    }
    if (found.has_value()) out.emplace(k, *found);
  }
  Elem acc = M.zero;
  bool first = true;
  for (const auto& [k, c] : out) {
    Elem t = M.scalf(c, reps[k]);
    acc = first ? t : M.addf(acc, t);
    first = false;
  }
  require(!first && acc == m, "element is not the sum of the generators above it");
  return out;
}

std::vector<std::map<uint32_t, Scalar>> decompose_all(const FiniteStructure& M,
                                                      const std::vector<Elem>& reps) {
  std::vector<std::map<uint32_t, Scalar>> dec(M.size());
  for (Elem m = 0; m < M.size(); ++m) dec[m] = decompose(M, reps, m);
  return dec;
}

}  // namespace

TensorModule tensor_module(const FiniteStructure& A, const FiniteStructure& B) {
  require(A.sf == B.sf, "tensor factors use different semifields");
  const Semifield& S = A.semifield();
  const std::vector<Elem> repsA = generator_orbit_reps(A);
  const std::vector<Elem> repsB = generator_orbit_reps(B);
  const std::size_t GA = repsA.size(), GB = repsB.size();
  require(GA >= 1 && GB >= 1, "tensor factors must have generators");
  require(GA * GB <= 7, "tensor basis too large: " + std::to_string(GA * GB) +
                            " generator orbit pairs");
  const std::size_t slots = GA * GB;

  std::vector<std::string> names;
  for (std::size_t i = 0; i < GA; ++i)
    for (std::size_t j = 0; j < GB; ++j)
      names.push_back(A.names[repsA[i]] + "⊗" + B.names[repsB[j]]);
  FiniteStructure F = free_module(S, names);

  const auto decA = decompose_all(A, repsA);
  const auto decB = decompose_all(B, repsB);
  auto embed = [&](Elem a, Elem b) {
    FormalSum out;
    for (const auto& [i, la] : decA[a])
      for (const auto& [j, mb] : decB[b])
        out.emplace(i * GB + j, S.mul(la, mb));
    return out;
  };

  // Bilinearity instances in each slot; scalar compatibility is already
  // carried by the orbit encoding.  Only non-equalities feed the closure.
  std::vector<std::pair<Elem, Elem>> rel;
  auto push_rel = [&](const FormalSum& lhs, const FormalSum& rhs) {
    if (lhs != rhs)
      rel.emplace_back(fs_pack(S, slots, lhs), fs_pack(S, slots, rhs));
  };
  for (Elem m = 0; m < A.size(); ++m)
    for (Elem mp = 0; mp < A.size(); ++mp)
      for (std::size_t j = 0; j < GB; ++j)
        push_rel(embed(A.addf(m, mp), repsB[j]),
                 fs_add(S, embed(m, repsB[j]), embed(mp, repsB[j])));
  for (Elem m = 0; m < B.size(); ++m)
    for (Elem mp = 0; mp < B.size(); ++mp)
      for (std::size_t i = 0; i < GA; ++i)
        push_rel(embed(repsA[i], B.addf(m, mp)),
                 fs_add(S, embed(repsA[i], m), embed(repsA[i], mp)));

  Congruence C = cong_closure(F, rel);
  TensorModule T;
  T.module = quotient_structure(F, C);
  T.pure.resize(A.size() * B.size());
  for (Elem a = 0; a < A.size(); ++a)
    for (Elem b = 0; b < B.size(); ++b)
      T.pure[a * B.size() + b] = C.block[fs_pack(S, slots, embed(a, b))];
  return T;
}

SymPower sym_power(const FiniteStructure& M, uint32_t n) {
  require(n >= 1, "symmetric power needs a positive degree");
  const Semifield& S = M.semifield();
  const std::vector<Elem> reps = generator_orbit_reps(M);
  const std::size_t G = reps.size();
  require(G >= 1, "symmetric power needs a module with generators");
  std::size_t tuples = 1;
  for (uint32_t i = 0; i < n; ++i) {
    tuples *= G;
    require(tuples <= 4096, "symmetric power basis too large");
  }
  const auto dec = decompose_all(M, reps);

  // Formal sum of an elementwise tuple over the ordered-tuple basis
  // (flat index little-endian, radix G).
  auto embed_tuple = [&](const std::vector<Elem>& elems) {
    std::vector<std::pair<std::size_t, Scalar>> cur = {{0, S.one()}};
    std::size_t w = 1;
    for (uint32_t s = 0; s < n; ++s) {
      std::vector<std::pair<std::size_t, Scalar>> next;
      for (const auto& [idx, c] : cur)
        for (const auto& [k, la] : dec[elems[s]])
          next.emplace_back(idx + k * w, S.mul(c, la));
      cur = std::move(next);
      w *= G;
    }
    FormalSum out;
    for (const auto& [idx, c] : cur) out.emplace(idx, c);
    return out;
  };
  auto tuple_of = [&](std::size_t flat) {
    std::vector<uint32_t> t(n);
    for (uint32_t s = 0; s < n; ++s) {
      t[s] = static_cast<uint32_t>(flat % G);
      flat /= G;
    }
    return t;
  };
  auto flat_of = [&](const std::vector<uint32_t>& t) {
    std::size_t flat = 0, w = 1;
    for (uint32_t s = 0; s < n; ++s) {
      flat += t[s] * w;
      w *= G;
    }
    return flat;
  };

  // Multilinearity instances: one varying slot, generator tuples elsewhere.
  bool trivial = true;
  std::vector<std::pair<FormalSum, FormalSum>> rel;
  std::size_t others = tuples / G;
  for (uint32_t s = 0; s < n; ++s)
    for (std::size_t o = 0; o < others; ++o) {
      std::vector<Elem> base(n);
      std::size_t rest = o;
      for (uint32_t k = 0; k < n; ++k) {
        if (k == s) continue;
        base[k] = reps[rest % G];
        rest /= G;
      }
      for (Elem m = 0; m < M.size(); ++m)
        for (Elem mp = 0; mp < M.size(); ++mp) {
          std::vector<Elem> lhs = base, lo = base, hi = base;
          lhs[s] = M.addf(m, mp);
          lo[s] = m;
          hi[s] = mp;
          FormalSum L = embed_tuple(lhs);
          FormalSum R = fs_add(S, embed_tuple(lo), embed_tuple(hi));
          if (L != R) {
            trivial = false;
            rel.emplace_back(std::move(L), std::move(R));
          }
        }
    }

  SymPower P;
  P.n = n;
  P.orbit_reps = reps;
  for (std::vector<uint32_t> ms(n, 0);;) {  // nondecreasing sequences, lex order
    P.multisets.push_back(ms);
    uint32_t s = n;
    while (s > 0 && ms[s - 1] == G - 1) --s;
    if (s == 0) break;
    uint32_t v = ms[s - 1] + 1;
    for (uint32_t k = s - 1; k < n; ++k) ms[k] = v;
  }
  auto multiset_slot = [&](std::vector<uint32_t> t) {
    std::sort(t.begin(), t.end());
    auto it = std::lower_bound(P.multisets.begin(), P.multisets.end(), t);
    require(it != P.multisets.end() && *it == t, "multiset missing from basis");
    return static_cast<std::size_t>(it - P.multisets.begin());
  };
  auto basis_name = [&](const std::vector<uint32_t>& t, const char* sep) {
    std::string name;
    for (uint32_t k : t) {
      if (!name.empty()) name += sep;
      name += M.names[reps[k]];
    }
    return name;
  };

  if (trivial) {
    // No collapsing relations: the power is free on the multiset basis.
    require(P.multisets.size() <= 7, "symmetric power basis too large");
    std::vector<std::string> names;
    for (const auto& ms : P.multisets) names.push_back(basis_name(ms, "*"));
    P.module = free_module(S, names);
    P.free_basis = true;
    P.pure.resize(tuples);
    for (std::size_t f = 0; f < tuples; ++f) {
      FormalSum fs = {{multiset_slot(tuple_of(f)), S.one()}};
      P.pure[f] = fs_pack(S, P.multisets.size(), fs);
    }
    return P;
  }

  require(tuples <= 6, "symmetric power carrier too large for the relation engine");
  std::vector<std::string> names;
  for (std::size_t f = 0; f < tuples; ++f) names.push_back(basis_name(tuple_of(f), "⊗"));
  FiniteStructure F = free_module(S, names);
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& [L, R] : rel)
    pairs.emplace_back(fs_pack(S, tuples, L), fs_pack(S, tuples, R));
  for (std::size_t f = 0; f < tuples; ++f) {
    std::vector<uint32_t> t = tuple_of(f);
    std::vector<uint32_t> sorted = t;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != t)
      pairs.emplace_back(fs_pack(S, tuples, {{f, S.one()}}),
                         fs_pack(S, tuples, {{flat_of(sorted), S.one()}}));
  }
  Congruence C = cong_closure(F, pairs);
  P.module = quotient_structure(F, C);
  P.free_basis = false;
  P.pure.resize(tuples);
  for (std::size_t f = 0; f < tuples; ++f)
    P.pure[f] = C.block[fs_pack(S, tuples, {{f, S.one()}})];
  return P;
}

Elem sym_multiply(const SymPower& Sa, const SymPower& Sb, const SymPower& Sab,
                  Elem u, Elem v) {
  require(Sa.free_basis && Sb.free_basis && Sab.free_basis,
          "graded multiplication needs free multiset bases");
  require(Sa.orbit_reps == Sb.orbit_reps && Sb.orbit_reps == Sab.orbit_reps,
          "graded multiplication mixes powers of different modules");
  require(Sa.n + Sb.n == Sab.n, "graded degrees do not add up");
  const Semifield& S = Sa.module.semifield();
  FormalSum fu = fs_unpack(S, Sa.multisets.size(), u);
  FormalSum fv = fs_unpack(S, Sb.multisets.size(), v);
  auto slot_in = [&](const std::vector<uint32_t>& ms) {
    auto it = std::lower_bound(Sab.multisets.begin(), Sab.multisets.end(), ms);
    require(it != Sab.multisets.end() && *it == ms, "product multiset missing");
    return static_cast<std::size_t>(it - Sab.multisets.begin());
  };
  FormalSum out;
  bool first = true;
  for (const auto& [i, c] : fu)
    for (const auto& [j, d] : fv) {
      std::vector<uint32_t> ms;
      std::merge(Sa.multisets[i].begin(), Sa.multisets[i].end(),
                 Sb.multisets[j].begin(), Sb.multisets[j].end(),
                 std::back_inserter(ms));
      FormalSum term = {{slot_in(ms), S.mul(c, d)}};
      if (first) {
        out = std::move(term);
        first = false;
      } else {
        out = fs_add(S, out, term);
        // a cancellation absorbed the sum; zero absorbs everything after it
        if (out.empty()) return Sab.module.zero;
      }
    }
  return fs_pack(S, Sab.multisets.size(), out);
}

Projectivization projectivize(const FiniteStructure& M) {
  const Semifield& S = M.semifield();
  Projectivization P;
  std::vector<uint8_t> seen(M.size(), 0);
  for (Elem a = 0; a < M.size(); ++a) {
    if (a == M.zero || seen[a]) continue;
    std::set<Elem> orb;
    for (uint32_t g = 0; g < S.unit_count(); ++g) orb.insert(M.unit_scalf(g, a));
    ProjectivePoint pt;
    pt.orbit.assign(orb.begin(), orb.end());
    for (Elem b : pt.orbit) seen[b] = 1;
    P.points.push_back(std::move(pt));
  }
  return P;
}

Projectivization projective_closure(const FiniteStructure& M) {
  const Semifield& S = M.semifield();
  FiniteStructure line = semifield_module(S);
  FiniteStructure MxF = product_module(M, line);
  Projectivization P = projectivize(MxF);
  // Product elements are indexed a * |line| + b, so the last coordinate is
  // the residue; it is invertible exactly when nonzero.
  for (auto& pt : P.points)
    pt.affine = static_cast<Elem>(pt.orbit.front() % line.size()) != line.zero;
  return P;
}

FiniteStructure function_ring_component(const FiniteStructure& M, uint32_t n) {
  if (n == 0) return semifield_module(M.semifield());
  return sym_power(dual_module(M).module, n).module;
}

FiniteStructure function_ring_graded(const FiniteStructure& M, uint32_t n) {
  FiniteStructure acc = function_ring_component(M, 0);
  for (uint32_t k = 1; k <= n; ++k)
    acc = coproduct_module(acc, function_ring_component(M, k));
  return acc;
}

}  // namespace finalg
