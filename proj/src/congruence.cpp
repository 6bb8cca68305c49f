// SPDX-License-Identifier: MIT
#include "finalg/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <utility>

#include "finalg/error.hpp"

namespace finalg {
namespace {

std::vector<uint8_t> mask_of(size_t n, const std::vector<Elem>& subset) {
  std::vector<uint8_t> m(n, 0);
  for (Elem e : subset) {
    require(e < n, "element index out of range");
    m[e] = 1;
  }
  return m;
}

bool strictly_sorted(const std::vector<Elem>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] >= v[i]) return false;
  return true;
}

// Union-find where the smaller index stays the root, so representatives are
// canonical (least member of each class).
struct UnionFind {
  std::vector<Elem> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<Elem>(i);
  }
  Elem find(Elem a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  }
  bool unite(Elem a, Elem b) {
    Elem ra = find(a), rb = find(b);
    if (ra == rb) return false;
    if (ra > rb) std::swap(ra, rb);
    parent[rb] = ra;
    return true;
  }
};

// Partition from an arbitrary equal-key grouping, with dense block ids in
// order of first appearance.
Congruence partition_from(const std::vector<Elem>& key,
                          std::vector<std::pair<Elem, Elem>> gens) {
  Congruence C;
  C.block.assign(key.size(), 0);
  std::map<Elem, Elem> seen;
  for (size_t a = 0; a < key.size(); ++a) {
    auto it = seen.emplace(key[a], static_cast<Elem>(seen.size())).first;
    C.block[a] = it->second;
  }
  C.block_count = static_cast<uint32_t>(seen.size());
  C.generators = std::move(gens);
  return C;
}

// (least member, other member) pairs for every block; their closure inside
// any congruence containing them reproduces the partition exactly.
std::vector<std::pair<Elem, Elem>> canonical_generators(const Congruence& C) {
  std::vector<Elem> rep(C.block_count, 0);
  std::vector<uint8_t> seen(C.block_count, 0);
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < C.block.size(); ++a) {
    Elem b = C.block[a];
    if (!seen[b]) {
      seen[b] = 1;
      rep[b] = a;
    } else {
      out.emplace_back(rep[b], a);
    }
  }
  return out;
}

// Partition by the signature "which of these filters contain the element".
// Two elements land in one block exactly when no filter separates them.
Congruence signature_partition(size_t n, const std::vector<Filter>& filters) {
  std::vector<std::vector<uint8_t>> sig(n,
                                        std::vector<uint8_t>(filters.size(), 0));
  for (size_t f = 0; f < filters.size(); ++f)
    for (Elem e : filters[f]) {
      require(e < n, "filter element out of range");
      sig[e][f] = 1;
    }
  std::map<std::vector<uint8_t>, Elem> first;
  std::vector<Elem> key(n);
  for (Elem a = 0; a < n; ++a) {
    auto it = first.emplace(sig[a], a).first;
    key[a] = it->second;
  }
  return partition_from(key, {});
}

}  // namespace

// ---- ideals -----------------------------------------------------------------

bool is_ideal(const FiniteStructure& M, const Ideal& I) {
  require(strictly_sorted(I), "ideal element list must be strictly sorted");
  const size_t n = M.size();
  auto in = mask_of(n, I);
  if (!in[M.zero]) return false;
  const Semifield& S = M.semifield();
  for (Elem a : I) {
    for (Elem m = 0; m < n; ++m)
      if (!in[M.addf(a, m)]) return false;
    for (uint32_t g = 0; g < S.unit_count(); ++g)
      if (!in[M.unit_scalf(g, a)]) return false;
  }
  return true;
}

bool is_algebra_ideal(const FiniteStructure& A, const Ideal& I) {
  require(A.is_algebra(), "not an algebra");
  if (!is_ideal(A, I)) return false;
  auto in = mask_of(A.size(), I);
  for (Elem a : I)
    for (Elem c = 0; c < A.size(); ++c)
      if (!in[A.mulf(c, a)] || !in[A.mulf(a, c)]) return false;
  return true;
}

// ---- congruences --------------------------------------------------------------

std::vector<std::vector<Elem>> congruence_blocks(const Congruence& C) {
  std::vector<std::vector<Elem>> out(C.block_count);
  for (Elem a = 0; a < C.block.size(); ++a) out[C.block[a]].push_back(a);
  return out;
}

bool is_congruence(const FiniteStructure& M, const Congruence& C) {
  const size_t n = M.size();
  require(C.block.size() == n, "congruence carrier size mismatch");
  for (Elem a = 0; a < n; ++a)
    require(C.block[a] < C.block_count, "block id out of range");
  const Semifield& S = M.semifield();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) {
      if (!C.related(a, b)) continue;
      if (!C.related(M.negf(a), M.negf(b))) return false;
      for (uint32_t g = 0; g < S.unit_count(); ++g)
        if (!C.related(M.unit_scalf(g, a), M.unit_scalf(g, b))) return false;
      for (Elem c = 0; c < n; ++c) {
        if (!C.related(M.addf(a, c), M.addf(b, c))) return false;
        if (M.is_algebra() &&
            (!C.related(M.mulf(a, c), M.mulf(b, c)) ||
             !C.related(M.mulf(c, a), M.mulf(c, b))))
          return false;
      }
    }
  return true;
}

bool congruence_leq(const Congruence& C1, const Congruence& C2) {
  require(C1.block.size() == C2.block.size(),
          "congruence carrier size mismatch");
  std::vector<std::optional<Elem>> image(C1.block_count);
  for (Elem a = 0; a < C1.block.size(); ++a) {
    auto& slot = image[C1.block[a]];
    if (!slot)
      slot = C2.block[a];
    else if (*slot != C2.block[a])
      return false;
  }
  return true;
}

Congruence cong_closure(const FiniteStructure& M,
                        const std::vector<std::pair<Elem, Elem>>& pairs) {
  const size_t n = M.size();
  const Semifield& S = M.semifield();
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work;
  for (auto [a, b] : pairs) {
    require(a < n && b < n, "pair element out of range");
    work.emplace_back(a, b);
  }
  while (!work.empty()) {
    auto [a, b] = work.front();
    work.pop_front();
    if (!uf.unite(a, b)) continue;
    work.emplace_back(M.negf(a), M.negf(b));
    for (uint32_t g = 0; g < S.unit_count(); ++g)
      work.emplace_back(M.unit_scalf(g, a), M.unit_scalf(g, b));
    for (Elem c = 0; c < n; ++c) {
      work.emplace_back(M.addf(a, c), M.addf(b, c));
      if (M.is_algebra()) {
        work.emplace_back(M.mulf(a, c), M.mulf(b, c));
        work.emplace_back(M.mulf(c, a), M.mulf(c, b));
      }
    }
  }
  std::vector<Elem> key(n);
  for (Elem a = 0; a < n; ++a) key[a] = uf.find(a);
  return partition_from(key, pairs);
}

Congruence cong_closure_naive(const FiniteStructure& M,
                              const std::vector<std::pair<Elem, Elem>>& pairs) {
  const size_t n = M.size();
  const Semifield& S = M.semifield();
  std::vector<uint8_t> R(n * n, 0);
  auto rel = [&](Elem a, Elem b) -> uint8_t& { return R[a * n + b]; };
  for (Elem a = 0; a < n; ++a) rel(a, a) = 1;
  for (auto [a, b] : pairs) {
    require(a < n && b < n, "pair element out of range");
    rel(a, b) = 1;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto put = [&](Elem a, Elem b) {
      if (!rel(a, b)) {
        rel(a, b) = 1;
        changed = true;
      }
    };
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (!rel(a, b)) continue;
        put(b, a);
        for (Elem c = 0; c < n; ++c)
          if (rel(b, c)) put(a, c);
        put(M.negf(a), M.negf(b));
        for (uint32_t g = 0; g < S.unit_count(); ++g)
          put(M.unit_scalf(g, a), M.unit_scalf(g, b));
        for (Elem c = 0; c < n; ++c) {
          put(M.addf(a, c), M.addf(b, c));
          if (M.is_algebra()) {
            put(M.mulf(a, c), M.mulf(b, c));
            put(M.mulf(c, a), M.mulf(c, b));
          }
        }
      }
  }
  std::vector<Elem> key(n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (rel(a, b)) {
        key[a] = b;  // least related element, since b runs upward
        break;
      }
  return partition_from(key, pairs);
}

// ---- kernels and quotients ----------------------------------------------------

KernelReport kernel(const FiniteStructure& M, const Congruence& C) {
  require(C.block.size() == M.size(), "congruence carrier size mismatch");
  KernelReport out;
  for (Elem a = 0; a < M.size(); ++a)
    if (C.related(a, M.zero)) out.ideal.push_back(a);
  out.is_trivial = out.ideal.size() == 1;
  require(is_ideal(M, out.ideal),
          "block of zero is not an ideal; the relation is not a congruence");
  return out;
}

FiniteStructure quotient_structure(const FiniteStructure& M,
                                   const Congruence& C) {
  require(is_congruence(M, C), "the relation is not a congruence of the carrier");
  const size_t n = M.size();
  const size_t q = C.block_count;
  std::vector<Elem> rep(q, 0);
  std::vector<uint8_t> seen(q, 0);
  for (Elem a = 0; a < n; ++a)
    if (!seen[C.block[a]]) {
      seen[C.block[a]] = 1;
      rep[C.block[a]] = a;
    }
  const Semifield& S = M.semifield();
  FiniteStructure Q;
  Q.sf = M.sf;
  Q.zero = C.block[M.zero];
  for (size_t b = 0; b < q; ++b) Q.names.push_back(M.names[rep[b]]);
  Q.add.assign(q * q, 0);
  Q.neg.resize(q);
  Q.scal.assign(S.unit_count() * q, 0);
  for (Elem b1 = 0; b1 < q; ++b1) {
    Q.neg[b1] = C.block[M.negf(rep[b1])];
    for (uint32_t g = 0; g < S.unit_count(); ++g)
      Q.scal[g * q + b1] = C.block[M.unit_scalf(g, rep[b1])];
    for (Elem b2 = 0; b2 < q; ++b2)
      Q.add[b1 * q + b2] = C.block[M.addf(rep[b1], rep[b2])];
  }
  if (M.is_algebra()) {
    Q.one = C.block[*M.one];
    Q.mul.assign(q * q, 0);
    for (Elem b1 = 0; b1 < q; ++b1)
      for (Elem b2 = 0; b2 < q; ++b2)
        Q.mul[b1 * q + b2] = C.block[M.mulf(rep[b1], rep[b2])];
  }
  AxiomReport rpt = check_axioms(Q);
  require(rpt.ok, "quotient failed the axiom suite: " +
                      (rpt.failures.empty() ? std::string("unknown")
                                            : rpt.failures.front().law));
  return Q;
}

// ---- maximal congruences via filters -------------------------------------------

Congruence minimal_congruence(const FiniteStructure& M, const Ideal& I) {
  if (M.is_algebra())
    require(is_algebra_ideal(M, I), "not an algebra ideal");
  else
    require(is_ideal(M, I), "not an ideal");
  auto in = mask_of(M.size(), I);
  std::vector<Elem> key(M.size());
  for (Elem a = 0; a < M.size(); ++a) key[a] = in[a] ? I.front() : a;
  std::vector<std::pair<Elem, Elem>> gens;
  for (size_t i = 1; i < I.size(); ++i) gens.emplace_back(I.front(), I[i]);
  Congruence C = partition_from(key, std::move(gens));
  require(is_congruence(M, C), "ideal collapse violated the congruence laws");
  return C;
}

Congruence max_congruence_module(const FiniteStructure& M0, const Ideal& I) {
  require(is_ideal(M0, I), "not an ideal");
  const FiniteStructure M = module_reduct(M0);
  auto filters = maximal_filters_avoiding(M, I);
  Congruence C = signature_partition(M.size(), filters);
  C.generators = canonical_generators(C);
  KernelReport ker = kernel(M, C);
  require(ker.ideal == I, "maximal-congruence kernel does not match the ideal");
  FiniteStructure Q = quotient_structure(M, C);
  require(is_separable(Q), "maximal-congruence quotient is not separable");
  return C;
}

Congruence max_congruence_algebra(const FiniteStructure& A, const Ideal& I) {
  require(A.is_algebra(), "not an algebra");
  require(is_algebra_ideal(A, I), "not an algebra ideal");
  auto filters = quasimaximal_filters_avoiding(A, I);
  Congruence C = signature_partition(A.size(), filters);
  C.generators = canonical_generators(C);
  KernelReport ker = kernel(A, C);
  require(ker.ideal == I, "maximal-congruence kernel does not match the ideal");
  FiniteStructure Q = quotient_structure(A, C);
  require(is_quasiseparable(Q),
          "maximal-congruence quotient is not quasiseparable");
  return C;
}

std::vector<Filter> quasimaximal_filters_avoiding(const FiniteStructure& A,
                                                  const Ideal& avoid) {
  require(A.is_algebra(), "not an algebra");
  const size_t n = A.size();
  auto bad = mask_of(n, avoid);
  auto maximal = maximal_filters_avoiding(A, avoid);
  std::set<Filter> out;
  for (const Filter& F : maximal) {
    auto inF = mask_of(n, F);
    for (Elem a = 0; a < n; ++a) {
      Filter phi;
      for (Elem x = 0; x < n; ++x)
        if (inF[A.mulf(a, x)]) phi.push_back(x);
      if (phi.empty()) continue;
      require(is_filter(A, phi), "division preimage violated the filter laws");
      for (Elem x : phi)
        require(!bad[x], "division preimage meets the avoided set");
      out.insert(std::move(phi));
    }
  }
  return {out.begin(), out.end()};
}

bool is_separable(const FiniteStructure& M) {
  auto filters = maximal_filters_avoiding(M, {M.zero});
  return signature_partition(M.size(), filters).is_diagonal();
}

bool is_quasiseparable(const FiniteStructure& A) {
  auto filters = quasimaximal_filters_avoiding(A, {A.zero});
  return signature_partition(A.size(), filters).is_diagonal();
}

// ---- annihilators ---------------------------------------------------------------

Congruence ann_congruence(const FiniteStructure& A, const Congruence& C,
                          Elem a) {
  require(A.is_algebra(), "not an algebra");
  require(C.block.size() == A.size(), "congruence carrier size mismatch");
  require(a < A.size(), "element out of range");
  require(is_congruence(A, C), "the base relation is not a congruence");
  std::vector<Elem> key(A.size());
  for (Elem b = 0; b < A.size(); ++b) key[b] = C.block[A.mulf(a, b)];
  Congruence out = partition_from(key, {});
  out.generators = canonical_generators(out);
  require(is_congruence(A, out), "annihilator relation violated the laws");
  require(congruence_leq(C, out),
          "annihilator congruence must contain the base congruence");
  return out;
}

// ---- the congruence lattice ------------------------------------------------------

std::vector<Congruence> enumerate_congruences(const FiniteStructure& M) {
  const size_t n = M.size();
  std::map<std::vector<Elem>, Congruence> found;
  std::deque<std::vector<Elem>> fresh;
  auto insert = [&](Congruence C) {
    if (found.count(C.block)) return;
    std::vector<Elem> key = C.block;
    found.emplace(key, std::move(C));
    fresh.push_back(std::move(key));
    require(found.size() <= 100000, "congruence lattice too large to enumerate");
  };
  insert(cong_closure(M, {}));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b) insert(cong_closure(M, {{a, b}}));
  while (!fresh.empty()) {
    std::vector<Elem> key = fresh.front();
    fresh.pop_front();
    std::vector<std::vector<Elem>> against;
    against.reserve(found.size());
    for (const auto& [k, C] : found) against.push_back(k);
    const Congruence& C1 = found.at(key);
    for (const auto& k2 : against) {
      const Congruence& C2 = found.at(k2);
      if (congruence_leq(C1, C2) || congruence_leq(C2, C1)) continue;
      auto gens = canonical_generators(C1);
      auto more = canonical_generators(C2);
      gens.insert(gens.end(), more.begin(), more.end());
      insert(cong_closure(M, gens));
    }
  }
  std::vector<Congruence> out;
  out.reserve(found.size());
  for (auto& [k, C] : found) out.push_back(std::move(C));
  return out;
}

// ---- semifields as carriers --------------------------------------------------------

std::optional<Elem> SemifieldCarrier::index(Scalar a) const {
  require(a.sf == sf, "scalar from a different semifield");
  if (a.zero) return Elem{0};
  if (!semifield().has_free_slot()) return Elem{1 + a.g};
  if (a.e < -bound || a.e > bound) return std::nullopt;
  const uint32_t w = static_cast<uint32_t>(2 * bound + 1);
  return Elem{1 + a.g * w + static_cast<uint32_t>(a.e + bound)};
}

SemifieldCarrier semifield_carrier(const Semifield& S, int32_t bound) {
  SemifieldCarrier F;
  F.sf = S.id();
  if (S.has_free_slot()) {
    require(bound >= 1, "semifields with a free generator need an exponent bound");
    F.bound = bound;
    F.elems.push_back(S.zero());
    for (uint32_t g = 0; g < S.unit_count(); ++g)
      for (int32_t e = -bound; e <= bound; ++e) F.elems.push_back(S.unit(g, e));
  } else {
    require(bound == 0, "finite semifields take no exponent bound");
    F.elems = S.elements();
  }
  return F;
}

Congruence field_max_congruence(const SemifieldCarrier& F) {
  const Semifield& S = F.semifield();
  const size_t n = F.size();
  UnionFind uf(n);
  for (Elem i = 1; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j)
      if (!S.add(F.elems[i], F.elems[j]).zero) uf.unite(i, j);
  std::vector<Elem> key(n);
  for (Elem i = 0; i < n; ++i) key[i] = uf.find(i);
  Congruence C = partition_from(key, {});
  C.generators = canonical_generators(C);

  // The defining relation must already be transitive, must keep zero alone,
  // and must be compatible with the operations.  Additions never leave the
  // exponent window, so those checks are exact; multiplicative checks are
  // restricted to products that land inside the window.
  for (Elem i = 1; i < n; ++i) {
    require(!C.related(0, i), "field congruence kernel must be trivial");
    for (Elem j = 1; j < n; ++j)
      require(C.related(i, j) == !S.add(F.elems[i], F.elems[j]).zero,
              "the nonzero-sum relation is not transitive");
  }
  require(C.block_count >= 2, "field congruence must be proper");
  for (Elem i = 1; i < n; ++i)
    for (Elem j = static_cast<Elem>(i + 1); j < n; ++j) {
      if (!C.related(i, j)) continue;
      Scalar a = F.elems[i], b = F.elems[j];
      auto na = F.index(S.neg(a)), nb = F.index(S.neg(b));
      require(na && nb && C.related(*na, *nb),
              "field congruence not closed under negation");
      for (Elem k = 0; k < n; ++k) {
        Scalar c = F.elems[k];
        auto sa = F.index(S.add(a, c)), sb = F.index(S.add(b, c));
        require(sa && sb, "addition left the carrier window");
        require(C.related(*sa, *sb),
                "field congruence not closed under addition");
        auto ma = F.index(S.mul(a, c)), mb = F.index(S.mul(b, c));
        if (ma && mb)
          require(C.related(*ma, *mb),
                  "field congruence not closed under multiplication");
      }
    }
  return C;
}

std::vector<Elem> unit_class_generated(const SemifieldCarrier& F, Scalar x) {
  const Semifield& S = F.semifield();
  require(x.sf == F.sf, "scalar from a different semifield");
  require(!x.zero, "x must be nonzero");
  auto xi = F.index(x);
  require(xi.has_value(), "x lies outside the carrier window");
  const size_t n = F.size();
  const Elem one = *F.index(S.one());

  // Closure side: the congruence generated by (x, 1), closed over the
  // carrier.  Sums stay inside the window; products are followed only while
  // both sides stay inside, which can only shrink the computed class.
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work{{*xi, one}};
  while (!work.empty()) {
    auto [i, j] = work.front();
    work.pop_front();
    if (!uf.unite(i, j)) continue;
    Scalar a = F.elems[i], b = F.elems[j];
    auto push = [&](Scalar p, Scalar q) {
      auto pi = F.index(p), qi = F.index(q);
      if (pi && qi) work.emplace_back(*pi, *qi);
    };
    push(S.neg(a), S.neg(b));
    for (Elem k = 0; k < n; ++k) {
      Scalar c = F.elems[k];
      push(S.add(a, c), S.add(b, c));
      push(S.mul(a, c), S.mul(b, c));
    }
  }
  std::vector<Elem> closure_class;
  for (Elem i = 0; i < n; ++i)
    if (uf.find(i) == uf.find(one)) closure_class.push_back(i);

  // Formula side: values of polynomial expressions sum(lambda_i x^i), i >= 1,
  // tracked together with the value of sum(lambda_i).  Evaluated in a carrier
  // with two extra exponent steps of headroom so in-window quotients are not
  // missed to intermediate values that brush the edge of the window.
  const SemifieldCarrier H =
      S.has_free_slot() ? semifield_carrier(S, F.bound + 2) : F;
  const size_t m = H.size();
  std::vector<Scalar> powers;
  {
    Scalar p = x;
    while (H.index(p).has_value() &&
           std::find(powers.begin(), powers.end(), p) == powers.end()) {
      powers.push_back(p);
      p = S.mul(p, x);
    }
  }
  std::set<std::pair<Elem, Elem>> states;  // (value, coefficient sum) in H
  std::deque<std::pair<Elem, Elem>> queue;
  auto add_state = [&](Scalar v, Scalar s) {
    auto vi = H.index(v), si = H.index(s);
    if (!vi || !si) return;
    auto st = std::make_pair(*vi, *si);
    if (states.insert(st).second) queue.push_back(st);
  };
  for (Elem u = 1; u < m; ++u)
    for (Scalar p : powers) add_state(S.mul(H.elems[u], p), H.elems[u]);
  while (!queue.empty()) {
    auto [vi, si] = queue.front();
    queue.pop_front();
    Scalar v = H.elems[vi], s = H.elems[si];
    for (Elem u = 1; u < m; ++u)
      for (Scalar p : powers)
        add_state(S.add(v, S.mul(H.elems[u], p)), S.add(s, H.elems[u]));
  }
  std::vector<Scalar> numerators;
  const Elem hone = *H.index(S.one());
  for (auto [vi, si] : states)
    if (si == hone) numerators.push_back(H.elems[vi]);
  std::set<Elem> formula;
  for (Scalar nv : numerators)
    for (Scalar dv : numerators) {
      if (dv.zero) continue;
      if (auto qi = F.index(S.mul(nv, S.inverse(dv)))) formula.insert(*qi);
    }

  // A zero quotient means (0, 1) is derivable, so the congruence is improper
  // and the class of 1 is everything; otherwise the two sides must agree.
  std::vector<Elem> result;
  if (formula.count(Elem{0})) {
    require(closure_class.size() == n,
            "formula reached zero but the closure stayed proper");
    result = closure_class;
  } else {
    std::vector<Elem> fo(formula.begin(), formula.end());
    require(fo == closure_class, "closure and formula classes disagree");
    result = std::move(fo);
  }

  // The class of 1 is closed under products, quotients, and unit-coefficient
  // combinations whose coefficients sum to 1, within the carrier window.
  std::vector<uint8_t> in_result(n, 0);
  for (Elem r : result) in_result[r] = 1;
  for (Elem i : result)
    for (Elem j : result) {
      Scalar a = F.elems[i], b = F.elems[j];
      if (auto k = F.index(S.mul(a, b)))
        require(in_result[*k], "class of 1 not closed under products");
      if (!b.zero)
        if (auto k = F.index(S.mul(a, S.inverse(b))))
          require(in_result[*k], "class of 1 not closed under quotients");
    }
  for (Elem li = 1; li < n; ++li)
    for (Elem mi = 1; mi < n; ++mi) {
      Scalar l = F.elems[li], mu = F.elems[mi];
      if (!(S.add(l, mu) == S.one())) continue;
      for (Elem i : result)
        for (Elem j : result) {
          Scalar v = S.add(S.mul(l, F.elems[i]), S.mul(mu, F.elems[j]));
          if (auto k = F.index(v))
            require(in_result[*k],
                    "class of 1 not closed under unit combinations");
        }
    }
  return result;
}

}  // namespace finalg
