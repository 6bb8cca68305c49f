// SPDX-License-Identifier: MIT
#include "finalg/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace finalg {

std::optional<Elem> FiniteStructure::index_of(const std::string& name) const {
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

// ---- axiom checking --------------------------------------------------------

namespace {

struct Checker {
  const FiniteStructure& M;
  AxiomReport report;

  void fail(std::string law, std::initializer_list<Elem> elems,
            std::string scalar_note = "") {
    report.ok = false;
    if (report.failures.size() >= 64) return;  // keep reports readable
    AxiomFailure f;
    f.law = std::move(law);
    for (Elem e : elems) f.witness.push_back(M.names[e]);
    if (!scalar_note.empty()) f.witness.push_back(scalar_note);
    report.failures.push_back(std::move(f));
  }

  bool check(bool cond, const char* law, std::initializer_list<Elem> elems,
             std::string scalar_note = "") {
    if (!cond) fail(law, elems, std::move(scalar_note));
    return cond;
  }
};

}  // namespace

AxiomReport check_axioms(const FiniteStructure& M) {
  const Semifield& S = M.semifield();
  require(S.is_finite(), "structures require a finite scalar semifield");
  const size_t n = M.size();
  require(M.add.size() == n * n && M.neg.size() == n &&
              M.scal.size() == S.unit_count() * n &&
              (M.mul.empty() || M.mul.size() == n * n),
          "structure tables have wrong sizes");
  for (Elem v : M.add) require(v < n, "add table entry out of range");
  for (Elem v : M.neg) require(v < n, "neg table entry out of range");
  for (Elem v : M.scal) require(v < n, "scalar table entry out of range");
  for (Elem v : M.mul) require(v < n, "mul table entry out of range");

  Checker c{M, {}};
  const Elem z = M.zero;
  auto units = S.units();

  for (Elem a = 0; a < n; ++a) {
    c.check(M.addf(a, a) == a, "add-idempotent", {a});
    c.check(M.addf(a, z) == z, "zero-absorbing", {a});
    c.check(M.addf(z, a) == z, "zero-absorbing", {a});
    c.check(M.addf(a, M.negf(a)) == z, "negation-cancels", {a});
    c.check(M.negf(M.negf(a)) == a, "negation-involution", {a});
    c.check(M.scalf(S.one(), a) == a, "scalar-one-identity", {a});
    c.check(M.scalf(S.minus_one(), a) == M.negf(a), "scalar-minus-one-is-negation",
            {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      c.check(M.addf(a, b) == M.addf(b, a), "add-commutative", {a, b});
  for (Elem a = 0; a < n && c.report.failures.size() < 16; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem d = 0; d < n; ++d)
        if (!c.check(M.addf(M.addf(a, b), d) == M.addf(a, M.addf(b, d)),
                     "add-associative", {a, b, d}))
          goto add_assoc_done;
add_assoc_done:;

  for (auto u : units) {
    std::string us = S.to_string(u);
    for (auto v : units) {
      std::string uvs = us + "," + S.to_string(v);
      for (Elem a = 0; a < n; ++a) {
        c.check(M.scalf(u, M.scalf(v, a)) == M.scalf(S.mul(u, v), a),
                "scalar-associative", {a}, uvs);
        c.check(M.scalf(S.add(u, v), a) == M.addf(M.scalf(u, a), M.scalf(v, a)),
                "scalar-adds-to-sum", {a}, uvs);
      }
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        c.check(M.scalf(u, M.addf(a, b)) == M.addf(M.scalf(u, a), M.scalf(u, b)),
                "scalar-distributes", {a, b}, us);
  }

  if (M.is_algebra()) {
    require(M.one.has_value(), "algebra requires a designated one");
    const Elem e1 = *M.one;
    for (Elem a = 0; a < n; ++a) {
      c.check(M.mulf(e1, a) == a, "one-identity", {a});
      c.check(M.mulf(a, e1) == a, "one-identity", {a});
      c.check(M.mulf(a, z) == z, "mul-zero", {a});
      c.check(M.mulf(z, a) == z, "mul-zero", {a});
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        c.check(M.mulf(a, b) == M.mulf(b, a), "mul-commutative", {a, b});
    for (Elem a = 0; a < n && c.report.failures.size() < 16; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem d = 0; d < n; ++d) {
          c.check(M.mulf(M.mulf(a, b), d) == M.mulf(a, M.mulf(b, d)),
                  "mul-associative", {a, b, d});
          c.check(M.mulf(a, M.addf(b, d)) == M.addf(M.mulf(a, b), M.mulf(a, d)),
                  "mul-distributes", {a, b, d});
        }
    for (auto u : units)
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          c.check(M.scalf(u, M.mulf(a, b)) == M.mulf(M.scalf(u, a), b),
                  "scalar-mul-compatible", {a, b}, S.to_string(u));
  } else {
    require(!M.one.has_value(), "one designated without a mul table");
  }

  return c.report;
}

// ---- raw table input and completion ----------------------------------------

namespace {

constexpr Elem kUnset = UINT32_MAX;

struct PartialTable {
  size_t n;
  std::vector<Elem> cell;  // n*n, kUnset when not specified

  explicit PartialTable(size_t n_) : n(n_), cell(n_ * n_, kUnset) {}
  Elem get(Elem a, Elem b) const { return cell[a * n + b]; }
  // Sets (a, b) and (b, a); reports a conflict with the existing value.
  bool set_sym(Elem a, Elem b, Elem v) {
    Elem& x = cell[a * n + b];
    Elem& y = cell[b * n + a];
    if (x != kUnset && x != v) return false;
    if (y != kUnset && y != v) return false;
    x = y = v;
    return true;
  }
};

}  // namespace

BuildOutcome build_structure(const RawStructure& raw) {
  const Semifield& S = Semifield::by_id(raw.sf);
  require(S.is_finite(), "structures require a finite scalar semifield");
  const size_t n = raw.names.size();
  require(n >= 1, "structure needs at least one element");
  std::map<std::string, Elem> index;
  for (size_t i = 0; i < n; ++i) {
    require(!raw.names[i].empty(), "empty element name");
    require(index.emplace(raw.names[i], static_cast<Elem>(i)).second,
            "duplicate element name: " + raw.names[i]);
  }
  auto look = [&](const std::string& s) -> Elem {
    auto it = index.find(s);
    require(it != index.end(), "unknown element name: " + s);
    return it->second;
  };

  FiniteStructure M;
  M.sf = raw.sf;
  M.names = raw.names;
  M.zero = look(raw.zero);
  const Elem z = M.zero;

  // negation table first: needed to seed a + (-a) = 0 and derive scalars
  M.neg.assign(n, kUnset);
  M.neg[z] = z;
  for (const auto& [a, b] : raw.neg_rows) {
    Elem ia = look(a), ib = look(b);
    require(M.neg[ia] == kUnset || M.neg[ia] == ib,
            "conflicting negation for " + a);
    M.neg[ia] = ib;
    require(M.neg[ib] == kUnset || M.neg[ib] == ia,
            "conflicting negation for " + b);
    M.neg[ib] = ia;
  }
  for (size_t i = 0; i < n; ++i)
    require(M.neg[i] != kUnset,
            "negation not specified for " + raw.names[i]);

  // addition: seed axiom cells, then user rows, then optional completion
  PartialTable add(n);
  for (Elem a = 0; a < n; ++a) {
    if (!add.set_sym(a, a, a) || !add.set_sym(a, z, z) ||
        !add.set_sym(a, M.neg[a], z)) {
      return {std::nullopt,
              {false,
               {{"axiom-seed-conflict", {raw.names[a]}}}}};
    }
  }
  for (const auto& [a, b, v] : raw.add_rows) {
    Elem ia = look(a), ib = look(b), iv = look(v);
    if (!add.set_sym(ia, ib, iv)) {
      return {std::nullopt,
              {false, {{"conflicting-sum", {a, b, v, raw.names[add.get(ia, ib)]}}}}};
    }
  }

  if (raw.complete_associative) {
    // Unspecified cells read as zero; associativity promotes a defaulted cell
    // to the value the other association forces.  An explicit disagreement is
    // a hard conflict with the witness triple.
    auto read = [&](Elem a, Elem b) {
      Elem v = add.get(a, b);
      return v == kUnset ? z : v;
    };
    bool changed = true;
    while (changed) {
      changed = false;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
          for (Elem d = 0; d < n; ++d) {
            Elem ab = read(a, b), bd = read(b, d);
            Elem lhs = read(ab, d), rhs = read(a, bd);
            if (lhs == rhs) continue;
            bool lhs_default = add.get(ab, d) == kUnset;
            bool rhs_default = add.get(a, bd) == kUnset;
            if (lhs_default && !rhs_default) {
              add.set_sym(ab, d, rhs);
              changed = true;
            } else if (rhs_default && !lhs_default) {
              add.set_sym(a, bd, lhs);
              changed = true;
            } else {
              return {std::nullopt,
                      {false,
                       {{"associativity-conflict",
                         {raw.names[a], raw.names[b], raw.names[d]}}}}};
            }
          }
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        if (add.get(a, b) == kUnset) add.set_sym(a, b, z);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      require(add.get(a, b) != kUnset, "sum not specified: " + raw.names[a] +
                                           " + " + raw.names[b]);
  M.add = add.cell;

  // scalar action: unit rows; 1 acts as identity, -1 as negation; everything
  // else must be given explicitly
  M.scal.assign(S.unit_count() * n, kUnset);
  for (Elem a = 0; a < n; ++a) {
    M.scal[0 * n + a] = a;  // unit index 0 is one
    M.scal[S.minus_one_g() * n + a] = M.neg[a];
  }
  for (const auto& [s, a, b] : raw.scalar_rows) {
    require(s.sf == raw.sf, "scalar row uses the wrong semifield");
    require(!s.zero, "scalar rows must use units (zero action is fixed)");
    Elem ia = look(a), ib = look(b);
    Elem& cellv = M.scal[s.g * n + ia];
    require(cellv == kUnset || cellv == ib,
            "conflicting scalar action on " + a);
    cellv = ib;
  }
  for (uint32_t g = 0; g < S.unit_count(); ++g)
    for (Elem a = 0; a < n; ++a)
      require(M.scal[g * n + a] != kUnset,
              "scalar action not specified for unit index " +
                  std::to_string(g) + " on " + raw.names[a]);

  // multiplication (algebra) rows
  if (raw.one.has_value() || !raw.mul_rows.empty()) {
    require(raw.one.has_value(), "mul rows without a designated one");
    M.one = look(*raw.one);
    PartialTable mul(n);
    const Elem e1 = *M.one;
    for (Elem a = 0; a < n; ++a) {
      bool ok = mul.set_sym(a, e1, a) && mul.set_sym(a, z, z);
      require(ok, "conflicting unit/zero product rows");
    }
    for (const auto& [a, b, v] : raw.mul_rows) {
      Elem ia = look(a), ib = look(b), iv = look(v);
      if (!mul.set_sym(ia, ib, iv)) {
        return {std::nullopt,
                {false,
                 {{"conflicting-product",
                   {a, b, v, raw.names[mul.get(ia, ib)]}}}}};
      }
    }
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        require(mul.get(a, b) != kUnset, "product not specified: " +
                                             raw.names[a] + " * " +
                                             raw.names[b]);
    M.mul = mul.cell;
  }

  AxiomReport rep = check_axioms(M);
  if (!rep.ok) return {std::nullopt, std::move(rep)};
  return {std::move(M), std::move(rep)};
}

// ---- fixture builders --------------------------------------------------------

FiniteStructure semifield_module(const Semifield& S) {
  require(S.is_finite(), "cannot tabulate an infinite semifield");
  auto els = S.elements();
  const size_t n = els.size();
  FiniteStructure M;
  M.sf = S.id();
  for (auto& e : els) M.names.push_back(S.to_string(e));
  M.zero = 0;
  M.one = 1;  // elements() lists zero then units in index order; unit 0 is one
  M.add.resize(n * n);
  M.mul.resize(n * n);
  M.neg.resize(n);
  M.scal.resize(S.unit_count() * n);
  auto idx = [&](Scalar v) -> Elem {
    return v.zero ? 0 : static_cast<Elem>(1 + v.g);
  };
  for (size_t a = 0; a < n; ++a) {
    M.neg[a] = idx(S.neg(els[a]));
    for (size_t b = 0; b < n; ++b) {
      M.add[a * n + b] = idx(S.add(els[a], els[b]));
      M.mul[a * n + b] = idx(S.mul(els[a], els[b]));
    }
  }
  for (uint32_t g = 0; g < S.unit_count(); ++g)
    for (size_t a = 0; a < n; ++a)
      M.scal[g * n + a] = idx(S.mul(S.unit(g), els[a]));
  return M;
}

FiniteStructure polygon_module(uint32_t n) {
  require(n >= 2, "polygon needs n >= 2");
  const uint32_t m = 2 * n;           // number of vertices / edges
  const size_t sz = 1 + 2 * m;        // 0, v_0..v_{m-1}, e_0..e_{m-1}
  const auto& S = Semifield::finfinity();
  FiniteStructure M;
  M.sf = S.id();
  M.names.push_back("0");
  for (uint32_t i = 0; i < m; ++i) M.names.push_back("v" + std::to_string(i));
  for (uint32_t i = 0; i < m; ++i) M.names.push_back("e" + std::to_string(i));
  M.zero = 0;
  auto V = [&](uint32_t i) { return static_cast<Elem>(1 + (i % m)); };
  auto E = [&](uint32_t i) { return static_cast<Elem>(1 + m + (i % m)); };

  M.add.assign(sz * sz, 0);
  for (size_t a = 0; a < sz; ++a) M.add[a * sz + a] = static_cast<Elem>(a);
  M.add[0 * sz + 0] = 0;
  for (size_t a = 0; a < sz; ++a) M.add[a * sz + 0] = M.add[0 * sz + a] = 0;
  for (uint32_t i = 0; i < m; ++i) {
    // v_i + v_{i+1} = e_i and the incidence sums forced by associativity
    M.add[V(i) * sz + V(i + 1)] = E(i);
    M.add[V(i + 1) * sz + V(i)] = E(i);
    M.add[V(i) * sz + E(i)] = E(i);
    M.add[E(i) * sz + V(i)] = E(i);
    M.add[V(i + 1) * sz + E(i)] = E(i);
    M.add[E(i) * sz + V(i + 1)] = E(i);
  }
  M.neg.resize(sz);
  M.neg[0] = 0;
  for (uint32_t i = 0; i < m; ++i) {
    M.neg[V(i)] = V(i + n);
    M.neg[E(i)] = E(i + n);
  }
  M.scal.resize(2 * sz);
  for (size_t a = 0; a < sz; ++a) {
    M.scal[0 * sz + a] = static_cast<Elem>(a);
    M.scal[1 * sz + a] = M.neg[a];
  }
  return M;
}

FiniteStructure nil2_algebra() {
  const auto& S = Semifield::finfinity();
  FiniteStructure M;
  M.sf = S.id();
  M.names = {"0", "1", "-1", "x", "-x"};
  M.zero = 0;
  M.one = 1;
  const size_t n = 5;
  M.add.assign(n * n, 0);
  for (size_t a = 0; a < n; ++a) M.add[a * n + a] = static_cast<Elem>(a);
  M.add[0] = 0;  // every distinct pair sums to zero; only the diagonal stays
  M.neg = {0, 2, 1, 4, 3};
  M.scal.resize(2 * n);
  for (size_t a = 0; a < n; ++a) {
    M.scal[0 * n + a] = static_cast<Elem>(a);
    M.scal[1 * n + a] = M.neg[a];
  }
  M.mul.assign(n * n, 0);
  auto setmul = [&](Elem a, Elem b, Elem v) {
    M.mul[a * n + b] = v;
    M.mul[b * n + a] = v;
  };
  for (Elem a = 0; a < n; ++a) setmul(1, a, a);
  setmul(2, 2, 1);
  setmul(2, 3, 4);
  setmul(2, 4, 3);
  setmul(3, 3, 0);  // x^2 = 0
  setmul(3, 4, 0);
  setmul(4, 4, 0);
  return M;
}

// ---- natural order -----------------------------------------------------------

OrderInfo natural_order(const FiniteStructure& M) {
  const size_t n = M.size();
  OrderInfo info;
  info.leq.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) info.leq[a * n + b] = leq(M, a, b);
  for (Elem a = 0; a < n; ++a) {
    if (!info.leq[a * n + a]) info.partial_order = false;
    for (Elem b = 0; b < n; ++b) {
      if (a != b && info.leq[a * n + b] && info.leq[b * n + a])
        info.partial_order = false;
      for (Elem c = 0; c < n; ++c)
        if (info.leq[a * n + b] && info.leq[b * n + c] && !info.leq[a * n + c])
          info.partial_order = false;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (a != M.zero) {
      bool minimal = true;
      for (Elem b = 0; b < n; ++b)
        if (b != a && b != M.zero && info.leq[b * n + a]) minimal = false;
      if (minimal) info.minimal_nonzero.push_back(a);
    }
    bool maximal = true;
    for (Elem b = 0; b < n; ++b)
      if (b != a && info.leq[a * n + b]) maximal = false;
    if (maximal) info.maximal.push_back(a);
  }
  return info;
}

uint32_t module_dimension(const FiniteStructure& M) {
  const size_t n = M.size();
  // depth[a] = max number of nonzero elements in a strict chain with top a.
  // Longest-path relaxation; the order is antisymmetric and transitive for
  // any structure whose addition is idempotent/commutative/associative, so a
  // fixpoint is reached within n rounds.
  std::vector<uint32_t> depth(n, 0);
  for (Elem a = 0; a < n; ++a) depth[a] = a == M.zero ? 0 : 1;
  bool changed = true;
  for (size_t round = 0; round < n && changed; ++round) {
    changed = false;
    for (Elem a = 0; a < n; ++a) {
      if (a == M.zero) continue;
      for (Elem b = 0; b < n; ++b) {
        if (b == a || b == M.zero) continue;
        if (leq(M, b, a) && depth[b] + 1 > depth[a]) {  // b < a strictly
          depth[a] = depth[b] + 1;
          changed = true;
        }
      }
    }
  }
  return *std::max_element(depth.begin(), depth.end());
}

std::vector<Elem> sum_irreducibles(const FiniteStructure& M) {
  const size_t n = M.size();
  std::vector<Elem> out;
  for (Elem a = 0; a < n; ++a) {
    if (a == M.zero) continue;
    bool irreducible = true;
    for (Elem u = 0; u < n && irreducible; ++u)
      for (Elem v = 0; v < n; ++v) {
        if (u == a || v == a) continue;
        if (leq(M, a, u) && leq(M, a, v) && M.addf(u, v) == a) {
          irreducible = false;
          break;
        }
      }
    if (irreducible) out.push_back(a);
  }
  return out;
}

std::optional<Elem> join(const FiniteStructure& M, Elem a, Elem b) {
  const size_t n = M.size();
  std::vector<Elem> uppers;
  for (Elem x = 0; x < n; ++x)
    if (leq(M, a, x) && leq(M, b, x)) uppers.push_back(x);
  if (uppers.empty()) return std::nullopt;  // synthetic top
  Elem s = uppers[0];
  for (size_t i = 1; i < uppers.size(); ++i) s = M.addf(s, uppers[i]);
  require(leq(M, a, s) && leq(M, b, s),
          "join: sum of upper bounds is not an upper bound");
  return s;
}

bool OrderClosure::leq(ClosedElem a, ClosedElem b) const {
  if (b.top) return true;                   // top is above everything
  if (a.top) return false;                  // strictly above: top <= only top
  return finalg::leq(*M_, a.value, b.value);
}

ClosedElem OrderClosure::add(ClosedElem a, ClosedElem b) const {
  if (a.top) return b;  // a + top = a, and top + top = top
  if (b.top) return a;
  return of(M_->addf(a.value, b.value));
}

ClosedElem OrderClosure::scal(Scalar s, ClosedElem a) const {
  require(s.sf == M_->sf, "scalar from the wrong semifield");
  if (a.top) {
    require(!s.zero, "0 * top is undefined in the order closure");
    return top();
  }
  return of(M_->scalf(s, a.value));
}

ClosedElem OrderClosure::join(ClosedElem a, ClosedElem b) const {
  if (a.top || b.top) return top();
  auto j = finalg::join(*M_, a.value, b.value);
  return j ? of(*j) : top();
}

ScalarOrTop duality_pair(const FiniteStructure& M, Elem a, Elem b) {
  const Semifield& S = M.semifield();
  require(a != M.zero, "duality pairing needs a nonzero first argument");
  if (b == M.zero) return {true, S.zero()};
  std::optional<Scalar> found;
  for (auto u : S.units()) {
    if (leq(M, M.scalf(u, a), b)) {
      require(!found.has_value(),
              "duality pairing witness is not unique for nonzero second "
              "argument");
      found = u;
    }
  }
  return {false, found.value_or(S.zero())};
}

// ---- filters -------------------------------------------------------------------

bool is_filter(const FiniteStructure& M, const Filter& f) {
  std::vector<uint8_t> in(M.size(), 0);
  for (Elem e : f) {
    if (e >= M.size()) return false;
    in[e] = 1;
  }
  if (in[M.zero]) return false;
  for (Elem a = 0; a < M.size(); ++a)
    for (Elem b = 0; b < M.size(); ++b) {
      bool sum_in = in[M.addf(a, b)];
      bool both_in = in[a] && in[b];
      if (sum_in != both_in) return false;
    }
  return true;
}

Filter principal_filter(const FiniteStructure& M, Elem a) {
  Filter f;
  if (a == M.zero) return f;
  for (Elem x = 0; x < M.size(); ++x)
    if (leq(M, a, x)) f.push_back(x);
  return f;
}

std::vector<Filter> all_filters(const FiniteStructure& M) {
  std::vector<Filter> out;
  out.push_back({});  // the empty filter, zero of the dual
  for (Elem a = 0; a < M.size(); ++a) {
    if (a == M.zero) continue;
    Filter f = principal_filter(M, a);
    require(is_filter(M, f), "principal up-set failed the filter laws");
    out.push_back(std::move(f));
  }
  // distinctness: a principal filter determines its generator
  std::set<Filter> seen(out.begin(), out.end());
  require(seen.size() == out.size(), "principal filters are not distinct");
  return out;
}

std::vector<Filter> maximal_filters_avoiding(const FiniteStructure& M,
                                             const std::vector<Elem>& avoid) {
  std::vector<uint8_t> bad(M.size(), 0);
  for (Elem e : avoid) {
    require(e < M.size(), "avoid-set element out of range");
    bad[e] = 1;
  }
  std::vector<Filter> candidates;
  for (const Filter& f : all_filters(M)) {
    if (f.empty()) continue;
    bool disjoint = true;
    for (Elem e : f)
      if (bad[e]) disjoint = false;
    if (disjoint) candidates.push_back(f);
  }
  std::vector<Filter> out;
  for (const Filter& f : candidates) {
    bool maximal = true;
    for (const Filter& g : candidates) {
      if (&f == &g || f == g) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end()) && g != f)
        maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- isomorphism ------------------------------------------------------------------

namespace {

// Per-element invariant used to prune the isomorphism search.
std::vector<std::tuple<uint64_t, uint64_t, uint64_t, uint64_t>> invariants(
    const FiniteStructure& M) {
  const size_t n = M.size();
  std::vector<std::tuple<uint64_t, uint64_t, uint64_t, uint64_t>> inv(n);
  for (Elem a = 0; a < n; ++a) {
    uint64_t up = 0, down = 0, zero_sums = 0, self = 0;
    for (Elem b = 0; b < n; ++b) {
      if (leq(M, a, b)) ++up;
      if (leq(M, b, a)) ++down;
      if (M.addf(a, b) == M.zero) ++zero_sums;
    }
    self = (M.negf(a) == a ? 1 : 0) + (a == M.zero ? 2 : 0) +
           (M.one && a == *M.one ? 4 : 0);
    inv[a] = {up, down, zero_sums, self};
  }
  return inv;
}

bool full_check_iso(const FiniteStructure& M1, const FiniteStructure& M2,
                    const std::vector<Elem>& map);

bool extend_iso(const FiniteStructure& M1, const FiniteStructure& M2,
                std::vector<Elem>& map, std::vector<uint8_t>& used, Elem next,
                const std::vector<std::tuple<uint64_t, uint64_t, uint64_t,
                                             uint64_t>>& inv1,
                const std::vector<std::tuple<uint64_t, uint64_t, uint64_t,
                                             uint64_t>>& inv2) {
  const size_t n = M1.size();
  if (next == n) return full_check_iso(M1, M2, map);
  for (Elem img = 0; img < n; ++img) {
    if (used[img] || inv1[next] != inv2[img]) continue;
    // partial image: indices <= next are decided once we place next -> img
    auto pm = [&](Elem x) { return x == next ? img : map[x]; };
    // consistency with already-assigned elements (checks involving elements
    // not yet assigned are deferred to deeper levels / the final full check)
    bool ok = true;
    {
      Elem nn = M1.negf(next);
      if (nn <= next && M2.negf(img) != pm(nn)) ok = false;
    }
    for (Elem b = 0; ok && b <= next; ++b) {
      Elem s1 = M1.addf(next, b);
      if (s1 <= next && M2.addf(img, pm(b)) != pm(s1)) ok = false;
      if (ok && M1.is_algebra()) {
        Elem p1 = M1.mulf(next, b);
        if (p1 <= next && M2.mulf(img, pm(b)) != pm(p1)) ok = false;
        Elem q1 = M1.mulf(b, next);
        if (q1 <= next && M2.mulf(pm(b), img) != pm(q1)) ok = false;
      }
    }
    if (!ok) continue;
    map[next] = img;
    used[img] = 1;
    if (extend_iso(M1, M2, map, used, next + 1, inv1, inv2)) return true;
    used[img] = 0;
  }
  return false;
}

bool full_check_iso(const FiniteStructure& M1, const FiniteStructure& M2,
                    const std::vector<Elem>& map) {
  const size_t n = M1.size();
  const Semifield& S = M1.semifield();
  if (map[M1.zero] != M2.zero) return false;
  if (M1.one.has_value() != M2.one.has_value()) return false;
  if (M1.one && map[*M1.one] != *M2.one) return false;
  for (Elem a = 0; a < n; ++a) {
    if (M2.negf(map[a]) != map[M1.negf(a)]) return false;
    for (auto u : S.units())
      if (M2.scalf(u, map[a]) != map[M1.scalf(u, a)]) return false;
    for (Elem b = 0; b < n; ++b) {
      if (M2.addf(map[a], map[b]) != map[M1.addf(a, b)]) return false;
      if (M1.is_algebra() && M2.mulf(map[a], map[b]) != map[M1.mulf(a, b)])
        return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteStructure& M1,
                                                  const FiniteStructure& M2) {
  if (M1.size() != M2.size() || M1.sf != M2.sf ||
      M1.is_algebra() != M2.is_algebra())
    return std::nullopt;
  auto inv1 = invariants(M1), inv2 = invariants(M2);
  {
    auto s1 = inv1, s2 = inv2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<Elem> map(M1.size(), 0);
  std::vector<uint8_t> used(M1.size(), 0);
  if (!extend_iso(M1, M2, map, used, 0, inv1, inv2)) return std::nullopt;
  return map;
}

FiniteStructure module_reduct(const FiniteStructure& A) {
  FiniteStructure M = A;
  M.one.reset();
  M.mul.clear();
  return M;
}

}  // namespace finalg
