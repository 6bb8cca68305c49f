// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "finalg/semifield.hpp"

namespace finalg {

using Elem = uint32_t;

// An explicit finite module (or algebra, when `mul` is present) over a finite
// semifield: every operation is a total table over the named carrier.
// Structures are immutable once built; all queries are pure.
struct FiniteStructure {
  uint16_t sf = 0;
  std::vector<std::string> names;
  Elem zero = 0;
  std::optional<Elem> one;         // present iff algebra
  std::vector<Elem> add;           // n*n row-major
  std::vector<Elem> neg;           // n
  std::vector<Elem> scal;          // unit_count * n (row per unit index)
  std::vector<Elem> mul;           // n*n when algebra, else empty

  size_t size() const { return names.size(); }
  bool is_algebra() const { return !mul.empty(); }
  const Semifield& semifield() const { return Semifield::by_id(sf); }

  Elem addf(Elem a, Elem b) const { return add[a * size() + b]; }
  Elem negf(Elem a) const { return neg[a]; }
  Elem mulf(Elem a, Elem b) const { return mul[a * size() + b]; }
  // Scalar action including the zero scalar (which sends everything to 0).
  Elem scalf(Scalar s, Elem a) const {
    require(s.sf == sf, "scalar from the wrong semifield");
    return s.zero ? zero : scal[s.g * size() + a];
  }
  Elem unit_scalf(uint32_t g, Elem a) const { return scal[g * size() + a]; }

  std::optional<Elem> index_of(const std::string& name) const;
};

// ---- axiom checking -------------------------------------------------------

struct AxiomFailure {
  std::string law;                  // e.g. "add-associative"
  std::vector<std::string> witness; // element names (scalars rendered inline)
};

struct AxiomReport {
  bool ok = true;
  std::vector<AxiomFailure> failures;
};

// Exhaustive check of every module axiom (and algebra axioms when present):
// commutativity, associativity, idempotency, absorbing zero, a + (-a) = 0,
// unit scalar laws, both distributivities, and multiplication laws.
AxiomReport check_axioms(const FiniteStructure& M);

// ---- raw table input and completion ---------------------------------------

struct RawStructure {
  uint16_t sf = 0;
  std::vector<std::string> names;
  std::string zero;
  std::optional<std::string> one;
  // a + b = c rows, -a = b rows, s*a = b rows, a*b = c rows
  std::vector<std::tuple<std::string, std::string, std::string>> add_rows;
  std::vector<std::pair<std::string, std::string>> neg_rows;
  std::vector<std::tuple<Scalar, std::string, std::string>> scalar_rows;
  std::vector<std::tuple<std::string, std::string, std::string>> mul_rows;
  bool complete_associative = false;  // unspecified sums default to zero and
                                      // associativity consequences are forced
};

struct BuildOutcome {
  std::optional<FiniteStructure> structure;  // set on success
  AxiomReport axioms;                        // failures otherwise
};

// Builds a structure from raw tables.  Malformed input (unknown names,
// duplicates, conflicting rows, missing tables without completion) throws
// Error; axiom violations and completion conflicts come back as an
// AxiomReport with a concrete witness.
BuildOutcome build_structure(const RawStructure& raw);

// ---- fixture builders ------------------------------------------------------

// A finite semifield viewed as an algebra over itself.
FiniteStructure semifield_module(const Semifield& S);

// The 2n-gon module: carrier {0, v_0..v_{2n-1}, e_0..e_{2n-1}} with
// v_i + v_{i+1} = e_i, incidence sums forced by associativity, negation a
// shift by n, and every other nonzero pair summing to zero.
FiniteStructure polygon_module(uint32_t n);

// Five-element algebra {0, 1, -1, x, -x} with x^2 = 0 and every sum of
// distinct elements zero: the standard non-radical-behaviour fixture.
FiniteStructure nil2_algebra();

// ---- natural order ---------------------------------------------------------

inline bool leq(const FiniteStructure& M, Elem a, Elem b) {
  return M.addf(a, b) == a;
}

struct OrderInfo {
  std::vector<uint8_t> leq;          // n*n, leq[a*n+b] = (a <= b)
  std::vector<Elem> minimal_nonzero; // minimal among nonzero elements
  std::vector<Elem> maximal;
  bool partial_order = true;         // reflexive, antisymmetric, transitive
};

OrderInfo natural_order(const FiniteStructure& M);

// Maximum number of nonzero elements in a strictly decreasing chain.
uint32_t module_dimension(const FiniteStructure& M);

// Elements that are not the sum of two strictly larger elements; they
// generate the module and are closed under the unit scalar action.
std::vector<Elem> sum_irreducibles(const FiniteStructure& M);

// Least upper bound in the order closure; nullopt encodes the synthetic top.
std::optional<Elem> join(const FiniteStructure& M, Elem a, Elem b);

// An element of the order closure of a module: an ordinary element or the
// synthetic top, which is strictly above every element.
struct ClosedElem {
  bool top = false;
  Elem value = 0;  // meaningful when !top
  friend bool operator==(const ClosedElem&, const ClosedElem&) = default;
};

// A module together with the synthetic top adjoined.  Addition treats top as
// neutral (a + top = a), every unit fixes top, and 0 * top is rejected.
class OrderClosure {
 public:
  explicit OrderClosure(const FiniteStructure& M) : M_(&M) {}

  static ClosedElem top() { return {true, 0}; }
  static ClosedElem of(Elem a) { return {false, a}; }

  const FiniteStructure& base() const { return *M_; }
  bool leq(ClosedElem a, ClosedElem b) const;
  ClosedElem add(ClosedElem a, ClosedElem b) const;
  ClosedElem scal(Scalar s, ClosedElem a) const;
  ClosedElem join(ClosedElem a, ClosedElem b) const;

 private:
  const FiniteStructure* M_;
};

struct ScalarOrTop {
  bool is_top = false;
  Scalar value;  // meaningful when !is_top
  friend bool operator==(const ScalarOrTop&, const ScalarOrTop&) = default;
};

// The unique unit e with b >= e*a (zero scalar if none); (a, 0) is top.
// Requires a != 0; two distinct witnesses are impossible for b != 0.
ScalarOrTop duality_pair(const FiniteStructure& M, Elem a, Elem b);

// ---- filters ----------------------------------------------------------------

using Filter = std::vector<Elem>;  // strictly sorted element indices

// Biconditional filter: 0 is not a member and a + b is a member exactly when
// both a and b are.
bool is_filter(const FiniteStructure& M, const Filter& f);

// The principal filter {x : x >= a}; empty for a = 0 by convention.
Filter principal_filter(const FiniteStructure& M, Elem a);

// All filters: the empty filter plus one principal filter per nonzero
// element.  Every filter of a finite module is of this form; tests verify
// that by brute force on small carriers.
std::vector<Filter> all_filters(const FiniteStructure& M);

// Inclusion-maximal filters among those disjoint from `avoid`.
std::vector<Filter> maximal_filters_avoiding(const FiniteStructure& M,
                                             const std::vector<Elem>& avoid);

// ---- isomorphism ------------------------------------------------------------

// Backtracking isomorphism search with invariant pruning; intended for
// carriers up to about 30.  Returns an element bijection when found.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteStructure& M1,
                                                  const FiniteStructure& M2);

// The underlying module of an algebra: same carrier and additive/scalar
// tables, multiplication and unit forgotten.  Modules pass through unchanged.
FiniteStructure module_reduct(const FiniteStructure& A);

}  // namespace finalg
