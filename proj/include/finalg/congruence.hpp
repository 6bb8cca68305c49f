// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "finalg/semifield.hpp"
#include "finalg/structure.hpp"

namespace finalg {

// ---- ideals -----------------------------------------------------------------

// Strictly sorted element indices.  An ideal contains zero, absorbs addition
// of arbitrary module elements, and is closed under the scalar action; an
// algebra ideal is additionally closed under multiplication by the algebra.
using Ideal = std::vector<Elem>;

bool is_ideal(const FiniteStructure& M, const Ideal& I);
bool is_algebra_ideal(const FiniteStructure& A, const Ideal& I);

// ---- congruences on finite carriers ----------------------------------------

// An equivalence relation compatible with addition, negation, the scalar
// action, and (when the carrier is an algebra) multiplication on both sides.
// Stored as a partition: `block[a]` is the block id of element a, ids dense
// and assigned in order of first appearance, so equal partitions have equal
// vectors.  `generators` records pairs whose closure reproduces the relation.
struct Congruence {
  std::vector<Elem> block;
  uint32_t block_count = 0;
  std::vector<std::pair<Elem, Elem>> generators;

  size_t size() const { return block.size(); }
  bool related(Elem a, Elem b) const { return block[a] == block[b]; }
  bool is_diagonal() const { return block_count == block.size(); }
  bool is_full() const { return block_count == 1; }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.block == b.block;
  }
};

// Block members, sorted, indexed by block id.
std::vector<std::vector<Elem>> congruence_blocks(const Congruence& C);

// True when the partition satisfies every compatibility law of M.
bool is_congruence(const FiniteStructure& M, const Congruence& C);

// C1 refines into C2: every pair related by C1 is related by C2.
bool congruence_leq(const Congruence& C1, const Congruence& C2);

// The smallest congruence of M containing the pairs: union-find plus a
// worklist that closes each merged pair under a + c ~ b + c for every c,
// negation, every unit scalar, and ac ~ bc / ca ~ cb when M is an algebra.
Congruence cong_closure(const FiniteStructure& M,
                        const std::vector<std::pair<Elem, Elem>>& pairs);

// Reference implementation: saturate an explicit relation matrix under the
// same generation rules to a fixpoint.  Quadratic in carrier size per pass;
// kept as the oracle the worklist engine is validated against.
Congruence cong_closure_naive(const FiniteStructure& M,
                              const std::vector<std::pair<Elem, Elem>>& pairs);

// ---- kernels and quotients --------------------------------------------------

struct KernelReport {
  Ideal ideal;            // the block of zero
  bool is_trivial = true; // kernel == {0}
};

// The block of zero, verified to be an ideal of M.
KernelReport kernel(const FiniteStructure& M, const Congruence& C);

// The quotient structure M/C: one element per block, named after the block's
// least member, with tables induced on representatives.  Verifies that C is
// a congruence of M and that the quotient passes the full axiom suite.
FiniteStructure quotient_structure(const FiniteStructure& M,
                                   const Congruence& C);

// ---- maximal congruences via filters ----------------------------------------

// The smallest congruence whose kernel is I: a ~ b iff a = b or a, b ∈ I.
// Requires I to be an ideal (an algebra ideal when M is an algebra).
Congruence minimal_congruence(const FiniteStructure& M, const Ideal& I);

// The largest module congruence with kernel I: relate a ~ b when the same
// maximal filters disjoint from I contain them.  Asserts kernel == I and
// that the quotient is separable.  Algebras are handled by their module
// reduct; use max_congruence_algebra for the multiplicative version.
Congruence max_congruence_module(const FiniteStructure& M, const Ideal& I);

// The largest algebra congruence with kernel I, via quasimaximal filters
// {x : ax ∈ F} for F maximal disjoint from I and a ranging over A.  Asserts
// kernel == I and that the quotient is quasiseparable.
Congruence max_congruence_algebra(const FiniteStructure& A, const Ideal& I);

// All nonempty sets {x : ax ∈ F} with F a maximal filter disjoint from
// `avoid` and a ∈ A; each is itself a filter disjoint from `avoid`.
std::vector<Filter> quasimaximal_filters_avoiding(const FiniteStructure& A,
                                                  const Ideal& avoid);

// Every pair of distinct elements is split by a maximal (resp. quasimaximal)
// filter disjoint from {0}.
bool is_separable(const FiniteStructure& M);
bool is_quasiseparable(const FiniteStructure& A);

// ---- annihilators ------------------------------------------------------------

// Ann_C(a) = {(b, c) : (ab, ac) ∈ C}; always a congruence containing C.
Congruence ann_congruence(const FiniteStructure& A, const Congruence& C,
                          Elem a);

// ---- the congruence lattice ---------------------------------------------------

// Every congruence of M: the closures of single pairs, closed under joins.
// Deterministic order (lexicographic in the partition vector).
std::vector<Congruence> enumerate_congruences(const FiniteStructure& M);

// ---- semifields as carriers ---------------------------------------------------

// A semifield's elements listed as an indexable carrier: index 0 is zero,
// units follow ordered by unit-group index (and by exponent within a unit for
// semifields with a free generator, which require an exponent window).
struct SemifieldCarrier {
  uint16_t sf = 0;
  int32_t bound = 0;  // exponent window half-width; 0 for finite semifields
  std::vector<Scalar> elems;

  const Semifield& semifield() const { return Semifield::by_id(sf); }
  size_t size() const { return elems.size(); }
  std::optional<Elem> index(Scalar a) const;
  std::string name(Elem i) const { return semifield().to_string(elems[i]); }
};

SemifieldCarrier semifield_carrier(const Semifield& S, int32_t bound = 0);

// The unique maximal proper congruence of a semifield: relate nonzero a, b
// exactly when a + b ≠ 0, and 0 only to itself.  Asserts the relation is a
// congruence on the carrier (multiplicative checks restricted to the window
// for unbounded semifields), proper, and with trivial kernel.
Congruence field_max_congruence(const SemifieldCarrier& F);

// The block of 1 in the congruence generated by (x, 1), computed two ways —
// by closure over the carrier and by evaluating quotients of polynomial
// expressions in x whose coefficients sum to 1.  A zero quotient in the
// formula certifies the congruence is improper, so the class is the whole
// carrier; otherwise the two computations must agree exactly.  The result is
// checked closed under products, quotients, and unit-sum convex combinations
// within the carrier.  Errors when x is zero.
std::vector<Elem> unit_class_generated(const SemifieldCarrier& F, Scalar x);

}  // namespace finalg
