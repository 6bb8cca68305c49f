// SPDX-License-Identifier: MIT
//
// Degree-bounded congruence closure for polynomial semirings.
//
// Congruences on a polynomial semiring are generally infinite objects, so
// they cannot be closed exactly with the finite-carrier engine.  This module
// works over the finite carrier of all polynomials of total degree <= D and
// closes generating pairs under the congruence rules restricted to that
// carrier: results that would leave the degree window are simply not
// generated.  Membership is therefore three-valued:
//
//   * kIn      -- the pair has a certified derivation inside the window;
//                 it stays derivable at every larger bound.
//   * kNotIn   -- a substitution homomorphism collapses every generating
//                 pair but separates the queried pair, refuting membership
//                 outright (at any bound).
//   * kUnknown -- neither a derivation nor a refutation was found.
//
// Addition never raises total degree and scaling by a unit never changes it,
// so those rules run unrestricted; multiplication is applied through the
// variable generators and skipped when a product would leave the window.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "finalg/poly.hpp"
#include "finalg/semifield.hpp"

namespace finalg {

// The finite carrier of polynomials of total degree <= `degree` in `nvars`
// variables over a finite coefficient semifield.  Elements are indexed by
// their coefficient pattern over the monomial list (graded lexicographic
// order), so index 0 is the zero polynomial.
struct BoundedRing {
  uint16_t sf = 0;
  uint32_t nvars = 1;
  uint32_t degree = 0;
  std::vector<std::vector<uint32_t>> monomials;  // graded lex, ascending
  std::vector<std::size_t> weight;               // mixed-radix place values
  std::size_t carrier_size = 0;

  const Semifield& semifield() const { return Semifield::by_id(sf); }
  std::size_t size() const { return carrier_size; }

  // Polynomial at a carrier index (0 <= index < size()).
  Poly poly_at(std::size_t index) const;

  // Carrier index of `p`, or nullopt when its total degree exceeds the
  // bound.  `p` must live over the same semifield and variable count.
  std::optional<std::size_t> index_of(const Poly& p) const;
};

// Build the degree-<= `degree` carrier over S in `nvars` variables.
// Errors: S not finite; carrier larger than the supported limit.
BoundedRing bounded_ring(const Semifield& S, uint32_t nvars, uint32_t degree);

// A congruence closed inside a bounded carrier: the generating pairs, the
// bound (carried by `ring`), and the closed pair cache as a block vector
// over the carrier.  Block ids are dense and ordered by first appearance.
struct BoundedCongruence {
  BoundedRing ring;
  std::vector<std::pair<Poly, Poly>> generators;
  std::vector<uint32_t> block;
  uint32_t block_count = 0;
};

// Close `pairs` under equivalence, unit scaling (which covers negation),
// addition of carrier elements, and multiplication, generating only results
// that stay inside the window.  Addition is applied one term at a time and
// multiplication through units and single variables; chaining those steps
// reaches every in-window instance of the unrestricted rules.
// Errors: a generator's total degree exceeds the bound.
BoundedCongruence cong_closure_bounded(const BoundedRing& R,
                                       const std::vector<std::pair<Poly, Poly>>& pairs);

// Reference variant that applies the addition and multiplication rules with
// every carrier element directly.  Quadratic in the carrier size; used to
// cross-check the production closure on small windows.
BoundedCongruence cong_closure_bounded_naive(const BoundedRing& R,
                                             const std::vector<std::pair<Poly, Poly>>& pairs);

enum class BoundedAnswer : uint8_t { kIn, kUnknown, kNotIn };

// Evaluate `p` at `values` (one scalar per variable, all owned by T).  The
// map is a semiring homomorphism into T: terms evaluate through T's product
// and fold through T's absorbing addition, so a cancelling pair of terms
// annihilates the whole value exactly as it does inside the polynomial
// semiring.  Coefficients must either already live in T or lie in the
// three-element semifield, whose units map through 1 -> 1, -1 -> -1.
Scalar poly_eval(const Poly& p, const Semifield& T, const std::vector<Scalar>& values);

// A substitution point that collapses every generating pair of a bounded
// congruence yet separates a queried pair, certifying non-membership.
struct SubstitutionWitness {
  uint16_t target_sf = 0;        // semifield the values live in
  std::vector<Scalar> values;    // one per variable
  Scalar left, right;            // differing evaluations of the query
};

struct BoundedMembership {
  BoundedAnswer answer = BoundedAnswer::kUnknown;
  std::optional<SubstitutionWitness> refuter;  // set when answer == kNotIn
};

// Closure-only query: kIn when the pair was derived inside the window,
// kUnknown otherwise.  Errors: a query polynomial exceeds the bound.
BoundedAnswer bounded_related(const BoundedCongruence& C, const Poly& a, const Poly& b);

// Full query: derivation check first, then a search over substitution
// points (three-element, cyclotomic order-2 and lexicographic targets) for
// a refutation that upgrades kUnknown to a certified kNotIn.
BoundedMembership bounded_membership(const BoundedCongruence& C, const Poly& a, const Poly& b);

// Check that `values` collapses every generating pair of C, i.e. that the
// substitution is a valid model of the congruence.
bool substitution_collapses_generators(const BoundedCongruence& C, const Semifield& T,
                                       const std::vector<Scalar>& values);

// The block of zero, reported with an explicit partial flag: a bounded
// closure only certifies membership inside the window, so the block is a
// lower approximation of the kernel ideal, never the kernel itself.
struct BoundedKernel {
  std::vector<Poly> members;
  bool partial = true;
};
BoundedKernel bounded_kernel(const BoundedCongruence& C);

// All carrier polynomials sharing p's block.
std::vector<Poly> bounded_block_of(const BoundedCongruence& C, const Poly& p);

}  // namespace finalg
