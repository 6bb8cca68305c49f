// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/structure.hpp"

namespace finalg {

// Cartesian product with componentwise operations.  Elements are named
// "(a,b)"; the result is an algebra exactly when both inputs are.
FiniteStructure product_module(const FiniteStructure& A,
                               const FiniteStructure& B);

// Coproduct of modules: formal sums with one optional nonzero component per
// factor.  Addition merges per factor; a factor collapsing to its local zero
// absorbs the whole sum to 0.  Component names are kept when unambiguous
// (prefixed "l."/"r." otherwise) and joined with "|" when both are present.
FiniteStructure coproduct_module(const FiniteStructure& A,
                                 const FiniteStructure& B);

// Free module on named generators over a finite semifield: the iterated
// coproduct of scalar lines, carrier size (1 + #units)^k.
FiniteStructure free_module(const Semifield& S,
                            const std::vector<std::string>& gen_names);

// The module of all homomorphisms M1 -> M2 under pointwise operations.
// `homs` lists the carrier (canonically sorted element maps).
struct HomModule {
  FiniteStructure module;
  std::vector<std::vector<Elem>> homs;  // element i of module = homs[i]
};
HomModule hom_module(const FiniteStructure& M1, const FiniteStructure& M2);

// ---- tensor and symmetric powers (quotient constructions) ------------------

struct TensorModule {
  FiniteStructure module;
  // class of the pure tensor a (x) b, indexed a * |B| + b
  std::vector<Elem> pure;
};

// Tensor product via the congruence engine: free module on orbit-reduced
// pure tensors of sum-irreducible generators, quotiented by bilinearity.
// Requires (#generator orbits of A) * (#generator orbits of B) <= 7.
TensorModule tensor_module(const FiniteStructure& A, const FiniteStructure& B);

// n-th symmetric power: the n-fold tensor power quotiented by transpositions.
// Carries the symmetrized pure map on generator tuples plus the multiset
// basis that indexes the graded multiplication.
struct SymPower {
  FiniteStructure module;
  uint32_t n = 1;
  std::vector<Elem> orbit_reps;  // generator orbit representatives of M
  // Sorted multisets of orbit indices: the basis of the power.
  std::vector<std::vector<uint32_t>> multisets;
  // Ordered orbit tuple (flat index, radix = #orbits) -> class of its tensor.
  std::vector<Elem> pure;
  // True when the power is the free module on `multisets` (no collapsing
  // relations); graded multiplication is available exactly in that case.
  bool free_basis = false;
};

// Builds Sym^n M.  When every multilinearity relation instance is already an
// equality (free-type inputs) the quotient is taken directly on the multiset
// basis; otherwise the tensor-power congruence is closed by the engine,
// which requires (#generator orbits)^n <= 6.
SymPower sym_power(const FiniteStructure& M, uint32_t n);

// Graded multiplication Sym^a x Sym^b -> Sym^{a+b} on powers of the same
// module: decompose, take multiset unions, recombine.  All three powers must
// carry the free multiset basis.
Elem sym_multiply(const SymPower& Sa, const SymPower& Sb, const SymPower& Sab,
                  Elem u, Elem v);

// ---- projectivization -------------------------------------------------------

struct ProjectivePoint {
  std::vector<Elem> orbit;  // the scalar orbit, sorted
  bool affine = false;      // invertible last coordinate (projective closure)
};

struct Projectivization {
  std::vector<ProjectivePoint> points;
};

// Scalar orbits of the nonzero elements of M.
Projectivization projectivize(const FiniteStructure& M);

// Points of P(M x F) with the affine part marked and matched to M.
Projectivization projective_closure(const FiniteStructure& M);

// Degree-n homogeneous component of the ring of functions: Sym^n(M*).
FiniteStructure function_ring_component(const FiniteStructure& M, uint32_t n);

// Graded sum of the components of degree 0..n (the functions of degree at
// most n, which match the degree-n homogeneous functions on the projective
// closure).
FiniteStructure function_ring_graded(const FiniteStructure& M, uint32_t n);

}  // namespace finalg
