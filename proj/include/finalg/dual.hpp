// SPDX-License-Identifier: MIT
#pragma once

#include <vector>

#include "finalg/structure.hpp"

namespace finalg {

// The dual module M*: carrier = all filters of M with the empty filter as
// zero, addition = intersection, unit action e.F = {e^-1 a : a in F}.
// `to_dual` is the order-reversing bijection a -> F_a (zero -> empty).
struct DualModule {
  FiniteStructure module;
  std::vector<Filter> filters;  // element i of module = filters[i]
  std::vector<Elem> to_dual;    // M element -> M* element
};

DualModule dual_module(const FiniteStructure& M);

// Index of `f` in D.filters; error if absent.
Elem dual_index(const DualModule& D, const Filter& f);

// The dual of a homomorphism phi: M1 -> M2, as a map on dual carriers
// D2 -> D1 computed by filter pullback F -> phi^-1(F).
std::vector<Elem> hom_dual(const FiniteStructure& M1, const DualModule& D1,
                           const FiniteStructure& M2, const DualModule& D2,
                           const std::vector<Elem>& phi);

// The natural map M -> M**: a -> {F in M* : a in F}, returned as element
// indices of DD.module.  An isomorphism for every finite module.
std::vector<Elem> double_dual_map(const FiniteStructure& M,
                                  const DualModule& D, const DualModule& DD);

}  // namespace finalg
