// SPDX-License-Identifier: MIT
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finalg/structure.hpp"

namespace finalg {

// Does f (a total element map) preserve zero, addition, negation, and the
// scalar action?
bool is_module_hom(const FiniteStructure& M1, const FiniteStructure& M2,
                   const std::vector<Elem>& f);

// Module homomorphism that additionally preserves one and multiplication.
// Both structures must be algebras.
bool is_algebra_hom(const FiniteStructure& M1, const FiniteStructure& M2,
                    const std::vector<Elem>& f);

// All module homomorphisms M1 -> M2, canonically sorted.  Enumerates scalar-
// equivariant assignments on orbit representatives of the sum-irreducible
// generators, extends each by g(a) = sum of images of generators above a,
// and keeps the maps that check out.  Guarded against blow-up.
std::vector<std::vector<Elem>> all_module_homs(const FiniteStructure& M1,
                                               const FiniteStructure& M2);

// Independent oracle: enumerate every assignment of every sum-irreducible
// generator (no orbit reduction or equivariance pruning), extend, check.
std::vector<std::vector<Elem>> all_module_homs_brute(const FiniteStructure& M1,
                                                     const FiniteStructure& M2);

// Extension of a generator map to a homomorphism, when one exists.
// On refusal, `gamma` is a target element whose generator preimage set is
// not sum-saturated: the generators in `subset` sum below `trapped`, yet
// `trapped` is not mapped above `gamma`.
struct HomExtendOutcome {
  std::optional<std::vector<Elem>> hom;
  std::string gamma;
  std::vector<std::string> subset;
  std::string trapped;
};

// gen_map lists (generator, image) pairs.  The generator set must be closed
// under the unit action with a scalar-equivariant image assignment, and must
// generate M1 (every a equals the sum of the generators above it).
HomExtendOutcome hom_extend(const FiniteStructure& M1,
                            const FiniteStructure& M2,
                            const std::vector<std::pair<Elem, Elem>>& gen_map);

}  // namespace finalg
