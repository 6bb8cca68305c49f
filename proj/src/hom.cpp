// SPDX-License-Identifier: MIT
#include "finalg/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace finalg {

bool is_module_hom(const FiniteStructure& M1, const FiniteStructure& M2,
                   const std::vector<Elem>& f) {
  const size_t n = M1.size();
  require(M1.sf == M2.sf, "homomorphism needs a common semifield");
  require(f.size() == n, "element map has the wrong size");
  for (Elem v : f) require(v < M2.size(), "element map image out of range");
  if (f[M1.zero] != M2.zero) return false;
  const Semifield& S = M1.semifield();
  for (Elem a = 0; a < n; ++a) {
    if (f[M1.negf(a)] != M2.negf(f[a])) return false;
    for (uint32_t g = 0; g < S.unit_count(); ++g)
      if (f[M1.unit_scalf(g, a)] != M2.unit_scalf(g, f[a])) return false;
    for (Elem b = 0; b < n; ++b)
      if (f[M1.addf(a, b)] != M2.addf(f[a], f[b])) return false;
  }
  return true;
}

bool is_algebra_hom(const FiniteStructure& M1, const FiniteStructure& M2,
                    const std::vector<Elem>& f) {
  require(M1.is_algebra() && M2.is_algebra(),
          "algebra homomorphism needs two algebras");
  if (!is_module_hom(M1, M2, f)) return false;
  if (f[*M1.one] != *M2.one) return false;
  const size_t n = M1.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (f[M1.mulf(a, b)] != M2.mulf(f[a], f[b])) return false;
  return true;
}

namespace {

// Unique extension candidate: a homomorphism agreeing with `img` on the
// generators must send a to the sum of the images of the generators above a.
std::vector<Elem> extend_candidate(const FiniteStructure& M1,
                                   const FiniteStructure& M2,
                                   const std::vector<Elem>& gens,
                                   const std::vector<Elem>& img) {
  const size_t n = M1.size();
  std::vector<Elem> f(n);
  for (Elem a = 0; a < n; ++a) {
    Elem s = M2.zero;
    bool first = true;
    for (size_t i = 0; i < gens.size(); ++i)
      if (leq(M1, a, gens[i])) {
        s = first ? img[i] : M2.addf(s, img[i]);
        first = false;
      }
    require(!first || a == M1.zero, "generators do not span the source");
    f[a] = s;
  }
  return f;
}

std::vector<std::vector<Elem>> enumerate_homs(const FiniteStructure& M1,
                                              const FiniteStructure& M2,
                                              bool orbit_reduce) {
  require(M1.sf == M2.sf, "homomorphism needs a common semifield");
  const Semifield& S = M1.semifield();
  const uint32_t u = S.unit_count();
  std::vector<Elem> gens = sum_irreducibles(M1);
  require(!gens.empty() || M1.size() == 1, "source has no generators");
  std::map<Elem, size_t> gen_index;
  for (size_t i = 0; i < gens.size(); ++i) gen_index[gens[i]] = i;

  // choose the elements whose images are enumerated
  std::vector<Elem> chosen;
  if (orbit_reduce) {
    std::set<Elem> covered;
    for (Elem g : gens) {
      if (covered.count(g)) continue;
      chosen.push_back(g);
      for (uint32_t q = 0; q < u; ++q) covered.insert(M1.unit_scalf(q, g));
    }
  } else {
    chosen = gens;
  }

  // candidate images, pruned by scalar-stabilizer consistency when reducing
  std::vector<std::vector<Elem>> cands(chosen.size());
  double total = 1;
  for (size_t i = 0; i < chosen.size(); ++i) {
    for (Elem m = 0; m < M2.size(); ++m) {
      bool ok = true;
      if (orbit_reduce)
        for (uint32_t q = 0; q < u && ok; ++q)
          if (M1.unit_scalf(q, chosen[i]) == chosen[i] &&
              M2.unit_scalf(q, m) != m)
            ok = false;
      if (ok) cands[i].push_back(m);
    }
    total *= static_cast<double>(cands[i].size());
    require(total <= 1e7, "homomorphism enumeration too large");
  }

  std::set<std::vector<Elem>> found;
  std::vector<size_t> pick(chosen.size(), 0);
  std::vector<Elem> img(gens.size());
  while (true) {
    bool consistent = true;
    if (orbit_reduce) {
      // propagate the picked images across scalar orbits
      std::vector<uint8_t> have(gens.size(), 0);
      for (size_t i = 0; i < chosen.size() && consistent; ++i) {
        const Elem m = cands[i][pick[i]];
        for (uint32_t q = 0; q < u; ++q) {
          Elem g2 = M1.unit_scalf(q, chosen[i]);
          Elem m2 = M2.unit_scalf(q, m);
          auto it = gen_index.find(g2);
          require(it != gen_index.end(),
                  "generator orbit leaves the irreducibles");
          if (have[it->second] && img[it->second] != m2) consistent = false;
          img[it->second] = m2;
          have[it->second] = 1;
        }
      }
    } else {
      for (size_t i = 0; i < gens.size(); ++i) img[i] = cands[i][pick[i]];
    }
    if (consistent) {
      auto f = extend_candidate(M1, M2, gens, img);
      if (is_module_hom(M1, M2, f)) found.insert(std::move(f));
    }
    size_t i = 0;
    while (i < chosen.size() && ++pick[i] == cands[i].size()) pick[i++] = 0;
    if (i == chosen.size()) break;
  }
  return {found.begin(), found.end()};
}

}  // namespace

std::vector<std::vector<Elem>> all_module_homs(const FiniteStructure& M1,
                                               const FiniteStructure& M2) {
  return enumerate_homs(M1, M2, true);
}

std::vector<std::vector<Elem>> all_module_homs_brute(const FiniteStructure& M1,
                                                     const FiniteStructure& M2) {
  return enumerate_homs(M1, M2, false);
}

HomExtendOutcome hom_extend(const FiniteStructure& M1,
                            const FiniteStructure& M2,
                            const std::vector<std::pair<Elem, Elem>>& gen_map) {
  require(M1.sf == M2.sf, "homomorphism needs a common semifield");
  const Semifield& S = M1.semifield();
  const uint32_t u = S.unit_count();
  require(!gen_map.empty(), "empty generator map");

  // collapse duplicates, reject conflicts
  std::map<Elem, Elem> gm;
  for (auto [g, m] : gen_map) {
    require(g < M1.size() && m < M2.size(), "generator map out of range");
    auto [it, fresh] = gm.emplace(g, m);
    require(fresh || it->second == m,
            "conflicting images for generator " + M1.names[g]);
  }
  // scalar closure of the generator set, with an equivariant image map
  for (auto [g, m] : gm)
    for (uint32_t q = 0; q < u; ++q) {
      auto it = gm.find(M1.unit_scalf(q, g));
      require(it != gm.end(),
              "generator set is not closed under the unit action: missing " +
                  M1.names[M1.unit_scalf(q, g)]);
      require(it->second == M2.unit_scalf(q, m),
              "generator images are not scalar-equivariant at " + M1.names[g]);
    }
  std::vector<Elem> gens, img;
  for (auto [g, m] : gm) {
    gens.push_back(g);
    img.push_back(m);
  }
  // the generators must span: every a is the sum of the generators above it
  for (Elem a = 0; a < M1.size(); ++a) {
    Elem s = M1.zero;
    bool first = true;
    for (Elem g : gens)
      if (leq(M1, a, g)) {
        s = first ? g : M1.addf(s, g);
        first = false;
      }
    require((first && a == M1.zero) || (!first && s == a),
            "generators do not span the source (fails at " + M1.names[a] + ")");
  }

  // saturation: for every nonzero gamma in the target, the set of generators
  // mapped above gamma must contain every generator dominating a sum of them
  for (Elem gamma = 0; gamma < M2.size(); ++gamma) {
    if (gamma == M2.zero) continue;
    std::vector<size_t> in_set;
    for (size_t i = 0; i < gens.size(); ++i)
      if (leq(M2, gamma, img[i])) in_set.push_back(i);
    // subset sums of the selected generators, each with a witness subset
    std::map<Elem, std::vector<size_t>> sums;
    std::vector<Elem> work;
    for (size_t i : in_set)
      if (sums.emplace(gens[i], std::vector<size_t>{i}).second)
        work.push_back(gens[i]);
    while (!work.empty()) {
      Elem s = work.back();
      work.pop_back();
      for (size_t i : in_set) {
        Elem t = M1.addf(s, gens[i]);
        if (sums.count(t)) continue;
        auto w = sums[s];
        w.push_back(i);
        sums.emplace(t, std::move(w));
        work.push_back(t);
      }
    }
    for (size_t i = 0; i < gens.size(); ++i) {
      if (leq(M2, gamma, img[i])) continue;
      for (const auto& [s, witness] : sums)
        if (leq(M1, s, gens[i])) {
          HomExtendOutcome out;
          out.gamma = M2.names[gamma];
          for (size_t w : witness) out.subset.push_back(M1.names[gens[w]]);
          std::sort(out.subset.begin(), out.subset.end());
          out.subset.erase(std::unique(out.subset.begin(), out.subset.end()),
                           out.subset.end());
          out.trapped = M1.names[gens[i]];
          return out;
        }
    }
  }

  HomExtendOutcome out;
  auto f = extend_candidate(M1, M2, gens, img);
  require(is_module_hom(M1, M2, f),
          "saturated generator map failed to extend; this is a bug");
  out.hom = std::move(f);
  return out;
}

}  // namespace finalg
