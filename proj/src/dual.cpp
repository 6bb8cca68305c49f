// SPDX-License-Identifier: MIT
#include "finalg/dual.hpp"

#include <algorithm>
#include <map>

namespace finalg {

namespace {

std::map<Filter, Elem> filter_index(const std::vector<Filter>& filters) {
  std::map<Filter, Elem> at;
  for (size_t i = 0; i < filters.size(); ++i)
    at[filters[i]] = static_cast<Elem>(i);
  return at;
}

}  // namespace

DualModule dual_module(const FiniteStructure& M) {
  const Semifield& S = M.semifield();
  const uint32_t u = S.unit_count();
  DualModule D;
  D.filters = all_filters(M);  // empty filter first, then by generator index
  for (auto& f : D.filters) std::sort(f.begin(), f.end());
  const size_t n = D.filters.size();
  auto at = filter_index(D.filters);

  D.to_dual.assign(M.size(), 0);
  for (Elem a = 0; a < M.size(); ++a) {
    Filter f = principal_filter(M, a);
    std::sort(f.begin(), f.end());
    D.to_dual[a] = at.at(f);
  }

  FiniteStructure& W = D.module;
  W.sf = M.sf;
  W.zero = 0;  // the empty filter
  W.names.resize(n);
  for (size_t i = 0; i < n; ++i) {
    if (D.filters[i].empty()) {
      W.names[i] = "F0";
      continue;
    }
    // a nonzero filter is principal, generated by the sum of its members
    Elem g = D.filters[i][0];
    for (size_t j = 1; j < D.filters[i].size(); ++j)
      g = M.addf(g, D.filters[i][j]);
    require(D.to_dual[g] == i, "filter is not generated by its member sum");
    W.names[i] = "F" + M.names[g];
  }

  W.add.resize(n * n);
  W.neg.resize(n);
  W.scal.resize(u * n);
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      Filter meet;
      std::set_intersection(D.filters[i].begin(), D.filters[i].end(),
                            D.filters[j].begin(), D.filters[j].end(),
                            std::back_inserter(meet));
      auto it = at.find(meet);
      require(it != at.end(), "filter intersection is not a filter");
      W.add[i * n + j] = it->second;
    }
    for (uint32_t g = 0; g < u; ++g) {
      // e.F = {e^-1 a : a in F}
      const Scalar inv = S.inverse(S.unit(g));
      Filter f;
      for (Elem x : D.filters[i]) f.push_back(M.unit_scalf(inv.g, x));
      std::sort(f.begin(), f.end());
      auto it = at.find(f);
      require(it != at.end(), "unit image of a filter is not a filter");
      W.scal[g * n + i] = it->second;
    }
    W.neg[i] = W.scal[S.minus_one_g() * n + i];
  }
  auto rep = check_axioms(W);
  require(rep.ok, "dual module failed the axiom suite");
  return D;
}

Elem dual_index(const DualModule& D, const Filter& f) {
  Filter key = f;
  std::sort(key.begin(), key.end());
  for (size_t i = 0; i < D.filters.size(); ++i)
    if (D.filters[i] == key) return static_cast<Elem>(i);
  fail("no such filter in the dual module");
}

std::vector<Elem> hom_dual(const FiniteStructure& M1, const DualModule& D1,
                           const FiniteStructure& M2, const DualModule& D2,
                           const std::vector<Elem>& phi) {
  require(phi.size() == M1.size(), "homomorphism has the wrong size");
  for (Elem v : phi)
    require(v < M2.size(), "homomorphism image out of range");
  std::vector<Elem> out(D2.filters.size());
  for (size_t j = 0; j < D2.filters.size(); ++j) {
    const Filter& F = D2.filters[j];
    Filter pull;
    for (Elem a = 0; a < M1.size(); ++a)
      if (std::binary_search(F.begin(), F.end(), phi[a])) pull.push_back(a);
    out[j] = dual_index(D1, pull);
  }
  return out;
}

std::vector<Elem> double_dual_map(const FiniteStructure& M,
                                  const DualModule& D, const DualModule& DD) {
  std::vector<Elem> out(M.size());
  for (Elem a = 0; a < M.size(); ++a) {
    Filter up;  // the filters of M containing a
    for (size_t i = 0; i < D.filters.size(); ++i)
      if (std::binary_search(D.filters[i].begin(), D.filters[i].end(), a))
        up.push_back(static_cast<Elem>(i));
    out[a] = dual_index(DD, up);
  }
  return out;
}

}  // namespace finalg
