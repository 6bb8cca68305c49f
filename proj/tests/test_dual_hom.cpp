// SPDX-License-Identifier: MIT
#include "finalg/dual.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "finalg/constructions.hpp"
#include "finalg/error.hpp"
#include "finalg/hom.hpp"
#include "finalg/structure.hpp"

using namespace finalg;

namespace {

Elem idx(const FiniteStructure& M, const std::string& name) {
  auto i = M.index_of(name);
  REQUIRE_MESSAGE(i.has_value(), "no element named " << name);
  return *i;
}

std::set<std::string> name_set(const FiniteStructure& M,
                               const std::vector<Elem>& els) {
  std::set<std::string> out;
  for (Elem e : els) out.insert(M.names[e]);
  return out;
}

bool is_bijection(const std::vector<Elem>& f, size_t n) {
  std::set<Elem> img(f.begin(), f.end());
  return f.size() == n && img.size() == n;
}

// dualizing twice must reproduce the module up to the canonical map
void check_double_dual(const FiniteStructure& M) {
  auto D = dual_module(M);
  auto DD = dual_module(D.module);
  auto eta = double_dual_map(M, D, DD);
  CHECK(is_module_hom(M, DD.module, eta));
  CHECK(is_bijection(eta, M.size()));
  for (Elem a = 0; a < M.size(); ++a)
    CHECK(eta[a] == DD.to_dual[D.to_dual[a]]);
}

}  // namespace

TEST_CASE("dual modules enumerate the filters") {
  const Semifield& S = Semifield::finfinity();
  auto F = semifield_module(S);
  auto A = product_module(F, F);
  auto C = coproduct_module(F, F);
  auto P = polygon_module(2);

  auto DF = dual_module(F);
  CHECK(DF.module.size() == 3);
  CHECK(dual_module(A).module.size() == 9);
  CHECK(dual_module(C).module.size() == 9);
  CHECK(dual_module(P).module.size() == 9);
  CHECK(dual_module(nil2_algebra()).module.size() == 5);

  CHECK(DF.filters[0].empty());
  CHECK(DF.module.names[DF.module.zero] == "F0");
  CHECK(std::set<std::string>(DF.module.names.begin(),
                              DF.module.names.end()) ==
        std::set<std::string>{"F0", "F1", "F-1"});
  CHECK(!DF.module.is_algebra());
  // the scalar line is self-dual (as a module)
  CHECK(find_isomorphism(DF.module, free_module(S, {"x"})).has_value());

  for (const auto& M : {F, A, C, P}) {
    auto D = dual_module(M);
    // to_dual fixes zero and reverses the order on nonzero elements
    CHECK(is_bijection(D.to_dual, M.size()));
    CHECK(D.to_dual[M.zero] == D.module.zero);
    for (Elem a = 0; a < M.size(); ++a) {
      CHECK(D.module.negf(D.to_dual[a]) == D.to_dual[M.negf(a)]);
      if (a == M.zero) continue;
      for (Elem b = 0; b < M.size(); ++b) {
        if (b == M.zero) continue;
        CHECK(leq(M, a, b) == leq(D.module, D.to_dual[b], D.to_dual[a]));
        // dual addition of principal filters is the join downstairs
        auto j = join(M, a, b);
        const Elem got = D.module.addf(D.to_dual[a], D.to_dual[b]);
        if (j.has_value()) CHECK(got == D.to_dual[*j]);
        else CHECK(got == D.module.zero);
      }
    }
  }

  // the polygon's maximal dual elements are its four edge filters
  auto DP = dual_module(P);
  CHECK(name_set(DP.module, natural_order(DP.module).maximal) ==
        std::set<std::string>{"Fe0", "Fe1", "Fe2", "Fe3"});
  CHECK(module_dimension(DP.module) == 2);
  CHECK(dual_index(DP, principal_filter(P, idx(P, "e0"))) ==
        DP.to_dual[idx(P, "e0")]);

  // duality swaps coproducts and products
  CHECK(find_isomorphism(dual_module(C).module,
                         product_module(DF.module, DF.module))
            .has_value());
  CHECK(find_isomorphism(dual_module(A).module,
                         coproduct_module(DF.module, DF.module))
            .has_value());
}

TEST_CASE("the double dual is naturally isomorphic to the identity") {
  const Semifield& S = Semifield::finfinity();
  auto F = semifield_module(S);
  auto A = product_module(F, F);

  check_double_dual(F);
  check_double_dual(A);
  check_double_dual(polygon_module(2));
  check_double_dual(nil2_algebra());
  check_double_dual(free_module(S, {"x1", "x2"}));
  check_double_dual(semifield_module(Semifield::cyclotomic(2)));

  // naturality: the square over every homomorphism A -> F commutes
  auto DA = dual_module(A), DF = dual_module(F);
  auto DDA = dual_module(DA.module), DDF = dual_module(DF.module);
  auto etaA = double_dual_map(A, DA, DDA);
  auto etaF = double_dual_map(F, DF, DDF);
  for (const auto& phi : all_module_homs(A, F)) {
    auto phi_star = hom_dual(A, DA, F, DF, phi);
    CHECK(is_module_hom(DF.module, DA.module, phi_star));
    auto phi_star2 = hom_dual(DF.module, DDF, DA.module, DDA, phi_star);
    CHECK(is_module_hom(DDA.module, DDF.module, phi_star2));
    for (Elem a = 0; a < A.size(); ++a)
      CHECK(phi_star2[etaA[a]] == etaF[phi[a]]);
  }
}

TEST_CASE("hom duals pull filters back contravariantly") {
  const Semifield& S = Semifield::finfinity();
  auto F = semifield_module(S);
  auto A = product_module(F, F);
  auto DF = dual_module(F), DA = dual_module(A);

  // identity and zero behave
  std::vector<Elem> ident(F.size());
  for (Elem a = 0; a < F.size(); ++a) ident[a] = a;
  CHECK(hom_dual(F, DF, F, DF, ident) == ident);
  std::vector<Elem> zero_map(A.size(), F.zero);
  for (Elem v : hom_dual(A, DA, F, DF, zero_map))
    CHECK(v == DA.module.zero);

  // the first projection pulls F_1 back to the filter of (1,0)
  std::vector<Elem> pi1(A.size()), pi2(A.size()), diag(F.size()),
      antidiag(F.size());
  for (Elem a = 0; a < F.size(); ++a)
    for (Elem b = 0; b < F.size(); ++b) {
      pi1[a * F.size() + b] = a;
      pi2[a * F.size() + b] = b;
    }
  for (Elem a = 0; a < F.size(); ++a) {
    diag[a] = static_cast<Elem>(a * F.size() + a);
    antidiag[a] = static_cast<Elem>(a * F.size() + F.negf(a));
  }
  REQUIRE(is_module_hom(A, F, pi1));
  REQUIRE(is_module_hom(F, A, diag));
  REQUIRE(is_module_hom(F, A, antidiag));
  auto pi1_star = hom_dual(A, DA, F, DF, pi1);
  CHECK(is_module_hom(DF.module, DA.module, pi1_star));
  CHECK(pi1_star[DF.to_dual[idx(F, "1")]] == DA.to_dual[idx(A, "(1,0)")]);

  // (phi o psi)* = psi* o phi*, checked on two composites
  auto compose = [](const std::vector<Elem>& g, const std::vector<Elem>& f) {
    std::vector<Elem> out(f.size());
    for (size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
    return out;
  };
  auto diag_star = hom_dual(F, DF, A, DA, diag);
  auto antidiag_star = hom_dual(F, DF, A, DA, antidiag);
  // pi1 o diag = id, so diag* o pi1* = id
  CHECK(compose(diag_star, pi1_star) == ident);
  auto comp = compose(pi2, antidiag);  // a |-> -a
  CHECK(hom_dual(F, DF, F, DF, comp) ==
        compose(antidiag_star, hom_dual(A, DA, F, DF, pi2)));
}

TEST_CASE("hom enumeration matches the brute-force oracle") {
  const Semifield& S = Semifield::finfinity();
  auto F = semifield_module(S);
  auto A = product_module(F, F);
  auto C = coproduct_module(F, F);
  auto P = polygon_module(2);

  auto agree = [](const FiniteStructure& M1, const FiniteStructure& M2,
                  size_t count) {
    auto fast = all_module_homs(M1, M2);
    auto brute = all_module_homs_brute(M1, M2);
    CHECK(fast == brute);
    CHECK(fast.size() == count);
    for (const auto& h : fast) CHECK(is_module_hom(M1, M2, h));
  };
  agree(F, F, 3);
  agree(A, F, 9);
  agree(C, F, 9);
  agree(F, A, 9);
  agree(P, F, 9);
  agree(A, C, 81);

  // the identity, negation, and zero maps are all found
  auto endos = all_module_homs(F, F);
  std::vector<Elem> ident{0, 1, 2}, neg(F.size()), zero_map(F.size(), F.zero);
  for (Elem a = 0; a < F.size(); ++a) neg[a] = F.negf(a);
  CHECK(std::count(endos.begin(), endos.end(), ident) == 1);
  CHECK(std::count(endos.begin(), endos.end(), neg) == 1);
  CHECK(std::count(endos.begin(), endos.end(), zero_map) == 1);
}

TEST_CASE("generator maps extend exactly when they are saturated") {
  const Semifield& S = Semifield::finfinity();
  auto F = semifield_module(S);
  auto A = product_module(F, F);
  auto P = polygon_module(2);
  const Elem one = idx(F, "1"), mone = idx(F, "-1");

  SUBCASE("the polygon vertex assignment extends uniquely") {
    auto out = hom_extend(P, F,
                          {{idx(P, "v0"), one},
                           {idx(P, "v1"), one},
                           {idx(P, "v2"), mone},
                           {idx(P, "v3"), mone}});
    REQUIRE(out.hom.has_value());
    const auto& h = *out.hom;
    CHECK(h[idx(P, "e0")] == one);
    CHECK(h[idx(P, "e1")] == F.zero);
    CHECK(h[idx(P, "e2")] == mone);
    CHECK(h[idx(P, "e3")] == F.zero);
    // no other homomorphism restricts to these vertex images
    size_t matching = 0;
    for (const auto& g : all_module_homs(P, F))
      if (g[idx(P, "v0")] == one && g[idx(P, "v1")] == one &&
          g[idx(P, "v2")] == mone && g[idx(P, "v3")] == mone)
        ++matching;
    CHECK(matching == 1);
  }

  SUBCASE("every equivariant polygon vertex assignment extends") {
    std::set<std::vector<Elem>> found;
    for (Elem a = 0; a < F.size(); ++a)
      for (Elem b = 0; b < F.size(); ++b) {
        auto out = hom_extend(P, F,
                              {{idx(P, "v0"), a},
                               {idx(P, "v1"), b},
                               {idx(P, "v2"), F.negf(a)},
                               {idx(P, "v3"), F.negf(b)}});
        REQUIRE(out.hom.has_value());
        found.insert(*out.hom);
      }
    auto all = all_module_homs(P, F);
    CHECK(found == std::set<std::vector<Elem>>(all.begin(), all.end()));
  }

  SUBCASE("an unsaturated map is refused with a certificate") {
    // send the whole upper half of F x F to 1, except (0,1) |-> -1
    std::vector<std::pair<Elem, Elem>> gm;
    std::map<Elem, Elem> img;
    auto put = [&](const std::string& g, Elem m) {
      gm.push_back({idx(A, g), m});
      img[idx(A, g)] = m;
    };
    put("(1,1)", one);
    put("(-1,-1)", mone);
    put("(1,-1)", one);
    put("(-1,1)", mone);
    put("(1,0)", one);
    put("(-1,0)", mone);
    put("(0,1)", mone);
    put("(0,-1)", one);
    auto out = hom_extend(A, F, gm);
    REQUIRE(!out.hom.has_value());
    CHECK(out.gamma == "1");
    CHECK(out.trapped == "(0,1)");
    // validate the certificate: the named generators are all mapped above
    // gamma, their sum sits below the trapped generator, and the trapped
    // generator is not mapped above gamma
    const Elem gam = idx(F, out.gamma);
    const Elem trapped = idx(A, out.trapped);
    REQUIRE(!out.subset.empty());
    Elem sum = idx(A, out.subset[0]);
    for (const auto& nm : out.subset) {
      const Elem g = idx(A, nm);
      CHECK(leq(F, gam, img.at(g)));
      sum = A.addf(sum, g);  // idempotent, so re-adding the seed is harmless
    }
    CHECK(leq(A, sum, trapped));
    CHECK(!leq(F, gam, img.at(trapped)));
    // and honestly: no homomorphism restricts to this assignment
    for (const auto& h : all_module_homs(A, F)) {
      bool agrees = true;
      for (const auto& [g, m] : gm)
        if (h[g] != m) agrees = false;
      CHECK(!agrees);
    }
  }

  SUBCASE("malformed generator maps are rejected outright") {
    // not closed under the unit action
    CHECK_THROWS_AS(hom_extend(A, F, {{idx(A, "(1,1)"), one}}), Error);
    // not scalar-equivariant
    CHECK_THROWS_AS(hom_extend(A, F,
                               {{idx(A, "(1,1)"), one},
                                {idx(A, "(-1,-1)"), one}}),
                    Error);
    // conflicting images for one generator
    CHECK_THROWS_AS(hom_extend(A, F,
                               {{idx(A, "(1,1)"), one},
                                {idx(A, "(1,1)"), mone},
                                {idx(A, "(-1,-1)"), mone}}),
                    Error);
    // the coordinate axes do not span the product
    CHECK_THROWS_AS(hom_extend(A, F,
                               {{idx(A, "(1,0)"), one},
                                {idx(A, "(-1,0)"), mone},
                                {idx(A, "(0,1)"), one},
                                {idx(A, "(0,-1)"), mone}}),
                    Error);
  }

  SUBCASE("extension agrees with enumeration on the diagonal generators") {
    // F x F is generated by its diagonal; sweep all equivariant assignments
    std::set<std::vector<Elem>> found;
    for (Elem a = 0; a < F.size(); ++a)
      for (Elem b = 0; b < F.size(); ++b) {
        auto out = hom_extend(A, F,
                              {{idx(A, "(1,1)"), a},
                               {idx(A, "(-1,-1)"), F.negf(a)},
                               {idx(A, "(1,-1)"), b},
                               {idx(A, "(-1,1)"), F.negf(b)}});
        REQUIRE(out.hom.has_value());
        found.insert(*out.hom);
      }
    auto all = all_module_homs(A, F);
    CHECK(found == std::set<std::vector<Elem>>(all.begin(), all.end()));
  }
}
