// SPDX-License-Identifier: MIT
#include "finalg/congruence.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "finalg/constructions.hpp"
#include "finalg/error.hpp"
#include "finalg/structure.hpp"

using namespace finalg;

namespace {

Elem idx(const FiniteStructure& M, const std::string& name) {
  auto i = M.index_of(name);
  REQUIRE_MESSAGE(i.has_value(), "no element named " << name);
  return *i;
}

Ideal ideal_of(const FiniteStructure& M, const std::vector<std::string>& names) {
  Ideal I;
  for (const auto& nm : names) I.push_back(idx(M, nm));
  std::sort(I.begin(), I.end());
  return I;
}

std::vector<std::pair<Elem, Elem>> pairs_of(
    const FiniteStructure& M,
    const std::vector<std::pair<std::string, std::string>>& named) {
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& [a, b] : named) out.emplace_back(idx(M, a), idx(M, b));
  return out;
}

std::set<std::set<std::string>> block_names(const FiniteStructure& M,
                                            const Congruence& C) {
  std::set<std::set<std::string>> out;
  for (const auto& blk : congruence_blocks(C)) {
    std::set<std::string> b;
    for (Elem e : blk) b.insert(M.names[e]);
    out.insert(b);
  }
  return out;
}

FiniteStructure finfty_alg() { return semifield_module(Semifield::finfinity()); }

FiniteStructure fxf_algebra() {
  auto F = finfty_alg();
  return product_module(F, F);
}

// No congruence with the given kernel sits strictly above C.
void check_kernel_maximality(const FiniteStructure& M, const Ideal& I,
                             const Congruence& C) {
  bool found_self = false;
  for (const auto& D : enumerate_congruences(M)) {
    if (kernel(M, D).ideal != I) continue;
    if (D == C) found_self = true;
    if (congruence_leq(C, D)) CHECK(D == C);
  }
  CHECK(found_self);
}

}  // namespace

TEST_CASE("ideals are recognized and non-ideals rejected") {
  auto F = finfty_alg();
  CHECK(is_ideal(F, {0}));
  CHECK(is_ideal(F, {0, 1, 2}));
  // {0, 1} is not closed under the scalar action by -1
  CHECK_FALSE(is_ideal(F, ideal_of(F, {"0", "1"})));
  CHECK_THROWS_AS(is_ideal(F, {1, 0}), Error);  // must be sorted
  CHECK_THROWS_AS(is_ideal(F, {0, 99}), Error);

  auto P = polygon_module(2);
  CHECK(is_ideal(P, ideal_of(P, {"0", "e0", "e2"})));
  CHECK_FALSE(is_ideal(P, ideal_of(P, {"0", "e0"})));  // -e0 = e2 missing
  CHECK_FALSE(is_ideal(P, ideal_of(P, {"0", "v0", "v2"})));  // v0+v1 escapes

  auto A = fxf_algebra();
  CHECK(is_algebra_ideal(A, ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)"})));
  CHECK(is_algebra_ideal(
      A, ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)", "(1,0)", "(-1,0)"})));
  CHECK_FALSE(is_ideal(A, ideal_of(A, {"(0,0)", "(1,1)", "(-1,-1)"})));
  CHECK_THROWS_AS(is_algebra_ideal(polygon_module(2), {0}), Error);

  auto N = nil2_algebra();
  CHECK(is_algebra_ideal(N, ideal_of(N, {"0", "x", "-x"})));
  CHECK_FALSE(is_ideal(N, ideal_of(N, {"0", "x"})));
}

TEST_CASE("minimal congruence collapses exactly the ideal") {
  auto F = finfty_alg();
  CHECK(minimal_congruence(F, {0}).is_diagonal());
  CHECK(minimal_congruence(F, {0, 1, 2}).is_full());
  CHECK_THROWS_AS(minimal_congruence(F, ideal_of(F, {"0", "1"})), Error);

  auto N = nil2_algebra();
  auto C = minimal_congruence(N, ideal_of(N, {"0", "x", "-x"}));
  CHECK(block_names(N, C) ==
        std::set<std::set<std::string>>{{"0", "x", "-x"}, {"1"}, {"-1"}});
  CHECK(is_congruence(N, C));

  auto A = fxf_algebra();
  auto CA = minimal_congruence(A, ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)"}));
  CHECK(CA.block_count == 7);
  CHECK(kernel(A, CA).ideal == ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)"}));
}

TEST_CASE("congruence closure matches the expected partitions") {
  auto F = finfty_alg();
  CHECK(cong_closure(F, {}).is_diagonal());
  CHECK(cong_closure(F, pairs_of(F, {{"1", "-1"}})).is_full());
  CHECK(cong_closure(F, pairs_of(F, {{"1", "0"}})).is_full());

  auto P = polygon_module(2);
  auto C = cong_closure(P, pairs_of(P, {{"v0", "v1"}}));
  CHECK(block_names(P, C) ==
        std::set<std::set<std::string>>{{"0", "e1", "e3"},
                                        {"v0", "v1", "e0"},
                                        {"v2", "v3", "e2"}});
  CHECK(is_congruence(P, C));
  CHECK(kernel(P, C).ideal == ideal_of(P, {"0", "e1", "e3"}));

  auto N = nil2_algebra();
  auto CN = cong_closure(N, pairs_of(N, {{"x", "0"}}));
  CHECK(block_names(N, CN) ==
        std::set<std::set<std::string>>{{"0", "x", "-x"}, {"1"}, {"-1"}});

  // closure is deterministic: same generators, same partition and block ids
  auto C2 = cong_closure(P, pairs_of(P, {{"v0", "v1"}}));
  CHECK(C.block == C2.block);
}

TEST_CASE("closure agrees with the naive relation-matrix oracle on random instances") {
  std::vector<FiniteStructure> pool;
  pool.push_back(finfty_alg());
  pool.push_back(semifield_module(Semifield::cyclotomic(2)));
  pool.push_back(semifield_module(Semifield::cyclotomic(3)));
  pool.push_back(nil2_algebra());
  pool.push_back(fxf_algebra());
  pool.push_back(coproduct_module(finfty_alg(), finfty_alg()));
  pool.push_back(free_module(Semifield::finfinity(), {"x", "y"}));
  pool.push_back(polygon_module(2));
  for (const auto& M : pool) REQUIRE(M.size() <= 12);

  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& M = pool[rng() % pool.size()];
    const size_t n = M.size();
    std::vector<std::pair<Elem, Elem>> pairs;
    const size_t count = rng() % 4;
    for (size_t i = 0; i < count; ++i)
      pairs.emplace_back(static_cast<Elem>(rng() % n),
                         static_cast<Elem>(rng() % n));
    auto fast = cong_closure(M, pairs);
    auto slow = cong_closure_naive(M, pairs);
    REQUIRE(fast == slow);
    REQUIRE(is_congruence(M, fast));
    auto Q = quotient_structure(M, fast);  // axiom suite runs inside
    REQUIRE(Q.size() == fast.block_count);
  }
}

TEST_CASE("kernels of closures are ideals with the expected members") {
  auto F = finfty_alg();
  auto diag = cong_closure(F, {});
  CHECK(kernel(F, diag).is_trivial);
  CHECK(kernel(F, diag).ideal == Ideal{0});
  auto full = cong_closure(F, pairs_of(F, {{"1", "-1"}}));
  CHECK_FALSE(kernel(F, full).is_trivial);
  CHECK(kernel(F, full).ideal == Ideal{0, 1, 2});

  auto N = nil2_algebra();
  auto CN = cong_closure(N, pairs_of(N, {{"x", "0"}}));
  CHECK(kernel(N, CN).ideal == ideal_of(N, {"0", "x", "-x"}));
}

TEST_CASE("quotients carry induced tables and canonical names") {
  auto A = fxf_algebra();
  // identify elements sharing a first coordinate: generated by ((1,1), (1,0))
  auto C = cong_closure(A, pairs_of(A, {{"(1,1)", "(1,0)"}}));
  CHECK(C.block_count == 3);
  auto Q = quotient_structure(A, C);
  REQUIRE(Q.size() == 3);
  CHECK(Q.is_algebra());
  CHECK(Q.names[Q.zero] == "(0,0)");
  auto iso = find_isomorphism(Q, finfty_alg());
  CHECK(iso.has_value());

  // quotient by the diagonal is the structure itself up to isomorphism
  auto QD = quotient_structure(A, cong_closure(A, {}));
  CHECK(QD.size() == A.size());
  CHECK(find_isomorphism(QD, A).has_value());

  // quotient by the full congruence is the one-point module
  auto F = finfty_alg();
  auto QF = quotient_structure(F, cong_closure(F, pairs_of(F, {{"1", "-1"}})));
  CHECK(QF.size() == 1);

  // a partition that is not a congruence is rejected
  Congruence bad;
  bad.block = {0, 0, 1};  // relates 0 and 1 but not -1 and 0
  bad.block_count = 2;
  CHECK_THROWS_AS(quotient_structure(F, bad), Error);
}

TEST_CASE("congruence comparison orders partitions by refinement") {
  auto A = fxf_algebra();
  auto diag = cong_closure(A, {});
  auto minc1 = cong_closure(A, pairs_of(A, {{"(0,1)", "(0,0)"}}));
  auto pi1 = cong_closure(A, pairs_of(A, {{"(1,1)", "(1,0)"}}));
  auto full = cong_closure(A, pairs_of(A, {{"(1,1)", "(0,0)"}}));
  CHECK(full.is_full());
  CHECK(minc1.block_count == 7);
  CHECK(congruence_leq(diag, minc1));
  CHECK(congruence_leq(minc1, pi1));
  CHECK(congruence_leq(pi1, full));
  CHECK_FALSE(congruence_leq(pi1, minc1));
  CHECK_FALSE(congruence_leq(pi1, diag));
  CHECK(congruence_leq(pi1, pi1));
}

TEST_CASE("maximal filters avoiding an ideal, and the one-directional contrast") {
  auto F = finfty_alg();
  auto mf = maximal_filters_avoiding(F, {0});
  REQUIRE(mf.size() == 2);
  CHECK(maximal_filters_avoiding(F, {0, 1, 2}).empty());

  // The membership-in-both-directions law is strictly stronger than asking
  // only that summands of members be members: {1, -1} satisfies the weaker
  // one-directional reading but is not a filter, because 1 + (-1) = 0 drops
  // out of the set.
  auto one_directional = [&](const std::vector<Elem>& set) {
    std::vector<uint8_t> in(F.size(), 0);
    for (Elem e : set) in[e] = 1;
    if (in[F.zero]) return false;
    for (Elem a = 0; a < F.size(); ++a)
      for (Elem b = 0; b < F.size(); ++b)
        if (in[F.addf(a, b)] && (!in[a] || !in[b])) return false;
    return true;
  };
  std::vector<Elem> pm = {idx(F, "1"), idx(F, "-1")};
  std::sort(pm.begin(), pm.end());
  CHECK(one_directional(pm));
  CHECK_FALSE(is_filter(F, pm));
  // the whole nonzero part always passes the one-directional reading
  CHECK(one_directional({1, 2}));

  auto P = polygon_module(2);
  auto pmf = maximal_filters_avoiding(P, ideal_of(P, {"0", "e0", "e2"}));
  REQUIRE(pmf.size() == 2);
  std::set<std::set<std::string>> got;
  for (const auto& f : pmf) {
    std::set<std::string> names;
    for (Elem e : f) names.insert(P.names[e]);
    got.insert(names);
  }
  CHECK(got == std::set<std::set<std::string>>{{"e1", "v1", "v2"},
                                               {"e3", "v3", "v0"}});
}

TEST_CASE("separability holds on the standard fixtures") {
  CHECK(is_separable(finfty_alg()));
  CHECK(is_separable(polygon_module(2)));
  CHECK(is_separable(module_reduct(nil2_algebra())));
  CHECK(is_separable(module_reduct(fxf_algebra())));
  CHECK(is_quasiseparable(nil2_algebra()));
  CHECK(is_quasiseparable(fxf_algebra()));
  CHECK(is_quasiseparable(finfty_alg()));
}

TEST_CASE("largest module congruence with a prescribed kernel") {
  auto F = finfty_alg();
  CHECK(max_congruence_module(F, {0}).is_diagonal());
  CHECK(max_congruence_module(F, {0, 1, 2}).is_full());
  CHECK_THROWS_AS(max_congruence_module(F, ideal_of(F, {"0", "1"})), Error);

  auto A = fxf_algebra();
  Ideal col = ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)"});
  auto C = max_congruence_module(A, col);
  CHECK(C.block_count == 3);
  CHECK(block_names(A, C) ==
        std::set<std::set<std::string>>{
            {"(0,0)", "(0,1)", "(0,-1)"},
            {"(1,0)", "(1,1)", "(1,-1)"},
            {"(-1,0)", "(-1,1)", "(-1,-1)"}});
  auto Q = quotient_structure(module_reduct(A), C);
  CHECK(find_isomorphism(Q, module_reduct(finfty_alg())).has_value());
  check_kernel_maximality(module_reduct(A), col, C);

  auto P = polygon_module(2);
  CHECK(max_congruence_module(P, {0}).is_diagonal());
  Ideal edge = ideal_of(P, {"0", "e0", "e2"});
  auto CP = max_congruence_module(P, edge);
  CHECK(block_names(P, CP) ==
        std::set<std::set<std::string>>{{"0", "e0", "e2"},
                                        {"v0", "v3", "e3"},
                                        {"v1", "v2", "e1"}});
  CHECK(find_isomorphism(quotient_structure(P, CP),
                         module_reduct(finfty_alg()))
            .has_value());
  check_kernel_maximality(P, edge, CP);
  check_kernel_maximality(P, {0}, max_congruence_module(P, {0}));
}

TEST_CASE("largest algebra congruence with a prescribed kernel") {
  auto F = finfty_alg();
  CHECK(max_congruence_algebra(F, {0}).is_diagonal());

  auto A = fxf_algebra();
  Ideal col = ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)"});
  auto C = max_congruence_algebra(A, col);
  CHECK(C.block_count == 3);
  CHECK(block_names(A, C) ==
        std::set<std::set<std::string>>{
            {"(0,0)", "(0,1)", "(0,-1)"},
            {"(1,0)", "(1,1)", "(1,-1)"},
            {"(-1,0)", "(-1,1)", "(-1,-1)"}});
  CHECK(find_isomorphism(quotient_structure(A, C), finfty_alg()).has_value());

  auto N = nil2_algebra();
  auto CN = max_congruence_algebra(N, {0});
  CHECK(CN.is_diagonal());
  CHECK_FALSE(CN.related(idx(N, "x"), idx(N, "0")));
  auto CK = max_congruence_algebra(N, ideal_of(N, {"0", "x", "-x"}));
  CHECK(block_names(N, CK) ==
        std::set<std::set<std::string>>{{"0", "x", "-x"}, {"1"}, {"-1"}});
  CHECK(find_isomorphism(quotient_structure(N, CK), finfty_alg()).has_value());

  CHECK_THROWS_AS(
      max_congruence_algebra(A, ideal_of(A, {"(0,0)", "(1,1)", "(-1,-1)"})),
      Error);
  CHECK_THROWS_AS(max_congruence_algebra(polygon_module(2), {0}), Error);
}

TEST_CASE("quasimaximal filter families on the fixtures") {
  auto F = finfty_alg();
  CHECK(quasimaximal_filters_avoiding(F, {0}).size() == 2);

  auto A = fxf_algebra();
  auto qf = quasimaximal_filters_avoiding(A, {0});
  CHECK(qf.size() == 4);
  for (const auto& f : qf) CHECK(is_filter(A, f));

  auto N = nil2_algebra();
  auto qn = quasimaximal_filters_avoiding(N, {0});
  CHECK(qn.size() == 4);  // each nonzero element sits in its own filter
  std::set<std::set<std::string>> got;
  for (const auto& f : qn) {
    std::set<std::string> names;
    for (Elem e : f) names.insert(N.names[e]);
    got.insert(names);
  }
  CHECK(got == std::set<std::set<std::string>>{{"1"}, {"-1"}, {"x"}, {"-x"}});
}

TEST_CASE("annihilator congruences contain the base congruence") {
  auto F = finfty_alg();
  auto diag = cong_closure(F, {});
  CHECK(ann_congruence(F, diag, idx(F, "1")).is_diagonal());
  CHECK(ann_congruence(F, diag, idx(F, "0")).is_full());

  auto A = fxf_algebra();
  auto diagA = cong_closure(A, {});
  auto C = ann_congruence(A, diagA, idx(A, "(1,0)"));
  CHECK(block_names(A, C) ==
        std::set<std::set<std::string>>{
            {"(0,0)", "(0,1)", "(0,-1)"},
            {"(1,0)", "(1,1)", "(1,-1)"},
            {"(-1,0)", "(-1,1)", "(-1,-1)"}});

  auto N = nil2_algebra();
  auto diagN = cong_closure(N, {});
  auto CN = ann_congruence(N, diagN, idx(N, "x"));
  CHECK(block_names(N, CN) ==
        std::set<std::set<std::string>>{{"0", "x", "-x"}, {"1"}, {"-1"}});

  // containment holds for every base congruence and element
  for (const auto& D : enumerate_congruences(N))
    for (Elem a = 0; a < N.size(); ++a)
      CHECK(congruence_leq(D, ann_congruence(N, D, a)));
}

TEST_CASE("the congruence lattices of the small fixtures are exactly right") {
  CHECK(enumerate_congruences(finfty_alg()).size() == 2);
  CHECK(enumerate_congruences(semifield_module(Semifield::cyclotomic(2))).size() ==
        2);

  auto N = nil2_algebra();
  auto latticeN = enumerate_congruences(N);
  CHECK(latticeN.size() == 3);

  auto A = fxf_algebra();
  auto lattice = enumerate_congruences(A);
  REQUIRE(lattice.size() == 7);
  std::set<std::vector<Elem>> partitions;
  for (const auto& C : lattice) {
    CHECK(is_congruence(A, C));
    partitions.insert(C.block);
  }
  auto block_vec = [&](const Congruence& C) { return C.block; };
  auto diag = cong_closure(A, {});
  auto pi1 = cong_closure(A, pairs_of(A, {{"(1,1)", "(1,0)"}}));
  auto pi2 = cong_closure(A, pairs_of(A, {{"(1,1)", "(0,1)"}}));
  auto full = cong_closure(A, pairs_of(A, {{"(1,1)", "(0,0)"}}));
  auto minc1 = minimal_congruence(A, ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)"}));
  auto minc2 = minimal_congruence(A, ideal_of(A, {"(0,0)", "(1,0)", "(-1,0)"}));
  auto cross = minimal_congruence(
      A, ideal_of(A, {"(0,0)", "(0,1)", "(0,-1)", "(1,0)", "(-1,0)"}));
  for (const auto& C : {diag, pi1, pi2, full, minc1, minc2, cross})
    CHECK(partitions.count(block_vec(C)) == 1);
  CHECK(pi1.block_count == 3);
  CHECK(pi2.block_count == 3);
  CHECK(minc1.block_count == 7);
  CHECK(minc2.block_count == 7);
  CHECK(congruence_leq(minc1, pi1));
  CHECK(congruence_leq(minc2, pi2));
  CHECK_FALSE(congruence_leq(cross, pi1));
  CHECK(cross.block_count == 5);
}

TEST_CASE("semifield carriers index their elements consistently") {
  auto S = &Semifield::finfinity();
  auto F = semifield_carrier(*S);
  REQUIRE(F.size() == 3);
  auto M = semifield_module(*S);
  for (Elem i = 0; i < F.size(); ++i) CHECK(F.name(i) == M.names[i]);
  CHECK(F.index(S->one()) == Elem{1});
  CHECK(F.index(S->zero()) == Elem{0});
  CHECK_THROWS_AS(semifield_carrier(*S, 4), Error);

  const auto& L = Semifield::lexmax(Semifield::finfinity());
  CHECK_THROWS_AS(semifield_carrier(L), Error);
  auto FL = semifield_carrier(L, 4);
  CHECK(FL.size() == 1 + 2 * 9);
  CHECK(FL.index(L.unit(0, 5)) == std::nullopt);
  auto back = FL.index(L.unit(0, -4));
  REQUIRE(back.has_value());
  CHECK(FL.elems[*back] == L.unit(0, -4));
}

TEST_CASE("every proper congruence of a semifield has trivial kernel") {
  for (const Semifield* S :
       {&Semifield::finfinity(), &Semifield::cyclotomic(2),
        &Semifield::cyclotomic(3)}) {
    auto M = semifield_module(*S);
    for (const auto& C : enumerate_congruences(M))
      if (!C.is_full()) CHECK(kernel(M, C).is_trivial);
  }
}

TEST_CASE("the nonzero-sum congruence is the largest proper one on fields") {
  for (const Semifield* S :
       {&Semifield::finfinity(), &Semifield::cyclotomic(2),
        &Semifield::cyclotomic(3)}) {
    auto F = semifield_carrier(*S);
    auto C = field_max_congruence(F);
    CHECK(C.is_diagonal());  // group-rule sums of distinct units vanish
    auto M = semifield_module(*S);
    for (const auto& D : enumerate_congruences(M)) {
      if (D.is_full()) continue;
      CHECK(congruence_leq(D, C));
    }
  }

  const auto& L = Semifield::lexmax(Semifield::finfinity());
  auto F = semifield_carrier(L, 4);
  auto C = field_max_congruence(F);
  CHECK(C.block_count == 3);  // zero, the positive ray, the negative ray
  auto at = [&](Scalar s) {
    auto i = F.index(s);
    REQUIRE(i.has_value());
    return *i;
  };
  CHECK(C.related(at(L.unit(0, 1)), at(L.one())));
  CHECK(C.related(at(L.unit(0, -3)), at(L.unit(0, 2))));
  CHECK_FALSE(C.related(at(L.one()), at(L.minus_one())));
  CHECK_FALSE(C.related(at(L.one()), Elem{0}));
  CHECK(C.related(Elem{0}, Elem{0}));
}

TEST_CASE("the class of one generated by a single identification") {
  const auto& Fi = Semifield::finfinity();
  auto F = semifield_carrier(Fi);
  CHECK(unit_class_generated(F, Fi.one()) == std::vector<Elem>{1});
  CHECK(unit_class_generated(F, Fi.minus_one()) ==
        std::vector<Elem>{0, 1, 2});  // identifying 1 with -1 collapses all
  CHECK_THROWS_AS(unit_class_generated(F, Fi.zero()), Error);

  const auto& C2 = Semifield::cyclotomic(2);
  auto F2 = semifield_carrier(C2);
  auto whole2 = unit_class_generated(F2, C2.unit(1));  // a primitive root
  CHECK(whole2.size() == F2.size());
  // identifying 1 with -1 is improper even though -1 generates only {1,-1}
  auto half2 = unit_class_generated(F2, C2.minus_one());
  CHECK(half2.size() == F2.size());

  const auto& L = Semifield::lexmax(Semifield::finfinity());
  auto FL = semifield_carrier(L, 4);
  std::vector<Elem> expected;
  for (int32_t e = -4; e <= 4; ++e) {
    auto i = FL.index(L.unit(0, e));
    REQUIRE(i.has_value());
    expected.push_back(*i);
  }
  std::sort(expected.begin(), expected.end());
  CHECK(unit_class_generated(FL, L.unit(0, 1)) == expected);
  CHECK(unit_class_generated(FL, L.unit(0, -1)) == expected);
  CHECK(unit_class_generated(FL, L.one()) ==
        std::vector<Elem>{*FL.index(L.one())});
  // identifying 1 with -x forces 1 ~ 0, so everything collapses
  auto whole = unit_class_generated(FL, L.unit(L.minus_one_g(), 1));
  CHECK(whole.size() == FL.size());
  auto wholem = unit_class_generated(FL, L.minus_one());
  CHECK(wholem.size() == FL.size());
}
