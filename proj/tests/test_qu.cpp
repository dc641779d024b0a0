#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "catlab/qu.hpp"
#include "catlab/suites.hpp"

using namespace catlab;

namespace {

RingPtr f4() { return make_poly_quotient(make_zmod(2), {1, 1, 1}); }

std::vector<std::size_t> factors(const GroupPtr& G) { return invariant_factors(*G); }

std::vector<Elem> sorted_values(const Enumerated<Elem>& U, const std::vector<GElem>& embed) {
  std::vector<Elem> out;
  for (GElem i : embed) out.push_back(U.values[i]);
  std::sort(out.begin(), out.end());
  return out;
}

// Components of Qu straight from the morphism formula, without the category.
std::size_t qu_components_oracle(const FiniteRing& R, Elem p, Elem q) {
  const std::size_t n = R.size();
  auto obj = [&](Elem a, Elem b) { return R.is_unit(R.add(R.sqr(a), R.mul(R.sqr(p), b))); };
  std::vector<std::size_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (!obj(a, b)) continue;
      for (Elem u : R.units())
        for (Elem r = 0; r < n; ++r) {
          Elem c = R.sub(R.mul(a, u), R.mul(p, r));
          Elem d = R.sub(R.sub(R.mul(R.sqr(u), b), R.mul(R.mul(q, r), R.mul(u, a))), R.sqr(r));
          parent[find(c * n + d)] = find(a * n + b);
        }
    }
  std::set<std::size_t> roots;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (obj(a, b)) roots.insert(find(a * n + b));
  return roots.size();
}

}  // namespace

TEST(Qu, ObjectsOfZ4) {
  auto Q = build_qu_f(make_pair_pq(make_zmod(4), 2, 1));
  EXPECT_EQ(Q.objects.size(), 8u);
  for (auto [a, b] : Q.objects) EXPECT_EQ(a % 2, 1u);
  EXPECT_TRUE(validate_catgroup(*Q.cat).ok);
}

TEST(Qu, RejectsBadPair) {
  EXPECT_THROW(make_pair_pq(make_zmod(4), 1, 1), std::invalid_argument);
  EXPECT_THROW(make_pair_pq(make_zmod(2), 1, 1), std::invalid_argument);
}

TEST(Qu, MorphismEndpoints) {
  auto Q = build_qu_f(make_pair_pq(make_zmod(4), 2, 1));
  const CatGroup& C = *Q.cat;
  // (1, 2) : [1,2] -> [1,0] and (3, 1) : [1,2] -> [1,2].
  Mor g = Q.morphism(Q.object(1, 0), 1, 2);
  Mor f = Q.morphism(Q.object(1, 2), 3, 1);
  EXPECT_EQ(C.dom(g), Q.object(1, 2));
  EXPECT_EQ(C.dom(f), Q.object(1, 2));
  Mor h = C.compose(g, f);
  EXPECT_EQ(Q.u_of(h), 3u);
  EXPECT_EQ(Q.r_of(h), 3u);
  EXPECT_EQ(C.dom(h), Q.object(1, 2));
  EXPECT_EQ(C.cod(h), Q.object(1, 0));
}

TEST(Qu, TensorAndFunctors) {
  auto X = build_context(make_pair_pq(make_zmod(4), 2, 1));
  const QuCat& Q = X.qu;
  EXPECT_EQ(Q.cat->tensor(Q.object(1, 1), Q.object(3, 0)), Q.object(3, 1));
  Obj x = Q.object(3, 2);
  EXPECT_EQ(X.G.units.values[X.alpha(x)], 1u);
  Mor d = X.delta.components[x];
  const auto& Gpq = X.Gpq;
  EXPECT_EQ(Gpq.modp.quotient->label(Gpq.units_p.values[Gpq.hc.label_of(d)]), "1");
  EXPECT_FALSE(verify_duality(Q));
  EXPECT_FALSE(verify_alpha_identity(Q));
}

TEST(Zpq, Examples) {
  EXPECT_EQ(z_pq_group(make_pair_pq(make_zmod(4), 2, 1)).values, (std::vector<Elem>{0, 1}));
  EXPECT_EQ(z_pq_group(make_pair_pq(make_zmod(8), 2, 3)).values, (std::vector<Elem>{0, 3}));
}

TEST(Mu2U2, Examples) {
  auto z8 = mu2_u2(*make_zmod(8));
  EXPECT_EQ(factors(z8.mu2.group), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(factors(z8.u2.group), (std::vector<std::size_t>{2, 2}));
  auto z1 = mu2_u2(*make_zmod(1));
  EXPECT_EQ(z1.mu2.group->order(), 1u);
  EXPECT_EQ(z1.u2.group->order(), 1u);
  auto z5 = mu2_u2(*make_zmod(5));
  EXPECT_EQ(sorted_values(z5.units, z5.mu2.embed), (std::vector<Elem>{1, 4}));
  EXPECT_EQ(factors(z5.u2.group), (std::vector<std::size_t>{2}));
}

TEST(GCat, Examples) {
  auto g5 = build_G(make_zmod(5));
  EXPECT_EQ(factors(pi0(*g5.hc.cat).group), (std::vector<std::size_t>{2}));
  EXPECT_EQ(factors(pi1(*g5.hc.cat).group), (std::vector<std::size_t>{2}));
  auto g1 = build_G(make_zmod(1));
  EXPECT_EQ(g1.hc.cat->num_objects(), 1u);
  EXPECT_EQ(pi1(*g1.hc.cat).group->order(), 1u);
  auto g12 = build_G(make_zmod(12));
  EXPECT_EQ(factors(pi1(*g12.hc.cat).group), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(factors(pi0(*g12.hc.cat).group), (std::vector<std::size_t>{2, 2}));
}

TEST(Gpq, Examples) {
  auto X = build_context(make_pair_pq(make_zmod(4), 2, 1));
  EXPECT_EQ(factors(pi0(*X.Gpq.hc.cat).group), (std::vector<std::size_t>{2}));
  EXPECT_EQ(pi1(*X.Gpq.hc.cat).group->order(), 1u);
  EXPECT_TRUE(verify_gpq(X.P, X.Gpq).ok());

  auto Y = build_context(make_pair_pq(make_zmod(5), 1, 3));
  EXPECT_EQ(Y.Gpq.hc.cat->num_objects(), 1u);
  EXPECT_EQ(Y.Gpq.hc.cat->num_morphisms(), 1u);
}

TEST(Gpq, DualNumbersOverZ4) {
  auto R = make_poly_quotient(make_zmod(4), {0, 0, 1});
  auto X = build_context(make_pair_pq(R, 2, 1));
  const auto& G = X.Gpq;
  Elem s = G.modp.project(*R->find("1+x"));
  Elem sq = G.units_p2.values[G.Sq(G.units_p.at(s))];
  EXPECT_EQ(sq, G.modp2.project(*R->find("1+2x")));
  EXPECT_EQ(pi1(*G.hc.cat).group->order(), 1u);
  EXPECT_TRUE(verify_gpq(X.P, G).ok());
}

TEST(Gamma, PinnedZ4Regression) {
  auto X = build_context(make_pair_pq(make_zmod(4), 2, 1));
  auto res = gamma_check(X);
  const Check* eq = res.checks.find("gamma.equivalence");
  ASSERT_NE(eq, nullptr);
  EXPECT_EQ(eq->status, Status::skipped);
  EXPECT_NE(eq->detail.find("not full"), std::string::npos) << eq->detail;
  EXPECT_FALSE(res.props.full);
  EXPECT_TRUE(res.props.faithful);
  EXPECT_EQ(res.kernel_components, 1u);
  EXPECT_EQ(factors(pi0(*X.qu.cat).group), (std::vector<std::size_t>{2}));
  for (const auto& c : res.checks.items) EXPECT_NE(c.status, Status::fail) << c.name << ": " << c.detail;

  // Oracle: no (u, r) : [1,0] -> [1,1] in Qu(Z/4; 2, 1).
  const FiniteRing& R = *X.P.R;
  int count = 0;
  for (Elem u : R.units())
    for (Elem r = 0; r < 4; ++r) {
      Elem c = R.sub(u, R.mul(2, r));
      Elem d = R.sub(R.sub(R.sqr(u), R.mul(r, u)), R.sqr(r));
      count += c == 1 && d == 0;
    }
  EXPECT_EQ(count, 0);
  EXPECT_TRUE(X.qu.cat->hom(X.qu.object(1, 0), X.qu.object(1, 1)).empty());
}

TEST(Gamma, EquivalenceWhenPIsUnit) {
  auto X = build_context(make_pair_pq(make_zmod(5), 1, 3));
  auto res = gamma_check(X);
  EXPECT_TRUE(res.checks.ok());
  EXPECT_EQ(res.checks.find("gamma.equivalence")->status, Status::pass);
  EXPECT_TRUE(res.props.equivalence);
}

TEST(Gamma, EssentiallySurjectiveOverZ8) {
  auto X = build_context(make_pair_pq(make_zmod(8), 2, 3));
  auto res = gamma_check(X);
  EXPECT_TRUE(res.checks.ok());
  EXPECT_TRUE(res.props.essentially_surjective);
}

TEST(UnitsSequence, Z9) {
  auto X = build_context(make_pair_pq(make_zmod(9), 1, 7));
  auto c = units_sequence(X);
  EXPECT_EQ(c.find("units_sequence.exact")->status, Status::pass);
  EXPECT_EQ(c.find("units_sequence.p_unit")->status, Status::pass);
  EXPECT_EQ(c.find("units_sequence.one_minus_two")->status, Status::pass) << c.find("units_sequence.one_minus_two")->detail;
  EXPECT_EQ(factors(pi0(*X.qu.cat).group), (std::vector<std::size_t>{2}));
}

TEST(UnitsSequence, SkipsWhenPNotUnit) {
  auto X = build_context(make_pair_pq(make_zmod(4), 2, 1));
  auto c = units_sequence(X);
  EXPECT_EQ(c.find("units_sequence.exact")->status, Status::pass);
  EXPECT_EQ(c.find("units_sequence.p_unit")->status, Status::skipped);
  EXPECT_EQ(c.find("units_sequence.one_minus_two")->status, Status::skipped);
}

TEST(TPush, Z5) {
  auto Q = build_qu_f(make_pair_pq(make_zmod(5), 1, 3));
  TPush tp = t_push(Q, 2);
  EXPECT_EQ(tp.target.P.p, 2u);
  EXPECT_EQ(tp.target.P.q, 4u);
  EXPECT_TRUE(validate_functor(tp.functor).ok);
  EXPECT_TRUE(functor_props(tp.functor).equivalence);
  EXPECT_THROW(t_push(Q, 0), std::invalid_argument);
}

TEST(TPush, InverseWitnessDirection) {
  auto Q = build_qu_f(make_pair_pq(make_zmod(3), 1, 1));
  TPush tp = t_push(Q, 2);
  const CatGroup& T = *tp.target.cat;
  const CatGroup& S = *Q.cat;
  for (Obj x = 0; x < S.num_objects(); ++x)
    for (Obj y = 0; y < S.num_objects(); ++y) {
      // (t, 0) : t_*X * t_*Y -> t_*(X * Y), (t^-1, 0) goes back.
      Mor mu = tp.functor.mu(x, y);
      EXPECT_EQ(T.dom(mu), T.tensor(tp.functor(x), tp.functor(y)));
      EXPECT_EQ(T.cod(mu), tp.functor(S.tensor(x, y)));
      Mor back = tp.target.morphism(T.tensor(tp.functor(x), tp.functor(y)), 2, 0);
      EXPECT_EQ(T.inverse_of(back), mu);
    }
  EXPECT_TRUE(tpush_checks(Q).ok());
}

TEST(TPush, UnitIsIdentity) {
  auto Q = build_qu_f(make_pair_pq(make_zmod(4), 2, 1));
  TPush tp = t_push(Q, 1);
  EXPECT_TRUE(tp.functor.strict());
  std::vector<Obj> ids(Q.cat->num_objects());
  std::iota(ids.begin(), ids.end(), 0);
  EXPECT_EQ(tp.functor.on_objects, ids);
}

TEST(VS, Z4) {
  auto X = build_context(make_pair_pq(make_zmod(4), 2, 1));
  VSCat vs = build_VS(X);
  EXPECT_EQ(vs.s_objects, (std::vector<Elem>{1, 3}));
  EXPECT_EQ(pi0(*vs.S).group->order(), 1u);
  auto c = ses_VS(X, vs);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.find("S.vanishes")->status, Status::pass);
}

TEST(VS, F4PZero) {
  auto X = build_context(make_pair_pq(f4(), 0, 1));
  VSCat vs = build_VS(X);
  auto c = ses_VS(X, vs);
  EXPECT_TRUE(c.ok());
  EXPECT_EQ(c.find("sQu.p_zero_formula")->status, Status::pass);
  EXPECT_EQ(factors(pi0(*X.qu.cat).group), (std::vector<std::size_t>{2}));
}

TEST(VS, Z5SVanishes) {
  auto X = build_context(make_pair_pq(make_zmod(5), 1, 3));
  VSCat vs = build_VS(X);
  EXPECT_EQ(pi0(*vs.S).group->order(), 1u);
  EXPECT_TRUE(ses_VS(X, vs).ok());
}

TEST(Pi1, IdentificationAcrossRings) {
  std::vector<RingPtr> rings{make_zmod(3), make_zmod(4), make_zmod(6), make_zmod(8), make_zmod(9), f4(),
                             make_poly_quotient(make_zmod(2), {0, 0, 1})};
  for (const auto& R : rings)
    for (auto [p, q] : admissible_pairs(*R)) {
      auto P = make_pair_pq(R, p, q);
      // (1 + pr)^2 = 1 on Z_pq, since pq = -2.
      for (Elem r = 0; r < R->size(); ++r) {
        if (R->sqr(r) != R->mul(q, r)) continue;
        EXPECT_EQ(R->sqr(R->add(R->one(), R->mul(p, r))), R->one());
      }
      auto Q = build_qu_f(P);
      auto zpq = z_pq_group(P);
      EXPECT_TRUE(pi1_identification(Q, zpq, pi1(*Q.cat)).bijective()) << R->spec() << " " << P.label();
    }
}

TEST(DisFree, Examples) {
  auto z8 = make_zmod(8);
  DisCat D = dis_free(build_G(z8), z8);
  EXPECT_EQ(factors(pi0(*D.cat).group), (std::vector<std::size_t>{2, 2}));
  EXPECT_TRUE(validate_catgroup(*D.cat).ok);

  auto z1 = make_zmod(1);
  DisCat D1 = dis_free(build_G(z1), z1);
  EXPECT_EQ(D1.cat->num_objects(), 1u);

  auto z5 = make_zmod(5);
  auto G5 = build_G(z5);
  DisCat D5 = dis_free(G5, z5);
  EXPECT_TRUE(validate_functor(D5.to_G).ok);
  EXPECT_TRUE(functor_props(D5.to_G).equivalence);
}

TEST(SQu, ComponentsMatchUnionFindOracle) {
  struct Case {
    RingPtr R;
    Elem p, q;
  };
  std::vector<Case> cases{{make_zmod(4), 2, 1}, {f4(), 0, 1}, {make_zmod(8), 2, 3}, {make_zmod(9), 1, 7},
                          {make_zmod(6), 2, 2}, {make_zmod(2), 0, 1}};
  for (const auto& c : cases) {
    auto Q = build_qu_f(make_pair_pq(c.R, c.p, c.q));
    EXPECT_EQ(pi0(*Q.cat).group->order(), qu_components_oracle(*c.R, c.p, c.q)) << c.R->spec();
  }
  auto z4 = build_qu_f(make_pair_pq(make_zmod(4), 2, 1));
  EXPECT_EQ(describe(*pi0(*z4.cat).group), "Z/2");
  auto qf = build_qu_f(make_pair_pq(f4(), 0, 1));
  EXPECT_EQ(describe(*pi0(*qf.cat).group), "Z/2");
}

TEST(Suites, FreeSuitePassesOnSmallRings) {
  std::vector<RingPtr> rings{make_zmod(1), make_zmod(2), make_zmod(3), make_zmod(4), f4()};
  for (const auto& R : rings)
    for (auto [p, q] : admissible_pairs(*R)) {
      auto X = build_context(make_pair_pq(R, p, q));
      VSCat vs = build_VS(X);
      auto c = free_suite(X, vs);
      for (const auto& k : c.items)
        EXPECT_NE(k.status, Status::fail) << R->spec() << " " << X.P.label() << " " << k.name << ": " << k.detail;
      auto s = stack_suite(X);
      EXPECT_TRUE(s.ok()) << R->spec();
    }
}
