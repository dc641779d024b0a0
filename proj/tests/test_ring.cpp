#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "catlab/ring.hpp"

using namespace catlab;

namespace {

std::vector<Elem> units_by_gcd(std::size_t n) {
  std::vector<Elem> out;
  for (std::size_t a = 0; a < n; ++a)
    if (std::gcd(a, n) == 1 || n == 1) out.push_back(static_cast<Elem>(a));
  return out;
}

std::vector<Elem> labelled(const FiniteRing& R, std::initializer_list<const char*> names) {
  std::vector<Elem> out;
  for (auto s : names) out.push_back(*R.find(s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Zmod, UnitsMatchGcd) {
  for (std::size_t n = 1; n <= 16; ++n) {
    auto R = make_zmod(n);
    std::vector<Elem> got(R->units().begin(), R->units().end());
    EXPECT_EQ(got, units_by_gcd(n)) << "n = " << n;
  }
}

TEST(Zmod, SpecExamples) {
  auto z4 = make_zmod(4);
  EXPECT_EQ(labelled(*z4, {"1", "3"}), std::vector<Elem>(z4->units().begin(), z4->units().end()));
  auto z6 = make_zmod(6);
  EXPECT_EQ(std::vector<Elem>(z6->units().begin(), z6->units().end()), (std::vector<Elem>{1, 5}));
  auto z1 = make_zmod(1);
  EXPECT_EQ(z1->zero(), z1->one());
  EXPECT_TRUE(z1->is_zero_ring());
  EXPECT_TRUE(z1->is_unit(z1->zero()));
}

TEST(Zmod, FromIntAndInverse) {
  auto R = make_zmod(9);
  EXPECT_EQ(R->from_int(-2), 7u);
  EXPECT_EQ(R->from_int(20), 2u);
  EXPECT_EQ(R->inverse(2), 5u);
  EXPECT_THROW(R->inverse(3), std::invalid_argument);
  EXPECT_EQ(R->characteristic(), 9u);
}

TEST(FiniteRing, RejectsBrokenTables) {
  // Z/3 addition with a non-distributive multiplication.
  std::vector<Elem> add{0, 1, 2, 1, 2, 0, 2, 0, 1};
  std::vector<Elem> mul{0, 0, 0, 0, 1, 2, 0, 2, 2};
  EXPECT_THROW(FiniteRing(3, add, mul, 0, 1, {"0", "1", "2"}, "bad"), RingAxiomError);
  EXPECT_THROW(FiniteRing(3, add, std::vector<Elem>(4, 0), 0, 1, {"0", "1", "2"}, "bad"), RingAxiomError);
}

TEST(Product, SizesAndUnits) {
  auto R = make_product({make_zmod(4), make_zmod(3)});
  EXPECT_EQ(R->size(), 12u);
  EXPECT_EQ(R->units().size(), 4u);
  EXPECT_EQ(R->spec(), "Z/4 x Z/3");
}

TEST(Product, IdempotentsOfZ2xZ2) {
  auto R = make_product({make_zmod(2), make_zmod(2)});
  std::size_t idem = 0;
  for (Elem r = 0; r < R->size(); ++r) idem += R->sqr(r) == r;
  EXPECT_EQ(idem, 4u);
}

TEST(Product, ZeroRingFactorIsInert) {
  auto A = make_zmod(6);
  auto R = make_product({A, make_zmod(1)});
  ASSERT_EQ(R->size(), A->size());
  // (a, 0) |-> a is a ring isomorphism.
  for (Elem x = 0; x < R->size(); ++x) {
    Elem a = *A->find(R->label(x).substr(1, R->label(x).find(',') - 1));
    for (Elem y = 0; y < R->size(); ++y) {
      Elem b = *A->find(R->label(y).substr(1, R->label(y).find(',') - 1));
      EXPECT_EQ(R->label(R->add(x, y)), "(" + A->label(A->add(a, b)) + ",0)");
      EXPECT_EQ(R->label(R->mul(x, y)), "(" + A->label(A->mul(a, b)) + ",0)");
    }
  }
}

TEST(PolyQuotient, FieldOfFour) {
  auto z2 = make_zmod(2);
  auto F = make_poly_quotient(z2, {1, 1, 1});
  EXPECT_EQ(F->size(), 4u);
  EXPECT_EQ(F->units().size(), 3u);
  Elem x = *F->find("x");
  EXPECT_EQ(F->mul(x, x), *F->find("1+x"));
  EXPECT_EQ(F->pow(x, 3), F->one());
}

TEST(PolyQuotient, DegreeOneIsBase) {
  auto base = make_zmod(5);
  auto R = make_poly_quotient(base, {0, 1});
  ASSERT_EQ(R->size(), 5u);
  for (Elem a = 0; a < 5; ++a)
    for (Elem b = 0; b < 5; ++b) {
      EXPECT_EQ(R->add(a, b), base->add(a, b));
      EXPECT_EQ(R->mul(a, b), base->mul(a, b));
    }
}

TEST(PolyQuotient, DualNumbersOverZ4) {
  auto R = make_poly_quotient(make_zmod(4), {0, 0, 1});
  EXPECT_EQ(R->size(), 16u);
  // Oracle: a + bx is a unit iff a is odd; index = a + 4b.
  std::vector<Elem> want;
  for (Elem i = 0; i < 16; ++i)
    if ((i % 4) % 2 == 1) want.push_back(i);
  EXPECT_EQ(std::vector<Elem>(R->units().begin(), R->units().end()), want);
  EXPECT_THROW(make_poly_quotient(make_zmod(4), {1, 2}), std::invalid_argument);
}

TEST(PrincipalQuotient, Examples) {
  auto z4 = make_zmod(4);
  auto q = quotient_by_principal(z4, 2);
  EXPECT_EQ(q.quotient->size(), 2u);
  EXPECT_EQ(q.project(3), q.quotient->one());
  auto id = quotient_by_principal(z4, 0);
  EXPECT_EQ(id.quotient->size(), 4u);
  for (Elem a = 0; a < 4; ++a) EXPECT_EQ(id.lift[id.project(a)], a);
  EXPECT_EQ(quotient_by_principal(make_zmod(8), 4).quotient->size(), 4u);
  EXPECT_EQ(quotient_by_principal(z4, 1).quotient->size(), 1u);
}

TEST(PrincipalQuotient, ProjectionIsRingHomWithLeastLifts) {
  for (std::size_t n : {6, 8, 12}) {
    auto R = make_zmod(n);
    for (Elem p = 0; p < n; ++p) {
      auto q = quotient_by_principal(R, p);
      const FiniteRing& S = *q.quotient;
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          ASSERT_EQ(q.project(R->add(a, b)), S.add(q.project(a), q.project(b)));
          ASSERT_EQ(q.project(R->mul(a, b)), S.mul(q.project(a), q.project(b)));
        }
      // Oracle: the least element of each coset a + pR.
      for (Elem a = 0; a < n; ++a) {
        Elem least = a;
        for (Elem r = 0; r < n; ++r) least = std::min(least, R->add(a, R->mul(p, r)));
        EXPECT_EQ(q.lift[q.project(a)], least);
      }
    }
  }
}

TEST(UnitAnalysis, Examples) {
  auto z8 = unit_analysis(*make_zmod(8));
  EXPECT_EQ(z8.radical, (std::vector<Elem>{0, 2, 4, 6}));
  EXPECT_TRUE(z8.local);
  auto F = make_poly_quotient(make_zmod(2), {1, 1, 1});
  EXPECT_EQ(unit_analysis(*F).radical, (std::vector<Elem>{F->zero()}));
  EXPECT_TRUE(unit_analysis(*F).local);
  auto z6 = unit_analysis(*make_zmod(6));
  EXPECT_EQ(z6.radical, (std::vector<Elem>{0}));
  EXPECT_EQ(z6.zero_divisors, (std::vector<Elem>{2, 3, 4}));
  EXPECT_FALSE(z6.local);
  EXPECT_FALSE(unit_analysis(*make_zmod(1)).local);
}

TEST(AdmissiblePairs, Examples) {
  auto z4 = make_zmod(4);
  EXPECT_EQ(admissible_pairs(*z4),
            (std::vector<std::pair<Elem, Elem>>{{1, 2}, {2, 1}, {2, 3}, {3, 2}}));
  // In Z/2 the condition is pq = 0, which (1, 1) violates.
  EXPECT_EQ(admissible_pairs(*make_zmod(2)),
            (std::vector<std::pair<Elem, Elem>>{{0, 0}, {0, 1}, {1, 0}}));
  auto z5 = make_zmod(5);
  auto p5 = admissible_pairs(*z5);
  EXPECT_EQ(p5.size(), 4u);
  for (auto [p, q] : p5) EXPECT_TRUE(z5->is_unit(p));
}

TEST(AdmissiblePairs, MatchIntegerOracle) {
  for (std::size_t n = 1; n <= 16; ++n) {
    std::set<std::pair<Elem, Elem>> want;
    for (Elem p = 0; p < n; ++p)
      for (Elem q = 0; q < n; ++q)
        if ((p * q + 2) % n == 0) want.insert({p, q});
    auto got = admissible_pairs(*make_zmod(n));
    EXPECT_EQ((std::set<std::pair<Elem, Elem>>(got.begin(), got.end())), want) << "n = " << n;
  }
}
