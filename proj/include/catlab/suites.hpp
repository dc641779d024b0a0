#pragma once
// Check suites over one ring and pair (p, q), and the group table of a pair.
//
//   free   : the cat-groups Qu_f, G, G^{pq}, V, S, the comparison functors,
//            six-term sequences and t_* equivalences
//   galois : the Hopf algebra J, realization, classification, cotensor
//   stack  : Dis_free against G, and the identifications of G^{pq}

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "catlab/abgroup.hpp"
#include "catlab/catgroup.hpp"
#include "catlab/check.hpp"
#include "catlab/galois.hpp"
#include "catlab/qu.hpp"
#include "catlab/ring.hpp"

namespace catlab {

using GroupTable = std::vector<std::pair<std::string, std::vector<std::size_t>>>;

inline GroupTable group_table(const PairContext& X, const VSCat& vs) {
  const FiniteRing& R = *X.P.R;
  auto uR = mu2_u2(R);
  auto uP = mu2_u2(*X.Gpq.modp2.quotient);
  GroupTable t;
  auto put = [&](std::string name, const FinAbGroup& G) { t.emplace_back(std::move(name), invariant_factors(G)); };
  put("Z_pq", *z_pq_group(X.P).group);
  put("mu2", *uR.mu2.group);
  put("U2", *uR.u2.group);
  put("U2_mod_p2", *uP.u2.group);
  auto pis = [&](const std::string& name, const CatGroup& C) {
    put("pi0_" + name, *pi0(C).group);
    put("pi1_" + name, *pi1(C).group);
  };
  pis("Qu", *X.qu.cat);
  pis("G", *X.G.hc.cat);
  pis("Gpq", *X.Gpq.hc.cat);
  pis("V", *vs.V.cat);
  pis("S", *vs.S);
  return t;
}

inline void expect_valid(CheckList& out, const std::string& name, const CatGroup& C,
                         const ValidationOptions& opts) {
  auto r = validate_catgroup(C, opts);
  out.expect(name, r.ok, r.law + ": " + r.witness, r.summary());
}

inline void expect_functor(CheckList& out, const std::string& name, const MonFunctor& F,
                           const ValidationOptions& opts) {
  auto r = validate_functor(F, opts);
  out.expect(name, r.ok, r.law + ": " + r.witness, r.summary());
}

// ---------------------------------------------------------------------------
// Random commuting squares of abelian groups whose cyclic types come from R:
// its additive group, units and square roots of 1.

struct RandomSquare {
  HomCatGroup A, B;  // G_alpha, G_beta
  GroupHom phi0, phi1;
};

inline std::vector<std::vector<std::size_t>> cyclic_types(const FiniteRing& R) {
  auto ug = mu2_u2(R);
  std::vector<std::vector<std::size_t>> types{invariant_factors(*additive_group(R)),
                                              invariant_factors(*ug.units.group),
                                              invariant_factors(*ug.mu2.group)};
  for (auto& t : types)
    if (t.empty()) t = {1};
  return types;
}

inline GroupHom random_hom(std::mt19937_64& rng, const std::vector<std::size_t>& d, const GroupPtr& G,
                           const GroupPtr& H) {
  std::vector<GElem> images;
  for (std::size_t di : d) {
    std::vector<GElem> cand;
    for (GElem h = 0; h < H->order(); ++h)
      if (H->times(h, di) == H->identity()) cand.push_back(h);
    images.push_back(cand[detail::pick<std::size_t>(rng, cand.size())]);
  }
  return hom_from_generators(d, G, H, images);
}

// alpha : G0 -> G1, phi1 : G1 -> H1, chi : G0 -> K, psi : K -> H1;
// H0 = G0 x K, phi0(g) = (g, chi g), beta(g, k) = phi1 alpha g - psi chi g + psi k.
inline RandomSquare random_square(std::mt19937_64& rng, const std::vector<std::vector<std::size_t>>& types) {
  auto pick_type = [&] { return types[detail::pick<std::size_t>(rng, types.size())]; };
  auto dG0 = pick_type(), dG1 = pick_type(), dH1 = pick_type(), dK = pick_type();
  GroupPtr G0 = cyclic_product(dG0), G1 = cyclic_product(dG1), H1 = cyclic_product(dH1),
           K = cyclic_product(dK);
  std::vector<std::size_t> dH0 = dG0;
  dH0.insert(dH0.end(), dK.begin(), dK.end());
  GroupPtr H0 = cyclic_product(dH0);
  GroupHom alpha = random_hom(rng, dG0, G0, G1);
  GroupHom phi1 = random_hom(rng, dG1, G1, H1);
  GroupHom chi = random_hom(rng, dG0, G0, K);
  GroupHom psi = random_hom(rng, dK, K, H1);
  const std::size_t n0 = G0->order();
  std::vector<GElem> p0(n0), b(H0->order());
  for (GElem g = 0; g < n0; ++g) p0[g] = static_cast<GElem>(g + n0 * chi(g));
  for (GElem x = 0; x < H0->order(); ++x) {
    GElem g = static_cast<GElem>(x % n0), k = static_cast<GElem>(x / n0);
    b[x] = H1->op(H1->op(phi1(alpha(g)), H1->inverse(psi(chi(g)))), psi(k));
  }
  GroupHom beta(H0, H1, std::move(b));
  return RandomSquare{catgroup_from_hom(alpha, "G_alpha"), catgroup_from_hom(beta, "G_beta"),
                      GroupHom(G0, H0, std::move(p0)), std::move(phi1)};
}

inline CheckList random_square_checks(const FiniteRing& R, std::size_t count, std::uint64_t seed) {
  CheckList out;
  std::mt19937_64 rng(seed);
  auto types = cyclic_types(R);
  std::string bad;
  for (std::size_t i = 0; i < count && bad.empty(); ++i) {
    RandomSquare sq = random_square(rng, types);
    MonFunctor F = square_functor(sq.A, sq.B, sq.phi0, sq.phi1);
    SixTerm st = six_term(F);
    if (!st.report.exact) bad = "square " + std::to_string(i) + ": " + st.report.witness;
  }
  out.expect("six_term.random_squares", bad.empty(), bad, std::to_string(count) + " squares");
  return out;
}

// ---------------------------------------------------------------------------

inline CheckList free_suite(const PairContext& X, const VSCat& vs, const ValidationOptions& opts = {}) {
  CheckList out;
  expect_valid(out, "catgroup.Qu", *X.qu.cat, opts);
  expect_valid(out, "catgroup.G", *X.G.hc.cat, opts);
  expect_valid(out, "catgroup.Gpq", *X.Gpq.hc.cat, opts);
  expect_valid(out, "catgroup.V", *vs.V.cat, opts);
  expect_valid(out, "catgroup.S", *vs.S, opts);

  auto dual = verify_duality(X.qu);
  out.expect("Qu.duality", !dual, dual.value_or(""));
  auto aid = verify_alpha_identity(X.qu);
  out.expect("Qu.alpha_identity", !aid, aid.value_or(""));
  try {
    auto zpq = z_pq_group(X.P);
    Pi1 pi = pi1(*X.qu.cat);
    GroupHom h = pi1_identification(X.qu, zpq, pi);
    out.expect("pi1.Z_pq", h.bijective(), "r |-> (1 + pr, r) is not bijective", describe(*zpq.group));
  } catch (const std::exception& e) {
    out.fail("pi1.Z_pq", e.what());
  }

  expect_functor(out, "functor.alpha", X.alpha, opts);
  expect_functor(out, "functor.beta", X.beta, opts);
  auto nd = validate_nat(X.delta);
  out.expect("nat.delta", nd.ok, nd.law + ": " + nd.witness);

  out.append(gamma_check(X, opts).checks);
  out.append(units_sequence(X, opts));
  out.append(tpush_checks(X.qu, opts));

  expect_functor(out, "functor.rho", vs.rho, opts);
  expect_functor(out, "functor.omega", vs.omega, opts);
  out.append(ses_VS(X, vs));
  return out;
}

inline CheckList galois_suite(const PairContext& X, std::size_t* num_classes = nullptr) {
  CheckList out;
  HopfJ J = build_J(X.P);
  out.append(J.checks);
  out.append(realize_checks(J, X.qu));
  Classification C = classify_free_galois(J, X.qu);
  out.append(C.checks);
  if (num_classes) *num_classes = C.classes.size();
  out.append(cotensor_checks(J, X.qu).checks);
  return out;
}

inline CheckList stack_suite(const PairContext& X, const ValidationOptions& opts = {}) {
  CheckList out;
  DisCat D = dis_free(X.G, X.P.R);
  expect_valid(out, "catgroup.Dis_free", *D.cat, opts);
  expect_functor(out, "functor.Dis_to_G", D.to_G, opts);
  FunctorProps pr = functor_props(D.to_G);
  out.expect("Dis_free.equivalent_to_G", pr.equivalence,
             pr.surjectivity_witness + pr.fullness_witness + pr.faithfulness_witness);
  out.append(verify_gpq(X.P, X.Gpq));
  return out;
}

}  // namespace catlab
