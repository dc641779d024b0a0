#pragma once
// The cat-groups of free quadratic-type algebras over a finite ring R with a
// fixed pair (p, q), pq + 2 = 0, together with the comparison functors to
// the cat-groups of squaring maps on units.

#include <array>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "catlab/abgroup.hpp"
#include "catlab/catgroup.hpp"
#include "catlab/check.hpp"
#include "catlab/ring.hpp"

namespace catlab {

struct PairPQ {
  RingPtr R;
  Elem p = 0, q = 0;

  std::string label() const { return "(" + R->label(p) + ", " + R->label(q) + ")"; }
};

inline PairPQ make_pair_pq(RingPtr R, Elem p, Elem q) {
  if (p >= R->size() || q >= R->size()) throw std::invalid_argument("p or q is not a ring element");
  if (R->add(R->mul(p, q), R->from_int(2)) != R->zero())
    throw std::invalid_argument("pq + 2 != 0 for (p, q) = (" + R->label(p) + ", " + R->label(q) + ")");
  return PairPQ{std::move(R), p, q};
}

// ---------------------------------------------------------------------------
// Groups attached to R.

inline Enumerated<Elem> units_group(const FiniteRing& R) {
  std::vector<Elem> us(R.units().begin(), R.units().end());
  return group_from_closure(
      us, [&](Elem a, Elem b) { return R.mul(a, b); }, R.one(),
      [&](Elem a) { return R.label(a); });
}

inline GroupPtr additive_group(const FiniteRing& R) {
  const std::size_t n = R.size();
  std::vector<GElem> t(n * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = R.label(a);
    for (Elem b = 0; b < n; ++b) t[a * n + b] = R.add(a, b);
  }
  return std::make_shared<const FinAbGroup>(std::move(t), R.zero(), std::move(labels));
}

// {r : r^2 = qr} under r + s + prs.
inline Enumerated<Elem> z_pq_group(const PairPQ& P) {
  const FiniteRing& R = *P.R;
  std::vector<Elem> els;
  for (Elem r = 0; r < R.size(); ++r)
    if (R.sqr(r) == R.mul(P.q, r)) els.push_back(r);
  return group_from_closure(
      els, [&](Elem r, Elem s) { return R.add(R.add(r, s), R.mul(P.p, R.mul(r, s))); }, R.zero(),
      [&](Elem a) { return R.label(a); });
}

struct UnitGroups {
  Enumerated<Elem> units;
  GroupHom sq;      // u |-> u^2 on R*
  Subgroup mu2;     // ker sq
  Quotient u2;      // coker sq = R* / (R*)^2
};

inline UnitGroups mu2_u2(const FiniteRing& R) {
  auto U = units_group(R);
  std::vector<GElem> m(U.values.size());
  for (GElem i = 0; i < m.size(); ++i) m[i] = U.at(R.sqr(U.values[i]));
  GroupHom sq(U.group, U.group, std::move(m));
  Subgroup mu2 = sq.kernel();
  Quotient u2 = sq.cokernel();
  return UnitGroups{std::move(U), std::move(sq), std::move(mu2), std::move(u2)};
}

// ---------------------------------------------------------------------------
// Qu_f^{pq}(R). Objects [a, b] with a^2 + p^2 b a unit, ordered by (a, b).
// A morphism (u, r) : [c, d] -> [a, b] has c = au - pr, d = u^2 b - qrua - r^2
// and is indexed by (target, unit position of u, r).

struct QuCat {
  PairPQ P;
  CatGroupPtr cat;
  std::vector<std::pair<Elem, Elem>> objects;
  std::vector<Obj> index;  // a * |R| + b -> object or kNoIndex

  std::size_t n() const { return P.R->size(); }
  std::size_t per_target() const { return P.R->units().size() * n(); }
  Obj object(Elem a, Elem b) const { return index[a * n() + b]; }
  Elem a_of(Obj x) const { return objects[x].first; }
  Elem b_of(Obj x) const { return objects[x].second; }
  Mor morphism(Obj target, Elem u, Elem r) const {
    return static_cast<Mor>(target * per_target() + P.R->unit_index(u) * n() + r);
  }
  Obj target_of(Mor f) const { return static_cast<Obj>(f / per_target()); }
  Elem u_of(Mor f) const { return P.R->units()[(f % per_target()) / n()]; }
  Elem r_of(Mor f) const { return static_cast<Elem>(f % n()); }
};

inline QuCat build_qu_f(const PairPQ& P) {
  const FiniteRing& R = *P.R;
  const std::size_t n = R.size(), nu = R.units().size();
  const Elem p = P.p, q = P.q, p2 = R.mul(p, p);
  struct Shared {
    RingPtr R;
    Elem p, q, p2;
    std::size_t n, nu;
    std::vector<std::pair<Elem, Elem>> objects;
    std::vector<Obj> index;
  };
  auto S = std::make_shared<Shared>(Shared{P.R, p, q, p2, n, nu, {}, {}});
  S->index.assign(n * n, kNoIndex);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (R.is_unit(R.add(R.sqr(a), R.mul(p2, b)))) {
        S->index[a * n + b] = static_cast<Obj>(S->objects.size());
        S->objects.emplace_back(a, b);
      }
  const std::size_t N = S->objects.size(), per = nu * n;
  CatGroup::Data d;
  d.name = "Qu_f" + P.label();
  d.num_objects = N;
  d.dom.resize(N * per);
  d.cod.resize(N * per);
  for (Obj t = 0; t < N; ++t) {
    auto [a, b] = S->objects[t];
    for (std::size_t ui = 0; ui < nu; ++ui) {
      Elem u = R.units()[ui];
      for (Elem r = 0; r < n; ++r) {
        Elem c = R.sub(R.mul(a, u), R.mul(p, r));
        Elem dd = R.sub(R.sub(R.mul(R.sqr(u), b), R.mul(q, R.mul(r, R.mul(u, a)))), R.sqr(r));
        Obj src = S->index[c * n + dd];
        if (src == kNoIndex) throw std::logic_error("source of a morphism is not an object");
        std::size_t f = t * per + ui * n + r;
        d.dom[f] = src;
        d.cod[f] = t;
      }
    }
  }
  d.identity.resize(N);
  for (Obj t = 0; t < N; ++t)
    d.identity[t] = static_cast<Mor>(t * per + R.unit_index(R.one()) * n + R.zero());
  d.unit = S->index[R.one() * n + R.zero()];
  d.tensor_obj = [S](Obj x, Obj y) {
    const FiniteRing& R = *S->R;
    auto [a1, b1] = S->objects[x];
    auto [a2, b2] = S->objects[y];
    Elem a = R.mul(a1, a2);
    Elem b = R.add(R.add(R.mul(R.sqr(a1), b2), R.mul(R.sqr(a2), b1)), R.mul(S->p2, R.mul(b1, b2)));
    return S->index[a * S->n + b];
  };
  // (u_f, r_f) then (u_g, r_g) composes to (u_f u_g, r_g u_f + r_f).
  d.compose = [S](Mor g, Mor f) {
    const FiniteRing& R = *S->R;
    const std::size_t n = S->n, per = S->nu * n;
    Elem uf = R.units()[(f % per) / n], rf = f % n;
    Elem ug = R.units()[(g % per) / n], rg = g % n;
    Elem u = R.mul(uf, ug), r = R.add(R.mul(rg, uf), rf);
    return static_cast<Mor>((g / per) * per + R.unit_index(u) * n + r);
  };
  d.tensor_mor = [S, tensor = d.tensor_obj](Mor f, Mor g) {
    const FiniteRing& R = *S->R;
    const std::size_t n = S->n, per = S->nu * n;
    Obj t1 = f / per, t2 = g / per;
    Elem u1 = R.units()[(f % per) / n], r1 = f % n;
    Elem u2 = R.units()[(g % per) / n], r2 = g % n;
    Elem a1 = S->objects[t1].first, a2 = S->objects[t2].first;
    Elem u = R.mul(u1, u2);
    Elem r = R.add(R.sub(R.mul(r1, R.mul(u2, a2)), R.mul(S->p, R.mul(r1, r2))),
                   R.mul(u1, R.mul(a1, r2)));
    Obj t = tensor(t1, t2);
    if (t == kNoIndex) return kNoIndex;
    return static_cast<Mor>(t * per + R.unit_index(u) * n + r);
  };
  d.obj_label = [S](Obj x) {
    return "[" + S->R->label(S->objects[x].first) + "," + S->R->label(S->objects[x].second) + "]";
  };
  d.mor_label = [S](Mor f) {
    const std::size_t per = S->nu * S->n;
    return "(" + S->R->label(S->R->units()[(f % per) / S->n]) + "," + S->R->label(f % S->n) + ")";
  };
  auto cat = std::make_shared<const CatGroup>(std::move(d));
  return QuCat{P, cat, S->objects, S->index};
}

// (a^2 + p^2 b, pb) : [a,b] * [a,b] -> [1,0] for every object.
inline Witness verify_duality(const QuCat& Q) {
  const FiniteRing& R = *Q.P.R;
  const CatGroup& C = *Q.cat;
  const Elem p2 = R.mul(Q.P.p, Q.P.p);
  for (Obj x = 0; x < C.num_objects(); ++x) {
    Elem a = Q.a_of(x), b = Q.b_of(x);
    Elem u = R.add(R.sqr(a), R.mul(p2, b));
    Mor f = Q.morphism(C.unit(), u, R.mul(Q.P.p, b));
    if (C.dom(f) != C.tensor(x, x)) return "duality witness fails at " + C.obj_label(x);
  }
  return {};
}

// r |-> (1 + pr, r) from Z_pq(R) to Aut([1,0]); validated as a bijective hom.
inline GroupHom pi1_identification(const QuCat& Q, const Enumerated<Elem>& zpq, const Pi1& pi) {
  const FiniteRing& R = *Q.P.R;
  std::vector<GElem> m(zpq.values.size());
  for (GElem i = 0; i < m.size(); ++i) {
    Elem r = zpq.values[i];
    Elem u = R.add(R.one(), R.mul(Q.P.p, r));
    if (!R.is_unit(u)) throw std::logic_error("1 + pr is not a unit for r = " + R.label(r));
    m[i] = pi.element_of(Q.morphism(Q.cat->unit(), u, r));
  }
  return GroupHom(zpq.group, pi.group, std::move(m));
}

// ---------------------------------------------------------------------------
// G(R) and G^{pq}(R).

struct GCat {
  Enumerated<Elem> units;
  HomCatGroup hc;
};

inline GCat build_G(const RingPtr& Rp) {
  auto ug = mu2_u2(*Rp);
  auto hc = catgroup_from_hom(ug.sq, "G(" + Rp->spec() + ")");
  return GCat{std::move(ug.units), std::move(hc)};
}

struct GpqCat {
  PrincipalQuotient modp, modp2;
  Enumerated<Elem> units_p, units_p2;
  GroupHom Sq;      // (R/pR)* -> (R/p^2R)*
  GroupHom red_p;   // R* -> (R/pR)*
  GroupHom red_p2;  // R* -> (R/p^2R)*
  HomCatGroup hc;
};

// Sq(s) computed from one lift; throws if another lift of a unit gives a
// different square or is not a unit.
inline GpqCat build_Gpq(const PairPQ& P, const Enumerated<Elem>& units_R) {
  const FiniteRing& R = *P.R;
  auto modp = quotient_by_principal(P.R, P.p);
  auto modp2 = quotient_by_principal(P.R, R.mul(P.p, P.p));
  const FiniteRing& Rp = *modp.quotient;
  const FiniteRing& Rp2 = *modp2.quotient;
  auto Up = units_group(Rp);
  auto Up2 = units_group(Rp2);
  std::vector<GElem> sq(Up.values.size());
  for (GElem i = 0; i < sq.size(); ++i) {
    Elem s = Up.values[i];
    Elem lift = modp2.project(modp.lift[s]);
    sq[i] = Up2.at(Rp2.sqr(lift));
  }
  // Every lift of s to R/p^2R is the image of some x in R with x = s mod p.
  for (Elem x = 0; x < R.size(); ++x) {
    Elem s = modp.project(x);
    if (!Rp.is_unit(s)) continue;
    Elem t = modp2.project(x);
    if (!Rp2.is_unit(t))
      throw std::logic_error("lift " + Rp2.label(t) + " of unit " + Rp.label(s) + " is not a unit");
    if (Up2.at(Rp2.sqr(t)) != sq[Up.at(s)])
      throw std::logic_error("Sq depends on the lift of " + Rp.label(s));
  }
  GroupHom Sq(Up.group, Up2.group, std::move(sq));
  std::vector<GElem> rp(units_R.values.size()), rp2(units_R.values.size());
  for (GElem i = 0; i < rp.size(); ++i) {
    rp[i] = Up.at(modp.project(units_R.values[i]));
    rp2[i] = Up2.at(modp2.project(units_R.values[i]));
  }
  GroupHom red_p(units_R.group, Up.group, std::move(rp));
  GroupHom red_p2(units_R.group, Up2.group, std::move(rp2));
  auto hc = catgroup_from_hom(Sq, "G^pq" + P.label());
  return GpqCat{std::move(modp), std::move(modp2), std::move(Up), std::move(Up2),
                std::move(Sq), std::move(red_p), std::move(red_p2), std::move(hc)};
}

// Lift independence over every lift, and the two identities for pi0, pi1.
inline CheckList verify_gpq(const PairPQ& P, const GpqCat& G) {
  CheckList out;
  const FiniteRing& R = *P.R;
  const FiniteRing& Rp = *G.modp.quotient;
  const FiniteRing& Rp2 = *G.modp2.quotient;
  std::string bad;
  std::size_t lifts = 0;
  for (Elem x = 0; x < R.size() && bad.empty(); ++x) {
    Elem s = G.modp.project(x);
    if (!Rp.is_unit(s)) continue;
    ++lifts;
    Elem t = G.modp2.project(x);
    if (!Rp2.is_unit(t) || G.units_p2.at(Rp2.sqr(t)) != G.Sq(G.units_p.at(s)))
      bad = "lift " + Rp2.label(t) + " of " + Rp.label(s);
  }
  out.expect("Gpq.lift_independent", bad.empty(), bad, std::to_string(lifts) + " lifts");

  // Im Sq equals the squares of (R/p^2R)*.
  std::vector<GElem> squares;
  for (GElem i = 0; i < G.units_p2.values.size(); ++i)
    squares.push_back(G.units_p2.at(Rp2.sqr(G.units_p2.values[i])));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  out.expect("Gpq.image_is_squares", G.Sq.image_elements() == squares,
             "image of Sq differs from the squares of (R/p^2R)*");

  // ker Sq equals the image of mu2(R/p^2R) -> mu2(R/pR).
  std::vector<GElem> im;
  for (Elem t : G.units_p2.values)
    if (Rp2.sqr(t) == Rp2.one())
      im.push_back(G.units_p.at(G.modp.project(G.modp2.lift[t])));
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  out.expect("Gpq.kernel_is_mu2_image", G.Sq.kernel_elements() == im,
             "ker Sq differs from the image of mu2(R/p^2R)");

  auto u2p2 = mu2_u2(Rp2);
  Pi0 z = pi0(*G.hc.cat);
  Pi1 o = pi1(*G.hc.cat);
  out.expect("Gpq.pi0_is_U2_mod_p2", isomorphic(*z.group, *u2p2.u2.group),
             "pi0 = " + describe(*z.group) + ", U2(R/p^2R) = " + describe(*u2p2.u2.group));
  out.expect("Gpq.pi1_is_mu2_image", o.group->order() == im.size() &&
                 isomorphic(*o.group, *make_subgroup(G.units_p.group, im).group),
             "pi1 = " + describe(*o.group));
  return out;
}

// ---------------------------------------------------------------------------
// Everything attached to one admissible pair.

struct PairContext {
  PairPQ P;
  QuCat qu;
  GCat G;
  GpqCat Gpq;
  MonFunctor alpha, beta;
  NatToTrivial delta;
};

inline PairContext build_context(const PairPQ& P) {
  const FiniteRing& R = *P.R;
  QuCat qu = build_qu_f(P);
  GCat G = build_G(P.R);
  GpqCat Gpq = build_Gpq(P, G.units);
  const CatGroup& Q = *qu.cat;
  const Elem p2 = R.mul(P.p, P.p);

  MonFunctor alpha{"alpha_f", qu.cat, G.hc.cat, {}, {}, {}, kNoIndex};
  alpha.on_objects.resize(Q.num_objects());
  for (Obj x = 0; x < Q.num_objects(); ++x)
    alpha.on_objects[x] = G.units.at(R.add(R.sqr(qu.a_of(x)), R.mul(p2, qu.b_of(x))));
  alpha.on_morphisms.resize(Q.num_morphisms());
  for (Mor f = 0; f < Q.num_morphisms(); ++f)
    alpha.on_morphisms[f] = G.hc.morphism(alpha.on_objects[Q.dom(f)], G.units.at(qu.u_of(f)));

  MonFunctor beta = square_functor(G.hc, Gpq.hc, Gpq.red_p, Gpq.red_p2, "beta_f");

  NatToTrivial delta{compose_functors(beta, alpha), {}};
  delta.components.resize(Q.num_objects());
  for (Obj x = 0; x < Q.num_objects(); ++x) {
    GElem s = Gpq.units_p.at(Gpq.modp.project(qu.a_of(x)));
    delta.components[x] = Gpq.hc.morphism(delta.functor(x), s);
  }
  return PairContext{P, std::move(qu), std::move(G), std::move(Gpq),
                     std::move(alpha), std::move(beta), std::move(delta)};
}

// c^2 + p^2 d = u^2 (a^2 + p^2 b) for every morphism (u, r) : [c,d] -> [a,b].
inline Witness verify_alpha_identity(const QuCat& Q) {
  const FiniteRing& R = *Q.P.R;
  const CatGroup& C = *Q.cat;
  const Elem p2 = R.mul(Q.P.p, Q.P.p);
  for (Mor f = 0; f < C.num_morphisms(); ++f) {
    Obj s = C.dom(f), t = C.cod(f);
    Elem lhs = R.add(R.sqr(Q.a_of(s)), R.mul(p2, Q.b_of(s)));
    Elem rhs = R.mul(R.sqr(Q.u_of(f)), R.add(R.sqr(Q.a_of(t)), R.mul(p2, Q.b_of(t))));
    if (lhs != rhs) return "c^2 + p^2 d != u^2 (a^2 + p^2 b) at " + C.mor_label(f);
  }
  return {};
}

inline std::string non_unit_reason(const PairPQ& P) {
  const FiniteRing& R = *P.R;
  if (P.p == R.zero()) return "hypothesis p-not-zero-divisor unrealizable: p = 0";
  return "hypothesis p-not-zero-divisor unrealizable: p is a zero divisor";
}

struct GammaResult {
  CheckList checks;
  FunctorProps props;
  std::size_t kernel_components = 0;
};

// gamma_f : Qu_f -> 2-ker(beta_f), compared with the pullback model G_h.
inline GammaResult gamma_check(const PairContext& X, const ValidationOptions& opts = {}) {
  GammaResult res;
  CheckList& out = res.checks;
  const FiniteRing& R = *X.P.R;
  TwoKernel K = two_kernel(X.beta, "2-ker(beta_f)");
  MonFunctor gamma = induced_to_two_kernel(X.alpha, X.delta, K, "gamma_f");
  auto v = validate_functor(gamma, opts);
  out.expect("gamma.functor", v.ok, v.law + ": " + v.witness, v.summary());
  FunctorProps pr = functor_props(gamma);
  res.props = pr;
  res.kernel_components = K.cat->num_components();
  out.expect("gamma.essentially_surjective", pr.essentially_surjective, pr.surjectivity_witness);
  out.expect("gamma.pi_criterion_agrees", pr.criteria_agree(),
             "enumerated equivalence and pi0/pi1 bijectivity disagree");
  std::string outcome = std::string(pr.faithful ? "faithful" : "not faithful (" + pr.faithfulness_witness + ")") +
                        "; " + (pr.full ? "full" : "not full (" + pr.fullness_witness + ")");
  if (R.is_unit(X.P.p)) {
    out.expect("gamma.equivalence", pr.equivalence, outcome);
  } else {
    out.skip("gamma.equivalence", non_unit_reason(X.P) + "; observed: " + outcome);
  }

  // 2-ker(beta_f) against G_h, h(u) = (u^2, u mod p).
  auto pm = pullback_model(X.G.hc, X.Gpq.hc, X.Gpq.red_p, X.Gpq.red_p2, K);
  auto vc = validate_functor(pm.comparison, opts);
  FunctorProps pc = functor_props(pm.comparison);
  out.expect("two_kernel.pullback_model", vc.ok && pc.equivalence,
             vc.ok ? "comparison functor is not an equivalence" : vc.law + ": " + vc.witness);
  // gamma_f followed by the comparison is [a,b] |-> (a^2 + p^2 b, a mod p), (u,r) |-> u.
  std::string bad;
  const CatGroup& Q = *X.qu.cat;
  const Elem p2 = R.mul(X.P.p, X.P.p);
  for (Obj x = 0; x < Q.num_objects() && bad.empty(); ++x) {
    Elem a = X.qu.a_of(x), b = X.qu.b_of(x);
    auto want = std::make_pair(X.G.units.at(R.add(R.sqr(a), R.mul(p2, b))),
                               X.Gpq.units_p.at(X.Gpq.modp.project(a)));
    if (pm.pb.pairs[pm.comparison(gamma(x))] != want) bad = Q.obj_label(x);
  }
  for (Mor f = 0; f < Q.num_morphisms() && bad.empty(); ++f)
    if (pm.model.label_of(pm.comparison.map(gamma.map(f))) != X.G.units.at(X.qu.u_of(f)))
      bad = Q.mor_label(f);
  out.expect("gamma.pullback_formula", bad.empty(), "mismatch at " + bad);

  SixTerm sb = six_term(X.beta);
  out.expect("six_term.beta", sb.report.exact, sb.report.witness);
  SixTerm sg = six_term(gamma);
  out.expect("six_term.gamma", sg.report.exact, sg.report.witness);
  return res;
}

inline CheckList units_sequence(const PairContext& X, const ValidationOptions& opts = {}) {
  CheckList out;
  const FiniteRing& R = *X.P.R;
  const FiniteRing& Rp2 = *X.Gpq.modp2.quotient;
  const Elem p2 = R.mul(X.P.p, X.P.p);
  Pi0 s = pi0(*X.qu.cat);
  auto uR = mu2_u2(R);
  auto uP = mu2_u2(Rp2);
  std::vector<GElem> m1(s.rep.size());
  for (GElem c = 0; c < m1.size(); ++c) {
    Obj x = s.rep[c];
    m1[c] = uR.u2.project[uR.units.at(R.add(R.sqr(X.qu.a_of(x)), R.mul(p2, X.qu.b_of(x))))];
  }
  std::vector<GElem> m2(uR.u2.representative.size());
  for (GElem c = 0; c < m2.size(); ++c) {
    Elem u = uR.units.values[uR.u2.representative[c]];
    m2[c] = uP.u2.project[uP.units.at(X.Gpq.modp2.project(u))];
  }
  std::vector<GroupHom> seq{GroupHom(s.group, uR.u2.group, std::move(m1)),
                            GroupHom(uR.u2.group, uP.u2.group, std::move(m2))};
  const std::size_t pos[] = {1};
  auto ex = check_exact_sequence(seq, pos, false);
  out.expect("units_sequence.exact", ex.exact, ex.witness);

  if (R.is_unit(X.P.p)) {
    SixTerm st = six_term(X.beta);
    TwoKernel K = two_kernel(X.beta);
    MonFunctor gamma = induced_to_two_kernel(X.alpha, X.delta, K);
    bool iso0 = pi0_map(gamma, s, pi0(*K.cat)).bijective();
    bool iso1 = pi1_map(gamma, pi1(*X.qu.cat), pi1(*K.cat)).bijective();
    out.expect("units_sequence.p_unit", st.report.exact && iso0 && iso1,
               st.report.exact ? "gamma_f does not induce isomorphisms" : st.report.witness);
  } else {
    out.skip("units_sequence.p_unit", non_unit_reason(X.P));
  }

  if (X.P.p == R.one() && X.P.q == R.from_int(-2)) {
    auto va = validate_functor(X.alpha, opts);
    FunctorProps pr = functor_props(X.alpha);
    out.expect("units_sequence.one_minus_two", va.ok && pr.equivalence && isomorphic(*s.group, *uR.u2.group),
               va.ok ? pr.fullness_witness + pr.faithfulness_witness + pr.surjectivity_witness
                     : va.witness);
  } else {
    out.skip("units_sequence.one_minus_two", "(p, q) is not (1, -2)");
  }
  return out;
}

// ---------------------------------------------------------------------------
// t_* : Qu_f^{pq} -> Qu_f^{pt, t^-1 q}, [a,b] |-> [at, b], (u,r) |-> (u,r).
// Tensor witness (t, 0) : t_*X * t_*Y -> t_*(X * Y); unit witness
// (t^-1, 0) : [1,0] -> [t,0].

struct TPush {
  QuCat target;
  MonFunctor functor;
};

inline PairPQ pushed_pair(const PairPQ& P, Elem t) {
  const FiniteRing& R = *P.R;
  return make_pair_pq(P.R, R.mul(P.p, t), R.mul(R.inverse(t), P.q));
}

inline TPush t_push(const QuCat& src, Elem t, const QuCat* target = nullptr) {
  const FiniteRing& R = *src.P.R;
  if (!R.is_unit(t)) throw std::invalid_argument(R.label(t) + " is not a unit");
  PairPQ P2 = pushed_pair(src.P, t);
  QuCat tgt = target ? *target : build_qu_f(P2);
  if (tgt.P.p != P2.p || tgt.P.q != P2.q) throw std::invalid_argument("t_push: wrong target pair");
  const CatGroup& S = *src.cat;
  MonFunctor F{"t_" + R.label(t), src.cat, tgt.cat, {}, {}, {}, kNoIndex};
  F.on_objects.resize(S.num_objects());
  for (Obj x = 0; x < S.num_objects(); ++x) {
    Obj y = tgt.object(R.mul(src.a_of(x), t), src.b_of(x));
    if (y == kNoIndex) throw std::logic_error("t_* leaves the objects");
    F.on_objects[x] = y;
  }
  F.on_morphisms.resize(S.num_morphisms());
  for (Mor f = 0; f < S.num_morphisms(); ++f)
    F.on_morphisms[f] = tgt.morphism(F(S.cod(f)), src.u_of(f), src.r_of(f));
  if (t != R.one()) {
    auto objs = F.on_objects;
    F.tensor_witness = [tgt, objs, t, scat = src.cat](Obj x, Obj y) {
      return tgt.morphism(objs[scat->tensor(x, y)], t, tgt.P.R->zero());
    };
    F.unit_witness = tgt.morphism(F(S.unit()), R.inverse(t), R.zero());
  }
  return TPush{std::move(tgt), std::move(F)};
}

// One functor per unit t, so each validation gets a smaller sampling budget.
inline CheckList tpush_checks(const QuCat& Q, const ValidationOptions& base = {}) {
  CheckList out;
  ValidationOptions opts = base;
  opts.budget = std::min<std::uint64_t>(base.budget, std::uint64_t{1} << 14);
  opts.samples = std::min(opts.samples, opts.budget);
  const FiniteRing& R = *Q.P.R;
  std::map<std::pair<Elem, Elem>, QuCat> cache;
  auto qu_for = [&](const PairPQ& P) -> const QuCat& {
    auto key = std::make_pair(P.p, P.q);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, build_qu_f(P)).first;
    return it->second;
  };
  std::map<Elem, TPush> pushes;
  std::string bad_functor, bad_equiv, bad_stated;
  for (Elem t : R.units()) {
    TPush tp = t_push(Q, t, &qu_for(pushed_pair(Q.P, t)));
    auto v = validate_functor(tp.functor, opts);
    if (!v.ok && bad_functor.empty()) bad_functor = "t = " + R.label(t) + ": " + v.law + ": " + v.witness;
    FunctorProps pr = functor_props(tp.functor);
    if (!pr.equivalence && bad_equiv.empty()) bad_equiv = "t = " + R.label(t);
    // (t^-1, 0) is a morphism t_*(X * Y) -> t_*X * t_*Y, the inverse of the tensor witness.
    const CatGroup& T = *tp.target.cat;
    for (Obj x = 0; x < Q.cat->num_objects() && bad_stated.empty(); ++x)
      for (Obj y = 0; y < Q.cat->num_objects() && bad_stated.empty(); ++y) {
        Mor m = tp.target.morphism(T.tensor(tp.functor(x), tp.functor(y)), R.inverse(t), R.zero());
        if (T.dom(m) != tp.functor(Q.cat->tensor(x, y)) || T.inverse_of(m) != tp.functor.mu(x, y))
          bad_stated = "t = " + R.label(t) + " at (" + Q.cat->obj_label(x) + ", " + Q.cat->obj_label(y) + ")";
      }
    pushes.emplace(t, std::move(tp));
  }
  out.expect("tpush.functor", bad_functor.empty(), bad_functor);
  out.expect("tpush.equivalence", bad_equiv.empty(), bad_equiv);
  out.expect("tpush.inverse_witness", bad_stated.empty(), bad_stated);

  // t_*(t t') agrees with t'_* after t_*: same objects, morphisms, witnesses
  // up to the identity, and the same pi0 / pi1 maps.
  std::string bad_comp;
  for (Elem t : R.units())
    for (Elem t2 : R.units()) {
      if (!bad_comp.empty()) break;
      const TPush& first = pushes.at(t);
      TPush second = t_push(first.target, t2, &qu_for(pushed_pair(first.target.P, t2)));
      MonFunctor comp = compose_functors(second.functor, first.functor);
      const TPush& direct = pushes.at(R.mul(t, t2));
      if (direct.target.P.p != second.target.P.p || direct.target.P.q != second.target.P.q) {
        bad_comp = "target pairs differ";
        break;
      }
      // Both targets are built from the same pair, hence index-identical.
      bool same = comp.on_objects == direct.functor.on_objects &&
                  comp.on_morphisms == direct.functor.on_morphisms;
      const CatGroup& T = *direct.target.cat;
      for (Obj x = 0; x < Q.cat->num_objects() && same; ++x)
        same = !T.hom(comp(x), direct.functor(x)).empty();
      if (!same) bad_comp = "t = " + R.label(t) + ", t' = " + R.label(t2);
    }
  out.expect("tpush.composite", bad_comp.empty(), bad_comp);
  return out;
}

// ---------------------------------------------------------------------------
// V^{pq} = G_zeta with zeta : V1 -> V2, zeta(r) = r^2 - qr, and S^{pq}.

struct VSCat {
  Enumerated<Elem> V1, V2;
  HomCatGroup V;
  CatGroupPtr S;
  std::vector<Elem> s_objects;            // object -> a
  std::vector<std::array<Elem, 3>> s_mor;  // morphism -> (c, a, u), c -> a
  MonFunctor rho, omega;
};

inline VSCat build_VS(const PairContext& X) {
  const FiniteRing& R = *X.P.R;
  const Elem p = X.P.p, q = X.P.q, p2 = R.mul(p, p);
  const std::size_t n = R.size();
  std::vector<Elem> v1, v2;
  for (Elem r = 0; r < n; ++r) {
    if (R.is_unit(R.add(R.one(), R.mul(p, r)))) v1.push_back(r);
    if (R.is_unit(R.add(R.one(), R.mul(p2, r)))) v2.push_back(r);
  }
  auto lab = [&](Elem a) { return R.label(a); };
  auto V1 = group_from_closure(
      v1, [&](Elem r, Elem s) { return R.add(R.add(r, s), R.mul(p, R.mul(r, s))); }, R.zero(), lab);
  auto V2 = group_from_closure(
      v2, [&](Elem x, Elem y) { return R.add(R.add(x, y), R.mul(p2, R.mul(x, y))); }, R.zero(), lab);
  std::vector<GElem> z(V1.values.size());
  for (GElem i = 0; i < z.size(); ++i) {
    Elem r = V1.values[i];
    z[i] = V2.at(R.sub(R.sqr(r), R.mul(q, r)));
  }
  GroupHom zeta(V1.group, V2.group, std::move(z));
  HomCatGroup V = catgroup_from_hom(zeta, "V" + X.P.label());

  // S^{pq}: objects a with some a^2 + p^2 b a unit; morphisms c -> a are
  // units u with c = au mod pR.
  struct Shared {
    RingPtr R;
    std::vector<Elem> objects;
    std::vector<Obj> obj_index;
    std::vector<std::array<Elem, 3>> mor;
    std::vector<Mor> lookup;  // (c_idx * N + a_idx) * |U| + unit index
  };
  auto S = std::make_shared<Shared>();
  S->R = X.P.R;
  S->obj_index.assign(n, kNoIndex);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (R.is_unit(R.add(R.sqr(a), R.mul(p2, b)))) {
        S->obj_index[a] = static_cast<Obj>(S->objects.size());
        S->objects.push_back(a);
        break;
      }
  const std::size_t N = S->objects.size(), nu = R.units().size();
  S->lookup.assign(N * N * nu, kNoIndex);
  CatGroup::Data d;
  d.name = "S" + X.P.label();
  d.num_objects = N;
  for (Obj ci = 0; ci < N; ++ci)
    for (Obj ai = 0; ai < N; ++ai)
      for (std::size_t ui = 0; ui < nu; ++ui) {
        Elem c = S->objects[ci], a = S->objects[ai], u = R.units()[ui];
        bool ok = false;
        for (Elem r = 0; r < n && !ok; ++r) ok = c == R.sub(R.mul(a, u), R.mul(p, r));
        if (!ok) continue;
        S->lookup[(ci * N + ai) * nu + ui] = static_cast<Mor>(S->mor.size());
        S->mor.push_back({c, a, u});
        d.dom.push_back(ci);
        d.cod.push_back(ai);
      }
  d.identity.resize(N);
  for (Obj x = 0; x < N; ++x) d.identity[x] = S->lookup[(x * N + x) * nu + R.unit_index(R.one())];
  d.unit = S->obj_index[R.one()];
  auto look = [S, N, nu](Elem c, Elem a, Elem u) -> Mor {
    Obj ci = S->obj_index[c], ai = S->obj_index[a];
    if (ci == kNoIndex || ai == kNoIndex) return kNoIndex;
    return S->lookup[(ci * N + ai) * nu + S->R->unit_index(u)];
  };
  d.tensor_obj = [S](Obj x, Obj y) { return S->obj_index[S->R->mul(S->objects[x], S->objects[y])]; };
  d.compose = [S, look](Mor g, Mor f) {
    auto [c, a, u] = S->mor[f];
    auto [a2, e, v] = S->mor[g];
    (void)a;
    (void)a2;
    return look(c, e, S->R->mul(u, v));
  };
  d.tensor_mor = [S, look](Mor f, Mor g) {
    const FiniteRing& R = *S->R;
    auto [c1, a1, u1] = S->mor[f];
    auto [c2, a2, u2] = S->mor[g];
    return look(R.mul(c1, c2), R.mul(a1, a2), R.mul(u1, u2));
  };
  d.obj_label = [S](Obj x) { return S->R->label(S->objects[x]); };
  d.mor_label = [S](Mor f) { return S->R->label(S->mor[f][2]); };
  auto Scat = std::make_shared<const CatGroup>(std::move(d));

  // rho(x) = [1, x]; rho(r) = (1 + pr, r) : [1, y] -> [1, x].
  const CatGroup& Vc = *V.cat;
  MonFunctor rho{"rho", V.cat, X.qu.cat, {}, {}, {}, kNoIndex};
  rho.on_objects.resize(Vc.num_objects());
  for (Obj x = 0; x < Vc.num_objects(); ++x) {
    Obj o = X.qu.object(R.one(), V2.values[x]);
    if (o == kNoIndex) throw std::logic_error("[1, x] is not an object");
    rho.on_objects[x] = o;
  }
  rho.on_morphisms.resize(Vc.num_morphisms());
  for (Mor f = 0; f < Vc.num_morphisms(); ++f) {
    Elem r = V1.values[V.label_of(f)];
    rho.on_morphisms[f] = X.qu.morphism(rho(Vc.cod(f)), R.add(R.one(), R.mul(p, r)), r);
  }

  const CatGroup& Q = *X.qu.cat;
  MonFunctor omega{"omega", X.qu.cat, Scat, {}, {}, {}, kNoIndex};
  omega.on_objects.resize(Q.num_objects());
  for (Obj x = 0; x < Q.num_objects(); ++x) omega.on_objects[x] = S->obj_index[X.qu.a_of(x)];
  omega.on_morphisms.resize(Q.num_morphisms());
  for (Mor f = 0; f < Q.num_morphisms(); ++f) {
    Mor m = look(X.qu.a_of(Q.dom(f)), X.qu.a_of(Q.cod(f)), X.qu.u_of(f));
    if (m == kNoIndex) throw std::logic_error("omega: no morphism for " + Q.mor_label(f));
    omega.on_morphisms[f] = m;
  }
  return VSCat{std::move(V1), std::move(V2), std::move(V), Scat, S->objects, S->mor,
               std::move(rho), std::move(omega)};
}

// 0 -> V -> sQu -> S -> 0, vanishing of S, and the p = 0 description.
inline CheckList ses_VS(const PairContext& X, const VSCat& vs) {
  CheckList out;
  const FiniteRing& R = *X.P.R;
  Pi0 v0 = pi0(*vs.V.cat), q0 = pi0(*X.qu.cat), s0 = pi0(*vs.S);
  std::vector<GroupHom> seq{pi0_map(vs.rho, v0, q0), pi0_map(vs.omega, q0, s0)};
  const std::size_t pos[] = {1};
  auto ex = check_exact_sequence(seq, pos, true, true);
  out.expect("ses.exact", ex.exact, ex.witness);

  // pi1(V) = {r : r^2 = qr, 1 + pr a unit}.
  Pi1 v1 = pi1(*vs.V.cat);
  std::vector<Elem> got, want;
  for (Mor f : v1.morphisms) got.push_back(vs.V1.values[vs.V.label_of(f)]);
  for (Elem r = 0; r < R.size(); ++r)
    if (R.sqr(r) == R.mul(X.P.q, r) && R.is_unit(R.add(R.one(), R.mul(X.P.p, r)))) want.push_back(r);
  std::sort(got.begin(), got.end());
  out.expect("V.pi1", got == want, "pi1(V) differs from {r : r^2 = qr, 1 + pr unit}");

  auto ua = unit_analysis(R);
  bool in_rad = std::binary_search(ua.radical.begin(), ua.radical.end(), X.P.p);
  if (ua.local || in_rad)
    out.expect("S.vanishes", s0.group->order() == 1,
               "S = " + describe(*s0.group) + (ua.local ? " on a local ring" : " with p in the radical"));
  else
    out.skip("S.vanishes", "R is not local and p is not in the radical");

  if (X.P.p == R.zero()) {
    // sQu^{0q} -> R / R0, [a, b] |-> b a^-2 mod R0.
    GroupPtr add = additive_group(R);
    std::vector<GElem> r0;
    for (Elem r = 0; r < R.size(); ++r) r0.push_back(R.add(R.sqr(r), R.mul(X.P.q, r)));
    Subgroup sub = make_subgroup(add, r0);  // throws if R0 is not a subgroup
    Quotient quo = make_quotient(add, sub.embed);
    std::vector<GElem> m(q0.rep.size());
    for (GElem c = 0; c < m.size(); ++c) {
      Obj x = q0.rep[c];
      m[c] = quo.project[R.mul(X.qu.b_of(x), R.inverse(R.sqr(X.qu.a_of(x))))];
    }
    GroupHom h(q0.group, quo.group, std::move(m));
    // Well defined on classes: every object, not just representatives.
    bool wd = true;
    for (Obj x = 0; x < X.qu.cat->num_objects() && wd; ++x)
      wd = h(q0.class_of[x]) == quo.project[R.mul(X.qu.b_of(x), R.inverse(R.sqr(X.qu.a_of(x))))];
    out.expect("sQu.p_zero_formula", wd && h.bijective(),
               "sQu = " + describe(*q0.group) + ", R/R0 = " + describe(*quo.group));
  } else {
    out.skip("sQu.p_zero_formula", "p != 0");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Free rank-1 modules with a nonsingular symmetric form mu(x, y) = mu x y.
// A morphism (M, mu) -> (M, mu') is h with mu' h^2 = mu.

struct DisCat {
  CatGroupPtr cat;
  MonFunctor to_G;  // identity-on-units comparison with G(R)
};

inline DisCat dis_free(const GCat& G, const RingPtr& Rp) {
  const FiniteRing& R = *Rp;
  const std::size_t nu = R.units().size();
  CatGroup::Data d;
  d.name = "Dis_free(" + R.spec() + ")";
  d.num_objects = nu;
  for (std::size_t m = 0; m < nu; ++m)
    for (std::size_t h = 0; h < nu; ++h) {
      Elem mu = R.units()[m], hh = R.units()[h];
      d.dom.push_back(static_cast<Obj>(m));
      d.cod.push_back(R.unit_index(R.mul(mu, R.inverse(R.sqr(hh)))));
    }
  d.identity.resize(nu);
  for (std::size_t m = 0; m < nu; ++m) d.identity[m] = static_cast<Mor>(m * nu + R.unit_index(R.one()));
  d.unit = R.unit_index(R.one());
  d.tensor_obj = [Rp](Obj x, Obj y) {
    return Rp->unit_index(Rp->mul(Rp->units()[x], Rp->units()[y]));
  };
  d.compose = [Rp, nu](Mor g, Mor f) {
    Elem h = Rp->mul(Rp->units()[f % nu], Rp->units()[g % nu]);
    return static_cast<Mor>((f / nu) * nu + Rp->unit_index(h));
  };
  d.tensor_mor = [Rp, nu](Mor f, Mor g) {
    const FiniteRing& R = *Rp;
    Elem mu = R.mul(R.units()[f / nu], R.units()[g / nu]);
    Elem h = R.mul(R.units()[f % nu], R.units()[g % nu]);
    return static_cast<Mor>(R.unit_index(mu) * nu + R.unit_index(h));
  };
  d.obj_label = [Rp](Obj x) { return Rp->label(Rp->units()[x]); };
  d.mor_label = [Rp, nu](Mor f) { return Rp->label(Rp->units()[f % nu]); };
  auto cat = std::make_shared<const CatGroup>(std::move(d));

  MonFunctor F{"to_G", cat, G.hc.cat, {}, {}, {}, kNoIndex};
  F.on_objects.resize(nu);
  for (Obj x = 0; x < nu; ++x) F.on_objects[x] = G.units.at(R.units()[x]);
  F.on_morphisms.resize(nu * nu);
  for (Mor f = 0; f < nu * nu; ++f)
    F.on_morphisms[f] = G.hc.morphism(F(f / nu), G.units.at(R.units()[f % nu]));
  return DisCat{cat, std::move(F)};
}

}  // namespace catlab
