#pragma once
// Rank-2 Hopf algebra J = R[x]/(x^2 - qx) with D(x) = x(x)1 + 1(x)x + p x(x)x,
// free rank-2 J-Galois algebras, their Galois matrices, isomorphisms,
// brute-force classification, and cotensor products.
//
// Tensor products of rank-2 algebras are handled on monomial bases: an
// element of F_0 (x) ... (x) F_{k-1} is a vector of 2^k coefficients, bit i
// of the index saying whether the generator of factor i is present.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "catlab/check.hpp"
#include "catlab/qu.hpp"
#include "catlab/ring.hpp"

namespace catlab {

using Vec = std::vector<Elem>;

// Rank-2 algebra with generator g, g^2 = m g + b.
struct Rank2 {
  Elem m = 0, b = 0;
};

class TensorAlg {
 public:
  TensorAlg(const FiniteRing& R, std::vector<Rank2> factors) : R_(R), f_(std::move(factors)) {}

  std::size_t dim() const { return std::size_t{1} << f_.size(); }
  Vec zero() const { return Vec(dim(), R_.zero()); }
  Vec one() const {
    Vec v = zero();
    v[0] = R_.one();
    return v;
  }
  Vec basis(std::size_t mask) const {
    Vec v = zero();
    v[mask] = R_.one();
    return v;
  }

  Vec mul(const Vec& x, const Vec& y) const {
    Vec out = zero();
    std::vector<std::pair<std::size_t, Elem>> terms;
    for (std::size_t s = 0; s < dim(); ++s) {
      if (x[s] == R_.zero()) continue;
      for (std::size_t t = 0; t < dim(); ++t) {
        if (y[t] == R_.zero()) continue;
        terms.assign(1, {0, R_.mul(x[s], y[t])});
        for (std::size_t i = 0; i < f_.size(); ++i) {
          const std::size_t bit = std::size_t{1} << i;
          const int e = ((s & bit) != 0) + ((t & bit) != 0);
          if (e == 1) {
            for (auto& term : terms) term.first |= bit;
          } else if (e == 2) {
            const std::size_t k = terms.size();
            for (std::size_t j = 0; j < k; ++j) {
              auto [mask, c] = terms[j];
              terms[j] = {mask | bit, R_.mul(c, f_[i].m)};
              terms.push_back({mask, R_.mul(c, f_[i].b)});
            }
          }
        }
        for (auto [mask, c] : terms) out[mask] = R_.add(out[mask], c);
      }
    }
    return out;
  }
  Vec add(const Vec& x, const Vec& y) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = R_.add(x[i], y[i]);
    return out;
  }
  Vec scale(Elem c, const Vec& x) const {
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = R_.mul(c, x[i]);
    return out;
  }

 private:
  const FiniteRing& R_;
  std::vector<Rank2> f_;
};

// A linear map from a rank-2 algebra to a k-fold tensor product, given by
// the images of 1 and of the generator.
struct LinMap {
  Vec img1, imgg;
  std::size_t k = 0;
};

// Applies `phi` to tensor factor i of z (z has `nf` factors); the k output
// factors of phi take the place of factor i.
inline Vec apply_at(const FiniteRing& R, const Vec& z, std::size_t nf, std::size_t i,
                    const LinMap& phi) {
  const std::size_t out_nf = nf - 1 + phi.k;
  Vec out(std::size_t{1} << out_nf, R.zero());
  const std::size_t low = (std::size_t{1} << i) - 1;
  for (std::size_t s = 0; s < z.size(); ++s) {
    if (z[s] == R.zero()) continue;
    const Vec& w = (s >> i) & 1 ? phi.imgg : phi.img1;
    const std::size_t rest = (s & low) | ((s >> (i + 1)) << (i + phi.k));
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (w[t] == R.zero()) continue;
      std::size_t mask = rest | (t << i);
      out[mask] = R.add(out[mask], R.mul(z[s], w[t]));
    }
  }
  return out;
}

inline Vec swap_factors(const Vec& z, std::size_t i, std::size_t j) {
  Vec out(z.size());
  for (std::size_t s = 0; s < z.size(); ++s) {
    std::size_t bi = (s >> i) & 1, bj = (s >> j) & 1;
    std::size_t t = (s & ~((std::size_t{1} << i) | (std::size_t{1} << j))) | (bi << j) | (bj << i);
    out[t] = z[s];
  }
  return out;
}

// ---------------------------------------------------------------------------
// The Hopf algebra J.

struct HopfJ {
  PairPQ P;
  Elem eps_x = 0;                 // counit on x, derived
  std::array<Elem, 2> antipode{};  // S(x) = antipode[0] + antipode[1] x, derived
  CheckList checks;

  Rank2 algebra() const { return {P.q, P.R->zero()}; }
  LinMap delta() const {
    const FiniteRing& R = *P.R;
    return {{R.one(), R.zero(), R.zero(), R.zero()}, {R.zero(), R.one(), R.one(), P.p}, 2};
  }
  LinMap counit() const { return {{P.R->one()}, {eps_x}, 0}; }
};

inline HopfJ build_J(const PairPQ& P) {
  const FiniteRing& R = *P.R;
  HopfJ J{P, R.zero(), {R.zero(), R.zero()}, {}};
  CheckList& out = J.checks;
  TensorAlg J1(R, {J.algebra()});
  TensorAlg J2(R, {J.algebra(), J.algebra()});
  const Vec x = J1.basis(1);
  const LinMap D = J.delta();
  const Vec dx = D.imgg;

  out.expect("J.delta_algebra_map", J2.mul(dx, dx) == J2.scale(P.q, dx), "D(x)^2 != q D(x)");
  out.expect("J.cocommutative", swap_factors(dx, 0, 1) == dx, "D(x) is not symmetric");
  out.expect("J.coassociative", apply_at(R, dx, 2, 0, D) == apply_at(R, dx, 2, 1, D),
             "(D (x) id) D(x) != (id (x) D) D(x)");

  // Counit: every e with (id (x) eps) D(x) = x = (eps (x) id) D(x) and e^2 = qe.
  std::vector<Elem> eps;
  for (Elem e = 0; e < R.size(); ++e) {
    LinMap E{{R.one()}, {e}, 0};
    if (apply_at(R, dx, 2, 1, E) == x && apply_at(R, dx, 2, 0, E) == x && R.sqr(e) == R.mul(P.q, e))
      eps.push_back(e);
  }
  out.expect("J.counit_unique", eps.size() == 1 && eps[0] == R.zero(),
             std::to_string(eps.size()) + " counit solutions");
  if (!eps.empty()) J.eps_x = eps[0];

  // Antipode: every S(x) = s0 + s1 x with m(S (x) id) D(x) = eps(x) 1 = m(id (x) S) D(x).
  std::vector<std::array<Elem, 2>> sols;
  const Vec target = J1.scale(J.eps_x, J1.one());
  for (Elem s0 = 0; s0 < R.size(); ++s0)
    for (Elem s1 = 0; s1 < R.size(); ++s1) {
      LinMap S{{R.one(), R.zero()}, {s0, s1}, 1};
      auto collapse = [&](const Vec& z) {  // multiply the two factors of J (x) J
        Vec r = J1.zero();
        for (std::size_t m = 0; m < 4; ++m) {
          Vec a = J1.basis(m & 1), b = J1.basis(m >> 1);
          r = J1.add(r, J1.scale(z[m], J1.mul(a, b)));
        }
        return r;
      };
      if (collapse(apply_at(R, dx, 2, 0, S)) == target && collapse(apply_at(R, dx, 2, 1, S)) == target)
        sols.push_back({s0, s1});
    }
  out.expect("J.antipode_unique", sols.size() == 1 && sols[0][0] == R.zero() && sols[0][1] == R.one(),
             std::to_string(sols.size()) + " antipode solutions");
  if (!sols.empty()) J.antipode = sols[0];
  Vec sx{J.antipode[0], J.antipode[1]};
  out.expect("J.antipode_algebra_map", J1.mul(sx, sx) == J1.scale(P.q, sx), "S(x)^2 != q S(x)");
  return J;
}

// ---------------------------------------------------------------------------
// Rank-2 algebras A = R 1 + R v, v^2 = m v + b, with coaction
// eta(v) = l0 1(x)1 + l1 v(x)1 + a 1(x)x + l3 v(x)x.

struct GaloisAlgebra {
  Elem m = 0, b = 0, l0 = 0, l1 = 0, a = 0, l3 = 0;

  auto tuple() const { return std::array<Elem, 6>{m, b, l0, l1, a, l3}; }
  bool operator<(const GaloisAlgebra& o) const { return tuple() < o.tuple(); }
  bool operator==(const GaloisAlgebra& o) const { return tuple() == o.tuple(); }
  Rank2 algebra() const { return {m, b}; }
  Vec eta_v() const { return {l0, l1, a, l3}; }
};

inline std::string describe(const FiniteRing& R, const GaloisAlgebra& A) {
  return "v^2 = " + R.label(A.m) + " v + " + R.label(A.b) + ", eta(v) = (" + R.label(A.l0) + ", " +
         R.label(A.l1) + ", " + R.label(A.a) + ", " + R.label(A.l3) + ")";
}

inline LinMap coaction(const FiniteRing& R, const GaloisAlgebra& A) {
  return {{R.one(), R.zero(), R.zero(), R.zero()}, A.eta_v(), 2};
}

// Columns in the order 1(x)1, v(x)1, 1(x)v, v(x)v; rows 1(x)1, v(x)1, 1(x)x, v(x)x.
using Matrix4 = std::array<std::array<Elem, 4>, 4>;

inline Matrix4 galois_matrix(const HopfJ& J, const GaloisAlgebra& A) {
  const FiniteRing& R = *J.P.R;
  TensorAlg AJ(R, {A.algebra(), J.algebra()});
  Vec eta = A.eta_v();
  std::array<Vec, 4> cols{AJ.one(), AJ.basis(1), eta, AJ.mul(AJ.basis(1), eta)};
  Matrix4 M{};
  for (std::size_t c = 0; c < 4; ++c)
    for (std::size_t r = 0; r < 4; ++r) M[r][c] = cols[c][r];
  return M;
}

inline Elem determinant(const FiniteRing& R, const Matrix4& M) {
  std::array<int, 4> perm{0, 1, 2, 3};
  Elem det = R.zero();
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) inversions += perm[i] > perm[j];
    Elem term = R.one();
    for (int i = 0; i < 4; ++i) term = R.mul(term, M[i][perm[i]]);
    det = inversions % 2 ? R.sub(det, term) : R.add(det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// a^2 + a l3 m - l3^2 b.
inline Elem galois_criterion(const FiniteRing& R, const GaloisAlgebra& A) {
  return R.sub(R.add(R.sqr(A.a), R.mul(A.a, R.mul(A.l3, A.m))), R.mul(R.sqr(A.l3), A.b));
}

// First failing axiom, or nothing if A is a J-Galois algebra.
inline Witness galois_failure(const HopfJ& J, const GaloisAlgebra& A) {
  const FiniteRing& R = *J.P.R;
  TensorAlg AJ(R, {A.algebra(), J.algebra()});
  LinMap eta = coaction(R, A);
  if (apply_at(R, eta.imgg, 2, 1, J.counit()) != Vec{R.zero(), R.one()})
    return std::string("counit law fails");
  if (AJ.mul(eta.imgg, eta.imgg) != AJ.add(AJ.scale(A.m, eta.imgg), AJ.scale(A.b, eta.img1)))
    return std::string("coaction is not an algebra map");
  if (apply_at(R, eta.imgg, 2, 0, eta) != apply_at(R, eta.imgg, 2, 1, J.delta()))
    return std::string("coaction is not coassociative");
  if (!R.is_unit(determinant(R, galois_matrix(J, A)))) return std::string("Galois matrix is singular");
  return {};
}

inline GaloisAlgebra realize(const PairPQ& P, Elem a, Elem b) {
  const FiniteRing& R = *P.R;
  return {R.mul(a, P.q), b, R.zero(), R.one(), a, P.p};
}

// Is w |-> u v + r an algebra-comodule map B -> A?
inline bool is_comodule_algebra_map(const HopfJ& J, const GaloisAlgebra& B, const GaloisAlgebra& A,
                                    Elem u, Elem r) {
  const FiniteRing& R = *J.P.R;
  TensorAlg Aa(R, {A.algebra()});
  Vec img{r, u};
  if (Aa.mul(img, img) != Aa.add(Aa.scale(B.m, img), Aa.scale(B.b, Aa.one()))) return false;
  LinMap phi{{R.one(), R.zero()}, img, 1};
  LinMap etaA = coaction(R, A);
  Vec lhs = apply_at(R, img, 1, 0, etaA);
  Vec rhs = apply_at(R, B.eta_v(), 2, 0, phi);
  return lhs == rhs;
}

// All isomorphisms B -> A of the form w |-> u v + r, u a unit.
inline std::vector<std::pair<Elem, Elem>> isomorphisms(const HopfJ& J, const GaloisAlgebra& B,
                                                       const GaloisAlgebra& A) {
  const FiniteRing& R = *J.P.R;
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem u : R.units())
    for (Elem r = 0; r < R.size(); ++r)
      if (is_comodule_algebra_map(J, B, A, u, r)) out.emplace_back(u, r);
  return out;
}

// A rewritten in the generator v' = u v + r.
inline GaloisAlgebra change_basis(const FiniteRing& R, const GaloisAlgebra& A, Elem u, Elem r) {
  GaloisAlgebra B;
  B.m = R.add(R.mul(u, A.m), R.mul(R.from_int(2), r));
  B.b = R.sub(R.sub(R.mul(R.sqr(u), A.b), R.mul(u, R.mul(A.m, r))), R.sqr(r));
  B.l0 = R.add(R.mul(u, A.l0), R.mul(r, R.sub(R.one(), A.l1)));
  B.l1 = A.l1;
  B.a = R.sub(R.mul(u, A.a), R.mul(A.l3, r));
  B.l3 = A.l3;
  return B;
}

// Unital module maps R 1 + R v -> R 1 + R v are v |-> r + s v; the
// bijective ones should be exactly those with s a unit.
inline bool module_automorphisms_are_affine(const FiniteRing& R) {
  for (Elem r = 0; r < R.size(); ++r)
    for (Elem s = 0; s < R.size(); ++s) {
      std::vector<bool> hit(R.size() * R.size(), false);
      std::size_t count = 0;
      for (Elem al = 0; al < R.size(); ++al)
        for (Elem be = 0; be < R.size(); ++be) {
          std::size_t img = R.add(al, R.mul(be, r)) * R.size() + R.mul(be, s);
          if (!hit[img]) ++count;
          hit[img] = true;
        }
      if ((count == R.size() * R.size()) != R.is_unit(s)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Classification of free rank-2 J-Galois algebras by enumeration of R^6.

struct Classification {
  std::size_t candidates = 0;
  std::vector<GaloisAlgebra> survivors;
  std::vector<GaloisAlgebra> classes;  // least tuple of each isomorphism class
  std::vector<std::size_t> class_of_object;  // Qu object -> class
  CheckList checks;
};

inline GaloisAlgebra canonical(const FiniteRing& R, const GaloisAlgebra& A) {
  GaloisAlgebra best = A;
  for (Elem u : R.units())
    for (Elem r = 0; r < R.size(); ++r) best = std::min(best, change_basis(R, A, u, r));
  return best;
}

inline Classification classify_free_galois(const HopfJ& J, const QuCat& Q) {
  const FiniteRing& R = *J.P.R;
  const std::size_t n = R.size();
  Classification C;
  std::string crit_bad;
  for (Elem m = 0; m < n; ++m)
    for (Elem b = 0; b < n; ++b)
      for (Elem l0 = 0; l0 < n; ++l0)
        for (Elem l1 = 0; l1 < n; ++l1)
          for (Elem a = 0; a < n; ++a)
            for (Elem l3 = 0; l3 < n; ++l3) {
              ++C.candidates;
              GaloisAlgebra A{m, b, l0, l1, a, l3};
              if (l0 == R.zero() && l1 == R.one() && crit_bad.empty()) {
                Elem det = determinant(R, galois_matrix(J, A));
                if (det != galois_criterion(R, A)) crit_bad = describe(R, A);
              }
              if (!galois_failure(J, A)) C.survivors.push_back(A);
            }
  C.checks.expect("galois.matrix_criterion", crit_bad.empty(), "determinant differs at " + crit_bad);

  std::string nf_bad;
  for (const auto& A : C.survivors)
    if (A.l0 != R.zero() || A.l1 != R.one() || A.l3 != J.P.p || A.m != R.mul(A.a, J.P.q)) {
      nf_bad = describe(R, A);
      break;
    }
  C.checks.expect("galois.normal_form", nf_bad.empty(), "survivor " + nf_bad);

  // Basis changes are isomorphisms, and keep the survivors closed.
  std::string bc_bad;
  std::set<GaloisAlgebra> surv(C.survivors.begin(), C.survivors.end());
  std::map<GaloisAlgebra, std::size_t> cls;
  for (const auto& A : C.survivors) {
    GaloisAlgebra c = A;
    for (Elem u : R.units())
      for (Elem r = 0; r < n; ++r) {
        GaloisAlgebra B = change_basis(R, A, u, r);
        c = std::min(c, B);
        if (bc_bad.empty() && (!surv.count(B) || !is_comodule_algebra_map(J, B, A, u, r)))
          bc_bad = describe(R, A) + " with (u, r) = (" + R.label(u) + ", " + R.label(r) + ")";
      }
    if (!cls.count(c)) {
      cls.emplace(c, C.classes.size());
      C.classes.push_back(c);
    }
  }
  C.checks.expect("galois.basis_change", bc_bad.empty(), bc_bad);
  C.checks.expect("galois.module_automorphisms", module_automorphisms_are_affine(R),
                  "a unital module automorphism is not of the form v |-> uv + r");

  // Compare with pi0(Qu).
  Pi0 z = pi0(*Q.cat);
  C.class_of_object.resize(Q.objects.size());
  std::string bij_bad;
  for (Obj x = 0; x < Q.objects.size(); ++x) {
    GaloisAlgebra A = realize(J.P, Q.a_of(x), Q.b_of(x));
    auto it = cls.find(canonical(R, A));
    if (it == cls.end()) {
      bij_bad = "realize" + Q.cat->obj_label(x) + " is not a survivor";
      break;
    }
    C.class_of_object[x] = it->second;
  }
  if (bij_bad.empty()) {
    std::vector<std::size_t> comp_class(z.rep.size(), SIZE_MAX);
    std::vector<bool> used(C.classes.size(), false);
    for (Obj x = 0; x < Q.objects.size() && bij_bad.empty(); ++x) {
      auto& cc = comp_class[z.class_of[x]];
      if (cc == SIZE_MAX) {
        cc = C.class_of_object[x];
        if (used[cc]) bij_bad = "two components realize the same class";
        used[cc] = true;
      } else if (cc != C.class_of_object[x]) {
        bij_bad = "isomorphic objects realize different classes";
      }
    }
    if (bij_bad.empty() && std::find(used.begin(), used.end(), false) != used.end())
      bij_bad = "a Galois class is not realized";
  }
  C.checks.expect("galois.classes_match_pi0", bij_bad.empty(), bij_bad,
                  std::to_string(C.classes.size()) + " classes");
  return C;
}

// realize is full and faithful, and realize_morphism is functorial.
inline CheckList realize_checks(const HopfJ& J, const QuCat& Q) {
  CheckList out;
  const FiniteRing& R = *J.P.R;
  const CatGroup& C = *Q.cat;
  std::vector<GaloisAlgebra> alg(C.num_objects());
  std::string bad_alg;
  for (Obj x = 0; x < C.num_objects(); ++x) {
    alg[x] = realize(J.P, Q.a_of(x), Q.b_of(x));
    if (auto w = galois_failure(J, alg[x]); w && bad_alg.empty()) bad_alg = C.obj_label(x) + ": " + *w;
    if (bad_alg.empty() &&
        galois_criterion(R, alg[x]) !=
            R.neg(R.add(R.sqr(Q.a_of(x)), R.mul(R.mul(J.P.p, J.P.p), Q.b_of(x)))))
      bad_alg = C.obj_label(x) + ": criterion is not -(a^2 + p^2 b)";
  }
  out.expect("realize.galois", bad_alg.empty(), bad_alg);

  std::string bad_ff;
  for (Obj x = 0; x < C.num_objects() && bad_ff.empty(); ++x)
    for (Obj y = 0; y < C.num_objects() && bad_ff.empty(); ++y) {
      auto found = isomorphisms(J, alg[x], alg[y]);
      std::vector<std::pair<Elem, Elem>> homs;
      for (Mor f : C.hom(x, y)) homs.emplace_back(Q.u_of(f), Q.r_of(f));
      std::sort(found.begin(), found.end());
      std::sort(homs.begin(), homs.end());
      if (found != homs)
        bad_ff = C.obj_label(x) + " -> " + C.obj_label(y) + ": " + std::to_string(found.size()) +
                 " isomorphisms vs " + std::to_string(homs.size()) + " morphisms";
    }
  out.expect("realize.full_faithful", bad_ff.empty(), bad_ff);

  // Composite of w |-> u v + r and v |-> u' t + r' is w |-> u u' t + (u r' + r).
  std::string bad_fun;
  for (Mor f = 0; f < C.num_morphisms() && bad_fun.empty(); ++f)
    for (Mor g : C.out(C.cod(f))) {
      Mor h = C.compose(g, f);
      Elem u = R.mul(Q.u_of(f), Q.u_of(g));
      Elem r = R.add(R.mul(Q.u_of(f), Q.r_of(g)), Q.r_of(f));
      if (Q.u_of(h) != u || Q.r_of(h) != r) {
        bad_fun = C.mor_label(f) + " then " + C.mor_label(g);
        break;
      }
    }
  out.expect("realize.functorial", bad_fun.empty(), bad_fun);
  return out;
}

// ---------------------------------------------------------------------------
// Cotensor product A [] B inside A (x) B.

struct Cotensor {
  GaloisAlgebra algebra;
  Vec generator;              // in A (x) B, bit 0 = v_A, bit 1 = w_B
  std::size_t size = 0;       // |A [] B|
};

// Right convention: compare (eta_A (x) id) and (id (x) swap eta_B) in A(x)J(x)B.
// Left convention: compare in A(x)B(x)J after moving the J factor last.
enum class CotensorConvention { swap_B, move_J_last };

inline std::vector<Vec> cotensor_members(const HopfJ& J, const GaloisAlgebra& A, const GaloisAlgebra& B,
                                         CotensorConvention conv) {
  const FiniteRing& R = *J.P.R;
  LinMap etaA = coaction(R, A), etaB = coaction(R, B);
  // Images of the four basis tensors under both maps.
  std::array<Vec, 4> lhs, rhs;
  for (std::size_t s = 0; s < 4; ++s) {
    Vec e(4, R.zero());
    e[s] = R.one();
    if (conv == CotensorConvention::swap_B) {
      LinMap etaBs{etaB.img1, swap_factors(etaB.imgg, 0, 1), 2};
      lhs[s] = apply_at(R, e, 2, 0, etaA);   // A J B
      rhs[s] = apply_at(R, e, 2, 1, etaBs);  // A J B
    } else {
      lhs[s] = swap_factors(apply_at(R, e, 2, 0, etaA), 1, 2);  // A B J
      rhs[s] = apply_at(R, e, 2, 1, etaB);                      // A B J
    }
  }
  std::vector<Vec> members;
  const std::size_t n = R.size();
  Vec z(4);
  for (std::size_t idx = 0; idx < n * n * n * n; ++idx) {
    std::size_t t = idx;
    for (std::size_t i = 0; i < 4; ++i) {
      z[i] = static_cast<Elem>(t % n);
      t /= n;
    }
    bool ok = true;
    for (std::size_t row = 0; row < 8 && ok; ++row) {
      Elem acc = R.zero();
      for (std::size_t s = 0; s < 4; ++s) acc = R.add(acc, R.mul(z[s], R.sub(lhs[s][row], rhs[s][row])));
      ok = acc == R.zero();
    }
    if (ok) members.push_back(z);
  }
  return members;
}

// Throws std::runtime_error if the cotensor product is not free of rank 2
// with an inherited Galois coaction.
inline Cotensor cotensor(const HopfJ& J, const GaloisAlgebra& A, const GaloisAlgebra& B) {
  const FiniteRing& R = *J.P.R;
  const std::size_t n = R.size();
  TensorAlg AB(R, {A.algebra(), B.algebra()});
  auto members = cotensor_members(J, A, B, CotensorConvention::swap_B);
  std::set<Vec> mem(members.begin(), members.end());
  // An equalizer of linear maps is a submodule; with a basis {1, g} it is a
  // subalgebra as soon as g^2 lies in it.
  if (!mem.count(AB.one())) throw std::runtime_error("cotensor product does not contain 1");
  if (members.size() != n * n) throw std::runtime_error("cotensor product is not free of rank 2");

  std::optional<Vec> gen;
  std::map<Vec, std::pair<Elem, Elem>> coords;
  for (const Vec& g : members) {
    coords.clear();
    for (Elem al = 0; al < n; ++al)
      for (Elem be = 0; be < n; ++be) coords.emplace(AB.add(AB.scale(al, AB.one()), AB.scale(be, g)), std::make_pair(al, be));
    if (coords.size() == n * n) {
      gen = g;
      break;
    }
  }
  if (!gen) throw std::runtime_error("no rank-2 basis {1, g} of the cotensor product");
  const Vec& g = *gen;
  auto sq = coords.find(AB.mul(g, g));
  if (sq == coords.end()) throw std::runtime_error("cotensor product is not a subalgebra");
  auto [bb, mm] = sq->second;

  // (eta_A (x) id)(g) = l0 1 + l1 g + a (1 x) + l3 (g x) inside A(x)J(x)B.
  auto place = [&](const Vec& c, bool with_x) {
    Vec out(8, R.zero());
    for (std::size_t s = 0; s < 4; ++s) {
      std::size_t mask = (s & 1) | ((s >> 1) << 2) | (with_x ? 2u : 0u);
      out[mask] = c[s];
    }
    return out;
  };
  Vec target = apply_at(R, g, 2, 0, coaction(R, A));
  std::array<Vec, 4> basis{place(AB.one(), false), place(g, false), place(AB.one(), true), place(g, true)};
  std::optional<GaloisAlgebra> found;
  for (std::size_t idx = 0; idx < n * n * n * n && !found; ++idx) {
    std::array<Elem, 4> c;
    std::size_t t = idx;
    for (auto& ci : c) {
      ci = static_cast<Elem>(t % n);
      t /= n;
    }
    Vec acc(8, R.zero());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t k = 0; k < 8; ++k) acc[k] = R.add(acc[k], R.mul(c[i], basis[i][k]));
    if (acc == target) found = GaloisAlgebra{mm, bb, c[0], c[1], c[2], c[3]};
  }
  if (!found) throw std::runtime_error("coaction does not restrict to the cotensor product");
  if (auto w = galois_failure(J, *found)) throw std::runtime_error("cotensor product is not Galois: " + *w);
  return Cotensor{*found, g, members.size()};
}

struct CotensorReport {
  CheckList checks;
  std::size_t pairs_checked = 0, pairs_total = 0;
};

// realize(X * Y) ~ realize X [] realize Y over object pairs. With a pair
// budget, pairs are restricted to component representatives x all objects.
inline CotensorReport cotensor_checks(const HopfJ& J, const QuCat& Q, std::size_t pair_budget = 4096) {
  CotensorReport rep;
  const CatGroup& C = *Q.cat;
  const std::size_t N = C.num_objects();
  rep.pairs_total = N * N;
  std::vector<std::pair<Obj, Obj>> pairs;
  if (N * N <= pair_budget) {
    for (Obj x = 0; x < N; ++x)
      for (Obj y = 0; y < N; ++y) pairs.emplace_back(x, y);
  } else {
    Pi0 z = pi0(C);
    for (Obj x : z.rep)
      for (Obj y = 0; y < N; ++y) pairs.emplace_back(x, y);
  }
  std::string bad;
  for (auto [x, y] : pairs) {
    GaloisAlgebra A = realize(J.P, Q.a_of(x), Q.b_of(x));
    GaloisAlgebra B = realize(J.P, Q.a_of(y), Q.b_of(y));
    Obj xy = C.tensor(x, y);
    GaloisAlgebra AB = realize(J.P, Q.a_of(xy), Q.b_of(xy));
    try {
      Cotensor ct = cotensor(J, A, B);
      if (isomorphisms(J, ct.algebra, AB).empty()) bad = C.obj_label(x) + " [] " + C.obj_label(y);
    } catch (const std::runtime_error& e) {
      bad = C.obj_label(x) + " [] " + C.obj_label(y) + ": " + e.what();
    }
    ++rep.pairs_checked;
    if (!bad.empty()) break;
  }
  rep.checks.expect("cotensor.monoidal", bad.empty(), bad,
                    std::to_string(rep.pairs_checked) + " of " + std::to_string(rep.pairs_total) + " pairs");
  // Both conventions agree on the first pair (J is cocommutative).
  if (N > 0) {
    Obj x = N > 1 ? 1 : 0;
    GaloisAlgebra A = realize(J.P, Q.a_of(x), Q.b_of(x));
    bool same = cotensor_members(J, A, A, CotensorConvention::swap_B) ==
                cotensor_members(J, A, A, CotensorConvention::move_J_last);
    rep.checks.expect("cotensor.conventions_agree", same, "conventions differ at " + C.obj_label(x));
  }
  return rep;
}

}  // namespace catlab
