#pragma once
// Finite commutative rings with unit, stored as total addition and
// multiplication tables over the index set 0..n-1.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace catlab {

using Elem = std::uint32_t;

class RingAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FiniteRing {
 public:
  // Validates every ring axiom on the full tables; throws RingAxiomError
  // naming the first failing element triple.
  FiniteRing(std::size_t n, std::vector<Elem> add_table, std::vector<Elem> mul_table,
             Elem zero, Elem one, std::vector<std::string> labels,
             std::string spec)
      : n_(n),
        add_(std::move(add_table)),
        mul_(std::move(mul_table)),
        zero_(zero),
        one_(one),
        labels_(std::move(labels)),
        spec_(std::move(spec)) {
    if (n_ == 0) throw RingAxiomError("ring must have at least one element");
    if (add_.size() != n_ * n_ || mul_.size() != n_ * n_ ||
        labels_.size() != n_ || zero_ >= n_ || one_ >= n_)
      throw RingAxiomError("ring tables have inconsistent sizes");
    for (Elem v : add_)
      if (v >= n_) throw RingAxiomError("addition table leaves the carrier");
    for (Elem v : mul_)
      if (v >= n_) throw RingAxiomError("multiplication table leaves the carrier");
    validate();
    neg_.assign(n_, 0);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (add(a, b) == zero_) neg_[a] = b;
    inv_.assign(n_, kNone);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b)
        if (mul(a, b) == one_) {
          inv_[a] = b;
          break;
        }
    unit_pos_.assign(n_, kNone);
    for (Elem a = 0; a < n_; ++a)
      if (inv_[a] != kNone) {
        unit_pos_[a] = static_cast<Elem>(units_.size());
        units_.push_back(a);
      }
  }

  static constexpr Elem kNone = std::numeric_limits<Elem>::max();

  std::size_t size() const { return n_; }
  Elem zero() const { return zero_; }
  Elem one() const { return one_; }
  bool is_zero_ring() const { return n_ == 1; }

  Elem add(Elem a, Elem b) const { return add_[a * n_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem sqr(Elem a) const { return mul(a, a); }
  Elem pow(Elem a, unsigned k) const {
    Elem r = one_;
    for (unsigned i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }

  bool is_unit(Elem a) const { return inv_[a] != kNone; }
  Elem inverse(Elem a) const {
    if (!is_unit(a))
      throw std::invalid_argument("element " + label(a) + " is not a unit");
    return inv_[a];
  }
  std::span<const Elem> units() const { return units_; }
  // Position of a unit inside units(), or kNone.
  Elem unit_index(Elem a) const { return unit_pos_[a]; }

  // The canonical ring map Z -> R.
  Elem from_int(long long k) const {
    Elem acc = zero_;
    long long m = k < 0 ? -k : k;
    m %= static_cast<long long>(characteristic());
    for (long long i = 0; i < m; ++i) acc = add(acc, one_);
    return k < 0 ? neg(acc) : acc;
  }

  // Additive order of 1.
  std::size_t characteristic() const {
    std::size_t c = 1;
    for (Elem acc = one_; acc != zero_; acc = add(acc, one_)) ++c;
    return c;
  }

  const std::string& label(Elem a) const { return labels_[a]; }
  std::optional<Elem> find(std::string_view text) const {
    std::string key = strip(text);
    for (Elem a = 0; a < n_; ++a)
      if (strip(labels_[a]) == key) return a;
    return std::nullopt;
  }
  const std::string& spec() const { return spec_; }

 private:
  static std::string strip(std::string_view s) {
    std::string out;
    for (char c : s)
      if (c != ' ' && c != '\t') out.push_back(c);
    return out;
  }

  void fail(const char* law, Elem a, Elem b, Elem c) const {
    std::ostringstream os;
    os << "ring axiom '" << law << "' fails at (" << labels_[a] << ", "
       << labels_[b] << ", " << labels_[c] << ") in " << spec_;
    throw RingAxiomError(os.str());
  }

  void validate() const {
    if (n_ > 1 && zero_ == one_)
      throw RingAxiomError("zero equals one in a ring with more than one element");
    for (Elem a = 0; a < n_; ++a) {
      if (add(a, zero_) != a || add(zero_, a) != a) fail("additive identity", a, a, a);
      if (mul(a, one_) != a || mul(one_, a) != a) fail("multiplicative identity", a, a, a);
      bool has_neg = false;
      for (Elem b = 0; b < n_; ++b) {
        if (add(a, b) == zero_) has_neg = true;
        if (add(a, b) != add(b, a)) fail("additive commutativity", a, b, b);
        if (mul(a, b) != mul(b, a)) fail("multiplicative commutativity", a, b, b);
      }
      if (!has_neg) fail("additive inverse", a, a, a);
    }
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        Elem ab = add(a, b), mab = mul(a, b);
        for (Elem c = 0; c < n_; ++c) {
          if (add(ab, c) != add(a, add(b, c))) fail("additive associativity", a, b, c);
          if (mul(mab, c) != mul(a, mul(b, c))) fail("multiplicative associativity", a, b, c);
          if (mul(a, add(b, c)) != add(mab, mul(a, c))) fail("distributivity", a, b, c);
        }
      }
  }

  std::size_t n_;
  std::vector<Elem> add_, mul_;
  Elem zero_, one_;
  std::vector<std::string> labels_;
  std::string spec_;
  std::vector<Elem> neg_, inv_, unit_pos_, units_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

inline RingPtr make_zmod(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Z/0 is not a finite ring");
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = static_cast<Elem>((a + b) % n);
      mul[a * n + b] = static_cast<Elem>((a * b) % n);
    }
  }
  return std::make_shared<const FiniteRing>(n, std::move(add), std::move(mul), 0,
                                            static_cast<Elem>(1 % n), std::move(labels),
                                            "Z/" + std::to_string(n));
}

// Componentwise product; the first factor is the most significant digit of
// the element index.
inline RingPtr make_product(std::span<const RingPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("product of an empty list of rings");
  std::size_t n = 1;
  for (const auto& f : factors) n *= f->size();
  const std::size_t k = factors.size();
  auto digits = [&](std::size_t idx) {
    std::vector<Elem> d(k);
    for (std::size_t i = k; i-- > 0;) {
      d[i] = static_cast<Elem>(idx % factors[i]->size());
      idx /= factors[i]->size();
    }
    return d;
  };
  auto index = [&](const std::vector<Elem>& d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i]->size() + d[i];
    return static_cast<Elem>(idx);
  };
  std::vector<std::vector<Elem>> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = digits(i);
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> tmp_a(k), tmp_m(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) {
        tmp_a[i] = factors[i]->add(all[a][i], all[b][i]);
        tmp_m[i] = factors[i]->mul(all[a][i], all[b][i]);
      }
      add[a * n + b] = index(tmp_a);
      mul[a * n + b] = index(tmp_m);
    }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) {
      if (i) s += ",";
      s += factors[i]->label(all[a][i]);
    }
    labels[a] = s + ")";
  }
  std::vector<Elem> z(k), o(k);
  std::string spec;
  for (std::size_t i = 0; i < k; ++i) {
    z[i] = factors[i]->zero();
    o[i] = factors[i]->one();
    if (i) spec += " x ";
    spec += factors[i]->spec();
  }
  return std::make_shared<const FiniteRing>(n, std::move(add), std::move(mul), index(z),
                                            index(o), std::move(labels), spec);
}

inline RingPtr make_product(std::initializer_list<RingPtr> factors) {
  std::vector<RingPtr> v(factors);
  return make_product(std::span<const RingPtr>(v));
}

// Label of a polynomial over `base` with coefficients listed low to high.
inline std::string poly_label(const FiniteRing& base, std::span<const Elem> coeffs,
                              std::string_view var = "x") {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Elem c = coeffs[i];
    if (c == base.zero()) continue;
    std::string term;
    const std::string& cl = base.label(c);
    bool wrap = cl.find_first_of("+,") != std::string::npos;
    if (i == 0) {
      term = cl;
    } else {
      if (c != base.one()) term = wrap ? "(" + cl + ")" : cl;
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out.empty() ? base.label(base.zero()) : out;
}

// R[x]/(f) for a monic f given low-to-high; elements are coefficient vectors
// of length deg f, with coefficient i as digit i of the index.
inline RingPtr make_poly_quotient(const RingPtr& base, std::vector<Elem> f) {
  if (f.size() < 2) throw std::invalid_argument("modulus must have degree at least 1");
  if (f.back() != base->one())
    throw std::invalid_argument("modulus must be monic");
  const std::size_t d = f.size() - 1;
  const std::size_t m = base->size();
  std::size_t n = 1;
  for (std::size_t i = 0; i < d; ++i) n *= m;
  std::vector<std::vector<Elem>> all(n, std::vector<Elem>(d));
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t t = idx;
    for (std::size_t i = 0; i < d; ++i) {
      all[idx][i] = static_cast<Elem>(t % m);
      t /= m;
    }
  }
  auto index = [&](const std::vector<Elem>& c) {
    std::size_t idx = 0;
    for (std::size_t i = d; i-- > 0;) idx = idx * m + c[i];
    return static_cast<Elem>(idx);
  };
  const FiniteRing& R = *base;
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> sum(d), prod(2 * d - 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < d; ++i) sum[i] = R.add(all[a][i], all[b][i]);
      add[a * n + b] = index(sum);
      std::fill(prod.begin(), prod.end(), R.zero());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          prod[i + j] = R.add(prod[i + j], R.mul(all[a][i], all[b][j]));
      // x^k = -(f_0 + ... + f_{d-1} x^{d-1}) x^{k-d}
      for (std::size_t k = prod.size(); k-- > d;) {
        Elem c = prod[k];
        if (c == R.zero()) continue;
        prod[k] = R.zero();
        for (std::size_t i = 0; i < d; ++i)
          prod[k - d + i] = R.sub(prod[k - d + i], R.mul(c, f[i]));
      }
      mul[a * n + b] = index(std::vector<Elem>(prod.begin(), prod.begin() + d));
    }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = poly_label(R, all[a]);
  std::vector<Elem> one(d, R.zero());
  one[0] = R.one();
  std::string spec = R.spec() + "[x]/(" + poly_label(R, f) + ")";
  return std::make_shared<const FiniteRing>(n, std::move(add), std::move(mul),
                                            index(std::vector<Elem>(d, R.zero())),
                                            index(one), std::move(labels), spec);
}

struct RingHom {
  RingPtr source, target;
  std::vector<Elem> map;

  Elem operator()(Elem a) const { return map[a]; }
};

// Checks 0, 1, +, * preservation on every pair; throws std::invalid_argument.
inline RingHom make_ring_hom(RingPtr source, RingPtr target, std::vector<Elem> map) {
  const FiniteRing& S = *source;
  const FiniteRing& T = *target;
  if (map.size() != S.size()) throw std::invalid_argument("ring map is not total");
  for (Elem v : map)
    if (v >= T.size()) throw std::invalid_argument("ring map leaves the target");
  if (map[S.zero()] != T.zero() || map[S.one()] != T.one())
    throw std::invalid_argument("ring map does not preserve 0 and 1");
  for (Elem a = 0; a < S.size(); ++a)
    for (Elem b = 0; b < S.size(); ++b)
      if (map[S.add(a, b)] != T.add(map[a], map[b]) ||
          map[S.mul(a, b)] != T.mul(map[a], map[b]))
        throw std::invalid_argument("ring map fails at (" + S.label(a) + ", " +
                                    S.label(b) + ")");
  return RingHom{std::move(source), std::move(target), std::move(map)};
}

struct PrincipalQuotient {
  RingPtr base;
  Elem generator;
  std::vector<Elem> ideal;  // sorted {r * generator}
  RingPtr quotient;
  RingHom project;
  std::vector<Elem> lift;  // least-index representative of each coset
};

inline PrincipalQuotient quotient_by_principal(const RingPtr& base, Elem p) {
  const FiniteRing& R = *base;
  std::vector<Elem> ideal;
  for (Elem r = 0; r < R.size(); ++r) ideal.push_back(R.mul(r, p));
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());

  std::vector<Elem> rep_of(R.size());
  for (Elem a = 0; a < R.size(); ++a) {
    Elem best = a;
    for (Elem i : ideal) best = std::min(best, R.add(a, i));
    rep_of[a] = best;
  }
  std::vector<Elem> reps;
  for (Elem a = 0; a < R.size(); ++a)
    if (rep_of[a] == a) reps.push_back(a);
  std::vector<Elem> pos(R.size(), FiniteRing::kNone);
  for (Elem i = 0; i < reps.size(); ++i) pos[reps[i]] = i;
  const std::size_t n = reps.size();
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = pos[rep_of[R.add(reps[i], reps[j])]];
      mul[i * n + j] = pos[rep_of[R.mul(reps[i], reps[j])]];
    }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = R.label(reps[i]);
  auto q = std::make_shared<const FiniteRing>(
      n, std::move(add), std::move(mul), pos[rep_of[R.zero()]], pos[rep_of[R.one()]],
      std::move(labels), R.spec() + "/(" + R.label(p) + ")");
  std::vector<Elem> proj(R.size());
  for (Elem a = 0; a < R.size(); ++a) proj[a] = pos[rep_of[a]];
  RingHom project = make_ring_hom(base, q, std::move(proj));
  return PrincipalQuotient{base, p, std::move(ideal), q, std::move(project), std::move(reps)};
}

struct UnitAnalysis {
  std::vector<Elem> units, zero_divisors, radical;
  bool local = false;  // non-units form a proper ideal
};

inline UnitAnalysis unit_analysis(const FiniteRing& R) {
  UnitAnalysis out;
  for (Elem a = 0; a < R.size(); ++a) {
    if (R.is_unit(a)) out.units.push_back(a);
    if (a != R.zero()) {
      for (Elem b = 0; b < R.size(); ++b)
        if (b != R.zero() && R.mul(a, b) == R.zero()) {
          out.zero_divisors.push_back(a);
          break;
        }
    }
    Elem x = a;
    for (std::size_t k = 0; k <= R.size(); ++k, x = R.mul(x, a))
      if (x == R.zero()) {
        out.radical.push_back(a);
        break;
      }
  }
  // Every non-unit of a finite ring is 0 or a zero divisor.
  for (Elem a = 0; a < R.size(); ++a) {
    bool zd = std::binary_search(out.zero_divisors.begin(), out.zero_divisors.end(), a);
    if (R.is_unit(a) == (zd || (a == R.zero() && !R.is_zero_ring())))
      throw std::logic_error("unit / zero-divisor classification failed at " + R.label(a));
  }
  if (!R.is_zero_ring()) {
    out.local = true;
    for (Elem a = 0; a < R.size() && out.local; ++a)
      for (Elem b = 0; b < R.size(); ++b)
        if (!R.is_unit(a) && !R.is_unit(b) && R.is_unit(R.add(a, b))) {
          out.local = false;
          break;
        }
  }
  return out;
}

inline std::vector<std::pair<Elem, Elem>> admissible_pairs(const FiniteRing& R) {
  std::vector<std::pair<Elem, Elem>> out;
  const Elem two = R.from_int(2);
  for (Elem p = 0; p < R.size(); ++p)
    for (Elem q = 0; q < R.size(); ++q)
      if (R.add(R.mul(p, q), two) == R.zero()) out.emplace_back(p, q);
  return out;
}

}  // namespace catlab
