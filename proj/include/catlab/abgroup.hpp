#pragma once
// Finite abelian groups given by their full operation table, homomorphisms
// between them, and exactness checking.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catlab {

using GElem = std::uint32_t;

class NotAGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAHom : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FinAbGroup {
 public:
  FinAbGroup(std::vector<GElem> table, GElem id, std::vector<std::string> labels)
      : n_(labels.size()), op_(std::move(table)), id_(id), labels_(std::move(labels)) {
    if (n_ == 0) throw NotAGroup("a group has at least one element");
    if (op_.size() != n_ * n_ || id_ >= n_) throw NotAGroup("inconsistent table sizes");
    for (GElem v : op_)
      if (v >= n_) throw NotAGroup("operation leaves the carrier");
    inv_.assign(n_, n_);
    for (GElem a = 0; a < n_; ++a) {
      if (op(a, id_) != a) fail("identity", a, id_, id_);
      for (GElem b = 0; b < n_; ++b) {
        if (op(a, b) != op(b, a)) fail("commutativity", a, b, b);
        if (op(a, b) == id_) inv_[a] = b;
      }
      if (inv_[a] == n_) fail("inverse", a, a, a);
    }
    for (GElem a = 0; a < n_; ++a)
      for (GElem b = 0; b < n_; ++b) {
        GElem ab = op(a, b);
        for (GElem c = 0; c < n_; ++c)
          if (op(ab, c) != op(a, op(b, c))) fail("associativity", a, b, c);
      }
  }

  std::size_t order() const { return n_; }
  GElem op(GElem a, GElem b) const { return op_[a * n_ + b]; }
  GElem identity() const { return id_; }
  GElem inverse(GElem a) const { return inv_[a]; }
  const std::string& label(GElem a) const { return labels_[a]; }

  // Adds a to itself k times.
  GElem times(GElem a, std::size_t k) const {
    GElem r = id_;
    for (std::size_t i = 0; i < k; ++i) r = op(r, a);
    return r;
  }
  std::size_t element_order(GElem a) const {
    std::size_t k = 1;
    for (GElem x = a; x != id_; x = op(x, a)) ++k;
    return k;
  }

  // Same carrier size, table and identity. Labels are presentation only.
  bool same_table(const FinAbGroup& o) const {
    return n_ == o.n_ && id_ == o.id_ && op_ == o.op_;
  }

 private:
  [[noreturn]] void fail(const char* law, GElem a, GElem b, GElem c) const {
    throw NotAGroup(std::string("group axiom '") + law + "' fails at (" + labels_[a] +
                    ", " + labels_[b] + ", " + labels_[c] + ")");
  }

  std::size_t n_;
  std::vector<GElem> op_;
  GElem id_;
  std::vector<GElem> inv_;
  std::vector<std::string> labels_;
};

using GroupPtr = std::shared_ptr<const FinAbGroup>;

inline GroupPtr trivial_group() {
  return std::make_shared<const FinAbGroup>(std::vector<GElem>{0}, 0,
                                            std::vector<std::string>{"0"});
}

// A group whose elements carry values of type T (ring elements, pairs, ...).
template <class T>
struct Enumerated {
  GroupPtr group;
  std::vector<T> values;
  std::map<T, GElem> index;

  GElem at(const T& v) const {
    auto it = index.find(v);
    if (it == index.end()) throw std::out_of_range("value is not a group element");
    return it->second;
  }
  bool contains(const T& v) const { return index.count(v) != 0; }
};

template <class T, class Op, class Label>
Enumerated<T> group_from_closure(std::vector<T> elements, Op op, const T& id, Label label) {
  Enumerated<T> out;
  out.values = std::move(elements);
  for (GElem i = 0; i < out.values.size(); ++i)
    if (!out.index.emplace(out.values[i], i).second)
      throw NotAGroup("duplicate element " + label(out.values[i]));
  auto id_it = out.index.find(id);
  if (id_it == out.index.end()) throw NotAGroup("identity " + label(id) + " is not in the set");
  const std::size_t n = out.values.size();
  std::vector<GElem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      T v = op(out.values[a], out.values[b]);
      auto it = out.index.find(v);
      if (it == out.index.end())
        throw NotAGroup("closure fails at (" + label(out.values[a]) + ", " +
                        label(out.values[b]) + ")");
      table[a * n + b] = it->second;
    }
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) labels[a] = label(out.values[a]);
  out.group = std::make_shared<const FinAbGroup>(std::move(table), id_it->second,
                                                 std::move(labels));
  return out;
}

struct Subgroup;
struct Quotient;

class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<GElem> map)
      : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
    const FinAbGroup& G = *source_;
    const FinAbGroup& H = *target_;
    if (map_.size() != G.order()) throw NotAHom("map is not total on the source");
    for (GElem v : map_)
      if (v >= H.order()) throw NotAHom("map leaves the target");
    if (map_[G.identity()] != H.identity())
      throw NotAHom("identity maps to " + H.label(map_[G.identity()]));
    for (GElem a = 0; a < G.order(); ++a)
      for (GElem b = 0; b < G.order(); ++b)
        if (map_[G.op(a, b)] != H.op(map_[a], map_[b]))
          throw NotAHom("additivity fails at (" + G.label(a) + ", " + G.label(b) + ")");
  }

  static GroupHom identity(const GroupPtr& G) {
    std::vector<GElem> m(G->order());
    std::iota(m.begin(), m.end(), 0);
    return GroupHom(G, G, std::move(m));
  }
  static GroupHom zero(const GroupPtr& G, const GroupPtr& H) {
    return GroupHom(G, H, std::vector<GElem>(G->order(), H->identity()));
  }

  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  GElem operator()(GElem a) const { return map_[a]; }
  std::span<const GElem> map() const { return map_; }

  std::vector<GElem> kernel_elements() const {
    std::vector<GElem> k;
    for (GElem a = 0; a < map_.size(); ++a)
      if (map_[a] == target_->identity()) k.push_back(a);
    return k;
  }
  std::vector<GElem> image_elements() const {
    std::vector<GElem> im(map_.begin(), map_.end());
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }
  bool injective() const { return kernel_elements().size() == 1; }
  bool surjective() const { return image_elements().size() == target_->order(); }
  bool bijective() const { return injective() && surjective(); }

  Subgroup kernel() const;
  Subgroup image() const;
  Quotient cokernel() const;

 private:
  GroupPtr source_, target_;
  std::vector<GElem> map_;
};

// g after f.
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!f.target()->same_table(*g.source()))
    throw std::invalid_argument("homomorphisms are not composable");
  std::vector<GElem> m(f.source()->order());
  for (GElem a = 0; a < m.size(); ++a) m[a] = g(f(a));
  return GroupHom(f.source(), g.target(), std::move(m));
}

// Inverse of a bijective homomorphism.
inline GroupHom inverse(const GroupHom& f) {
  if (!f.bijective()) throw std::invalid_argument("homomorphism is not bijective");
  std::vector<GElem> m(f.target()->order());
  for (GElem a = 0; a < f.source()->order(); ++a) m[f(a)] = a;
  return GroupHom(f.target(), f.source(), std::move(m));
}

struct Subgroup {
  GroupPtr group;
  std::vector<GElem> embed;  // subgroup element -> parent element, increasing
  GroupPtr parent;

  GroupHom inclusion() const { return GroupHom(group, parent, embed); }
};

struct Quotient {
  GroupPtr group;
  std::vector<GElem> representative;  // least-index parent element per class
  std::vector<GElem> project;         // parent element -> class
  GroupPtr parent;

  GroupHom projection() const { return GroupHom(parent, group, project); }
};

inline Subgroup make_subgroup(const GroupPtr& parent, std::vector<GElem> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto sub = group_from_closure(
      members, [&](GElem a, GElem b) { return parent->op(a, b); }, parent->identity(),
      [&](GElem a) { return parent->label(a); });
  return Subgroup{sub.group, std::move(sub.values), parent};
}

inline Quotient make_quotient(const GroupPtr& parent, std::span<const GElem> subgroup) {
  const FinAbGroup& G = *parent;
  std::vector<GElem> rep_of(G.order());
  for (GElem a = 0; a < G.order(); ++a) {
    GElem best = a;
    for (GElem s : subgroup) best = std::min(best, G.op(a, s));
    rep_of[a] = best;
  }
  std::vector<GElem> reps;
  for (GElem a = 0; a < G.order(); ++a)
    if (rep_of[a] == a) reps.push_back(a);
  std::vector<GElem> pos(G.order());
  for (GElem i = 0; i < reps.size(); ++i) pos[reps[i]] = i;
  const std::size_t n = reps.size();
  std::vector<GElem> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = pos[rep_of[G.op(reps[i], reps[j])]];
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = G.label(reps[i]);
  std::vector<GElem> project(G.order());
  for (GElem a = 0; a < G.order(); ++a) project[a] = pos[rep_of[a]];
  auto q = std::make_shared<const FinAbGroup>(std::move(table), pos[rep_of[G.identity()]],
                                              std::move(labels));
  return Quotient{q, std::move(reps), std::move(project), parent};
}

inline Subgroup GroupHom::kernel() const { return make_subgroup(source_, kernel_elements()); }
inline Subgroup GroupHom::image() const { return make_subgroup(target_, image_elements()); }
inline Quotient GroupHom::cokernel() const {
  auto im = image_elements();
  return make_quotient(target_, im);
}

// Invariant factors d1 | d2 | ... | dk (all > 1) with product |G|, read off
// from the number of solutions of p^j x = 0 for every prime p dividing |G|.
inline std::vector<std::size_t> invariant_factors(const FinAbGroup& G) {
  std::size_t n = G.order();
  std::vector<std::pair<std::size_t, std::size_t>> primes;  // (p, exponent in |G|)
  for (std::size_t p = 2, m = n; m > 1; ++p) {
    std::size_t e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  // For each prime, the exponents of the cyclic p-primary factors, descending.
  std::vector<std::vector<std::size_t>> parts;
  for (auto [p, e] : primes) {
    std::vector<std::size_t> count_log(e + 1, 0);  // log_p #{x : p^j x = 0}
    for (std::size_t j = 1; j <= e; ++j) {
      std::size_t pj = 1;
      for (std::size_t i = 0; i < j; ++i) pj *= p;
      std::size_t cnt = 0;
      for (GElem a = 0; a < n; ++a)
        if (G.times(a, pj) == G.identity()) ++cnt;
      std::size_t lg = 0;
      while (cnt > 1) {
        cnt /= p;
        ++lg;
      }
      count_log[j] = lg;
    }
    // Factors of order >= p^j number count_log[j] - count_log[j-1].
    std::vector<std::size_t> ge(e + 2, 0);
    for (std::size_t j = 1; j <= e; ++j) ge[j] = count_log[j] - count_log[j - 1];
    std::vector<std::size_t> exps;
    for (std::size_t j = 1; j <= e; ++j) {
      std::size_t exactly = ge[j] - ge[j + 1];
      for (std::size_t i = 0; i < exactly; ++i) exps.push_back(j);
    }
    std::sort(exps.rbegin(), exps.rend());
    parts.push_back(std::move(exps));
  }
  std::size_t k = 0;
  for (const auto& v : parts) k = std::max(k, v.size());
  std::vector<std::size_t> out(k, 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < parts[i].size(); ++j)
      for (std::size_t t = 0; t < parts[i][j]; ++t) out[k - 1 - j] *= primes[i].first;
  return out;
}

inline bool isomorphic(const FinAbGroup& a, const FinAbGroup& b) {
  return a.order() == b.order() && invariant_factors(a) == invariant_factors(b);
}

inline std::string describe(const FinAbGroup& G) {
  auto f = invariant_factors(G);
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += " x ";
    s += "Z/" + std::to_string(f[i]);
  }
  return s;
}

// Z/d_0 x ... x Z/d_{k-1}; coordinate i has weight d_0 ... d_{i-1} in the
// element index, so (g, k) in a product of two lists has index g + |G| k.
inline GroupPtr cyclic_product(std::span<const std::size_t> d) {
  std::size_t n = 1;
  for (std::size_t di : d) {
    if (di == 0) throw std::invalid_argument("cyclic factor of order 0");
    n *= di;
  }
  auto coords = [&](std::size_t x) {
    std::vector<std::size_t> c(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
      c[i] = x % d[i];
      x /= d[i];
    }
    return c;
  };
  std::vector<GElem> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = coords(a);
    std::string l = "(";
    for (std::size_t i = 0; i < ca.size(); ++i) l += (i ? "," : "") + std::to_string(ca[i]);
    labels[a] = d.empty() ? "0" : l + ")";
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = coords(b);
      std::size_t idx = 0, w = 1;
      for (std::size_t i = 0; i < d.size(); ++i) {
        idx += ((ca[i] + cb[i]) % d[i]) * w;
        w *= d[i];
      }
      table[a * n + b] = static_cast<GElem>(idx);
    }
  }
  return std::make_shared<const FinAbGroup>(std::move(table), 0, std::move(labels));
}

// The hom from cyclic_product(d) sending the i-th basis vector to images[i];
// throws NotAHom unless d_i images[i] = 0.
inline GroupHom hom_from_generators(std::span<const std::size_t> d, const GroupPtr& source,
                                    const GroupPtr& target, std::span<const GElem> images) {
  const FinAbGroup& H = *target;
  if (images.size() != d.size()) throw NotAHom("one image per generator is required");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (H.times(images[i], d[i]) != H.identity())
      throw NotAHom("generator image " + H.label(images[i]) + " has order not dividing " +
                    std::to_string(d[i]));
  std::vector<GElem> m(source->order());
  for (std::size_t x = 0; x < m.size(); ++x) {
    std::size_t t = x;
    GElem acc = H.identity();
    for (std::size_t i = 0; i < d.size(); ++i) {
      acc = H.op(acc, H.times(images[i], t % d[i]));
      t /= d[i];
    }
    m[x] = acc;
  }
  return GroupHom(source, target, std::move(m));
}


struct ExactnessReport {
  bool exact = true;
  std::string witness;  // empty when exact
};

// homs[i] : A_i -> A_{i+1}. `positions` lists indices k in [1, homs.size())
// at which im(homs[k-1]) == ker(homs[k]) is required. `leading_zero` asks
// for injectivity of homs.front(), `trailing_zero` for surjectivity of
// homs.back().
inline ExactnessReport check_exact_sequence(std::span<const GroupHom> homs,
                                            std::span<const std::size_t> positions,
                                            bool leading_zero, bool trailing_zero = false) {
  for (std::size_t i = 1; i < homs.size(); ++i)
    if (!homs[i - 1].target()->same_table(*homs[i].source()))
      throw std::invalid_argument("sequence is not composable at position " +
                                  std::to_string(i));
  ExactnessReport rep;
  auto fail = [&](std::string w) {
    if (rep.exact) rep.witness = std::move(w);
    rep.exact = false;
  };
  if (leading_zero && !homs.empty()) {
    auto k = homs.front().kernel_elements();
    if (k.size() != 1) {
      GElem w = k[0] == homs.front().source()->identity() ? k[1] : k[0];
      fail("map 0 is not injective: " + homs.front().source()->label(w) + " is in the kernel");
    }
  }
  for (std::size_t k : positions) {
    if (k == 0 || k >= homs.size()) throw std::invalid_argument("bad exactness position");
    auto im = homs[k - 1].image_elements();
    auto ker = homs[k].kernel_elements();
    if (im != ker) {
      std::vector<GElem> diff;
      std::set_symmetric_difference(im.begin(), im.end(), ker.begin(), ker.end(),
                                    std::back_inserter(diff));
      GElem w = diff.front();
      bool in_im = std::binary_search(im.begin(), im.end(), w);
      fail("position " + std::to_string(k) + ": " + homs[k].source()->label(w) +
           (in_im ? " is in the image but not the kernel" : " is in the kernel but not the image"));
    }
  }
  if (trailing_zero && !homs.empty() && !homs.back().surjective()) {
    auto im = homs.back().image_elements();
    GElem w = 0;
    while (std::binary_search(im.begin(), im.end(), w)) ++w;
    fail("last map is not surjective: misses " + homs.back().target()->label(w));
  }
  return rep;
}

struct Pullback {
  GroupPtr group;
  std::vector<std::pair<GElem, GElem>> pairs;  // element -> (a, b)
  GroupHom to_a, to_b;
};

// {(a, b) : f(a) = g(b)} for f : A -> C and g : B -> C.
inline Pullback pullback(const GroupHom& f, const GroupHom& g) {
  if (!f.target()->same_table(*g.target()))
    throw std::invalid_argument("pullback needs a common target");
  const FinAbGroup& A = *f.source();
  const FinAbGroup& B = *g.source();
  std::vector<std::pair<GElem, GElem>> elems;
  for (GElem a = 0; a < A.order(); ++a)
    for (GElem b = 0; b < B.order(); ++b)
      if (f(a) == g(b)) elems.emplace_back(a, b);
  using P = std::pair<GElem, GElem>;
  auto e = group_from_closure(
      elems, [&](const P& x, const P& y) { return P{A.op(x.first, y.first), B.op(x.second, y.second)}; },
      P{A.identity(), B.identity()},
      [&](const P& x) { return "(" + A.label(x.first) + "," + B.label(x.second) + ")"; });
  std::vector<GElem> pa, pb;
  for (const auto& [a, b] : e.values) {
    pa.push_back(a);
    pb.push_back(b);
  }
  return Pullback{e.group, e.values, GroupHom(e.group, f.source(), std::move(pa)),
                  GroupHom(e.group, g.source(), std::move(pb))};
}

}  // namespace catlab
