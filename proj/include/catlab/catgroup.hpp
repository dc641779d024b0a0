#pragma once
// Finite strict symmetric categorical groups.
//
// Objects and morphisms are dense indices. Domains, codomains and identities
// are stored; composition and the tensor product are supplied as callables
// so that formula-defined cat-groups never materialize |Mor|^2 tables.
// Nothing is trusted: validate_catgroup / validate_functor are the oracles.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "catlab/abgroup.hpp"

namespace catlab {

using Obj = std::uint32_t;
using Mor = std::uint32_t;
inline constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

class CatGroup {
 public:
  struct Data {
    std::string name;
    std::size_t num_objects = 0;
    std::vector<Obj> dom, cod;
    std::vector<Mor> identity;
    Obj unit = 0;
    std::function<Obj(Obj, Obj)> tensor_obj;
    std::function<Mor(Mor, Mor)> compose;  // compose(g, f) is g after f
    std::function<Mor(Mor, Mor)> tensor_mor;
    std::function<std::string(Obj)> obj_label;
    std::function<std::string(Mor)> mor_label;
  };

  explicit CatGroup(Data d) : d_(std::move(d)) {
    const std::size_t n = d_.num_objects, m = d_.dom.size();
    if (n == 0) throw std::invalid_argument(d_.name + ": no objects");
    if (d_.cod.size() != m || d_.identity.size() != n || d_.unit >= n)
      throw std::invalid_argument(d_.name + ": inconsistent sizes");
    for (std::size_t f = 0; f < m; ++f)
      if (d_.dom[f] >= n || d_.cod[f] >= n)
        throw std::invalid_argument(d_.name + ": morphism endpoint out of range");
    for (Mor i : d_.identity)
      if (i >= m) throw std::invalid_argument(d_.name + ": identity out of range");
    if (!d_.obj_label) d_.obj_label = [](Obj x) { return std::to_string(x); };
    if (!d_.mor_label) d_.mor_label = [](Mor f) { return "#" + std::to_string(f); };

    out_offset_.assign(n + 1, 0);
    for (std::size_t f = 0; f < m; ++f) ++out_offset_[d_.dom[f] + 1];
    std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
    out_.assign(m, 0);
    std::vector<std::size_t> fill(out_offset_.begin(), out_offset_.end() - 1);
    for (std::size_t f = 0; f < m; ++f) out_[fill[d_.dom[f]]++] = static_cast<Mor>(f);
    out_pos_.assign(m, 0);
    for (Obj x = 0; x < n; ++x) {
      auto b = out_.begin() + out_offset_[x], e = out_.begin() + out_offset_[x + 1];
      std::sort(b, e, [&](Mor a, Mor c) {
        return d_.cod[a] != d_.cod[c] ? d_.cod[a] < d_.cod[c] : a < c;
      });
      for (auto it = b; it != e; ++it) out_pos_[*it] = static_cast<std::uint32_t>(it - b);
    }

    std::vector<Obj> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Obj x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t f = 0; f < m; ++f) {
      Obj a = find(d_.dom[f]), b = find(d_.cod[f]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    component_.assign(n, 0);
    std::vector<std::uint32_t> comp_index(n, kNoIndex);
    for (Obj x = 0; x < n; ++x) {
      Obj r = find(x);
      if (comp_index[r] == kNoIndex) {
        comp_index[r] = static_cast<std::uint32_t>(component_rep_.size());
        component_rep_.push_back(x);
      }
      component_[x] = comp_index[r];
    }
  }

  const std::string& name() const { return d_.name; }
  std::size_t num_objects() const { return d_.num_objects; }
  std::size_t num_morphisms() const { return d_.dom.size(); }
  Obj unit() const { return d_.unit; }
  Obj dom(Mor f) const { return d_.dom[f]; }
  Obj cod(Mor f) const { return d_.cod[f]; }
  Mor id(Obj x) const { return d_.identity[x]; }
  Obj tensor(Obj x, Obj y) const { return d_.tensor_obj(x, y); }
  Mor tensor_mor(Mor f, Mor g) const { return d_.tensor_mor(f, g); }
  Mor compose(Mor g, Mor f) const { return d_.compose(g, f); }
  std::string obj_label(Obj x) const { return d_.obj_label(x); }
  std::string mor_label(Mor f) const {
    return d_.mor_label(f) + ": " + obj_label(dom(f)) + " -> " + obj_label(cod(f));
  }

  std::span<const Mor> out(Obj x) const {
    return {out_.data() + out_offset_[x], out_offset_[x + 1] - out_offset_[x]};
  }
  std::size_t out_degree(Obj x) const { return out_offset_[x + 1] - out_offset_[x]; }
  std::uint32_t out_position(Mor f) const { return out_pos_[f]; }
  std::span<const Mor> hom(Obj x, Obj y) const {
    auto o = out(x);
    auto lo = std::lower_bound(o.begin(), o.end(), y,
                               [&](Mor f, Obj v) { return d_.cod[f] < v; });
    auto hi = std::upper_bound(lo, o.end(), y,
                               [&](Obj v, Mor f) { return v < d_.cod[f]; });
    return {&*o.begin() + (lo - o.begin()), static_cast<std::size_t>(hi - lo)};
  }

  std::uint32_t component(Obj x) const { return component_[x]; }
  std::size_t num_components() const { return component_rep_.size(); }
  Obj component_rep(std::uint32_t c) const { return component_rep_[c]; }

  // Two-sided inverse of f, or kNoIndex.
  Mor inverse_of(Mor f) const {
    for (Mor g : hom(cod(f), dom(f)))
      if (compose(g, f) == id(dom(f)) && compose(f, g) == id(cod(f))) return g;
    return kNoIndex;
  }

 private:
  Data d_;
  std::vector<std::size_t> out_offset_;
  std::vector<Mor> out_;
  std::vector<std::uint32_t> out_pos_;
  std::vector<std::uint32_t> component_;
  std::vector<Obj> component_rep_;
};

using CatGroupPtr = std::shared_ptr<const CatGroup>;

// ---------------------------------------------------------------------------
// Law checking with per-law tuple budgets.

struct ValidationOptions {
  // Laws with at most `budget` tuples are checked in full; larger ones on
  // `samples` deterministically sampled tuples.
  std::uint64_t budget = std::uint64_t{1} << 18;
  std::uint64_t samples = std::uint64_t{1} << 16;
  std::uint64_t seed = 0x5eed;
};

struct LawCoverage {
  std::string law;
  std::uint64_t total = 0;
  std::uint64_t checked = 0;
  bool exhaustive() const { return checked >= total; }
};

struct ValidationReport {
  bool ok = true;
  std::string law;      // first failing law
  std::string witness;  // counterexample for that law
  std::vector<LawCoverage> coverage;

  bool exhaustive() const {
    return std::all_of(coverage.begin(), coverage.end(),
                       [](const LawCoverage& c) { return c.exhaustive(); });
  }
  std::string summary() const {
    std::size_t ex = 0;
    for (const auto& c : coverage) ex += c.exhaustive();
    std::ostringstream os;
    os << coverage.size() << " laws, " << ex << " exhaustive";
    if (ex != coverage.size()) os << ", " << coverage.size() - ex << " sampled";
    return os.str();
  }
};

using Witness = std::optional<std::string>;

namespace detail {

class LawRunner {
 public:
  LawRunner(const ValidationOptions& opts, ValidationReport& rep)
      : opts_(opts), rep_(rep), rng_(opts.seed) {}

  // `all` walks the full tuple space and returns the first witness;
  // `one(rng)` checks a single random tuple.
  template <class All, class One>
  void law(std::string_view name, std::uint64_t total, All&& all, One&& one) {
    if (!rep_.ok) return;
    LawCoverage cov{std::string(name), total, 0};
    Witness w;
    if (total <= opts_.budget) {
      w = all();
      cov.checked = total;
    } else {
      for (std::uint64_t i = 0; i < opts_.samples && !w; ++i) w = one(rng_);
      cov.checked = opts_.samples;
    }
    rep_.coverage.push_back(cov);
    if (w) {
      rep_.ok = false;
      rep_.law = std::string(name);
      rep_.witness = *w;
    }
  }

  // Linear-size laws are always checked in full.
  template <class All>
  void exhaustive(std::string_view name, std::uint64_t total, All&& all) {
    if (!rep_.ok) return;
    rep_.coverage.push_back({std::string(name), total, total});
    if (auto w = all()) {
      rep_.ok = false;
      rep_.law = std::string(name);
      rep_.witness = *w;
    }
  }

 private:
  ValidationOptions opts_;
  ValidationReport& rep_;
  std::mt19937_64 rng_;
};

template <class T>
inline T pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<T>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
}

}  // namespace detail

inline ValidationReport validate_catgroup(const CatGroup& C, const ValidationOptions& opts = {}) {
  ValidationReport rep;
  detail::LawRunner run(opts, rep);
  const std::size_t N = C.num_objects(), M = C.num_morphisms();
  const Obj I = C.unit();
  auto L = [&](Mor f) { return C.mor_label(f); };
  auto O = [&](Obj x) { return C.obj_label(x); };
  auto pick_obj = [&](std::mt19937_64& r) { return detail::pick<Obj>(r, N); };
  auto pick_mor = [&](std::mt19937_64& r) { return detail::pick<Mor>(r, M); };
  auto pick_after = [&](std::mt19937_64& r, Mor f) {
    auto o = C.out(C.cod(f));
    return o[detail::pick<std::size_t>(r, o.size())];
  };

  // Composable pairs / triples counted exactly.
  std::uint64_t pairs = 0, triples = 0;
  {
    std::vector<std::uint64_t> w(N, 0);
    for (Obj y = 0; y < N; ++y)
      for (Mor g : C.out(y)) w[y] += C.out_degree(C.cod(g));
    for (Mor f = 0; f < M; ++f) {
      pairs += C.out_degree(C.cod(f));
      triples += w[C.cod(f)];
    }
  }

  run.exhaustive("identity_typed", N, [&]() -> Witness {
    for (Obj x = 0; x < N; ++x)
      if (C.dom(C.id(x)) != x || C.cod(C.id(x)) != x) return "id(" + O(x) + ") is not an endomorphism";
    return {};
  });

  run.exhaustive("identity_law", M, [&]() -> Witness {
    for (Mor f = 0; f < M; ++f)
      if (C.compose(f, C.id(C.dom(f))) != f || C.compose(C.id(C.cod(f)), f) != f)
        return "identity law fails for " + L(f);
    return {};
  });

  auto composite_typed = [&](Mor f, Mor g) -> Witness {
    Mor h = C.compose(g, f);
    if (h >= M || C.dom(h) != C.dom(f) || C.cod(h) != C.cod(g))
      return "composite of " + L(f) + " then " + L(g) + " has wrong endpoints";
    return {};
  };
  run.law("composition_typed", pairs,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g : C.out(C.cod(f)))
            if (auto w = composite_typed(f, g)) return w;
        return {};
      },
      [&](std::mt19937_64& r) -> Witness {
        Mor f = pick_mor(r);
        return composite_typed(f, pick_after(r, f));
      });
  if (!rep.ok) return rep;

  auto assoc = [&](Mor f, Mor g, Mor h) -> Witness {
    if (C.compose(h, C.compose(g, f)) != C.compose(C.compose(h, g), f))
      return "associativity fails for (" + L(f) + ", " + L(g) + ", " + L(h) + ")";
    return {};
  };
  run.law("associativity", triples,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g : C.out(C.cod(f)))
            for (Mor h : C.out(C.cod(g)))
              if (auto w = assoc(f, g, h)) return w;
        return {};
      },
      [&](std::mt19937_64& r) -> Witness {
        Mor f = pick_mor(r);
        Mor g = pick_after(r, f);
        return assoc(f, g, pick_after(r, g));
      });

  run.exhaustive("inverses", M, [&]() -> Witness {
    for (Mor f = 0; f < M; ++f)
      if (C.inverse_of(f) == kNoIndex) return L(f) + " has no two-sided inverse";
    return {};
  });

  run.exhaustive("tensor_unit_objects", N, [&]() -> Witness {
    for (Obj x = 0; x < N; ++x)
      if (C.tensor(I, x) != x || C.tensor(x, I) != x) return "unit law fails for " + O(x);
    return {};
  });

  auto comm_obj = [&](Obj x, Obj y) -> Witness {
    if (C.tensor(x, y) != C.tensor(y, x)) return O(x) + " (x) " + O(y) + " is not symmetric";
    return {};
  };
  run.law("tensor_commutative_objects", std::uint64_t(N) * N,
      [&]() -> Witness {
        for (Obj x = 0; x < N; ++x)
          for (Obj y = 0; y < N; ++y)
            if (auto w = comm_obj(x, y)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return comm_obj(pick_obj(r), pick_obj(r)); });

  auto assoc_obj = [&](Obj x, Obj y, Obj z) -> Witness {
    if (C.tensor(C.tensor(x, y), z) != C.tensor(x, C.tensor(y, z)))
      return "tensor associativity fails for (" + O(x) + ", " + O(y) + ", " + O(z) + ")";
    return {};
  };
  run.law("tensor_associative_objects", std::uint64_t(N) * N * N,
      [&]() -> Witness {
        for (Obj x = 0; x < N; ++x)
          for (Obj y = 0; y < N; ++y)
            for (Obj z = 0; z < N; ++z)
              if (auto w = assoc_obj(x, y, z)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return assoc_obj(pick_obj(r), pick_obj(r), pick_obj(r)); });

  auto ids = [&](Obj x, Obj y) -> Witness {
    if (C.tensor_mor(C.id(x), C.id(y)) != C.id(C.tensor(x, y)))
      return "id(" + O(x) + ") (x) id(" + O(y) + ") is not an identity";
    return {};
  };
  run.law("tensor_identities", std::uint64_t(N) * N,
      [&]() -> Witness {
        for (Obj x = 0; x < N; ++x)
          for (Obj y = 0; y < N; ++y)
            if (auto w = ids(x, y)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return ids(pick_obj(r), pick_obj(r)); });

  if (!rep.ok) return rep;

  auto typed = [&](Mor f, Mor g) -> Witness {
    Mor h = C.tensor_mor(f, g);
    if (h >= M || C.dom(h) != C.tensor(C.dom(f), C.dom(g)) ||
        C.cod(h) != C.tensor(C.cod(f), C.cod(g)))
      return L(f) + " (x) " + L(g) + " has wrong endpoints";
    return {};
  };
  run.law("tensor_typed", std::uint64_t(M) * M,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g = 0; g < M; ++g)
            if (auto w = typed(f, g)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return typed(pick_mor(r), pick_mor(r)); });
  if (!rep.ok) return rep;

  run.exhaustive("tensor_unit_morphisms", M, [&]() -> Witness {
    for (Mor f = 0; f < M; ++f)
      if (C.tensor_mor(C.id(I), f) != f || C.tensor_mor(f, C.id(I)) != f)
        return "unit law fails for " + L(f);
    return {};
  });

  auto sym = [&](Mor f, Mor g) -> Witness {
    if (C.tensor_mor(f, g) != C.tensor_mor(g, f)) return L(f) + " (x) " + L(g) + " is not symmetric";
    return {};
  };
  run.law("tensor_symmetric_morphisms", std::uint64_t(M) * M,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g = f + 1; g < M; ++g)
            if (auto w = sym(f, g)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return sym(pick_mor(r), pick_mor(r)); });

  auto assoc_mor = [&](Mor f, Mor g, Mor h) -> Witness {
    if (C.tensor_mor(C.tensor_mor(f, g), h) != C.tensor_mor(f, C.tensor_mor(g, h)))
      return "tensor associativity fails for (" + L(f) + ", " + L(g) + ", " + L(h) + ")";
    return {};
  };
  run.law("tensor_associative_morphisms", std::uint64_t(M) * M * M,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g = 0; g < M; ++g)
            for (Mor h = 0; h < M; ++h)
              if (auto w = assoc_mor(f, g, h)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return assoc_mor(pick_mor(r), pick_mor(r), pick_mor(r)); });

  // Whiskered forms: together with interchange below they imply the full
  // associativity of the tensor on morphisms.
  auto whisk_assoc = [&](Mor f, Obj y, Obj z) -> Witness {
    Mor iy = C.id(y), iz = C.id(z);
    if (C.tensor_mor(C.tensor_mor(f, iy), iz) != C.tensor_mor(f, C.id(C.tensor(y, z))) ||
        C.tensor_mor(C.tensor_mor(iy, f), iz) != C.tensor_mor(iy, C.tensor_mor(f, iz)) ||
        C.tensor_mor(C.id(C.tensor(y, z)), f) != C.tensor_mor(iy, C.tensor_mor(iz, f)))
      return "whiskered associativity fails for " + L(f) + " with " + O(y) + ", " + O(z);
    return {};
  };
  run.law("whisker_associative", std::uint64_t(M) * N * N,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Obj y = 0; y < N; ++y)
            for (Obj z = 0; z < N; ++z)
              if (auto w = whisk_assoc(f, y, z)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return whisk_assoc(pick_mor(r), pick_obj(r), pick_obj(r)); });

  auto split = [&](Mor f, Mor g) -> Witness {
    Mor t = C.tensor_mor(f, g);
    Mor a = C.compose(C.tensor_mor(f, C.id(C.cod(g))), C.tensor_mor(C.id(C.dom(f)), g));
    Mor b = C.compose(C.tensor_mor(C.id(C.cod(f)), g), C.tensor_mor(f, C.id(C.dom(g))));
    if (t != a || t != b) return L(f) + " (x) " + L(g) + " differs from its whiskered factorization";
    return {};
  };
  run.law("tensor_split", std::uint64_t(M) * M,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g = 0; g < M; ++g)
            if (auto w = split(f, g)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return split(pick_mor(r), pick_mor(r)); });

  auto whisk_fun = [&](Mor f, Mor g, Obj y) -> Witness {
    Mor iy = C.id(y);
    if (C.tensor_mor(C.compose(g, f), iy) != C.compose(C.tensor_mor(g, iy), C.tensor_mor(f, iy)))
      return "(-) (x) " + O(y) + " does not preserve the composite of " + L(f) + " and " + L(g);
    return {};
  };
  run.law("whisker_functorial", pairs * N,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g : C.out(C.cod(f)))
            for (Obj y = 0; y < N; ++y)
              if (auto w = whisk_fun(f, g, y)) return w;
        return {};
      },
      [&](std::mt19937_64& r) {
        Mor f = pick_mor(r);
        return whisk_fun(f, pick_after(r, f), pick_obj(r));
      });

  auto interchange = [&](Mor f, Mor g, Mor f2, Mor g2) -> Witness {
    if (C.tensor_mor(C.compose(g, f), C.compose(g2, f2)) !=
        C.compose(C.tensor_mor(g, g2), C.tensor_mor(f, f2)))
      return "interchange fails for (" + L(f) + ", " + L(g) + ") and (" + L(f2) + ", " + L(g2) + ")";
    return {};
  };
  run.law("interchange", pairs * pairs,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g : C.out(C.cod(f)))
            for (Mor f2 = 0; f2 < M; ++f2)
              for (Mor g2 : C.out(C.cod(f2)))
                if (auto w = interchange(f, g, f2, g2)) return w;
        return {};
      },
      [&](std::mt19937_64& r) {
        Mor f = pick_mor(r), f2 = pick_mor(r);
        return interchange(f, pick_after(r, f), f2, pick_after(r, f2));
      });

  run.exhaustive("tensor_inverse_objects", N, [&]() -> Witness {
    for (Obj x = 0; x < N; ++x) {
      bool found = false;
      for (Obj y = 0; y < N && !found; ++y) found = !C.hom(C.tensor(x, y), I).empty();
      if (!found) return O(x) + " has no tensor inverse";
    }
    return {};
  });
  return rep;
}

// ---------------------------------------------------------------------------
// pi0 and pi1.

struct Pi0 {
  GroupPtr group;
  std::vector<GElem> class_of;  // object -> element (component index)
  std::vector<Obj> rep;         // element -> least-index object
};

inline Pi0 pi0(const CatGroup& C) {
  const std::size_t k = C.num_components();
  std::vector<GElem> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      table[a * k + b] = C.component(C.tensor(C.component_rep(a), C.component_rep(b)));
  for (Obj x = 0; x < C.num_objects(); ++x)
    for (Obj y = 0; y < C.num_objects(); ++y)
      if (C.component(C.tensor(x, y)) !=
          table[C.component(x) * k + C.component(y)])
        throw std::logic_error(C.name() + ": tensor is not well defined on components");
  std::vector<std::string> labels(k);
  std::vector<Obj> rep(k);
  for (std::size_t a = 0; a < k; ++a) {
    rep[a] = C.component_rep(a);
    labels[a] = "[" + C.obj_label(rep[a]) + "]";
  }
  auto g = std::make_shared<const FinAbGroup>(std::move(table), C.component(C.unit()),
                                              std::move(labels));
  std::vector<GElem> cls(C.num_objects());
  for (Obj x = 0; x < C.num_objects(); ++x) cls[x] = C.component(x);
  return Pi0{g, std::move(cls), std::move(rep)};
}

struct Pi1 {
  GroupPtr group;
  std::vector<Mor> morphisms;  // element -> automorphism of the unit

  GElem element_of(Mor f) const {
    auto it = std::find(morphisms.begin(), morphisms.end(), f);
    if (it == morphisms.end()) throw std::out_of_range("not an automorphism of the unit");
    return static_cast<GElem>(it - morphisms.begin());
  }
};

// Aut(I) under composition. Throws if composition and tensor disagree on
// Aut(I) (Eckmann-Hilton).
inline Pi1 pi1(const CatGroup& C) {
  auto aut = C.hom(C.unit(), C.unit());
  std::vector<Mor> ms(aut.begin(), aut.end());
  auto e = group_from_closure(
      ms, [&](Mor a, Mor b) { return C.compose(a, b); }, C.id(C.unit()),
      [&](Mor f) { return C.mor_label(f); });
  for (Mor a : ms)
    for (Mor b : ms)
      if (C.compose(a, b) != C.tensor_mor(a, b))
        throw std::logic_error(C.name() + ": composition and tensor differ on Aut(I)");
  return Pi1{e.group, std::move(ms)};
}

// ---------------------------------------------------------------------------
// The cat-group of a homomorphism alpha : G -> H. Objects are elements of
// H; Hom(h1, h2) = {g : h2 + alpha(g) = h1}. Morphism index = h1 * |G| + g.

struct HomCatGroup {
  GroupHom alpha;
  CatGroupPtr cat;

  Mor morphism(GElem source, GElem g) const {
    return static_cast<Mor>(source * alpha.source()->order() + g);
  }
  GElem label_of(Mor f) const { return f % alpha.source()->order(); }
};

inline HomCatGroup catgroup_from_hom(const GroupHom& alpha, std::string name = "G_alpha") {
  GroupPtr G = alpha.source(), H = alpha.target();
  const std::size_t ng = G->order(), nh = H->order();
  CatGroup::Data d;
  d.name = std::move(name);
  d.num_objects = nh;
  d.dom.resize(nh * ng);
  d.cod.resize(nh * ng);
  for (GElem h = 0; h < nh; ++h)
    for (GElem g = 0; g < ng; ++g) {
      d.dom[h * ng + g] = h;
      d.cod[h * ng + g] = H->op(h, H->inverse(alpha(g)));
    }
  d.identity.resize(nh);
  for (GElem h = 0; h < nh; ++h) d.identity[h] = static_cast<Mor>(h * ng + G->identity());
  d.unit = H->identity();
  d.tensor_obj = [H](Obj x, Obj y) { return H->op(x, y); };
  d.compose = [G, ng](Mor g, Mor f) {
    return static_cast<Mor>((f / ng) * ng + G->op(f % ng, g % ng));
  };
  d.tensor_mor = [G, H, ng](Mor f, Mor g) {
    return static_cast<Mor>(H->op(f / ng, g / ng) * ng + G->op(f % ng, g % ng));
  };
  d.obj_label = [H](Obj x) { return H->label(x); };
  d.mor_label = [G, ng](Mor f) { return G->label(f % ng); };
  return HomCatGroup{alpha, std::make_shared<const CatGroup>(std::move(d))};
}

// ---------------------------------------------------------------------------
// Monoidal functors.

struct MonFunctor {
  std::string name;
  CatGroupPtr source, target;
  std::vector<Obj> on_objects;
  std::vector<Mor> on_morphisms;
  // mu_{X,Y} : F(X) (x) F(Y) -> F(X (x) Y); empty means the identity.
  std::function<Mor(Obj, Obj)> tensor_witness;
  Mor unit_witness = kNoIndex;  // iota : I -> F(I); kNoIndex means the identity

  Obj operator()(Obj x) const { return on_objects[x]; }
  Mor map(Mor f) const { return on_morphisms[f]; }
  bool strict() const { return !tensor_witness && unit_witness == kNoIndex; }
  Mor mu(Obj x, Obj y) const {
    if (tensor_witness) return tensor_witness(x, y);
    return target->id(on_objects[source->tensor(x, y)]);
  }
  Mor iota() const {
    return unit_witness == kNoIndex ? target->id(on_objects[source->unit()]) : unit_witness;
  }
};

inline MonFunctor identity_functor(const CatGroupPtr& C) {
  MonFunctor F{"id", C, C, {}, {}, {}, kNoIndex};
  F.on_objects.resize(C->num_objects());
  std::iota(F.on_objects.begin(), F.on_objects.end(), 0);
  F.on_morphisms.resize(C->num_morphisms());
  std::iota(F.on_morphisms.begin(), F.on_morphisms.end(), 0);
  return F;
}

// G after F.
inline MonFunctor compose_functors(const MonFunctor& G, const MonFunctor& F) {
  if (F.target.get() != G.source.get())
    throw std::invalid_argument("functors " + F.name + " and " + G.name + " are not composable");
  MonFunctor H{G.name + "." + F.name, F.source, G.target, {}, {}, {}, kNoIndex};
  H.on_objects.resize(F.on_objects.size());
  for (Obj x = 0; x < H.on_objects.size(); ++x) H.on_objects[x] = G(F(x));
  H.on_morphisms.resize(F.on_morphisms.size());
  for (Mor f = 0; f < H.on_morphisms.size(); ++f) H.on_morphisms[f] = G.map(F.map(f));
  if (!F.strict() || !G.strict()) {
    H.tensor_witness = [F, G](Obj x, Obj y) {
      return G.target->compose(G.map(F.mu(x, y)), G.mu(F(x), F(y)));
    };
    H.unit_witness = G.target->compose(G.map(F.iota()), G.iota());
  }
  return H;
}

inline ValidationReport validate_functor(const MonFunctor& F, const ValidationOptions& opts = {}) {
  ValidationReport rep;
  detail::LawRunner run(opts, rep);
  const CatGroup& S = *F.source;
  const CatGroup& T = *F.target;
  const std::size_t N = S.num_objects(), M = S.num_morphisms();
  auto L = [&](Mor f) { return S.mor_label(f); };
  auto O = [&](Obj x) { return S.obj_label(x); };

  if (F.on_objects.size() != N || F.on_morphisms.size() != M) {
    rep.ok = false;
    rep.law = "total";
    rep.witness = F.name + " is not total";
    return rep;
  }
  for (Obj y : F.on_objects)
    if (y >= T.num_objects()) {
      rep.ok = false;
      rep.law = "total";
      rep.witness = F.name + " sends an object out of range";
      return rep;
    }
  for (Mor g : F.on_morphisms)
    if (g >= T.num_morphisms()) {
      rep.ok = false;
      rep.law = "total";
      rep.witness = F.name + " sends a morphism out of range";
      return rep;
    }

  run.exhaustive("preserves_typing", M, [&]() -> Witness {
    for (Mor f = 0; f < M; ++f)
      if (T.dom(F.map(f)) != F(S.dom(f)) || T.cod(F.map(f)) != F(S.cod(f)))
        return F.name + "(" + L(f) + ") has wrong endpoints";
    return {};
  });
  run.exhaustive("preserves_identities", N, [&]() -> Witness {
    for (Obj x = 0; x < N; ++x)
      if (F.map(S.id(x)) != T.id(F(x))) return F.name + " does not preserve id(" + O(x) + ")";
    return {};
  });
  if (!rep.ok) return rep;

  std::uint64_t pairs = 0;
  for (Mor f = 0; f < M; ++f) pairs += S.out_degree(S.cod(f));
  auto comp = [&](Mor f, Mor g) -> Witness {
    if (F.map(S.compose(g, f)) != T.compose(F.map(g), F.map(f)))
      return F.name + " does not preserve the composite of " + L(f) + " and " + L(g);
    return {};
  };
  run.law("preserves_composition", pairs,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g : S.out(S.cod(f)))
            if (auto w = comp(f, g)) return w;
        return {};
      },
      [&](std::mt19937_64& r) {
        Mor f = detail::pick<Mor>(r, M);
        auto o = S.out(S.cod(f));
        return comp(f, o[detail::pick<std::size_t>(r, o.size())]);
      });

  auto mu_typed = [&](Obj x, Obj y) -> Witness {
    Mor m = F.mu(x, y);
    if (m >= T.num_morphisms() || T.dom(m) != T.tensor(F(x), F(y)) || T.cod(m) != F(S.tensor(x, y)))
      return "tensor witness at (" + O(x) + ", " + O(y) + ") has wrong endpoints";
    return {};
  };
  run.law("tensor_witness_typed", std::uint64_t(N) * N,
      [&]() -> Witness {
        for (Obj x = 0; x < N; ++x)
          for (Obj y = 0; y < N; ++y)
            if (auto w = mu_typed(x, y)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return mu_typed(detail::pick<Obj>(r, N), detail::pick<Obj>(r, N)); });
  run.exhaustive("unit_witness_typed", 1, [&]() -> Witness {
    Mor i = F.iota();
    if (i >= T.num_morphisms() || T.dom(i) != T.unit() || T.cod(i) != F(S.unit()))
      return std::string("unit witness has wrong endpoints");
    return {};
  });
  if (!rep.ok) return rep;

  auto natural = [&](Mor f, Mor g) -> Witness {
    Obj x = S.dom(f), x2 = S.cod(f), y = S.dom(g), y2 = S.cod(g);
    if (T.compose(F.mu(x2, y2), T.tensor_mor(F.map(f), F.map(g))) !=
        T.compose(F.map(S.tensor_mor(f, g)), F.mu(x, y)))
      return "tensor witness is not natural at (" + L(f) + ", " + L(g) + ")";
    return {};
  };
  run.law("tensor_witness_natural", std::uint64_t(M) * M,
      [&]() -> Witness {
        for (Mor f = 0; f < M; ++f)
          for (Mor g = 0; g < M; ++g)
            if (auto w = natural(f, g)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return natural(detail::pick<Mor>(r, M), detail::pick<Mor>(r, M)); });

  auto coh = [&](Obj x, Obj y, Obj z) -> Witness {
    Mor lhs = T.compose(F.mu(S.tensor(x, y), z), T.tensor_mor(F.mu(x, y), T.id(F(z))));
    Mor rhs = T.compose(F.mu(x, S.tensor(y, z)), T.tensor_mor(T.id(F(x)), F.mu(y, z)));
    if (lhs != rhs)
      return "associativity coherence fails at (" + O(x) + ", " + O(y) + ", " + O(z) + ")";
    return {};
  };
  run.law("associativity_coherence", std::uint64_t(N) * N * N,
      [&]() -> Witness {
        for (Obj x = 0; x < N; ++x)
          for (Obj y = 0; y < N; ++y)
            for (Obj z = 0; z < N; ++z)
              if (auto w = coh(x, y, z)) return w;
        return {};
      },
      [&](std::mt19937_64& r) {
        return coh(detail::pick<Obj>(r, N), detail::pick<Obj>(r, N), detail::pick<Obj>(r, N));
      });

  run.exhaustive("unit_coherence", N, [&]() -> Witness {
    for (Obj x = 0; x < N; ++x) {
      Mor l = T.compose(F.mu(S.unit(), x), T.tensor_mor(F.iota(), T.id(F(x))));
      Mor r = T.compose(F.mu(x, S.unit()), T.tensor_mor(T.id(F(x)), F.iota()));
      if (l != T.id(F(x)) || r != T.id(F(x))) return "unit coherence fails at " + O(x);
    }
    return {};
  });

  auto symm = [&](Obj x, Obj y) -> Witness {
    if (F.mu(x, y) != F.mu(y, x)) return "symmetry coherence fails at (" + O(x) + ", " + O(y) + ")";
    return {};
  };
  run.law("symmetry_coherence", std::uint64_t(N) * N,
      [&]() -> Witness {
        for (Obj x = 0; x < N; ++x)
          for (Obj y = 0; y < N; ++y)
            if (auto w = symm(x, y)) return w;
        return {};
      },
      [&](std::mt19937_64& r) { return symm(detail::pick<Obj>(r, N), detail::pick<Obj>(r, N)); });
  return rep;
}

inline GroupHom pi0_map(const MonFunctor& F, const Pi0& src, const Pi0& tgt) {
  std::vector<GElem> m(src.rep.size());
  for (GElem a = 0; a < m.size(); ++a) m[a] = tgt.class_of[F(src.rep[a])];
  return GroupHom(src.group, tgt.group, std::move(m));
}

// f |-> iota^{-1} . F(f) . iota
inline GroupHom pi1_map(const MonFunctor& F, const Pi1& src, const Pi1& tgt) {
  const CatGroup& T = *F.target;
  Mor iota = F.iota();
  Mor iota_inv = T.inverse_of(iota);
  if (iota_inv == kNoIndex) throw std::logic_error("unit witness of " + F.name + " is not invertible");
  std::vector<GElem> m(src.morphisms.size());
  for (GElem a = 0; a < m.size(); ++a)
    m[a] = tgt.element_of(T.compose(iota_inv, T.compose(F.map(src.morphisms[a]), iota)));
  return GroupHom(src.group, tgt.group, std::move(m));
}

// ---------------------------------------------------------------------------
// Natural transformations from a monoidal functor to the constant unit.

struct NatToTrivial {
  MonFunctor functor;
  std::vector<Mor> components;  // kappa_X : F(X) -> I
};

inline ValidationReport validate_nat(const NatToTrivial& k) {
  ValidationReport rep;
  const MonFunctor& F = k.functor;
  const CatGroup& S = *F.source;
  const CatGroup& T = *F.target;
  auto fail = [&](std::string law, std::string w) {
    rep.ok = false;
    rep.law = std::move(law);
    rep.witness = std::move(w);
    return rep;
  };
  rep.coverage.push_back({"components_typed", S.num_objects(), S.num_objects()});
  if (k.components.size() != S.num_objects()) return fail("components_typed", "not total");
  for (Obj x = 0; x < S.num_objects(); ++x) {
    Mor c = k.components[x];
    if (c >= T.num_morphisms() || T.dom(c) != F(x) || T.cod(c) != T.unit())
      return fail("components_typed", "component at " + S.obj_label(x) + " has wrong endpoints");
  }
  rep.coverage.push_back({"naturality", S.num_morphisms(), S.num_morphisms()});
  for (Mor f = 0; f < S.num_morphisms(); ++f)
    if (T.compose(k.components[S.cod(f)], F.map(f)) != k.components[S.dom(f)])
      return fail("naturality", "naturality fails at " + S.mor_label(f));
  const std::uint64_t nn = std::uint64_t(S.num_objects()) * S.num_objects();
  rep.coverage.push_back({"monoidal", nn, nn});
  for (Obj x = 0; x < S.num_objects(); ++x)
    for (Obj y = 0; y < S.num_objects(); ++y)
      if (T.compose(k.components[S.tensor(x, y)], F.mu(x, y)) !=
          T.tensor_mor(k.components[x], k.components[y]))
        return fail("monoidal", "kappa is not monoidal at (" + S.obj_label(x) + ", " +
                                    S.obj_label(y) + ")");
  if (T.compose(k.components[S.unit()], F.iota()) != T.id(T.unit()))
    return fail("monoidal", "kappa is not unital");
  return rep;
}

// ---------------------------------------------------------------------------
// 2-kernels. Objects are pairs (X, x : I -> F(X)); a morphism
// (X, x) -> (Y, y) is f : X -> Y with y = F(f) . x.

struct TwoKernel {
  CatGroupPtr cat;
  MonFunctor projection;
  std::vector<std::pair<Obj, Mor>> objects;  // (X, x)
  std::vector<Mor> underlying;               // kernel morphism -> morphism of the source
  std::vector<std::size_t> offset;           // object -> first morphism index
  std::shared_ptr<const std::unordered_map<std::uint64_t, Obj>> lookup;

  static std::uint64_t key(Obj x, Mor m) { return (std::uint64_t(x) << 32) | m; }
  Obj object(Obj x, Mor m) const {
    auto it = lookup->find(key(x, m));
    return it == lookup->end() ? kNoIndex : it->second;
  }
  // The kernel morphism with underlying f starting at kernel object k.
  Mor morphism_from(Obj k, Mor f) const {
    return static_cast<Mor>(offset[k] + projection.target->out_position(f));
  }
};

inline TwoKernel two_kernel(const MonFunctor& F, std::string name = "") {
  auto G = F.source;
  auto H = F.target;
  if (name.empty()) name = "2-ker(" + F.name + ")";
  auto objects = std::make_shared<std::vector<std::pair<Obj, Mor>>>();
  auto lookup = std::make_shared<std::unordered_map<std::uint64_t, Obj>>();
  for (Obj x = 0; x < G->num_objects(); ++x)
    for (Mor m : H->hom(H->unit(), F(x))) {
      lookup->emplace(TwoKernel::key(x, m), static_cast<Obj>(objects->size()));
      objects->emplace_back(x, m);
    }
  const std::size_t nk = objects->size();
  auto offset = std::make_shared<std::vector<std::size_t>>(nk + 1, 0);
  for (std::size_t k = 0; k < nk; ++k) (*offset)[k + 1] = (*offset)[k] + G->out_degree((*objects)[k].first);
  const std::size_t mk = offset->back();
  auto under = std::make_shared<std::vector<Mor>>(mk);
  CatGroup::Data d;
  d.name = name;
  d.num_objects = nk;
  d.dom.resize(mk);
  d.cod.resize(mk);
  auto find = [lookup](Obj x, Mor m) {
    auto it = lookup->find(TwoKernel::key(x, m));
    if (it == lookup->end()) throw std::logic_error("2-kernel object lookup failed");
    return it->second;
  };
  for (Obj k = 0; k < nk; ++k) {
    auto [x, m] = (*objects)[k];
    for (Mor f : G->out(x)) {
      Mor idx = static_cast<Mor>((*offset)[k] + G->out_position(f));
      (*under)[idx] = f;
      d.dom[idx] = k;
      d.cod[idx] = find(G->cod(f), H->compose(F.map(f), m));
    }
  }
  d.identity.resize(nk);
  for (Obj k = 0; k < nk; ++k)
    d.identity[k] = static_cast<Mor>((*offset)[k] + G->out_position(G->id((*objects)[k].first)));
  d.unit = find(G->unit(), F.iota());
  auto tensor_obj = [F, objects, find](Obj a, Obj b) {
    auto [x, m] = (*objects)[a];
    auto [y, n] = (*objects)[b];
    const CatGroup& Ht = *F.target;
    return find(F.source->tensor(x, y), Ht.compose(F.mu(x, y), Ht.tensor_mor(m, n)));
  };
  d.tensor_obj = tensor_obj;
  d.compose = [G, offset, under, dom = d.dom](Mor g, Mor f) {
    return static_cast<Mor>((*offset)[dom[f]] + G->out_position(G->compose((*under)[g], (*under)[f])));
  };
  d.tensor_mor = [G, offset, under, dom = d.dom, tensor_obj](Mor f, Mor g) {
    Obj src = tensor_obj(dom[f], dom[g]);
    return static_cast<Mor>((*offset)[src] + G->out_position(G->tensor_mor((*under)[f], (*under)[g])));
  };
  d.obj_label = [G, H, objects](Obj k) {
    auto [x, m] = (*objects)[k];
    return "(" + G->obj_label(x) + ", " + H->mor_label(m) + ")";
  };
  d.mor_label = [G, under](Mor f) { return G->mor_label((*under)[f]); };
  auto cat = std::make_shared<const CatGroup>(std::move(d));

  MonFunctor P{"proj", cat, G, {}, {}, {}, kNoIndex};
  P.on_objects.resize(nk);
  for (Obj k = 0; k < nk; ++k) P.on_objects[k] = (*objects)[k].first;
  P.on_morphisms = *under;
  return TwoKernel{cat, std::move(P), *objects, *under, *offset, lookup};
}

// ---------------------------------------------------------------------------
// The six-term exact sequence of a monoidal functor F : G -> H:
// 0 -> pi1(K) -> pi1(G) -> pi1(H) -> pi0(K) -> pi0(G) -> pi0(H), K = 2-ker(F).

struct SixTerm {
  TwoKernel kernel;
  Pi1 k1, g1, h1;
  Pi0 k0, g0, h0;
  std::vector<GroupHom> maps;  // five maps, left to right
  ExactnessReport report;
};

inline SixTerm six_term(const MonFunctor& F) {
  TwoKernel K = two_kernel(F);
  const CatGroup& H = *F.target;
  Pi1 k1 = pi1(*K.cat), g1 = pi1(*F.source), h1 = pi1(H);
  Pi0 k0 = pi0(*K.cat), g0 = pi0(*F.source), h0 = pi0(H);
  std::vector<GroupHom> maps;
  maps.push_back(pi1_map(K.projection, k1, g1));
  maps.push_back(pi1_map(F, g1, h1));
  std::vector<GElem> conn(h1.morphisms.size());
  for (GElem a = 0; a < conn.size(); ++a) {
    Obj k = K.object(F.source->unit(), H.compose(F.iota(), h1.morphisms[a]));
    if (k == kNoIndex) throw std::logic_error("connecting map leaves the 2-kernel");
    conn[a] = k0.class_of[k];
  }
  maps.emplace_back(h1.group, k0.group, std::move(conn));
  maps.push_back(pi0_map(K.projection, k0, g0));
  maps.push_back(pi0_map(F, g0, h0));
  const std::size_t positions[] = {1, 2, 3, 4};
  auto rep = check_exact_sequence(maps, positions, true);
  return SixTerm{std::move(K), std::move(k1), std::move(g1), std::move(h1),
                 std::move(k0), std::move(g0), std::move(h0), std::move(maps), rep};
}

// ---------------------------------------------------------------------------
// Full / faithful / essentially surjective, decided by enumeration.

struct FunctorProps {
  bool essentially_surjective = true, full = true, faithful = true;
  bool equivalence = false;
  bool pi_isomorphisms = false;  // pi0 and pi1 maps are both bijective
  std::string surjectivity_witness, fullness_witness, faithfulness_witness;

  bool criteria_agree() const { return equivalence == pi_isomorphisms; }
};

inline FunctorProps functor_props(const MonFunctor& F) {
  const CatGroup& S = *F.source;
  const CatGroup& T = *F.target;
  FunctorProps p;
  std::vector<bool> hit(T.num_components(), false);
  for (Obj x = 0; x < S.num_objects(); ++x) hit[T.component(F(x))] = true;
  for (std::uint32_t c = 0; c < hit.size(); ++c)
    if (!hit[c]) {
      p.essentially_surjective = false;
      p.surjectivity_witness = T.obj_label(T.component_rep(c)) + " is not isomorphic to any image";
      break;
    }
  std::vector<Mor> images;
  for (Obj x = 0; x < S.num_objects() && (p.faithful || p.full); ++x)
    for (Obj y = 0; y < S.num_objects() && (p.faithful || p.full); ++y) {
      auto hs = S.hom(x, y);
      images.assign(hs.size(), 0);
      for (std::size_t i = 0; i < hs.size(); ++i) images[i] = F.map(hs[i]);
      std::sort(images.begin(), images.end());
      bool dup = std::adjacent_find(images.begin(), images.end()) != images.end();
      if (dup && p.faithful) {
        p.faithful = false;
        p.faithfulness_witness = "two morphisms " + S.obj_label(x) + " -> " + S.obj_label(y) +
                                 " have the same image";
      }
      images.erase(std::unique(images.begin(), images.end()), images.end());
      auto ht = T.hom(F(x), F(y));
      if (images.size() != ht.size() && p.full) {
        p.full = false;
        p.fullness_witness = "Hom(" + S.obj_label(x) + ", " + S.obj_label(y) + ") has " +
                             std::to_string(hs.size()) + " morphisms but Hom(" +
                             T.obj_label(F(x)) + ", " + T.obj_label(F(y)) + ") has " +
                             std::to_string(ht.size());
      }
    }
  p.equivalence = p.essentially_surjective && p.full && p.faithful;
  Pi0 s0 = pi0(S), t0 = pi0(T);
  Pi1 s1 = pi1(S), t1 = pi1(T);
  p.pi_isomorphisms = pi0_map(F, s0, t0).bijective() && pi1_map(F, s1, t1).bijective();
  return p;
}

// ---------------------------------------------------------------------------
// The functor G -> 2-ker(beta) induced by alpha, beta and kappa : beta.alpha => I,
// X |-> (alpha(X), kappa_X^{-1}).

inline MonFunctor induced_to_two_kernel(const MonFunctor& alpha, const NatToTrivial& kappa,
                                        const TwoKernel& K, std::string name = "gamma") {
  const CatGroup& G = *alpha.source;
  const CatGroup& T = *kappa.functor.target;
  if (kappa.functor.source.get() != alpha.source.get() ||
      K.projection.target.get() != alpha.target.get())
    throw std::invalid_argument("induced functor: mismatched data");
  auto nat = validate_nat(kappa);
  if (!nat.ok) throw std::invalid_argument("kappa is not a monoidal natural transformation: " + nat.witness);
  MonFunctor g{std::move(name), alpha.source, K.cat, {}, {}, {}, kNoIndex};
  g.on_objects.resize(G.num_objects());
  for (Obj x = 0; x < G.num_objects(); ++x) {
    Mor inv = T.inverse_of(kappa.components[x]);
    Obj k = K.object(alpha(x), inv);
    if (k == kNoIndex) throw std::invalid_argument("(alpha X, kappa_X^-1) is not a 2-kernel object");
    g.on_objects[x] = k;
  }
  g.on_morphisms.resize(G.num_morphisms());
  for (Mor f = 0; f < G.num_morphisms(); ++f) {
    Mor m = K.morphism_from(g.on_objects[G.dom(f)], alpha.map(f));
    if (K.cat->cod(m) != g.on_objects[G.cod(f)])
      throw std::invalid_argument("kappa is not natural at " + G.mor_label(f));
    g.on_morphisms[f] = m;
  }
  if (!alpha.strict()) {
    auto on_obj = g.on_objects;
    g.tensor_witness = [alpha, K, on_obj](Obj x, Obj y) {
      Obj src = K.cat->tensor(on_obj[x], on_obj[y]);
      return K.morphism_from(src, alpha.mu(x, y));
    };
    g.unit_witness = K.morphism_from(K.cat->unit(), alpha.iota());
  }
  return g;
}

// ---------------------------------------------------------------------------
// A commuting square beta . phi0 = phi1 . alpha of abelian groups gives a
// strict functor G_alpha -> G_beta.

inline MonFunctor square_functor(const HomCatGroup& A, const HomCatGroup& B, const GroupHom& phi0,
                                 const GroupHom& phi1, std::string name = "square") {
  const GroupHom& alpha = A.alpha;
  const GroupHom& beta = B.alpha;
  if (!phi0.source()->same_table(*alpha.source()) || !phi0.target()->same_table(*beta.source()) ||
      !phi1.source()->same_table(*alpha.target()) || !phi1.target()->same_table(*beta.target()))
    throw std::invalid_argument("square maps have the wrong groups");
  for (GElem g = 0; g < alpha.source()->order(); ++g)
    if (beta(phi0(g)) != phi1(alpha(g))) throw std::invalid_argument("square does not commute");
  MonFunctor F{std::move(name), A.cat, B.cat, {}, {}, {}, kNoIndex};
  F.on_objects.resize(A.cat->num_objects());
  for (Obj h = 0; h < F.on_objects.size(); ++h) F.on_objects[h] = phi1(h);
  F.on_morphisms.resize(A.cat->num_morphisms());
  for (Mor f = 0; f < F.on_morphisms.size(); ++f)
    F.on_morphisms[f] = B.morphism(phi1(A.cat->dom(f)), phi0(A.label_of(f)));
  return F;
}

// The pullback model of a 2-kernel of a square functor: with
// Pb = {(g1, h0) : phi1(g1) = beta(h0)} and i(g) = (alpha g, phi0 g),
// 2-ker(G_alpha -> G_beta) is equivalent to G_i via
// (h, x) |-> (h, -x), g |-> g.
struct PullbackModel {
  Pullback pb;
  HomCatGroup model;       // G_i
  MonFunctor comparison;   // 2-ker -> G_i
};

inline PullbackModel pullback_model(const HomCatGroup& A, const HomCatGroup& B,
                                    const GroupHom& phi0, const GroupHom& phi1,
                                    const TwoKernel& K) {
  const GroupHom& alpha = A.alpha;
  const GroupHom& beta = B.alpha;
  Pullback pb = pullback(phi1, beta);
  std::map<std::pair<GElem, GElem>, GElem> at;
  for (GElem i = 0; i < pb.pairs.size(); ++i) at[pb.pairs[i]] = i;
  std::vector<GElem> imap(alpha.source()->order());
  for (GElem g = 0; g < imap.size(); ++g) imap[g] = at.at({alpha(g), phi0(g)});
  GroupHom iota(alpha.source(), pb.group, std::move(imap));
  HomCatGroup model = catgroup_from_hom(iota, "G_i");
  const FinAbGroup& H0 = *beta.source();
  MonFunctor C{"compare", K.cat, model.cat, {}, {}, {}, kNoIndex};
  C.on_objects.resize(K.objects.size());
  for (Obj k = 0; k < K.objects.size(); ++k) {
    auto [h, x] = K.objects[k];
    GElem hk = B.label_of(x);  // x : 0 -> phi1(h) is labelled by hk with beta(hk) = -phi1(h)
    C.on_objects[k] = at.at({h, H0.inverse(hk)});
  }
  C.on_morphisms.resize(K.underlying.size());
  for (Mor m = 0; m < K.underlying.size(); ++m)
    C.on_morphisms[m] = model.morphism(C.on_objects[K.cat->dom(m)], A.label_of(K.underlying[m]));
  return PullbackModel{std::move(pb), std::move(model), std::move(C)};
}

}  // namespace catlab
