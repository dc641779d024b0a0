#pragma once
// Command-line driver: ring-spec parsing, suite execution, text / JSON reports.
//
// Ring   := Atom ("x" Atom)*
// Atom   := "Z/" nat | "Z/" nat "[x]/(" poly ")"
// poly   := monic integer polynomial in x, e.g. x^2+x+1
// Whitespace is insignificant.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "catlab/suites.hpp"

namespace catlab::cli {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::size_t est, std::size_t cap)
      : std::runtime_error(what + ": |R| = " + std::to_string(est) + " exceeds the cap " + std::to_string(cap)),
        estimate(est) {}
  std::size_t estimate;
};

struct AtomSpec {
  std::size_t n = 0;
  std::vector<long long> poly;  // low to high; empty for Z/n
};

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(s[i]))) {
        text_ += s[i];
        pos_.push_back(i);
      }
    end_ = s.size();
  }

  // A whole string "poly", integer coefficients low to high.
  std::vector<long long> parse_poly() {
    text_ += ')';
    auto out = poly(false);
    expect(')');
    return out;
  }

  std::vector<AtomSpec> parse() {
    std::vector<AtomSpec> atoms{atom()};
    while (i_ < text_.size()) {
      expect('x');
      atoms.push_back(atom());
    }
    return atoms;
  }

 private:
  std::size_t where() const { return i_ < pos_.size() ? pos_[i_] : end_; }
  [[noreturn]] void error(const std::string& msg) const { throw ParseError(msg, where()); }
  bool peek(char c) const { return i_ < text_.size() && text_[i_] == c; }
  void expect(char c) {
    if (!peek(c)) error(std::string("expected '") + c + "'");
    ++i_;
  }
  void expect(const std::string& s) {
    for (char c : s) expect(c);
  }
  std::optional<unsigned long long> number() {
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_]))) return std::nullopt;
    unsigned long long v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      if (v > (std::numeric_limits<unsigned long long>::max() - 9) / 10) error("number too large");
      v = v * 10 + static_cast<unsigned long long>(text_[i_++] - '0');
    }
    return v;
  }

  AtomSpec atom() {
    AtomSpec a;
    expect("Z/");
    auto n = number();
    if (!n) error("expected a modulus");
    if (*n == 0) error("modulus must be positive");
    a.n = static_cast<std::size_t>(*n);
    if (peek('[')) {
      expect("[x]/(");
      a.poly = poly(true);
      expect(')');
    }
    return a;
  }

  std::vector<long long> poly(bool monic) {
    std::map<unsigned long long, long long> terms;
    const std::size_t start = where();
    bool first = true;
    while (!peek(')')) {
      if (i_ >= text_.size()) error("unterminated polynomial");
      long long sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[i_++] == '-' ? -1 : 1;
      } else if (!first) {
        error("expected '+' or '-'");
      }
      auto c = number();
      unsigned long long e = 0;
      if (peek('*')) {
        if (!c) error("expected a coefficient before '*'");
        ++i_;
        if (!peek('x')) error("expected 'x'");
      }
      if (peek('x')) {
        ++i_;
        e = 1;
        if (peek('^')) {
          ++i_;
          auto k = number();
          if (!k) error("expected an exponent");
          e = *k;
        }
      } else if (!c) {
        error("expected a term");
      }
      if (e > 64) error("degree too large");
      terms[e] += sign * static_cast<long long>(c.value_or(1));
      first = false;
    }
    if (terms.empty()) throw ParseError("empty polynomial", start);
    std::vector<long long> out(terms.rbegin()->first + 1, 0);
    for (auto [e, c] : terms) out[e] = c;
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    if (!monic) return out;
    if (out.size() < 2) throw ParseError("polynomial must have degree at least 1", start);
    if (out.back() != 1) throw ParseError("polynomial must be monic", start);
    return out;
  }

  std::string text_;
  std::vector<std::size_t> pos_;
  std::size_t end_ = 0, i_ = 0;
};

inline std::vector<AtomSpec> parse_atoms(const std::string& s) { return SpecParser(s).parse(); }

// Saturates at SIZE_MAX.
inline std::size_t estimate_size(const std::vector<AtomSpec>& atoms) {
  std::size_t n = 1;
  auto mul = [](std::size_t a, std::size_t b) {
    return b != 0 && a > std::numeric_limits<std::size_t>::max() / b ? std::numeric_limits<std::size_t>::max() : a * b;
  };
  for (const auto& a : atoms) {
    std::size_t k = a.poly.empty() ? 1 : a.poly.size() - 1;
    for (std::size_t i = 0; i < k; ++i) n = mul(n, a.n);
  }
  return n;
}

inline RingPtr parse_ring_spec(const std::string& s, std::size_t max_size = 64) {
  auto atoms = parse_atoms(s);
  std::size_t est = estimate_size(atoms);
  if (est > max_size) throw CapExceeded("ring " + s, est, max_size);
  std::vector<RingPtr> parts;
  for (const auto& a : atoms) {
    RingPtr base = make_zmod(a.n);
    if (a.poly.empty()) {
      parts.push_back(base);
    } else {
      std::vector<Elem> f;
      for (long long c : a.poly) f.push_back(base->from_int(c));
      parts.push_back(make_poly_quotient(base, f));
    }
  }
  return parts.size() == 1 ? parts[0] : make_product(std::span<const RingPtr>(parts));
}

// An integer literal through Z -> R, or an element label.
inline Elem parse_element(const FiniteRing& R, const std::string& s) {
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  std::size_t j = i + (i < s.size() && (s[i] == '-' || s[i] == '+'));
  bool integer = j < s.size();
  for (std::size_t k = j; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])) && !std::isspace(static_cast<unsigned char>(s[k])))
      integer = false;
  if (integer) {
    try {
      return R.from_int(std::stoll(s));
    } catch (const std::out_of_range&) {
      throw ParseError("integer literal out of range", i);
    }
  }
  if (auto e = R.find(s)) return *e;
  // An integer polynomial in the generator x, e.g. "x+1" for the label "1+x".
  if (auto x = R.find("x")) {
    try {
      auto c = SpecParser(s).parse_poly();
      Elem acc = R.zero();
      for (std::size_t k = 0; k < c.size(); ++k)
        acc = R.add(acc, R.mul(R.from_int(c[k]), R.pow(*x, static_cast<unsigned>(k))));
      return acc;
    } catch (const ParseError&) {
    }
  }
  throw ParseError("'" + s + "' is neither an integer nor an element of " + R.spec(), i);
}

// ---------------------------------------------------------------------------

enum class Command { pairs, report, verify, classify };
enum class Suite { free, galois, stack, all };

struct RunConfig {
  std::string ring;
  std::optional<std::string> p, q;
  Command command = Command::verify;
  Suite suite = Suite::all;
  bool json = false;
  std::size_t max_size = 64;
  std::size_t galois_max_size = 8;
  unsigned jobs = 1;
  bool timing = false;  // timing_ms is null unless set, keeping output byte-stable
};

struct RunResult {
  int exit_code = 0;
  std::string out;  // stdout
  std::string err;  // stderr
};

inline json checks_json(const CheckList& cl) {
  json arr = json::array();
  for (const auto& c : cl.items) {
    json o{{"name", c.name}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) {
      const char* key = c.status == Status::fail ? "witness" : c.status == Status::skipped ? "reason" : "note";
      o[key] = c.detail;
    }
    arr.push_back(std::move(o));
  }
  return arr;
}

inline std::string group_text(const std::vector<std::size_t>& f) {
  if (f.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? " x Z/" : "Z/") + std::to_string(f[i]);
  return s;
}

inline std::uint64_t spec_seed(const std::string& spec) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : spec) h = (h ^ c) * 1099511628211ull;
  return h ^ 0x5eed;
}

struct PairOutcome {
  json j;
  std::string text;
  bool failed = false;
};

inline std::string check_text(const CheckList& cl) {
  std::ostringstream os;
  for (const auto& c : cl.items) {
    const char* tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
    os << "  " << tag << "  " << c.name;
    if (!c.detail.empty()) os << "  " << c.detail;
    os << "\n";
  }
  std::size_t np = 0, nf = 0, ns = 0;
  for (const auto& c : cl.items) (c.status == Status::pass ? np : c.status == Status::fail ? nf : ns)++;
  os << "  " << np << " passed, " << nf << " failed, " << ns << " skipped\n";
  return os.str();
}

inline PairOutcome run_pair(const RunConfig& cfg, const RingPtr& R, Elem p, Elem q) {
  auto t0 = std::chrono::steady_clock::now();
  PairOutcome out;
  PairPQ P = make_pair_pq(R, p, q);
  json j{{"ring", R->spec()}, {"p", R->label(p)}, {"q", R->label(q)}};
  std::ostringstream text;
  text << "ring " << R->spec() << ", (p, q) = " << P.label() << "\n";
  CheckList checks;
  json extra;
  try {
    PairContext X = build_context(P);
    VSCat vs = build_VS(X);
    json groups = json::object();
    for (const auto& [name, f] : group_table(X, vs)) {
      groups[name] = f;
      text << "  " << name << std::string(name.size() < 12 ? 12 - name.size() : 1, ' ') << group_text(f) << "\n";
    }
    j["groups"] = std::move(groups);

    const bool galois_fits = R->size() <= cfg.galois_max_size;
    const std::string galois_reason = "|R| = " + std::to_string(R->size()) + " exceeds the galois size cap " +
                                      std::to_string(cfg.galois_max_size);
    // An exception inside one suite fails that suite only.
    auto guarded = [&](const char* suite, auto&& body) {
      try {
        checks.append(body());
      } catch (const std::exception& e) {
        checks.fail(std::string(suite) + ".internal", e.what());
      }
    };
    if (cfg.command == Command::verify) {
      if (cfg.suite == Suite::free || cfg.suite == Suite::all) {
        guarded("free", [&] { return free_suite(X, vs); });
        guarded("squares", [&] { return random_square_checks(*R, 20, spec_seed(R->spec())); });
      }
      if (cfg.suite == Suite::galois || cfg.suite == Suite::all) {
        if (galois_fits) guarded("galois", [&] { return galois_suite(X); });
        else checks.skip("galois", galois_reason);
      }
      if (cfg.suite == Suite::stack || cfg.suite == Suite::all) guarded("stack", [&] { return stack_suite(X); });
    } else if (cfg.command == Command::classify) {
      HopfJ J = build_J(P);
      checks.append(J.checks);
      Classification C = classify_free_galois(J, X.qu);
      checks.append(C.checks);
      json classes = json::array();
      text << "  " << C.candidates << " candidates, " << C.survivors.size() << " Galois, " << C.classes.size()
           << " classes\n";
      for (std::size_t c = 0; c < C.classes.size(); ++c) {
        const auto& A = C.classes[c];
        json objs = json::array();
        for (Obj x = 0; x < X.qu.objects.size(); ++x)
          if (C.class_of_object[x] == c) objs.push_back(X.qu.cat->obj_label(x));
        classes.push_back({{"m", R->label(A.m)},
                           {"b", R->label(A.b)},
                           {"l0", R->label(A.l0)},
                           {"l1", R->label(A.l1)},
                           {"a", R->label(A.a)},
                           {"l3", R->label(A.l3)},
                           {"objects", objs}});
        text << "  class " << c << ": " << describe(*R, A) << "  <- " << objs.size() << " objects\n";
      }
      extra = {{"candidates", C.candidates}, {"survivors", C.survivors.size()}, {"classes", classes}};
    }
  } catch (const std::exception& e) {
    checks.fail("internal", e.what());
  }
  if (!extra.is_null())
    for (auto& [k, v] : extra.items()) j[k] = v;
  j["checks"] = checks_json(checks);
  auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  j["timing_ms"] = cfg.timing ? json(std::round(ms * 1000) / 1000) : json(nullptr);
  if (!checks.items.empty()) text << check_text(checks);
  if (cfg.timing) text << "  timing " << ms << " ms\n";
  out.failed = !checks.ok();
  out.j = std::move(j);
  out.text = text.str();
  return out;
}

inline RunResult run(const RunConfig& cfg) {
  RunResult res;
  RingPtr R;
  try {
    R = parse_ring_spec(cfg.ring, cfg.max_size);
  } catch (const CapExceeded& e) {
    res.exit_code = 3;
    res.err = std::string("error: ") + e.what() + " (raise with --max-size)\n";
    return res;
  } catch (const std::exception& e) {
    res.exit_code = 2;
    res.err = std::string("error: ring spec '") + cfg.ring + "': " + e.what() + "\n";
    return res;
  }

  std::vector<std::pair<Elem, Elem>> pairs;
  if (cfg.p.has_value() != cfg.q.has_value()) {
    res.exit_code = 2;
    res.err = "error: --p and --q must be given together\n";
    return res;
  }
  if (cfg.p) {
    try {
      Elem p = parse_element(*R, *cfg.p), q = parse_element(*R, *cfg.q);
      make_pair_pq(R, p, q);
      pairs.emplace_back(p, q);
    } catch (const std::exception& e) {
      res.exit_code = 2;
      res.err = std::string("error: ") + e.what() + "\n";
      return res;
    }
  } else {
    pairs = admissible_pairs(*R);
  }

  if (cfg.command == Command::pairs) {
    json arr = json::array();
    std::ostringstream text;
    text << "ring " << R->spec() << ": " << pairs.size() << " admissible pairs (p, q) with pq + 2 = 0\n";
    for (auto [p, q] : pairs) {
      arr.push_back({{"p", R->label(p)}, {"q", R->label(q)}});
      text << "  (" << R->label(p) << ", " << R->label(q) << ")\n";
    }
    json j{{"ring", R->spec()}, {"pairs", arr}};
    res.out = cfg.json ? j.dump(2) + "\n" : text.str();
    return res;
  }

  const bool wants_galois =
      cfg.command == Command::classify || (cfg.command == Command::verify && cfg.suite == Suite::galois);
  if (wants_galois && R->size() > cfg.galois_max_size) {
    res.exit_code = 3;
    res.err = "error: " + std::string(CapExceeded("galois checks on " + R->spec(), R->size(), cfg.galois_max_size).what()) +
              " (raise with --galois-max-size)\n";
    return res;
  }

  std::vector<PairOutcome> outcomes(pairs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < pairs.size();) outcomes[i] = run_pair(cfg, R, pairs[i].first, pairs[i].second);
  };
  const unsigned nthreads = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(pairs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  bool failed = false;
  for (const auto& o : outcomes) failed = failed || o.failed;
  if (cfg.json) {
    if (cfg.p) {
      res.out = outcomes[0].j.dump(2) + "\n";
    } else {
      json arr = json::array();
      for (auto& o : outcomes) arr.push_back(std::move(o.j));
      res.out = arr.dump(2) + "\n";
    }
  } else {
    if (pairs.empty()) res.out = "ring " + R->spec() + " has no admissible pairs\n";
    for (const auto& o : outcomes) res.out += o.text;
  }
  res.exit_code = failed ? 1 : 0;
  return res;
}

}  // namespace catlab::cli
