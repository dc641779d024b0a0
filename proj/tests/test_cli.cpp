#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sys/wait.h>

#include "catlab/cli.hpp"

using namespace catlab;
using namespace catlab::cli;

namespace {

RunConfig config(std::string ring, Command cmd) {
  RunConfig c;
  c.ring = std::move(ring);
  c.command = cmd;
  return c;
}

struct Proc {
  int code = -1;
  std::string out;
};

Proc run_binary(const std::string& args) {
  Proc p;
  std::string cmd = std::string(CATLAB_BIN) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return p;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), f)) > 0) p.out.append(buf.data(), k);
  int st = pclose(f);
  p.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return p;
}

std::size_t parse_error_position(const std::string& s) {
  try {
    parse_ring_spec(s);
  } catch (const ParseError& e) {
    return e.position;
  }
  return std::string::npos;
}

}  // namespace

TEST(ParseRingSpec, Examples) {
  auto z4 = parse_ring_spec("Z/4");
  EXPECT_EQ(z4->size(), 4u);
  auto f4 = parse_ring_spec("Z/2[x]/(x^2+x+1)");
  EXPECT_EQ(f4->size(), 4u);
  EXPECT_EQ(f4->units().size(), 3u);
  auto prod = parse_ring_spec("Z/4 x Z/2");
  EXPECT_EQ(prod->size(), 8u);
  EXPECT_EQ(parse_ring_spec("Z/4[x]/(x^2)")->size(), 16u);
  EXPECT_EQ(parse_ring_spec("Z/4 x Z/3")->units().size(), 4u);
}

TEST(ParseRingSpec, WhitespaceIsIgnored) {
  auto a = parse_ring_spec("  Z / 2 [ x ] / ( x^2 + x + 1 ) ");
  auto b = parse_ring_spec("Z/2[x]/(x^2+x+1)");
  EXPECT_EQ(a->spec(), b->spec());
  EXPECT_EQ(a->size(), b->size());
}

TEST(ParseRingSpec, CoefficientForms) {
  // 2*x, 2x and signs all denote the same polynomial over Z/3.
  auto a = parse_ring_spec("Z/3[x]/(x^2+2*x+2)");
  auto b = parse_ring_spec("Z/3[x]/(x^2-x-1)");
  EXPECT_EQ(a->spec(), b->spec());
  EXPECT_EQ(parse_ring_spec("Z/3[x]/(x^2+2x+2)")->spec(), a->spec());
  EXPECT_EQ(a->units().size(), 8u);  // x^2 - x - 1 is irreducible mod 3
}

TEST(ParseRingSpec, ErrorsCarryPositions) {
  EXPECT_EQ(parse_error_position("Q/4"), 0u);
  EXPECT_EQ(parse_error_position("Z/"), 2u);
  EXPECT_EQ(parse_error_position("Z/4 y Z/2"), 4u);
  EXPECT_EQ(parse_error_position("Z/4[x]/(x^2"), 11u);
  EXPECT_THROW(parse_ring_spec("Z/0"), ParseError);
  EXPECT_THROW(parse_ring_spec("Z/4[x]/(2x^2+1)"), std::exception);  // not monic
  try {
    parse_ring_spec("Z/4 y Z/2");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 4"), std::string::npos) << e.what();
  }
}

TEST(ParseRingSpec, SizeCap) {
  EXPECT_THROW(parse_ring_spec("Z/100"), CapExceeded);
  try {
    parse_ring_spec("Z/9[x]/(x^3)");
    FAIL() << "no cap error";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.estimate, 729u);
  }
  EXPECT_EQ(parse_ring_spec("Z/100", 100)->size(), 100u);
  // The estimate saturates instead of overflowing.
  EXPECT_EQ(estimate_size(parse_atoms("Z/1000000[x]/(x^9)")), std::numeric_limits<std::size_t>::max());
}

TEST(ParseElement, Forms) {
  auto z4 = make_zmod(4);
  EXPECT_EQ(parse_element(*z4, "-2"), 2u);
  EXPECT_EQ(parse_element(*z4, "7"), 3u);
  auto f4 = parse_ring_spec("Z/2[x]/(x^2+x+1)");
  EXPECT_EQ(parse_element(*f4, "1+x"), *f4->find("1+x"));
  EXPECT_EQ(parse_element(*f4, "x+1"), *f4->find("1+x"));
  EXPECT_EQ(parse_element(*f4, "x^2"), *f4->find("1+x"));
  EXPECT_THROW(parse_element(*z4, "y"), ParseError);
  auto prod = parse_ring_spec("Z/2 x Z/4");
  EXPECT_EQ(parse_element(*prod, "(1,3)"), *prod->find("(1,3)"));
  EXPECT_EQ(parse_element(*prod, "-1"), *prod->find("(1,3)"));
}

TEST(Run, PairsZ4) {
  auto c = config("Z/4", Command::pairs);
  c.json = true;
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["ring"], "Z/4");
  EXPECT_EQ(j["pairs"].size(), 4u);
  EXPECT_EQ(j["pairs"][0]["p"], "1");
  EXPECT_EQ(j["pairs"][0]["q"], "2");
}

TEST(Run, ZeroRingReportIsTrivial) {
  auto c = config("Z/1", Command::report);
  c.json = true;
  auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  ASSERT_TRUE(j[0].contains("groups"));
  for (auto& [name, f] : j[0]["groups"].items()) EXPECT_TRUE(f.empty()) << name;
}

TEST(Run, VerifyZ4All) {
  auto c = config("Z/4", Command::verify);
  c.p = "2";
  c.q = "1";
  c.json = true;
  auto r = run(c);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  auto j = json::parse(r.out);
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"ring", "p", "q", "groups", "checks", "timing_ms"}));
  EXPECT_TRUE(j["timing_ms"].is_null());
  bool saw_gamma = false;
  for (auto& c : j["checks"]) {
    EXPECT_NE(c["status"], "fail") << c.dump();
    if (c["status"] == "skipped") {
      EXPECT_TRUE(c.contains("reason"));
    }
    if (c["name"] == "gamma.equivalence") {
      saw_gamma = true;
      EXPECT_EQ(c["status"], "skipped");
      EXPECT_NE(c["reason"].get<std::string>().find("not full"), std::string::npos);
    }
  }
  EXPECT_TRUE(saw_gamma);
  EXPECT_EQ(j["groups"]["pi0_Qu"], json::array({2}));
}

TEST(Run, ExitCodes) {
  auto bad = config("Z/4 y", Command::pairs);
  EXPECT_EQ(run(bad).exit_code, 2);
  auto not_adm = config("Z/4", Command::verify);
  not_adm.p = "1";
  not_adm.q = "1";
  auto r = run(not_adm);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_NE(r.err.find("pq + 2 != 0"), std::string::npos);
  auto half = config("Z/4", Command::verify);
  half.p = "2";
  EXPECT_EQ(run(half).exit_code, 2);
  EXPECT_EQ(run(config("Z/128", Command::pairs)).exit_code, 3);
  auto gal = config("Z/9", Command::classify);
  EXPECT_EQ(run(gal).exit_code, 3);
  gal.galois_max_size = 9;
  gal.p = "1";
  gal.q = "7";
  EXPECT_EQ(run(gal).exit_code, 0);
}

TEST(Run, ClassifyF4) {
  auto c = config("Z/2[x]/(x^2+x+1)", Command::classify);
  c.p = "0";
  c.q = "1";
  c.json = true;
  auto r = run(c);
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["classes"].size(), 2u);
  EXPECT_EQ(j["candidates"], 4096u);
}

TEST(Run, DeterministicAcrossJobs) {
  auto c = config("Z/6", Command::verify);
  c.json = true;
  auto a = run(c);
  auto b = run(c);
  c.jobs = 2;
  auto d = run(c);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, d.out);
}

TEST(Run, TimingIsOptIn) {
  auto c = config("Z/3", Command::report);
  c.json = true;
  c.timing = true;
  auto j = json::parse(run(c).out);
  EXPECT_TRUE(j[0]["timing_ms"].is_number());
}

TEST(Binary, ExitCodes) {
  EXPECT_EQ(run_binary("ring Z/4 pairs").code, 0);
  EXPECT_EQ(run_binary("ring 'Z/4' --p 2 --q 1 verify --suite free").code, 0);
  EXPECT_EQ(run_binary("ring 'Z/4' nonsense").code, 2);
  EXPECT_EQ(run_binary("ring 'Z/4' verify --suite bogus").code, 2);
  EXPECT_EQ(run_binary("ring 'Z/(4' pairs").code, 2);
  EXPECT_EQ(run_binary("ring 'Z/200' pairs").code, 3);
  EXPECT_EQ(run_binary("ring 'Z/200' --max-size 200 pairs").code, 0);
  EXPECT_EQ(run_binary("--help").code, 0);
}

TEST(Binary, JsonPairs) {
  auto p = run_binary("ring 'Z/2' pairs --json");
  ASSERT_EQ(p.code, 0);
  auto j = json::parse(p.out);
  EXPECT_EQ(j["pairs"].size(), 3u);
}
