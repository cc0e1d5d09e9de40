#include <doctest.h>

#include <json.hpp>
#include <algorithm>
#include <set>

#include "wzlab/claims.hpp"
#include "wzlab/errors.hpp"
#include "wzlab/number_theory.hpp"
#include "wzlab/report.hpp"
#include "wzlab/scan.hpp"
#include "wzlab/series.hpp"

using namespace wzlab;

namespace {

struct Frozen {
  const char* claim;
  u64 prime;
  u64 lhs;
};

// Left sides reduced mod p^e, computed by an independent Fraction-based script.
const Frozen kFrozen[] = {
    {"thm1", 5, 255},
    {"thm2", 5, 380},
    {"guo_schlosser", 5, 5},
    {"van_hamme", 5, 5},
    {"sun_refine", 5, 505},
    {"sun11", 5, 380},
    {"morley", 5, 6},
    {"lemma23_a", 5, 0},
    {"lemma23_b", 5, 14},
    {"lemma23_c", 5, 0},
    {"lemma23_c_half", 5, 0},
    {"lemma23_d", 5, 1},
    {"lemma24", 5, 3},
    {"lemma25_a", 5, 101},
    {"lemma25_b", 5, 0},
    {"lemma25_c", 5, 5},
    {"lemma25_d", 5, 1},
    {"lemma25_e", 5, 4},
    {"thm1", 7, 1036},
    {"thm2", 7, 1722},
    {"guo_schlosser", 7, 7},
    {"van_hamme", 7, 336},
    {"sun_refine", 7, 1708},
    {"sun11", 7, 1379},
    {"morley", 7, 20},
    {"lemma23_a", 7, 0},
    {"lemma23_b", 7, 10},
    {"lemma23_c", 7, 0},
    {"lemma23_c_half", 7, 0},
    {"lemma23_d", 7, 1},
    {"lemma24", 7, 4},
    {"lemma25_a", 7, 244},
    {"lemma25_b", 7, 0},
    {"lemma25_c", 7, 28},
    {"lemma25_d", 7, 3},
    {"lemma25_e", 7, 2},
    {"thm1", 11, 10659},
    {"thm2", 11, 11990},
    {"guo_schlosser", 11, 11},
    {"van_hamme", 11, 1320},
    {"sun_refine", 11, 13299},
    {"sun11", 11, 2673},
    {"morley", 11, 252},
    {"lemma23_a", 11, 0},
    {"lemma23_b", 11, 89},
    {"lemma23_c", 11, 0},
    {"lemma23_c_half", 11, 0},
    {"lemma23_d", 11, 4},
    {"lemma24", 11, 2},
    {"lemma25_a", 11, 1209},
    {"lemma25_b", 11, 0},
    {"lemma25_c", 11, 11},
    {"lemma25_d", 11, 9},
    {"lemma25_e", 11, 6},
    {"thm1", 13, 2210},
    {"thm2", 13, 24180},
    {"guo_schlosser", 13, 13},
    {"van_hamme", 13, 13},
    {"sun_refine", 13, 21983},
    {"sun11", 13, 15392},
    {"morley", 13, 924},
    {"lemma23_a", 13, 0},
    {"lemma23_b", 13, 163},
    {"lemma23_c", 13, 0},
    {"lemma23_c_half", 13, 0},
    {"lemma23_d", 13, 1},
    {"lemma24", 13, 7},
    {"lemma25_a", 13, 1691},
    {"lemma25_b", 13, 0},
    {"lemma25_c", 13, 104},
    {"lemma25_d", 13, 10},
    {"lemma25_e", 13, 11},
    {"thm1", 37, 1165056},
    {"thm2", 37, 1772892},
    {"guo_schlosser", 37, 37},
    {"van_hamme", 37, 37},
    {"sun_refine", 37, 1671586},
    {"sun11", 37, 1468974},
    {"morley", 37, 42514},
    {"lemma23_a", 37, 0},
    {"lemma23_b", 37, 294},
    {"lemma23_c", 37, 0},
    {"lemma23_c_half", 37, 0},
    {"lemma23_d", 37, 21},
    {"lemma24", 37, 29},
    {"lemma25_a", 37, 45178},
    {"lemma25_b", 37, 0},
    {"lemma25_c", 37, 851},
    {"lemma25_d", 37, 29},
    {"lemma25_e", 37, 7},
    {"thm1", 97, 6388808},
    {"thm2", 97, 86704032},
    {"guo_schlosser", 97, 97},
    {"van_hamme", 97, 97},
    {"sun_refine", 97, 50197112},
    {"sun11", 97, 11864846},
    {"morley", 97, 735552},
    {"lemma23_a", 97, 0},
    {"lemma23_b", 97, 1729},
    {"lemma23_c", 97, 0},
    {"lemma23_c_half", 97, 0},
    {"lemma23_d", 97, 26},
    {"lemma24", 97, 13},
    {"lemma25_a", 97, 517496},
    {"lemma25_b", 97, 0},
    {"lemma25_c", 97, 1455},
    {"lemma25_d", 97, 46},
    {"lemma25_e", 97, 63},
};

}  // namespace

TEST_CASE("left sides match the frozen oracle on both paths") {
  for (const auto& f : kFrozen) {
    for (PathMode mode : {PathMode::Fast, PathMode::Exact}) {
      Verdict v = evaluate_claim(f.claim, f.prime, {std::nullopt, mode});
      CHECK_MESSAGE(v.lhs->value() == f.lhs, f.claim << " p=" << f.prime);
      CHECK_MESSAGE(v.holds, f.claim << " p=" << f.prime);
    }
  }
}

TEST_CASE("pinned verdicts at p = 5") {
  struct Pin {
    const char* id;
    unsigned e;
    u64 value;
  };
  for (Pin pin : {Pin{"thm1", 4, 255}, Pin{"thm2", 4, 380}, Pin{"van_hamme", 3, 5}, Pin{"lemma25_a", 3, 101},
                  Pin{"morley", 3, 6}}) {
    Verdict v = evaluate_claim(pin.id, 5);
    CHECK(v.holds);
    CHECK(v.exponent == pin.e);
    CHECK(v.lhs->value() == pin.value);
    CHECK(v.rhs->value() == pin.value);
    CHECK(v.lhs->modulus() == prime_power(5, pin.e));
  }
}

TEST_CASE("claim predicates and lookup") {
  CHECK_THROWS_AS(evaluate_claim("morley", 3), PredicateViolation);
  CHECK_THROWS_AS(evaluate_claim("thm1", 9), PredicateViolation);
  CHECK_THROWS_AS(evaluate_claim("no_such_claim", 5), std::invalid_argument);
  CHECK(find_claim("no_such_claim") == nullptr);
  REQUIRE(find_claim("sun11") != nullptr);
  CHECK(find_claim("sun11")->exponent == 4);
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK_FALSE(c.admits(3));
    CHECK(c.admits(5));
  }
  CHECK(ids.size() == 18);
  Verdict p3 = guo_schlosser_p3_spot_check();
  CHECK(p3.holds);
  CHECK(p3.lhs->value() == 3);
  CHECK(p3.lhs->modulus() == 27);
}

TEST_CASE("every claim holds for every admissible prime up to 499") {
  for (u64 p : primes_in_range(5, 499)) {
    for (const auto& c : claim_registry()) {
      Verdict v = evaluate_claim(c, p);
      CHECK_MESSAGE(v.ok(), c.id << " p=" << p);
    }
  }
}

TEST_CASE("fast and exact paths agree for every claim on 5..199") {
  for (u64 p : primes_in_range(5, 199)) {
    for (const auto& c : claim_registry()) {
      Verdict v = evaluate_claim(c, p, {std::nullopt, PathMode::CrossCheck});
      CHECK_MESSAGE(v.paths_agree, c.id << " p=" << p);
      CHECK(v.exact_lhs.has_value());
    }
  }
}

TEST_CASE("thm1 mod p^3 agrees with guo_schlosser") {
  for (u64 p : primes_in_range(5, 199)) {
    Verdict t = evaluate_claim("thm1", p, {3u, PathMode::Fast});
    Verdict g = evaluate_claim("guo_schlosser", p);
    CHECK(t.holds);
    CHECK(*t.lhs == *g.lhs);
    CHECK(*t.rhs == *g.rhs);
  }
}

TEST_CASE("thm1 and thm2 left sides agree mod p^3 but not always mod p^4") {
  bool differ = false;
  for (u64 p : primes_in_range(5, 97)) {
    Verdict a = evaluate_claim("thm1", p), b = evaluate_claim("thm2", p);
    CHECK(a.lhs->lift(3) == b.lhs->lift(3));
    differ = differ || !(*a.lhs == *b.lhs);
  }
  CHECK(differ);
}

TEST_CASE("sigma identities") {
  SigmaResult r = evaluate_sigma_identities(200);
  CHECK(r.holds);
  CHECK(r.failing_identity == 0);
  CHECK(evaluate_sigma_identities(1).holds);
}

TEST_CASE("proof-step checkpoints") {
  const auto& steps = proof_steps();
  CHECK(steps.size() == 14);
  for (u64 p : primes_in_range(5, 97)) {
    auto verdicts = proof_step_checks(p);
    REQUIRE(verdicts.size() == steps.size());
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      CHECK(verdicts[i].claim_id == steps[i].id);
      CHECK_MESSAGE(verdicts[i].ok(), steps[i].id << " p=" << p << " " << verdicts[i].error);
    }
  }
  auto at5 = proof_step_checks(5);
  auto value = [&](const char* id) {
    for (const auto& v : at5) {
      if (v.claim_id == id) return v.lhs->value();
    }
    FAIL("missing step " << id);
    return u64{0};
  };
  CHECK(value("F_full_column") == 5);
  CHECK(value("G_full_last") == 10);
  CHECK(value("minus_half_pochhammer_p") == 485);
  CHECK(value("G_full_sum") == 385);
  CHECK_THROWS_AS(proof_step_checks(3), PredicateViolation);
  CHECK_THROWS_AS(proof_step_checks(2), PredicateViolation);
  CHECK_THROWS_AS(proof_step_checks(15), PredicateViolation);
}

TEST_CASE("scan reports") {
  ScanConfig cfg;
  cfg.claim_ids = {"thm1"};
  cfg.lo = 5;
  cfg.hi = 97;
  Report r = scan(cfg);
  CHECK(r.verdicts.size() == 23);
  CHECK(r.all_passed());
  REQUIRE(r.claims.size() == 1);
  CHECK(r.claims[0].passed == 23);

  cfg.exponent = 5;
  Report over = scan(cfg);
  CHECK(over.failures() > 0);
  CHECK(over.failures() <= over.verdicts.size());

  ScanConfig gs;
  gs.claim_ids = {"guo_schlosser", "morley"};
  gs.lo = 3;
  gs.hi = 7;
  Report g = scan(gs);
  CHECK(g.verdicts.size() == 5);  // guo_schlosser at 3, 5, 7; morley at 5, 7
  CHECK(g.verdicts.front().prime == 3);
  CHECK(g.claims[1].skipped == 1);
  CHECK(g.notices.size() == 1);

  ScanConfig empty;
  empty.claim_ids = {"thm1"};
  empty.lo = empty.hi = 4;
  CHECK(scan(empty).verdicts.empty());

  CHECK_THROWS_AS(resolve_claim_ids({"thm1", "bogus"}), std::invalid_argument);
  CHECK(resolve_claim_ids({"all"}).size() == 18);
  CHECK(resolve_claim_ids({}).size() == 18);
}

TEST_CASE("scan output does not depend on the worker count") {
  ScanConfig cfg;
  cfg.lo = 5;
  cfg.hi = 199;
  cfg.mode = PathMode::CrossCheck;
  cfg.workers = 1;
  std::string one = report_json(scan(cfg));
  cfg.workers = 8;
  std::string eight = report_json(scan(cfg));
  CHECK(one == eight);
  cfg.workers = 3;
  CHECK(report_csv(scan(cfg)) == report_csv([&] {
          cfg.workers = 1;
          return scan(cfg);
        }()));
}

TEST_CASE("report formats") {
  ScanConfig cfg;
  cfg.claim_ids = {"thm1", "morley"};
  cfg.lo = 5;
  cfg.hi = 13;
  Report r = scan(cfg);
  auto j = nlohmann::json::parse(report_json(r));
  CHECK(j["schema"] == "wzlab.report/1");
  CHECK(j["run"]["command"] == "scan");
  CHECK(j["run"]["primes"]["count"] == 4);
  CHECK(j["summary"]["all_passed"] == true);
  CHECK(j["verdicts"].size() == 8);
  const auto& row = j["verdicts"][0];
  CHECK(row["claim"] == "thm1");
  CHECK(row["prime"] == 5);
  CHECK(row["lhs"] == 255);
  CHECK(row["holds"] == true);
  CHECK_FALSE(row.contains("micros"));
  auto timed = nlohmann::json::parse(report_json(r, {true}));
  CHECK(timed["verdicts"][0].contains("micros"));

  std::string csv = report_csv(r);
  CHECK(csv.rfind("claim,prime,exponent,lhs,rhs,holds", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
  std::string human = report_human(r);
  CHECK(human.find("thm1") != std::string::npos);
  CHECK(human.find("0 failure(s)") != std::string::npos);
}
