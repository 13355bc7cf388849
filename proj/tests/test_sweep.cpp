#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "aperylab/sweep.hpp"
#include "oracles.hpp"

using namespace aperylab;

namespace {

SweepSpec box(std::optional<int> embdim, Value max_gen) {
  SweepSpec spec;
  spec.embdim = embdim;
  spec.max_generator = max_gen;
  return spec;
}

}  // namespace

TEST_CASE("enumeration of two-generator semigroups up to 5") {
  const auto tuples = enumerate_minimal_tuples(box(2, 5));
  CHECK(tuples == std::vector<std::vector<Value>>{
                      {2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
}

TEST_CASE("enumeration of the trivial box") {
  CHECK(enumerate_minimal_tuples(box(1, 1)) == std::vector<std::vector<Value>>{{1}});
  CHECK(enumerate_minimal_tuples(box(1, 6)) == std::vector<std::vector<Value>>{{1}});
}

TEST_CASE("enumeration honors the multiplicity filter") {
  SweepSpec spec = box(3, 12);
  spec.min_multiplicity = 4;
  spec.max_multiplicity = 4;
  const auto tuples = enumerate_minimal_tuples(spec);
  const std::set<std::vector<Value>> got(tuples.begin(), tuples.end());
  CHECK(got.count({4, 5, 6}) == 1);
  CHECK(got.count({4, 5, 7}) == 1);
  CHECK(got.count({4, 5, 11}) == 1);
  for (const auto& t : tuples) CHECK(t[0] == 4);
}

TEST_CASE("enumerated tuples are exactly the minimal systems") {
  const auto tuples = enumerate_minimal_tuples(box(3, 16));
  std::set<std::vector<Value>> seen;
  for (const auto& t : tuples) {
    CHECK(seen.insert(t).second);  // no duplicates
    CHECK(NumericalSemigroup(t).generators() == t);
  }
  // Completeness against a brute-force scan of the same box.
  std::size_t expected = 0;
  for (Value a = 1; a <= 16; ++a) {
    for (Value b = a + 1; b <= 16; ++b) {
      for (Value c = b + 1; c <= 16; ++c) {
        const std::vector<Value> t{a, b, c};
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        if (oracles::brute_member({b, c}, a) || oracles::brute_member({a, c}, b) ||
            oracles::brute_member({a, b}, c)) {
          continue;
        }
        ++expected;
        CHECK(seen.count(t) == 1);
      }
    }
  }
  CHECK(tuples.size() == expected);
}

TEST_CASE("ceiling guard") {
  SweepSpec spec = box(4, 60);
  spec.ceiling = 1000;
  CHECK_THROWS_AS(enumerate_minimal_tuples(spec), BoundTooLarge);
  CHECK_THROWS_AS(run_sweep(spec), BoundTooLarge);
}

TEST_CASE("unknown filter names are rejected") {
  SweepSpec spec = box(2, 8);
  spec.filters = {"definitely-not-a-filter"};
  CHECK_THROWS_AS(run_sweep(spec), Error);
  CHECK_THROWS_AS(validate_filter_name("k-buchsbaum=x"), Error);
  CHECK_NOTHROW(validate_filter_name("k-buchsbaum=3"));
  CHECK_NOTHROW(validate_filter_name("gorenstein-cone"));
}

TEST_CASE("filters select the advertised subsets") {
  SweepSpec spec = box(3, 20);
  spec.filters = {"buchsbaum-not-cm"};
  const auto result = run_sweep(spec);
  CHECK(result.count_enumerated > result.count_matched);
  CHECK(result.count_matched > 0);
  for (const auto& rec : result.records) {
    CHECK(rec.classification.buchsbaum_index == 1);
    CHECK(rec.classification.torsion_length == 1);
    CHECK(rec.torsion.size() == 1);
  }
  CHECK(result.contradiction_events.empty());
}

TEST_CASE("two-generator sweeps are entirely Gorenstein cones") {
  SweepSpec spec = box(2, 10);
  const auto result = run_sweep(spec);
  CHECK(result.count_enumerated == result.count_matched);
  for (const auto& rec : result.records) {
    CHECK(rec.classification.is_gorenstein_tangent_cone);
    CHECK(rec.classification.is_cm);
  }
  spec.filters = {"hilbert-decreasing"};
  CHECK(run_sweep(spec).count_matched == 0);
}

TEST_CASE("k-buchsbaum filters nest") {
  SweepSpec spec = box(3, 18);
  spec.filters = {"k-buchsbaum=1"};
  const auto le1 = run_sweep(spec).count_matched;
  spec.filters = {"k-buchsbaum=2"};
  const auto le2 = run_sweep(spec).count_matched;
  spec.filters = {"cm"};
  const auto cm = run_sweep(spec).count_matched;
  spec.filters = {"buchsbaum-index=1"};
  const auto eq1 = run_sweep(spec).count_matched;
  CHECK(cm + eq1 == le1);
  CHECK(le1 <= le2);
}

TEST_CASE("sweeps are deterministic") {
  SweepSpec spec = box(3, 15);
  spec.threads = 1;
  const auto a = run_sweep(spec);
  spec.threads = 4;
  const auto b = run_sweep(spec);
  REQUIRE(a.records.size() == b.records.size());
  CHECK(a.records == b.records);
  std::string left;
  std::string right;
  for (const auto& rec : a.records) left += record_to_json(rec).dump() + "\n";
  for (const auto& rec : b.records) right += record_to_json(rec).dump() + "\n";
  CHECK(left == right);
}

TEST_CASE("cross checks pass on random single semigroups") {
  std::mt19937 rng(5591);
  for (int round = 0; round < 30; ++round) {
    const NumericalSemigroup s(oracles::random_tuple(rng, 5, 26));
    const auto rec = analyze(s);
    CHECK(cross_checks(s, rec).empty());
  }
}

TEST_CASE("sweep summary serialization") {
  SweepSpec spec = box(2, 6);
  const auto result = run_sweep(spec);
  const auto j = sweep_summary_json(result);
  CHECK(j.at("version") == kSchemaVersion);
  CHECK(j.at("count_enumerated").get<std::uint64_t>() == result.count_enumerated);
  CHECK(j.at("contradiction_events").is_array());
  CHECK(j.at("spec").at("embdim").get<int>() == 2);
}
