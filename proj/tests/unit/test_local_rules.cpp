#include "doctest.h"

#include "common.hpp"
#include "starlike/generate.hpp"
#include "starlike/local_rules.hpp"

using namespace starlike;

TEST_SUITE("local_rules") {

TEST_CASE("table shape") {
  const auto& rules = local_rules();
  CHECK(rules.size() == 16);
  int zero_rows = 0, two_term = 0;
  for (const auto& r : rules) {
    zero_rows += r.targets.empty();
    two_term += r.targets.size() == 2;
    CHECK((r.source.size() == 1 || r.source.size() == 2));
  }
  CHECK(zero_rows == 6);
  CHECK(two_term == 2);
}

TEST_CASE("every row is realized and matched") {
  LocalRuleReport all;
  for (const char* name : {"positive_kink", "hopf", "trefoil", "figure_eight", "fig2"})
    merge_reports(all, check_local_rules(EnhancedComplex(load(name))));
  for (std::uint64_t seed = 1; seed <= 40; ++seed)
    merge_reports(all, check_local_rules(EnhancedComplex(random_diagram(1 + static_cast<int>(seed % 4), seed))));
  CHECK(all.failure.empty());
  CHECK(all.transitions > 0);
  for (const auto& r : local_rules()) CHECK_MESSAGE(all.hits[r.name] > 0, r.name);
}

TEST_CASE("merge law") {
  for (const char* name : {"hopf", "trefoil", "figure_eight", "fig2"}) CHECK(check_merge_law(load(name)).empty());
}

}
