#include <doctest.h>

#include "rgm/selftest.hpp"

using namespace rgm::selftest;

TEST_CASE("machine line format") {
  std::vector<CriterionResult> rs = {{1, "alpha", true, "n=3"}, {2, "beta", false, ""}};
  CHECK(machine_lines(rs) ==
        "criterion=1 name=alpha status=pass detail=n=3\n"
        "criterion=2 name=beta status=fail\n");
}
