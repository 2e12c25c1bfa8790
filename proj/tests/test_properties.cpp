#include "doctest.h"

#include "properties.hpp"

using namespace piprod::testing;

namespace {
void expect_all(const std::vector<PropertyResult>& results) {
    for (const auto& r : results) {
        INFO(r.detail);
        CHECK_MESSAGE(r.pass, r.name);
    }
}
}  // namespace

TEST_CASE("prodcore properties") { expect_all(prodcore_properties()); }
TEST_CASE("quad properties") { expect_all(quad_properties()); }
TEST_CASE("chains properties") { expect_all(chains_properties()); }
TEST_CASE("verify properties") { expect_all(verify_properties()); }
