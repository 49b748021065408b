#include <catch2/catch_amalgamated.hpp>
#include "nco/nco.hpp"
TEST_CASE("placeholder test_rewrite") { REQUIRE(true); }
