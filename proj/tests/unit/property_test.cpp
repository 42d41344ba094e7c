#include <doctest.h>

#include "properties.hpp"

namespace {

void report(const properties::Outcome& o) {
  for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) MESSAGE(o.failures[i]);
  CHECK(o.cases > 0);
  CHECK(o.failures.empty());
}

}  // namespace

TEST_CASE("Hilbert symbol axioms") { report(properties::hilbert_symbols(12, 23)); }
TEST_CASE("Smith form invariance") { report(properties::smith_invariance(100)); }
TEST_CASE("isotropy search") { report(properties::isotropy_search(12)); }
TEST_CASE("reflections") { report(properties::reflections(200)); }
