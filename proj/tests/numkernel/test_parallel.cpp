#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "atomlens/numkernel/parallel.hpp"

using namespace atomlens::numkernel;

TEST_SUITE("numkernel") {

TEST_CASE("parallel_for visits each index once") {
  for (std::size_t n : {0u, 1u, 5u, 17u, 1000u}) {
    for (unsigned t : {1u, 2u, 3u, 8u, 64u}) {
      std::vector<std::atomic<int>> hits(n);
      parallel_for(n, t, [&](std::size_t i) { hits[i]++; });
      for (std::size_t i = 0; i < n; ++i) REQUIRE(hits[i].load() == 1);
    }
  }
}

TEST_CASE("parallel_for rethrows the error of the lowest block") {
  try {
    parallel_for(100, 4, [](std::size_t i) {
      if (i == 80) throw std::runtime_error("late");
      if (i == 10) throw std::logic_error("early");
    });
    FAIL("expected an exception");
  } catch (const std::logic_error& e) {
    CHECK(std::string(e.what()) == "early");
  }
}

TEST_CASE("thread count resolution") {
  ::unsetenv("ATOMLENS_THREADS");
  CHECK(resolve_thread_count(3u) == 3u);
  CHECK(resolve_thread_count(std::nullopt) >= 1u);
  CHECK_THROWS_AS(resolve_thread_count(0u), std::invalid_argument);
  ::setenv("ATOMLENS_THREADS", "5", 1);
  CHECK(resolve_thread_count(std::nullopt) == 5u);
  CHECK(resolve_thread_count(2u) == 2u);
  ::setenv("ATOMLENS_THREADS", "five", 1);
  CHECK_THROWS_AS(resolve_thread_count(std::nullopt), std::invalid_argument);
  ::setenv("ATOMLENS_THREADS", "0", 1);
  CHECK_THROWS_AS(resolve_thread_count(std::nullopt), std::invalid_argument);
  ::unsetenv("ATOMLENS_THREADS");
}

}  // TEST_SUITE
