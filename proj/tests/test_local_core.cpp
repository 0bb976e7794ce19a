#include <doctest.h>

#include <random>
#include <vector>

#include "semicore/decompose.hpp"

using namespace semicore;

TEST_CASE("local_core worked example") {
  // v3 in the first pass over G9: six neighbors at {3,3,3,3,5,3}, bound 6.
  std::vector<uint32_t> cores{3, 3, 3, 3, 5, 3};
  CHECK(local_core(6, cores) == 3);
}

TEST_CASE("local_core trivial and clamped cases") {
  std::vector<uint32_t> empty;
  CHECK(local_core(0, empty) == 0);
  CHECK(local_core(5, empty) == 0);
  std::vector<uint32_t> cores{3, 3, 2, 1, 1};
  CHECK(local_core(5, cores) == 2);  // k=3 has 2 supporters, k=2 has 3
  std::vector<uint32_t> high{9, 9, 9};
  CHECK(local_core(2, high) == 2);  // result never exceeds c_old
  std::vector<uint32_t> zeros{0, 0};
  CHECK(local_core(4, zeros) == 0);
}

TEST_CASE("local_core equals direct evaluation on random inputs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 500; ++t) {
    uint32_t c_old = rng() % 12;
    std::vector<uint32_t> cores(rng() % 14);
    for (auto& c : cores) c = rng() % 12;
    uint32_t want = 0;
    for (uint32_t k = 1; k <= c_old; ++k) {
      uint32_t s = 0;
      for (uint32_t c : cores)
        if (c >= k) ++s;
      if (s >= k) want = k;
    }
    CHECK(local_core(c_old, cores) == want);
  }
}

TEST_CASE("compute_cnt counts supporters at the node's level") {
  std::vector<uint32_t> after_pass_one{3, 3, 2, 2, 1};  // v5's neighborhood after pass 1
  CHECK(compute_cnt(after_pass_one, 3) == 2);
  std::vector<uint32_t> all{3, 3, 3};
  CHECK(compute_cnt(all, 3) == 3);
  std::vector<uint32_t> mixed{1, 2, 3};
  CHECK(compute_cnt(mixed, 2) == 2);
  std::vector<uint32_t> empty;
  CHECK(compute_cnt(empty, 0) == 0);
}

TEST_CASE("update_range extends the scan forward and defers backward") {
  CoreState st;
  st.v_max = 5;
  NodeId next_min = 8, next_max = 0;

  SUBCASE("larger neighbor joins the current pass") {
    update_range(st, next_min, next_max, 8, 5);
    CHECK(st.v_max == 8);
    CHECK_FALSE(st.update);
    CHECK(next_min == 8);  // untouched sentinel
    CHECK(next_max == 0);
  }
  SUBCASE("smaller neighbor goes to the next pass") {
    update_range(st, next_min, next_max, 3, 5);
    CHECK(st.v_max == 5);
    CHECK(st.update);
    CHECK(next_min == 3);
    CHECK(next_max == 3);
  }
  SUBCASE("max is idempotent") {
    st.v_max = 8;
    update_range(st, next_min, next_max, 6, 5);
    CHECK(st.v_max == 8);
    CHECK_FALSE(st.update);
  }
}

TEST_CASE("update_nbr_cnt decrements exactly the (c_new, c_old] band") {
  CoreState st;
  st.core = {2, 3, 4, 2, 3};
  st.cnt = {5, 3, 5, 5, 5};
  std::vector<NodeId> nbrs{1, 2, 3, 4};
  // node drops 3 -> 2: neighbors with core in (2,3] lose one supporter
  update_nbr_cnt(st, nbrs, 3, 2);
  CHECK(st.cnt[1] == 2);  // core 3: decremented (the G9 v4 case, 3 -> 2)
  CHECK(st.cnt[2] == 5);  // core 4 > c_old: never counted the dropped value
  CHECK(st.cnt[3] == 5);  // core 2 = c_new: dropping node still supports it
  CHECK(st.cnt[4] == 4);
}
