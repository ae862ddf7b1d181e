#include <doctest.h>

#include <algorithm>
#include <set>

#include "leavitt/construct.hpp"
#include "leavitt/error.hpp"
#include "leavitt/profile.hpp"
#include "support.hpp"

using namespace leavitt;

TEST_CASE("worked profile (35,13)") {
  Profile p = make_profile(35, 13);
  CHECK(p.q == 2);
  CHECK(p.r == 9);
  CHECK(p.s == 5);
  CHECK(p.hseq == std::vector<int>{1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9});
  CHECK(p.s1hat == std::vector<int>{1, 3, 6, 8, 11});
  CHECK(p.s2hat == std::vector<int>{2, 4, 5, 7, 9, 10, 12, 13});
  CHECK(p.d1 == 5);
  CHECK(p.d2 == 8);
  CHECK(p.e1 == 2);
  CHECK(p.e2 == 4);
  CHECK(p.f1 == 4);
  CHECK(p.f2 == 5);
  CHECK(p.b == 3);
  CHECK(p.t == 1);
  CHECK(p.useq[11] == 8);
  CHECK(p.useq[12] == 13);
}

TEST_CASE("small worked profiles") {
  Profile a = make_profile(5, 3);
  CHECK(a.q == 1);
  CHECK(a.r == 2);
  CHECK(a.s == 2);
  CHECK(a.hseq == std::vector<int>{1, 3, 2});
  CHECK(a.useq == std::vector<int>{2, 1, 3});
  CHECK(a.s1hat == std::vector<int>{1});
  CHECK(a.s2hat == std::vector<int>{2, 3});
  Stats st = stats(a);
  CHECK(st.d1 == 1);
  CHECK(st.d2 == 2);
  CHECK(st.e1 == 1);
  CHECK(st.e2 == 2);
  CHECK(st.f1 == 1);
  CHECK(st.f2 == 1);

  Profile b = make_profile(6, 3);
  CHECK(b.q == 1);
  CHECK(b.r == 3);
  CHECK(b.s == 1);
  CHECK(b.s1hat == std::vector<int>{1, 2});
  CHECK(b.s2hat == std::vector<int>{3});
  CHECK(b.d1 == 2);
  CHECK(b.d2 == 1);

  Profile one = make_profile(7, 1);
  CHECK(one.degenerate);
  CHECK(one.hseq == std::vector<int>{1});
  CHECK(one.useq == std::vector<int>{1});
}

TEST_CASE("profile errors") {
  CHECK_THROWS_AS(make_profile(5, 2), Error);
  CHECK_THROWS_AS(make_profile(5, 7), Error);
  try {
    make_profile(5, 7);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RequiresReduction);
  }
  try {
    make_profile(5, 2);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("class extension") {
  auto members = [](const Profile& p, int cls) {
    std::set<int> out;
    for (int w = 1; w <= p.n; ++w) {
      if (class_of(p, w).cls == cls) out.insert(w);
    }
    return out;
  };
  Profile a = make_profile(6, 3);
  CHECK(members(a, 1) == std::set<int>{1, 2, 4, 5});
  CHECK(members(a, 2) == std::set<int>{3, 6});
  Profile b = make_profile(5, 3);
  CHECK(members(b, 1) == std::set<int>{1, 4});
  CHECK(members(b, 2) == std::set<int>{2, 3, 5});
  ClassInfo c = class_of(make_profile(35, 13), 30);
  CHECK(c.qw == 2);
  CHECK(c.what == 4);
  CHECK_THROWS_AS(class_of(b, 6), Error);
}

TEST_CASE("large d reduction") {
  CHECK(reduce_large_d(5, 7) == 3);
  CHECK(reduce_large_d(5, 3) == 3);
  CHECK(reduce_large_d(8, 6) == 6);
  CHECK_THROWS_AS(reduce_large_d(5, 4), Error);
  CHECK(reduce_large_d(6, 11) == 1);
  CHECK_THROWS_AS(reduce_large_d(5, 6), Error);
}

TEST_CASE("counts for (5,3)") {
  Counts c = counts(make_profile(5, 3));
  CHECK(c.list_size == 9);
  CHECK(c.box_count == 9);
  CHECK(c.s1_box_count == 3);
  CHECK(c.s1_list_count == 3);
}

TEST_CASE("profile invariants for every valid pair with d < n <= 60") {
  int pairs = 0;
  for (int n = 3; n <= 60; ++n) {
    for (int d = 2; d < n; ++d) {
      if (gcd(d, n - 1) != 1) continue;
      ++pairs;
      Profile p = make_profile(n, d);
      CAPTURE(n);
      CAPTURE(d);
      CHECK(check_profile_invariants(p).empty());
      CHECK(testing_support::profile_oracle_problem(p).empty());
      CHECK(std::set<int>(p.hseq.begin(), p.hseq.end()).size() == static_cast<std::size_t>(d));
      CHECK(p.hseq.back() == p.r);
    }
  }
  CHECK(pairs > 600);
}
