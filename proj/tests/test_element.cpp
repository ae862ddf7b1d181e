#include <doctest.h>

#include <random>

#include "leavitt/element.hpp"
#include "leavitt/error.hpp"
#include "support.hpp"

using namespace leavitt;
using testing_support::naive_reduce;
using testing_support::to_naive;

namespace {

Element P(const char* text, int n) { return parse_element(text, n); }

}  // namespace

TEST_CASE("mono_mul examples") {
  CHECK(mono_mul(Monomial::x({1}), Monomial::y({1}), 3).is_one());
  CHECK(mono_mul(Monomial::x({1}), Monomial::y({2}), 3).is_zero());
  Element yx = mono_mul(Monomial::y({1}), Monomial::x({1}), 3);
  CHECK(yx.size() == 1);
  CHECK(yx.to_string() == "1*y1.x1");
  CHECK(mono_mul(Monomial::y({3}), Monomial::x({3}), 3) == P("1 - y1.x1 - y2.x2", 3));
  CHECK_THROWS_AS(mono_mul(Monomial::x({4}), Monomial::y({1}), 3), Error);
}

TEST_CASE("reduce examples") {
  for (int n = 2; n <= 5; ++n) {
    Element expect = Element::one(n);
    for (int j = 1; j < n; ++j) expect -= Element::monomial(Monomial({static_cast<GenIndex>(j)}, {static_cast<GenIndex>(j)}), n);
    CHECK(reduce({{Coefficient(1), parse_word("y" + std::to_string(n) + ".x" + std::to_string(n))}}, n) == expect);
  }
  CHECK(reduce({{Coefficient(1), parse_word("x1.y2.x3")}}, 3).is_zero());
  CHECK(P("x1.y1.x2", 3) == Element::x(2, 3));
}

TEST_CASE("reduction is confluent and idempotent") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 1200; ++k) {
    int n = 2 + static_cast<int>(k % 3);
    RawWord w = testing_support::random_word(rng, n, 10);
    RawCombination raw{{Coefficient(1), w}};
    Element a = reduce(raw, n);
    std::mt19937_64 r1(rng()), r2(rng());
    CHECK(reduce_randomized(raw, n, r1) == a);
    CHECK(reduce_randomized(raw, n, r2) == a);
    CHECK(evaluate_word(w, n) == a);
    CHECK(to_naive(a) == naive_reduce({{testing_support::to_naive(w), 1}}, n));
    for (const auto& t : a.terms()) CHECK(t.mono.is_reduced(n));
    RawCombination again;
    for (const auto& t : a.terms()) {
      RawWord rw;
      for (GenIndex g : t.mono.yword()) rw.push_back({false, g});
      for (GenIndex g : t.mono.xword()) rw.push_back({true, g});
      again.push_back({t.coeff, rw});
    }
    CHECK(reduce(again, n) == a);
  }
}

TEST_CASE("length 8 words over three letters reduce the same under two random orders") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    RawWord w;
    for (int i = 0; i < 8; ++i) w.push_back({static_cast<bool>(rng() & 1), static_cast<GenIndex>(1 + rng() % 3)});
    std::mt19937_64 a(rng()), b(rng());
    CHECK(reduce_randomized({{Coefficient(1), w}}, 3, a) == reduce_randomized({{Coefficient(1), w}}, 3, b));
  }
}

TEST_CASE("ring axioms") {
  std::mt19937_64 rng(5);
  const int n = 3;
  Element sum(n);
  for (int j = 1; j <= n; ++j) sum += Element::y(static_cast<GenIndex>(j), n) * Element::x(static_cast<GenIndex>(j), n);
  CHECK(sum.is_one());
  for (int k = 0; k < 100; ++k) {
    Element a = testing_support::random_element(rng, n, 4);
    Element b = testing_support::random_element(rng, n, 4);
    Element c = testing_support::random_element(rng, n, 4);
    CHECK(Element::one(n) * a == a);
    CHECK(a * Element::one(n) == a);
    CHECK(a * (b * c) == (a * b) * c);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) - b == a);
    CHECK(add(a, b) == b + a);
    CHECK(scalar_mul(Coefficient(2), a) == a + a);
    CHECK(mul(a, b) == a * b);
  }
  CHECK_THROWS_AS(Element::x(1, 3) * Element::x(1, 4), Error);
}

TEST_CASE("defining relations for n up to 8") {
  for (int n = 2; n <= 8; ++n) {
    Element sum(n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        Element p = mul(Element::x(static_cast<GenIndex>(i), n), Element::y(static_cast<GenIndex>(j), n));
        CHECK(p == (i == j ? Element::one(n) : Element::zero(n)));
      }
      sum += mul(Element::y(static_cast<GenIndex>(i), n), Element::x(static_cast<GenIndex>(i), n));
    }
    CHECK(sum.is_one());
  }
}

TEST_CASE("involution") {
  CHECK(involute(P("y2.x3", 3)) == P("y3.x2", 3));
  CHECK(involute(Element::one(3)).is_one());
  CHECK(involute(P("x1.x2", 3)) == P("y2.y1", 3));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 200; ++k) {
    int n = 2 + k % 3;
    Element a = testing_support::random_element(rng, n, 5);
    Element b = testing_support::random_element(rng, n, 5);
    CHECK(involute(a * b) == involute(b) * involute(a));
    CHECK(involute(a + b) == involute(a) + involute(b));
    CHECK(involute(involute(a)) == a);
  }
}

TEST_CASE("grading") {
  CHECK(degree(P("y1.y2.x3", 3)) == Degree::of(-1));
  CHECK(degree(Element::one(3)) == Degree::of(0));
  CHECK(degree(P("1 + x1", 3)) == Degree::mixed());
  CHECK(degree(Element::zero(3)) == Degree::all());
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int k = 0; k < 2000 && checked < 300; ++k) {
    int n = 2 + k % 2;
    Element a = testing_support::random_element(rng, n, 4, 1);
    Element b = testing_support::random_element(rng, n, 4, 1);
    Degree da = degree(a), db = degree(b);
    if (da.kind != Degree::Kind::Homogeneous || db.kind != Degree::Kind::Homogeneous) continue;
    ++checked;
    Element p = a * b;
    Degree dp = degree(p);
    if (p.is_zero()) CHECK(dp == Degree::all());
    else CHECK(dp == Degree::of(da.value + db.value));
  }
  CHECK(checked == 300);
}

TEST_CASE("degree-zero image examples") {
  ScalarMatrix m = degree_zero_image(P("y1.x1", 2), 1);
  ScalarMatrix e11(2);
  e11.at(0, 0) = Coefficient(1);
  CHECK(m == e11);
  for (int n = 2; n <= 3; ++n) {
    for (int t = 0; t <= 2; ++t) {
      ScalarMatrix id = degree_zero_image(Element::one(n), t);
      std::size_t size = 1;
      for (int i = 0; i < t; ++i) size *= static_cast<std::size_t>(n);
      REQUIRE(id.size == size);
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) CHECK(id.at(i, j) == Coefficient(i == j ? 1 : 0));
      }
    }
  }
  ScalarMatrix two = degree_zero_image(P("y1.x1", 2), 2);
  ScalarMatrix expect(4);
  expect.at(0, 0) = Coefficient(1);
  expect.at(1, 1) = Coefficient(1);
  CHECK(two == expect);
  CHECK_THROWS_AS(degree_zero_image(P("x1", 2), 1), Error);
  CHECK_THROWS_AS(degree_zero_image(P("y1.y2.x1.x1", 2), 1), Error);
}

TEST_CASE("degree-zero image is a faithful unital homomorphism") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    int n = 2 + k % 2;
    int level = 1 + k % 3;
    Element a = testing_support::random_degree_zero(rng, n, level);
    Element b = testing_support::random_degree_zero(rng, n, level);
    ScalarMatrix ia = degree_zero_image(a, level), ib = degree_zero_image(b, level);
    CHECK((a == b) == (ia == ib));
    // Rewrite a through 1 = sum y_j x_j; the image must not change.
    Element padded(n);
    for (int j = 1; j <= n; ++j) padded += a * Element::y(static_cast<GenIndex>(j), n) * Element::x(static_cast<GenIndex>(j), n);
    CHECK(padded == a);
    CHECK(degree_zero_image(a * b, level) == testing_support::times(ia, ib));
    CHECK(ia == testing_support::word_action(a, level));
    CHECK(degree_zero_image(a, level + 1) == testing_support::word_action(a, level + 1));
    ScalarMatrix diff = degree_zero_image(a - b, level);
    bool zero = true;
    for (const auto& c : diff.data) zero = zero && c.is_zero();
    CHECK(zero == (a == b));
  }
}

TEST_CASE("text rendering") {
  CHECK(P("1 - y1.x1 + 3/2*x2", 3).to_string() == "1 + 3/2*x2 - 1*y1.x1");
  CHECK(Element::zero(3).to_string() == "0");
  CHECK(Monomial({1, 2}, {3}).to_string() == "y1.y2.x3");
  CHECK(Monomial().to_string() == "1");
  CHECK(word_to_string(parse_word("x1.y2")) == "x1.y2");
  CHECK_THROWS_AS(parse_word("x0"), Error);
  CHECK_THROWS_AS(parse_element("2*z1", 3), Error);
}
