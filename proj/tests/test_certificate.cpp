#include <doctest.h>

#include <regex>
#include <set>

#include "leavitt/certificate.hpp"
#include "leavitt/error.hpp"
#include "leavitt/verify.hpp"

using namespace leavitt;

namespace {

// Target matrix described by a node label, rebuilt from the label text alone.
std::optional<LMatrix> target_from_label(const std::string& label, const Profile& p) {
  const int n = p.n, d = p.d;
  static const std::regex unit(R"((?:(.+)\*)?e_\{(\d+),(\d+)\})");
  static const std::regex idem_re(R"(e_(\d+))");
  static const std::regex sum_re(R"(E_(\d+|s))");
  std::smatch m;
  if (label == "I") return LMatrix::identity(d, n);
  if (std::regex_match(label, m, sum_re)) return E(d, n, m[1] == "s" ? p.s : std::stoi(m[1]));
  if (std::regex_match(label, m, idem_re)) return idem(d, n, std::stoi(m[1]));
  if (!std::regex_match(label, m, unit)) return std::nullopt;
  Element entry = Element::one(n);
  if (m[1].matched) {
    static const std::regex letter(R"(([xy])(\d+)(?:\^(\d+))?)");
    std::string mono = m[1];
    for (std::sregex_iterator it(mono.begin(), mono.end(), letter), end; it != end; ++it) {
      const std::smatch& l = *it;
      int power = l[3].matched ? std::stoi(l[3]) : 1;
      auto g = static_cast<GenIndex>(std::stoi(l[2]));
      for (int k = 0; k < power; ++k) entry = entry * (l[1] == "x" ? Element::x(g, n) : Element::y(g, n));
    }
  }
  return element_unit(entry, d, std::stoi(m[2]), std::stoi(m[3]));
}

void check_labels(const Certificate& c, const Profile& p) {
  for (const auto& node : c.nodes) {
    if (node.label.empty()) continue;
    auto t = target_from_label(node.label, p);
    REQUIRE_MESSAGE(t.has_value(), node.label);
    REQUIRE(node.target.has_value());
    CHECK_MESSAGE(node.target->to_matrix() == *t, node.label);
  }
}

std::set<std::string> labels(const Certificate& c) {
  std::set<std::string> out;
  for (const auto& node : c.nodes) {
    if (!node.label.empty()) out.insert(node.label);
  }
  return out;
}

}  // namespace

TEST_CASE("certificate for (5,3)") {
  Profile p = make_profile(5, 3);
  GeneratorSet g = construct_main(p);
  Certificate c = generation_certificate(p, g);
  auto es = c.find("E_s");
  REQUIRE(es.has_value());
  LMatrix expect = g.y(1) * g.x(1) + g.y(2) * g.x(2);
  CHECK(c.nodes[static_cast<std::size_t>(*es)].target->to_matrix() == expect);
  CHECK(expect == idem(3, 5, 1) + idem(3, 5, 2));
  auto e13 = c.find("e_{1,3}");
  REQUIRE(e13.has_value());
  CHECK(c.nodes[static_cast<std::size_t>(*e13)].target->to_matrix() == matrix_unit(3, 5, 1, 3));
  auto top = c.find("x1^2*e_{1,3}");
  REQUIRE(top.has_value());
  CHECK(c.nodes[static_cast<std::size_t>(*top)].target->to_matrix() == element_unit(parse_element("x1.x1", 5), 3, 1, 3));
  auto i = c.find("I");
  REQUIRE(i.has_value());
  CHECK(c.nodes[static_cast<std::size_t>(*i)].target->to_matrix() == LMatrix::identity(3, 5));
  CertificateReport r = evaluate_certificate(c, g);
  CHECK(r.ok);
  CHECK(r.checked == r.named_count);
  CHECK(r.named_count == c.named_count());
  check_labels(c, p);
}

TEST_CASE("certificates name every generator-level target") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 3}, {6, 3}, {8, 5}, {8, 3}, {10, 7}, {7, 5}, {4, 2}}) {
    Profile p = make_profile(n, d);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GeneratorSet g = construct_main(p, seed == 0 ? PlacementStrategy::Canonical : PlacementStrategy::SeededRandom, seed);
      Certificate c = generation_certificate(p, g);
      std::set<std::string> names = labels(c);
      for (int a = 1; a <= d; ++a) {
        CHECK(names.count("e_" + std::to_string(a)) == 1);
        for (int b = 1; b <= d; ++b) {
          std::string unit = "e_{" + std::to_string(a) + "," + std::to_string(b) + "}";
          if (a != b) CHECK_MESSAGE(names.count(unit) == 1, unit);
          for (int w = 1; w <= n; ++w) {
            CHECK_MESSAGE(names.count("x" + std::to_string(w) + "*" + unit) == 1, unit);
            CHECK_MESSAGE(names.count("y" + std::to_string(w) + "*" + unit) == 1, unit);
          }
        }
      }
      std::string chain = "x1";
      if (d > 2) chain += "^" + std::to_string(d - 1);
      CHECK(names.count(chain + "*e_{1," + std::to_string(d) + "}") == 1);
      CHECK(evaluate_certificate(c, g).ok);
      check_labels(c, p);
    }
  }
}

TEST_CASE("dual certificates evaluate to the involuted targets") {
  for (auto [n, d] : std::vector<std::pair<int, int>>{{5, 3}, {9, 5}}) {
    Profile p = make_profile(n, d);
    GeneratorSet g = construct_main(p);
    Certificate c = generation_certificate(p, g);
    Certificate dual = dual_certificate(c);
    REQUIRE(dual.nodes.size() == c.nodes.size());
    for (std::size_t k = 0; k < c.nodes.size(); ++k) {
      if (!c.nodes[k].target) continue;
      REQUIRE(dual.nodes[k].target.has_value());
      CHECK(dual.nodes[k].target->to_matrix() == mat_involute(c.nodes[k].target->to_matrix()));
      CHECK(dual.nodes[k].label == c.nodes[k].label + "*");
    }
    CHECK(evaluate_certificate(dual, g).ok);
  }
}

TEST_CASE("certificate mismatches are reported with the node name") {
  Profile p = make_profile(5, 3);
  GeneratorSet good = construct_main(p);
  Certificate c = generation_certificate(p, good);
  GeneratorSet other = construct_main(p, PlacementStrategy::SeededRandom, 3);
  REQUIRE_FALSE(other == good);
  CertificateReport r = evaluate_certificate(c, other);
  CHECK_FALSE(r.ok);
  REQUIRE(r.failure.has_value());
  CHECK_FALSE(r.failure->label.empty());
  CHECK_FALSE(r.failure->residual.is_zero());
  // A certificate built in check mode against a tampered set stops at the first bad node.
  GeneratorSet bad = good;
  bad.X[4].at(1, 3) = Element::x(5, 5);
  bad.Y[4] = mat_involute(bad.X[4]);
  bad.placement = good.placement;
  CHECK_THROWS_AS(generation_certificate(p, bad, true), Error);
}

TEST_CASE("single-column profile with one class-1 row") {
  Profile p = make_profile(5, 3);
  REQUIRE(p.s1hat == std::vector<int>{1});
  Certificate c = generation_certificate(p, construct_main(p));
  CHECK(evaluate_certificate(c, construct_main(p)).ok);
}

TEST_CASE("d = 1 certificate") {
  Profile p = make_profile(4, 1);
  GeneratorSet g = construct_main(p);
  Certificate c = generation_certificate(p, g);
  CHECK(evaluate_certificate(c, g).ok);
  CHECK(c.find("I").has_value());
  CHECK(c.find("x3*e_{1,1}").has_value());
}

TEST_CASE("power labels") {
  CHECK(power_label(Monomial::x({1, 1, 1})) == "x1^3");
  CHECK(power_label(Monomial::x({2, 1})) == "x2.x1");
  CHECK(power_label(Monomial({3}, {1, 1})) == "y3.x1^2");
  CHECK(power_label(Monomial()) == "1");
  CHECK(std::string(node_op_name(NodeOp::LinComb)) == "lincomb");
}
