#include "leavitt/classify.hpp"

#include <numeric>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_pair(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorCode::OutOfRange, "need n >= 2 and d >= 1");
}

}  // namespace

K0Class k0_data(int n, int d) {
  check_pair(n, d);
  return {n - 1, d % (n - 1)};
}

ModuleType module_type(int n, int d) {
  check_pair(n, d);
  return {1, (n - 1) / std::gcd(d, n - 1)};
}

IsoDecision is_isomorphic(int n, int d, int m, int k) {
  check_pair(n, d);
  check_pair(m, k);
  if (n != m) return {false, "modulus-mismatch"};
  if (n == 2) return {true, "trivial-group"};
  return {std::gcd(d, n - 1) == std::gcd(k, n - 1), "k0-unit-orbit"};
}

bool graded_iso_exists(int n, int d) {
  check_pair(n, d);
  int rest = d;
  for (int g = std::gcd(rest, n); g > 1; g = std::gcd(rest, n)) rest /= g;
  return rest == 1;
}

bool degree_one_generating_set_possible(int n, int d) {
  check_pair(n, d);
  if (std::gcd(d, n - 1) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(n - 1) + ") != 1");
  }
  return graded_iso_exists(n, d);
}

}  // namespace leavitt
