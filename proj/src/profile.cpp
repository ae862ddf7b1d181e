#include "leavitt/profile.hpp"

#include <algorithm>
#include <numeric>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

int step(int h, int r, int s) { return h <= r - 1 ? h + s : h - (r - 1); }

std::vector<int> walk(int start, int d, int r, int s) {
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(d));
  int h = start;
  for (int i = 0; i < d; ++i) {
    seq.push_back(h);
    h = step(h, r, s);
  }
  return seq;
}

int count_in(const std::vector<int>& set, int lo, int hi) {
  return static_cast<int>(std::count_if(set.begin(), set.end(), [&](int v) { return v >= lo && v <= hi; }));
}

bool is_permutation_of_range(std::vector<int> v, int d) {
  if (static_cast<int>(v.size()) != d) return false;
  std::sort(v.begin(), v.end());
  for (int i = 0; i < d; ++i) {
    if (v[static_cast<std::size_t>(i)] != i + 1) return false;
  }
  return true;
}

}  // namespace

int gcd(int a, int b) { return std::gcd(a, b); }

Profile make_profile(int n, int d) {
  if (n < 2) throw Error(ErrorCode::OutOfRange, "n must be at least 2");
  if (d < 1) throw Error(ErrorCode::OutOfRange, "d must be at least 1");
  if (gcd(d, n - 1) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(n - 1) + ") != 1");
  }
  if (d >= n) throw Error(ErrorCode::RequiresReduction, "d = " + std::to_string(d) + " >= n = " + std::to_string(n));
  Profile p;
  p.n = n;
  p.d = d;
  if (d == 1) {
    p.q = n - 1;
    p.r = 1;
    p.s = 1;
    p.hseq = {1};
    p.useq = {1};
    p.s1hat = {1};
    p.d1 = 1;
    p.e1 = 1;
    p.f1 = 1;
    p.degenerate = true;
    return p;
  }
  p.q = (n - 1) / d;
  p.r = n - p.q * d;
  p.s = d - (p.r - 1);
  p.hseq = walk(1, d, p.r, p.s);
  p.useq = walk(p.s, d, p.r, p.s);
  auto pos = std::find(p.hseq.begin(), p.hseq.end(), p.r - 1);
  p.d1 = static_cast<int>(pos - p.hseq.begin()) + 1;
  p.d2 = d - p.d1;
  p.s1hat.assign(p.hseq.begin(), p.hseq.begin() + p.d1);
  p.s2hat.assign(p.hseq.begin() + p.d1, p.hseq.end());
  std::sort(p.s1hat.begin(), p.s1hat.end());
  std::sort(p.s2hat.begin(), p.s2hat.end());
  p.e1 = count_in(p.s1hat, p.r - 1, d);
  p.e2 = count_in(p.s2hat, p.r - 1, d);
  p.f1 = count_in(p.s1hat, 1, p.r);
  p.f2 = count_in(p.s2hat, 1, p.r);
  for (int i = 0; i + 1 < p.d1; ++i) {
    if (p.hseq[static_cast<std::size_t>(i)] <= p.r - 1) ++p.b;
    else ++p.t;
  }
  return p;
}

std::vector<int> h_sequence(const Profile& p) { return p.hseq; }
std::vector<int> u_sequence(const Profile& p) { return p.useq; }
std::pair<std::vector<int>, std::vector<int>> partition(const Profile& p) { return {p.s1hat, p.s2hat}; }
Stats stats(const Profile& p) { return {p.d1, p.d2, p.e1, p.e2, p.f1, p.f2, p.b, p.t}; }

int row_class(const Profile& p, int row) {
  if (row < 1 || row > p.d) throw Error(ErrorCode::OutOfRange, "row " + std::to_string(row));
  return std::binary_search(p.s1hat.begin(), p.s1hat.end(), row) ? 1 : 2;
}

ClassInfo class_of(const Profile& p, int w) {
  if (w < 1 || w > p.n) throw Error(ErrorCode::OutOfRange, "w = " + std::to_string(w) + " outside 1.." + std::to_string(p.n));
  int qw = (w - 1) / p.d;
  int what = (w - 1) % p.d + 1;
  return {row_class(p, what), qw, what};
}

Counts counts(const Profile& p) {
  const long long n = p.n, d = p.d, q = p.q, s = p.s;
  Counts c{};
  c.list_size = (d - 1) * (n - 1) + 1;
  c.box_count = (s + 1) + d * (n - (q + 2));
  c.s1_box_count = static_cast<long long>(p.d1) * (n - (q + 2)) + p.e1;
  c.s1_list_count = (d - 1) * ((q * p.d1 - 1) + p.f1) + 1;
  return c;
}

int reduce_large_d(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorCode::OutOfRange, "reduce_large_d needs n >= 2, d >= 1");
  if (gcd(d, n - 1) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(n - 1) + ") != 1");
  }
  return (d - 1) % (n - 1) + 1;
}

std::string check_profile_invariants(const Profile& p) {
  const int n = p.n, d = p.d, q = p.q, r = p.r, s = p.s;
  if (n != q * d + r || r < 1 || r > d) return "n = qd + r with 1 <= r <= d";
  if (s != d - (r - 1)) return "s = d - (r - 1)";
  if (gcd(d, n - 1) != 1) return "gcd(d, n - 1) = 1";
  if (gcd(s, d) != 1) return "gcd(s, d) = 1";
  if (!is_permutation_of_range(p.hseq, d)) return "hseq is a permutation";
  if (!is_permutation_of_range(p.useq, d)) return "useq is a permutation";
  if (p.hseq.back() != r) return "last h entry is r";
  if (p.useq.back() != d) return "last u entry is d";
  if (p.degenerate) return d == 1 ? "" : "degenerate profile with d > 1";
  if (p.useq[static_cast<std::size_t>(d - 2)] != r - 1) return "penultimate u entry is r - 1";
  if (p.hseq[static_cast<std::size_t>(p.d1 - 1)] != r - 1) return "h_{d1} = r - 1";
  std::vector<int> all(p.s1hat);
  all.insert(all.end(), p.s2hat.begin(), p.s2hat.end());
  if (!is_permutation_of_range(all, d)) return "S1hat and S2hat partition 1..d";
  if (!std::binary_search(p.s1hat.begin(), p.s1hat.end(), 1)) return "1 in S1hat";
  if (!std::binary_search(p.s1hat.begin(), p.s1hat.end(), r - 1)) return "r - 1 in S1hat";
  if (!std::binary_search(p.s2hat.begin(), p.s2hat.end(), r)) return "r in S2hat";
  if (!std::binary_search(p.s2hat.begin(), p.s2hat.end(), d)) return "d in S2hat";
  if (p.e1 + p.e2 != d - r + 2) return "e1 + e2 = d - r + 2";
  if (p.f1 + p.f2 != r) return "f1 + f2 = r";
  if (p.e1 + p.f1 != p.d1 + 1) return "e1 + f1 = d1 + 1";
  if (p.e2 + p.f2 != p.d2 + 1) return "e2 + f2 = d2 + 1";
  if (p.e1 != p.t + 1) return "e1 = t + 1";
  if (p.d1 != 1 + p.b + p.t) return "d1 = 1 + b + t";
  if (p.f1 != 1 + p.b) return "f1 = 1 + b";
  if (r - 1 != 1 + p.b * s - p.t * (r - 1)) return "r - 1 = 1 + bs - t(r - 1)";
  if (p.d1 * r != d * p.f1 - d + p.d1 + 1) return "d1 r = d f1 - d + d1 + 1";
  Counts c = counts(p);
  if (c.list_size != c.box_count) return "list_size = box_count";
  if (c.s1_box_count != c.s1_list_count) return "s1_box_count = s1_list_count";
  return "";
}

}  // namespace leavitt
