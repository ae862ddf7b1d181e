#pragma once

#include <string>
#include <utility>
#include <vector>

namespace leavitt {

struct Profile {
  int n = 0;
  int d = 0;
  int q = 0;
  int r = 0;
  int s = 0;
  std::vector<int> hseq;
  std::vector<int> useq;
  std::vector<int> s1hat;  // sorted
  std::vector<int> s2hat;  // sorted
  int d1 = 0;
  int d2 = 0;
  int e1 = 0;
  int e2 = 0;
  int f1 = 0;
  int f2 = 0;
  int b = 0;
  int t = 0;
  // d = 1: only n, d, q, r, s and the one-entry sequences are meaningful.
  bool degenerate = false;
};

struct ClassInfo {
  int cls;   // 1 or 2
  int qw;    // w = qw * d + what
  int what;  // in 1..d
};

struct Counts {
  long long list_size;
  long long box_count;
  long long s1_box_count;
  long long s1_list_count;
};

struct Stats {
  int d1, d2, e1, e2, f1, f2, b, t;
};

int gcd(int a, int b);

Profile make_profile(int n, int d);
std::vector<int> h_sequence(const Profile& p);
std::vector<int> u_sequence(const Profile& p);
std::pair<std::vector<int>, std::vector<int>> partition(const Profile& p);
Stats stats(const Profile& p);
ClassInfo class_of(const Profile& p, int w);
// Class of a row index 1..d.
int row_class(const Profile& p, int row);
Counts counts(const Profile& p);
int reduce_large_d(int n, int d);

// Every stated invariant of a profile; returns the first violated one, or an
// empty string.
std::string check_profile_invariants(const Profile& p);

}  // namespace leavitt
