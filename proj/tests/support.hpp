#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leavitt/element.hpp"
#include "leavitt/construct.hpp"
#include "leavitt/matrix.hpp"
#include "leavitt/profile.hpp"

namespace testing_support {

using leavitt::Element;
using leavitt::GenIndex;
using leavitt::LMatrix;
using leavitt::Letter;
using leavitt::RawWord;

// Letters as signed ints: +i is x_i, -i is y_i.
using NaiveWord = std::vector<int>;
using NaivePoly = std::map<NaiveWord, mpq_class>;

// Rewrites with string replacement until no rule applies. Independent of the
// library rewriting code.
inline NaivePoly naive_reduce(NaivePoly p, int n) {
  for (;;) {
    bool changed = false;
    NaivePoly next;
    for (const auto& [w, c] : p) {
      if (c == 0) continue;
      std::size_t k = 0;
      for (; k + 1 < w.size(); ++k) {
        if ((w[k] > 0 && w[k + 1] < 0) || (w[k] == -n && w[k + 1] == n)) break;
      }
      if (k + 1 >= w.size()) {
        next[w] += c;
        continue;
      }
      changed = true;
      NaiveWord head(w.begin(), w.begin() + static_cast<long>(k));
      NaiveWord tail(w.begin() + static_cast<long>(k) + 2, w.end());
      NaiveWord joined = head;
      joined.insert(joined.end(), tail.begin(), tail.end());
      if (w[k] > 0) {
        if (w[k] == -w[k + 1]) next[joined] += c;
      } else {
        next[joined] += c;
        for (int j = 1; j < n; ++j) {
          NaiveWord v = head;
          v.push_back(-j);
          v.push_back(j);
          v.insert(v.end(), tail.begin(), tail.end());
          next[v] -= c;
        }
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (it->second == 0) it = next.erase(it);
      else ++it;
    }
    p = std::move(next);
    if (!changed) return p;
  }
}

inline NaivePoly to_naive(const Element& e) {
  NaivePoly p;
  for (const auto& t : e.terms()) {
    NaiveWord w;
    for (GenIndex g : t.mono.yword()) w.push_back(-static_cast<int>(g));
    for (GenIndex g : t.mono.xword()) w.push_back(static_cast<int>(g));
    p[w] = t.coeff.to_mpq();
  }
  return p;
}

inline NaiveWord to_naive(const RawWord& w) {
  NaiveWord out;
  for (const Letter& l : w) out.push_back(l.is_x ? l.index : -static_cast<int>(l.index));
  return out;
}

inline RawWord random_word(std::mt19937_64& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, n);
  std::bernoulli_distribution is_x(0.5);
  RawWord w;
  int l = len(rng);
  for (int k = 0; k < l; ++k) w.push_back(Letter{is_x(rng), static_cast<GenIndex>(gen(rng))});
  return w;
}

inline Element random_element(std::mt19937_64& rng, int n, int max_len, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-3, 3);
  leavitt::RawCombination raw;
  int k = terms(rng);
  for (int i = 0; i < k; ++i) raw.push_back({leavitt::Coefficient(coeff(rng)), random_word(rng, n, max_len)});
  return leavitt::reduce(raw, n);
}

// A reduced monomial y_alpha x_beta with |alpha| = |beta| = t, as an element.
inline Element random_degree_zero(std::mt19937_64& rng, int n, int max_t, int max_terms = 3) {
  std::uniform_int_distribution<int> terms(1, max_terms);
  std::uniform_int_distribution<int> tlen(0, max_t);
  std::uniform_int_distribution<int> gen(1, n);
  std::uniform_int_distribution<int> coeff(-2, 2);
  Element e(n);
  int k = terms(rng);
  for (int i = 0; i < k; ++i) {
    int t = tlen(rng);
    leavitt::Word ys, xs;
    for (int j = 0; j < t; ++j) ys.push_back(static_cast<GenIndex>(gen(rng)));
    for (int j = 0; j < t; ++j) xs.push_back(static_cast<GenIndex>(gen(rng)));
    e += Element::monomial(leavitt::Monomial(ys, xs), n, leavitt::Coefficient(coeff(rng)));
  }
  return e;
}

inline LMatrix random_matrix(std::mt19937_64& rng, int d, int n, int max_len) {
  LMatrix m(d, n);
  std::bernoulli_distribution nonzero(0.6);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (nonzero(rng)) m.at(i, j) = random_element(rng, n, max_len, 2);
    }
  }
  return m;
}

inline leavitt::ScalarMatrix times(const leavitt::ScalarMatrix& a, const leavitt::ScalarMatrix& b) {
  leavitt::ScalarMatrix c(a.size);
  for (std::size_t i = 0; i < a.size; ++i) {
    for (std::size_t k = 0; k < a.size; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.size; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

inline mpz_class factorial(long v) {
  mpz_class f = 1;
  for (long k = 2; k <= v; ++k) f *= k;
  return f;
}

// d (n-q-2)! e1! e2! (d1! d2!)^(n-q-2), from the profile statistics.
inline mpz_class automorphism_formula(const leavitt::Profile& p) {
  long free = p.n - (p.q + 2);
  mpz_class out = mpz_class(p.d) * factorial(free) * factorial(p.e1) * factorial(p.e2);
  for (long k = 0; k < free; ++k) out *= factorial(p.d1) * factorial(p.d2);
  return out;
}

// Recomputes the profile of a coprime pair with d >= 2 from its definitions and
// enumerates the List and the boxes directly. Returns the first disagreement.
inline std::string profile_oracle_problem(const leavitt::Profile& p) {
  using leavitt::Box;
  using leavitt::ListEntry;
  const int n = p.n, d = p.d;
  if (p.q * d + p.r != n || p.r < 1 || p.r > d) return "n = qd + r";
  if (p.s != d - (p.r - 1)) return "s";
  for (int i = 1; i <= d; ++i) {
    int h = static_cast<int>((static_cast<long long>(i - 1) * p.s) % d) + 1;
    if (p.hseq[static_cast<std::size_t>(i - 1)] != h) return "h_" + std::to_string(i);
    int u = static_cast<int>((static_cast<long long>(i) * p.s) % d);
    if (p.useq[static_cast<std::size_t>(i - 1)] != (u == 0 ? d : u)) return "u_" + std::to_string(i);
  }
  auto pos = std::find(p.hseq.begin(), p.hseq.end(), p.r - 1);
  if (pos == p.hseq.end()) return "r - 1 missing from the h-sequence";
  int d1 = static_cast<int>(pos - p.hseq.begin()) + 1;
  std::set<int> s1(p.hseq.begin(), p.hseq.begin() + d1);
  if (p.d1 != d1 || p.d2 != d - d1) return "d1, d2";
  if (std::set<int>(p.s1hat.begin(), p.s1hat.end()) != s1) return "S1hat";
  int e1 = 0, f1 = 0, t = 0, b = 0;
  for (int v : s1) {
    if (v >= p.r - 1) ++e1;
    if (v <= p.r) ++f1;
  }
  for (int j = 0; j + 1 < d1; ++j) {
    if (p.hseq[static_cast<std::size_t>(j)] >= p.r) ++t;
    else ++b;
  }
  if (p.e1 != e1 || p.f1 != f1 || p.t != t || p.b != b) return "e1, f1, t, b";
  if (p.e1 + p.e2 != d - p.r + 2) return "e1 + e2 = d - r + 2";
  if (p.f1 + p.f2 != p.r) return "f1 + f2 = r";
  if (p.e1 + p.f1 != p.d1 + 1) return "e1 + f1 = d1 + 1";
  if (p.e2 + p.f2 != p.d2 + 1) return "e2 + f2 = d2 + 1";
  if (p.e1 != p.t + 1) return "e1 = t + 1";
  if (p.f1 != p.b + 1) return "f1 = b + 1";
  if (p.r - 1 != 1 + p.b * p.s - p.t * (p.r - 1)) return "r - 1 = 1 + bs - t(r - 1)";
  if (p.d1 * p.r != d * p.f1 - d + p.d1 + 1) return "d1 r = d f1 - d + d1 + 1";
  leavitt::Counts c = leavitt::counts(p);
  std::vector<ListEntry> list = leavitt::the_list(p);
  std::vector<Box> bx = leavitt::boxes(p);
  if (c.list_size != static_cast<long long>(list.size())) return "list_size";
  if (c.box_count != static_cast<long long>(bx.size())) return "box_count";
  if (static_cast<long long>(list.size()) != static_cast<long long>(n - 1) * (d - 1) + 1) return "(n - 1)(d - 1) + 1";
  long long s1_boxes = std::count_if(bx.begin(), bx.end(), [&](const Box& x) { return s1.count(x.row) > 0; });
  long long s1_list =
      std::count_if(list.begin(), list.end(), [&](const ListEntry& e) { return s1.count((e.u - 1) % d + 1) > 0; });
  if (c.s1_box_count != s1_boxes || c.s1_list_count != s1_list) return "class-1 counts";
  if (c.list_size != c.box_count) return "list_size = box_count";
  if (c.s1_box_count != c.s1_list_count) return "s1_box_count = s1_list_count";
  return "";
}

// Degree-0 elements act on words of length `level`: x_i strips a leading i
// (or kills the word), y_i prepends i. Row is the output word, column the input.
inline leavitt::ScalarMatrix word_action(const Element& a, int level) {
  const int n = a.arity();
  std::size_t size = 1;
  for (int i = 0; i < level; ++i) size *= static_cast<std::size_t>(n);
  leavitt::ScalarMatrix m(size);
  for (std::size_t col = 0; col < size; ++col) {
    std::vector<int> word(static_cast<std::size_t>(level));
    std::size_t v = col;
    for (int k = level - 1; k >= 0; --k) {
      word[static_cast<std::size_t>(k)] = static_cast<int>(v % static_cast<std::size_t>(n)) + 1;
      v /= static_cast<std::size_t>(n);
    }
    for (const auto& t : a.terms()) {
      std::vector<int> w = word;
      bool alive = true;
      const auto& xs = t.mono.xword();
      for (auto it = xs.rbegin(); it != xs.rend() && alive; ++it) {
        if (w.empty() || w.front() != static_cast<int>(*it)) alive = false;
        else w.erase(w.begin());
      }
      if (!alive) continue;
      const auto& ys = t.mono.yword();
      for (auto it = ys.rbegin(); it != ys.rend(); ++it) w.insert(w.begin(), static_cast<int>(*it));
      std::size_t row = 0;
      for (int letter : w) row = row * static_cast<std::size_t>(n) + static_cast<std::size_t>(letter - 1);
      m.at(row, col) += t.coeff;
    }
  }
  return m;
}

// [k] lies in the orbit of [d] under multiplication by units of Z/modulus.
inline bool orbit_related(int modulus, int d, int k) {
  if (modulus == 1) return true;
  for (int l = 1; l < modulus; ++l) {
    if (std::gcd(l, modulus) != 1) continue;
    if ((static_cast<long>(d) * l - k) % modulus == 0) return true;
  }
  return false;
}

// Every prime factor of d divides n, by trial division.
inline bool primes_divide(int n, int d) {
  for (int p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    if (n % p != 0) return false;
    while (d % p == 0) d /= p;
  }
  return d == 1 || n % d == 0;
}

// n^a = 0 mod d for some a <= 20.
inline bool divides_power(int n, int d) {
  long r = 1 % d;
  for (int a = 0; a <= 20 && r != 0; ++a) r = r * n % d;
  return r == 0;
}

}  // namespace testing_support
