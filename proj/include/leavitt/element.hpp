#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "leavitt/coefficient.hpp"

namespace leavitt {

using GenIndex = std::uint16_t;
using Word = boost::container::small_vector<GenIndex, 6>;

// y_alpha x_beta. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;
  Monomial(Word yword, Word xword) : y_(std::move(yword)), x_(std::move(xword)) {}

  static Monomial x(std::initializer_list<GenIndex> letters) { return Monomial({}, Word(letters)); }
  static Monomial y(std::initializer_list<GenIndex> letters) { return Monomial(Word(letters), {}); }

  const Word& yword() const { return y_; }
  const Word& xword() const { return x_; }

  bool is_one() const { return y_.empty() && x_.empty(); }
  int length() const { return static_cast<int>(y_.size() + x_.size()); }
  int degree() const { return static_cast<int>(x_.size()) - static_cast<int>(y_.size()); }
  GenIndex max_letter() const;
  // The junction condition for arity n: not (last y = n and first x = n).
  bool is_reduced(int n) const;

  Monomial involute() const;
  std::string to_string() const;
  std::size_t hash() const;

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.y_ == b.y_ && a.x_ == b.x_; }

 private:
  Word y_;
  Word x_;
};

struct Term {
  Monomial mono;
  Coefficient coeff;

  bool operator==(const Term&) const = default;
};

// Kind of homogeneity of an element. Zero is homogeneous of every degree.
struct Degree {
  enum class Kind { AllDegrees, Homogeneous, Mixed };
  Kind kind = Kind::AllDegrees;
  int value = 0;

  static Degree all() { return {Kind::AllDegrees, 0}; }
  static Degree of(int v) { return {Kind::Homogeneous, v}; }
  static Degree mixed() { return {Kind::Mixed, 0}; }
  bool is_homogeneous() const { return kind != Kind::Mixed; }
  bool operator==(const Degree&) const = default;
};

// Reduced element of L_n: a finite sum of reduced monomials with nonzero
// coefficients, kept sorted by monomial.
class Element {
 public:
  explicit Element(int arity = 2);

  static Element zero(int n) { return Element(n); }
  static Element one(int n) { return scalar(Coefficient(1), n); }
  static Element scalar(const Coefficient& c, int n);
  static Element x(GenIndex i, int n);
  static Element y(GenIndex i, int n);
  // Any monomial; reduced through the junction rule if needed.
  static Element monomial(const Monomial& m, int n, const Coefficient& c = Coefficient(1));
  // Sums arbitrary (possibly repeated, possibly unsorted) reduced terms.
  static Element from_terms(std::vector<Term> terms, int n);

  int arity() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::optional<Coefficient> as_scalar() const;
  Coefficient coefficient_of(const Monomial& m) const;
  int max_length() const;

  Element operator-() const;
  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(const Coefficient& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Coefficient& c, Element a) { return a *= c; }
  friend Element operator*(const Element& a, const Element& b);
  friend bool operator==(const Element& a, const Element& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  std::string to_string() const;
  std::size_t hash() const;

 private:
  int n_;
  std::vector<Term> terms_;
};

Element add(const Element& a, const Element& b);
Element scalar_mul(const Coefficient& c, const Element& a);
Element mul(const Element& a, const Element& b);

// Normal form of the product of two reduced monomials.
Element mono_mul(const Monomial& a, const Monomial& b, int n);
// Appends c * NF(a b) to out without merging.
void mono_mul_into(const Monomial& a, const Monomial& b, int n, const Coefficient& c, std::vector<Term>& out);

Element involute(const Element& a);
Degree degree(const Element& a);

// Dense square matrix over the coefficient field.
struct ScalarMatrix {
  std::size_t size = 0;
  std::vector<Coefficient> data;

  ScalarMatrix() = default;
  explicit ScalarMatrix(std::size_t n) : size(n), data(n * n) {}
  Coefficient& at(std::size_t i, std::size_t j) { return data[i * size + j]; }
  const Coefficient& at(std::size_t i, std::size_t j) const { return data[i * size + j]; }
  bool operator==(const ScalarMatrix&) const = default;
};

// Image of a degree-0 element in M_{n^T}(K). Basis words of length T are
// indexed lexicographically (the word a_1..a_T maps to sum (a_k - 1) n^(T-k)).
ScalarMatrix degree_zero_image(const Element& a, int level);

// Formal words over the 2n generators, before any rewriting.
struct Letter {
  bool is_x;
  GenIndex index;
  bool operator==(const Letter&) const = default;
};
using RawWord = std::vector<Letter>;
struct RawTerm {
  Coefficient coeff;
  RawWord word;
};
using RawCombination = std::vector<RawTerm>;

// Positions p at which a rewrite rule applies to word[p], word[p+1].
std::vector<std::size_t> redexes(const RawWord& word, int n);

// Rewrites to normal form with R1: x_i y_j -> delta_ij and
// R2: y_n x_n -> 1 - sum_{j<n} y_j x_j, always at the leftmost redex.
Element reduce(const RawCombination& raw, int n);
// Same rewriting system, with the redex and the pending word chosen by rng.
Element reduce_randomized(const RawCombination& raw, int n, std::mt19937_64& rng);
// Multiplies the letters one at a time with mono_mul.
Element evaluate_word(const RawWord& word, int n);

// Parses "1 - 2*y1.x1 + 3/2*x2.x1" style text. Words may be arbitrary letter
// sequences; they are reduced.
Element parse_element(std::string_view text, int n);
RawWord parse_word(std::string_view text);
std::string word_to_string(const RawWord& word);

}  // namespace leavitt
