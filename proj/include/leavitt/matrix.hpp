#pragma once

#include <string>
#include <vector>

#include "leavitt/element.hpp"

namespace leavitt {

// Dense d x d matrix over L_n. Row and column indices are 1-based throughout.
class LMatrix {
 public:
  LMatrix(int dim, int arity);

  static LMatrix identity(int d, int n);
  static LMatrix unit(int d, int n, int i, int j);
  static LMatrix idem(int d, int n, int i);
  // E_i = e_1 + ... + e_i; E_0 is the zero matrix.
  static LMatrix E(int d, int n, int i);
  static LMatrix scalar(int d, int n, const Coefficient& c);

  int dim() const { return d_; }
  int arity() const { return n_; }
  const Element& at(int i, int j) const;
  Element& at(int i, int j);
  const std::vector<Element>& entries() const { return entries_; }

  bool is_zero() const;
  // c if the matrix equals c*I, otherwise nullopt.
  std::optional<Coefficient> as_scalar() const;
  int max_entry_length() const;
  std::size_t max_entry_terms() const;
  std::size_t total_terms() const;
  std::size_t hash() const;

  LMatrix operator-() const;
  LMatrix& operator+=(const LMatrix& other);
  LMatrix& operator-=(const LMatrix& other);
  LMatrix& operator*=(const Coefficient& c);
  friend LMatrix operator+(LMatrix a, const LMatrix& b) { return a += b; }
  friend LMatrix operator-(LMatrix a, const LMatrix& b) { return a -= b; }
  friend LMatrix operator*(const Coefficient& c, LMatrix a) { return a *= c; }
  friend LMatrix operator*(const LMatrix& a, const LMatrix& b);
  friend bool operator==(const LMatrix& a, const LMatrix& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  // One line per row, entries separated by " | ".
  std::string to_string() const;

 private:
  void check_index(int i, int j) const;

  int d_;
  int n_;
  std::vector<Element> entries_;
};

struct LMatrixHash {
  std::size_t operator()(const LMatrix& m) const { return m.hash(); }
};

LMatrix mat_add(const LMatrix& a, const LMatrix& b);
LMatrix mat_mul(const LMatrix& a, const LMatrix& b);
LMatrix mat_scalar(const Coefficient& c, const LMatrix& a);
LMatrix mat_involute(const LMatrix& a);

inline LMatrix matrix_unit(int d, int n, int i, int j) { return LMatrix::unit(d, n, i, j); }
inline LMatrix idem(int d, int n, int i) { return LMatrix::idem(d, n, i); }
inline LMatrix E(int d, int n, int i) { return LMatrix::E(d, n, i); }

// c * e_{i,j} with c an element.
LMatrix element_unit(const Element& c, int d, int i, int j);

}  // namespace leavitt
