#include "leavitt/matrix.hpp"

#include <algorithm>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_same_shape(const LMatrix& a, const LMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dim " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
  }
  if (a.arity() != b.arity()) {
    throw Error(ErrorCode::ArityMismatch, "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
  }
}

}  // namespace

LMatrix::LMatrix(int dim, int arity) : d_(dim), n_(arity) {
  if (dim < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be positive");
  entries_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), Element(arity));
}

LMatrix LMatrix::identity(int d, int n) { return scalar(d, n, Coefficient(1)); }

LMatrix LMatrix::scalar(int d, int n, const Coefficient& c) {
  LMatrix m(d, n);
  for (int i = 1; i <= d; ++i) m.at(i, i) = Element::scalar(c, n);
  return m;
}

LMatrix LMatrix::unit(int d, int n, int i, int j) {
  LMatrix m(d, n);
  m.at(i, j) = Element::one(n);
  return m;
}

LMatrix LMatrix::idem(int d, int n, int i) { return unit(d, n, i, i); }

LMatrix LMatrix::E(int d, int n, int i) {
  if (i < 0 || i > d) throw Error(ErrorCode::OutOfRange, "E index " + std::to_string(i));
  LMatrix m(d, n);
  for (int k = 1; k <= i; ++k) m.at(k, k) = Element::one(n);
  return m;
}

void LMatrix::check_index(int i, int j) const {
  if (i < 1 || i > d_ || j < 1 || j > d_) {
    throw Error(ErrorCode::OutOfRange,
                "matrix index (" + std::to_string(i) + "," + std::to_string(j) + ") outside 1.." + std::to_string(d_));
  }
}

const Element& LMatrix::at(int i, int j) const {
  check_index(i, j);
  return entries_[static_cast<std::size_t>((i - 1) * d_ + (j - 1))];
}

Element& LMatrix::at(int i, int j) {
  check_index(i, j);
  return entries_[static_cast<std::size_t>((i - 1) * d_ + (j - 1))];
}

bool LMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Element& e) { return e.is_zero(); });
}

std::optional<Coefficient> LMatrix::as_scalar() const {
  std::optional<Coefficient> c;
  for (int i = 1; i <= d_; ++i) {
    for (int j = 1; j <= d_; ++j) {
      const Element& e = at(i, j);
      if (i != j) {
        if (!e.is_zero()) return std::nullopt;
        continue;
      }
      auto s = e.as_scalar();
      if (!s) return std::nullopt;
      if (!c) c = *s;
      else if (!(*c == *s)) return std::nullopt;
    }
  }
  return c;
}

int LMatrix::max_entry_length() const {
  int best = 0;
  for (const auto& e : entries_) best = std::max(best, e.max_length());
  return best;
}

std::size_t LMatrix::max_entry_terms() const {
  std::size_t best = 0;
  for (const auto& e : entries_) best = std::max(best, e.size());
  return best;
}

std::size_t LMatrix::total_terms() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.size();
  return total;
}

std::size_t LMatrix::hash() const {
  std::size_t h = static_cast<std::size_t>(d_) * 7919u + static_cast<std::size_t>(n_);
  for (const auto& e : entries_) h = h * 1000003u ^ e.hash();
  return h;
}

LMatrix LMatrix::operator-() const {
  LMatrix m(*this);
  for (auto& e : m.entries_) e = -e;
  return m;
}

LMatrix& LMatrix::operator+=(const LMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

LMatrix& LMatrix::operator-=(const LMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

LMatrix& LMatrix::operator*=(const Coefficient& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

LMatrix operator*(const LMatrix& a, const LMatrix& b) {
  check_same_shape(a, b);
  const int d = a.d_;
  const int n = a.n_;
  LMatrix r(d, n);
  std::vector<Term> acc;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      acc.clear();
      for (int k = 0; k < d; ++k) {
        const Element& x = a.entries_[static_cast<std::size_t>(i * d + k)];
        if (x.is_zero()) continue;
        const Element& y = b.entries_[static_cast<std::size_t>(k * d + j)];
        if (y.is_zero()) continue;
        for (const auto& s : x.terms()) {
          for (const auto& t : y.terms()) mono_mul_into(s.mono, t.mono, n, s.coeff * t.coeff, acc);
        }
      }
      if (!acc.empty()) r.entries_[static_cast<std::size_t>(i * d + j)] = Element::from_terms(std::move(acc), n);
      acc = {};
    }
  }
  return r;
}

std::string LMatrix::to_string() const {
  std::string s;
  for (int i = 1; i <= d_; ++i) {
    for (int j = 1; j <= d_; ++j) {
      if (j > 1) s += " | ";
      s += at(i, j).to_string();
    }
    s += '\n';
  }
  return s;
}

LMatrix mat_add(const LMatrix& a, const LMatrix& b) { return a + b; }
LMatrix mat_mul(const LMatrix& a, const LMatrix& b) { return a * b; }
LMatrix mat_scalar(const Coefficient& c, const LMatrix& a) { return c * a; }

LMatrix mat_involute(const LMatrix& a) {
  LMatrix r(a.dim(), a.arity());
  for (int i = 1; i <= a.dim(); ++i) {
    for (int j = 1; j <= a.dim(); ++j) {
      if (!a.at(j, i).is_zero()) r.at(i, j) = involute(a.at(j, i));
    }
  }
  return r;
}

LMatrix element_unit(const Element& c, int d, int i, int j) {
  LMatrix m(d, c.arity());
  m.at(i, j) = c;
  return m;
}

}  // namespace leavitt
