#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace leavitt {

// Coefficient field selection. Rational is the default; Prime(p) makes every
// coefficient a residue in [0, p). The field is process-wide and is meant to be
// chosen once at startup, before any Element is built.
struct Field {
  std::uint64_t modulus = 0;  // 0 means the rationals

  static Field rational() { return {}; }
  static Field prime(std::uint64_t p);
  bool is_rational() const { return modulus == 0; }
  std::string name() const;
  static Field parse(std::string_view text);

  bool operator==(const Field&) const = default;
};

Field current_field();
void set_current_field(Field field);

class FieldScope {
 public:
  explicit FieldScope(Field field) : saved_(current_field()) { set_current_field(field); }
  ~FieldScope() { set_current_field(saved_); }
  FieldScope(const FieldScope&) = delete;
  FieldScope& operator=(const FieldScope&) = delete;

 private:
  Field saved_;
};

// Exact scalar. Values that fit in 64-bit numerator/denominator are stored
// inline; anything larger falls back to an mpq_class.
class Coefficient {
 public:
  Coefficient() = default;
  Coefficient(long long value);  // NOLINT(google-explicit-constructor)
  Coefficient(long long num, long long den);
  explicit Coefficient(const mpq_class& value);

  Coefficient(const Coefficient& other);
  Coefficient(Coefficient&&) noexcept = default;
  Coefficient& operator=(const Coefficient& other);
  Coefficient& operator=(Coefficient&&) noexcept = default;
  ~Coefficient() = default;

  static Coefficient parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  std::string to_string() const;
  std::size_t hash() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  Coefficient& operator/=(const Coefficient& other);

  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
  friend Coefficient operator/(Coefficient a, const Coefficient& b) { return a /= b; }

  friend bool operator==(const Coefficient& a, const Coefficient& b);

 private:
  void assign(const mpq_class& value);
  void normalize_field();

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;
};

}  // namespace leavitt
