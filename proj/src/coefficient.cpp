#include "leavitt/coefficient.hpp"

#include <atomic>
#include <cctype>
#include <limits>
#include <numeric>

#include "leavitt/error.hpp"

namespace leavitt {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCoprime: return "not-coprime";
    case ErrorCode::RequiresReduction: return "requires-reduction";
    case ErrorCode::ArityMismatch: return "arity-mismatch";
    case ErrorCode::DimensionMismatch: return "dimension-mismatch";
    case ErrorCode::OutOfRange: return "out-of-range";
    case ErrorCode::NotDivisible: return "not-divisible";
    case ErrorCode::NotHomogeneous: return "not-homogeneous";
    case ErrorCode::LevelTooSmall: return "level-too-small";
    case ErrorCode::EmptyConstruction: return "empty-construction";
    case ErrorCode::InvalidPlacement: return "invalid-placement";
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::CertificateMismatch: return "certificate-mismatch";
  }
  return "unknown";
}

namespace {

std::atomic<std::uint64_t> g_modulus{0};

using i128 = __int128;

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

bool fits64(i128 v) {
  return v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max();
}

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t residue(const mpz_class& z, std::uint64_t p) {
  mpz_class m;
  mpz_fdiv_r_ui(m.get_mpz_t(), z.get_mpz_t(), p);
  return m.get_ui();
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p) || p >= (std::uint64_t{1} << 62)) {
    throw Error(ErrorCode::InvalidArgument, "field modulus must be a prime below 2^62: " + std::to_string(p));
  }
  return Field{p};
}

std::string Field::name() const { return is_rational() ? "rational" : "fp" + std::to_string(modulus); }

Field Field::parse(std::string_view text) {
  if (text.empty() || text == "rational") return rational();
  if (text.size() > 2 && text.substr(0, 2) == "fp") {
    std::uint64_t p = 0;
    for (char c : text.substr(2)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw Error(ErrorCode::ParseError, "bad field: " + std::string(text));
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p >= (std::uint64_t{1} << 62)) throw Error(ErrorCode::ParseError, "field modulus too large");
    }
    return prime(p);
  }
  throw Error(ErrorCode::ParseError, "bad field: " + std::string(text));
}

Field current_field() { return Field{g_modulus.load(std::memory_order_relaxed)}; }

void set_current_field(Field field) { g_modulus.store(field.modulus, std::memory_order_relaxed); }

Coefficient::Coefficient(long long value) : num_(value), den_(1) { normalize_field(); }

Coefficient::Coefficient(long long num, long long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  assign(mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den))));
}

Coefficient::Coefficient(const mpq_class& value) { assign(value); }

Coefficient::Coefficient(const Coefficient& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Coefficient& Coefficient::operator=(const Coefficient& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
  }
  return *this;
}

void Coefficient::assign(const mpq_class& value_in) {
  mpq_class value(value_in);
  value.canonicalize();
  std::uint64_t p = g_modulus.load(std::memory_order_relaxed);
  if (p != 0) {
    std::uint64_t n = residue(value.get_num(), p);
    std::uint64_t d = residue(value.get_den(), p);
    if (d == 0) throw Error(ErrorCode::InvalidArgument, "denominator vanishes modulo " + std::to_string(p));
    num_ = static_cast<std::int64_t>(mulmod(n, powmod(d, p - 2, p), p));
    den_ = 1;
    big_.reset();
    return;
  }
  if (value.get_num().fits_slong_p() && value.get_den().fits_slong_p()) {
    num_ = value.get_num().get_si();
    den_ = value.get_den().get_si();
    big_.reset();
  } else {
    big_ = std::make_unique<mpq_class>(std::move(value));
  }
}

void Coefficient::normalize_field() {
  std::uint64_t p = g_modulus.load(std::memory_order_relaxed);
  if (p == 0) return;
  if (big_ || den_ != 1 || num_ < 0 || static_cast<std::uint64_t>(num_) >= p) assign(to_mpq());
}

Coefficient Coefficient::parse(std::string_view text) {
  std::string s(text);
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) throw Error(ErrorCode::ParseError, "bad coefficient: " + s);
  if (num[0] == '+') num.erase(0, 1);
  if (den[0] == '+') den.erase(0, 1);
  mpz_class dz(den);
  if (dz == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + s);
  Coefficient c;
  c.assign(mpq_class(mpz_class(num), dz));
  return c;
}

bool Coefficient::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Coefficient::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Coefficient::to_mpq() const {
  if (big_) return *big_;
  mpq_class q;
  mpz_set_si(mpq_numref(q.get_mpq_t()), num_);
  mpz_set_si(mpq_denref(q.get_mpq_t()), den_);
  return q;
}

std::string Coefficient::to_string() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::size_t Coefficient::hash() const {
  if (!big_) return std::hash<std::int64_t>{}(num_) * 31u + std::hash<std::int64_t>{}(den_);
  return std::hash<std::string>{}(big_->get_str());
}

Coefficient Coefficient::operator-() const {
  std::uint64_t p = g_modulus.load(std::memory_order_relaxed);
  Coefficient r;
  if (p != 0) {
    r.num_ = num_ == 0 ? 0 : static_cast<std::int64_t>(p - static_cast<std::uint64_t>(num_));
    return r;
  }
  if (!big_ && num_ != std::numeric_limits<std::int64_t>::min()) {
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  r.assign(-to_mpq());
  return r;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  std::uint64_t p = g_modulus.load(std::memory_order_relaxed);
  if (p != 0) {
    num_ = static_cast<std::int64_t>((static_cast<std::uint64_t>(num_) + static_cast<std::uint64_t>(other.num_)) % p);
    return *this;
  }
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t r;
      if (!__builtin_add_overflow(num_, other.num_, &r)) {
        num_ = r;
        return *this;
      }
    } else {
      i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
      i128 d = static_cast<i128>(den_) * other.den_;
      i128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
      if (n == 0) d = 1;
      if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign(to_mpq() + other.to_mpq());
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) { return *this += -other; }

Coefficient& Coefficient::operator*=(const Coefficient& other) {
  std::uint64_t p = g_modulus.load(std::memory_order_relaxed);
  if (p != 0) {
    num_ = static_cast<std::int64_t>(mulmod(static_cast<std::uint64_t>(num_), static_cast<std::uint64_t>(other.num_), p));
    return *this;
  }
  if (!big_ && !other.big_) {
    if (den_ == 1 && other.den_ == 1) {
      std::int64_t r;
      if (!__builtin_mul_overflow(num_, other.num_, &r)) {
        num_ = r;
        return *this;
      }
    } else {
      i128 n = static_cast<i128>(num_) * other.num_;
      i128 d = static_cast<i128>(den_) * other.den_;
      i128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
      if (n == 0) d = 1;
      if (fits64(n) && fits64(d)) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        return *this;
      }
    }
  }
  assign(to_mpq() * other.to_mpq());
  return *this;
}

Coefficient& Coefficient::operator/=(const Coefficient& other) {
  if (other.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by zero");
  std::uint64_t p = g_modulus.load(std::memory_order_relaxed);
  if (p != 0) {
    num_ = static_cast<std::int64_t>(
        mulmod(static_cast<std::uint64_t>(num_), powmod(static_cast<std::uint64_t>(other.num_), p - 2, p), p));
    return *this;
  }
  assign(to_mpq() / other.to_mpq());
  return *this;
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return *a.big_ == *b.big_;
  return false;
}

}  // namespace leavitt
