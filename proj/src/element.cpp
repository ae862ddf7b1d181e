#include "leavitt/element.hpp"

#include <algorithm>
#include <cctype>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

void check_arity(int a, int b) {
  if (a != b) throw Error(ErrorCode::ArityMismatch, "arity " + std::to_string(a) + " vs " + std::to_string(b));
}

void check_letter(GenIndex i, int n) {
  if (i < 1 || i > n) throw Error(ErrorCode::OutOfRange, "generator index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}

std::size_t mix(std::size_t h, std::size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }

// Sorts by monomial, merges equal monomials, drops zeros.
void canonicalize(std::vector<Term>& terms) {
  if (terms.size() > 1) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    Coefficient c = std::move(terms[i].coeff);
    while (j < terms.size() && terms[j].mono == terms[i].mono) {
      c += terms[j].coeff;
      ++j;
    }
    if (!c.is_zero()) {
      if (out != i) terms[out].mono = std::move(terms[i].mono);
      terms[out].coeff = std::move(c);
      ++out;
    }
    i = j;
  }
  terms.resize(out);
}

}  // namespace

GenIndex Monomial::max_letter() const {
  GenIndex m = 0;
  for (GenIndex g : y_) m = std::max(m, g);
  for (GenIndex g : x_) m = std::max(m, g);
  return m;
}

bool Monomial::is_reduced(int n) const {
  return y_.empty() || x_.empty() || y_.back() != n || x_.front() != n;
}

Monomial Monomial::involute() const {
  Word ny(x_.rbegin(), x_.rend());
  Word nx(y_.rbegin(), y_.rend());
  return Monomial(std::move(ny), std::move(nx));
}

std::string Monomial::to_string() const {
  if (is_one()) return "1";
  std::string s;
  for (GenIndex g : y_) {
    if (!s.empty()) s += '.';
    s += 'y';
    s += std::to_string(g);
  }
  for (GenIndex g : x_) {
    if (!s.empty()) s += '.';
    s += 'x';
    s += std::to_string(g);
  }
  return s;
}

std::size_t Monomial::hash() const {
  std::size_t h = y_.size() * 1315423911u;
  for (GenIndex g : y_) h = mix(h, g);
  h = mix(h, 0xffff);
  for (GenIndex g : x_) h = mix(h, g);
  return h;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = std::lexicographical_compare_three_way(a.y_.begin(), a.y_.end(), b.y_.begin(), b.y_.end()); c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(a.x_.begin(), a.x_.end(), b.x_.begin(), b.x_.end());
}

Element::Element(int arity) : n_(arity) {
  if (arity < 2) throw Error(ErrorCode::InvalidArgument, "arity must be at least 2");
}

Element Element::scalar(const Coefficient& c, int n) {
  Element e(n);
  if (!c.is_zero()) e.terms_.push_back({Monomial(), c});
  return e;
}

Element Element::x(GenIndex i, int n) {
  check_letter(i, n);
  Element e(n);
  e.terms_.push_back({Monomial::x({i}), Coefficient(1)});
  return e;
}

Element Element::y(GenIndex i, int n) {
  check_letter(i, n);
  Element e(n);
  e.terms_.push_back({Monomial::y({i}), Coefficient(1)});
  return e;
}

Element Element::monomial(const Monomial& m, int n, const Coefficient& c) {
  for (GenIndex g : m.yword()) check_letter(g, n);
  for (GenIndex g : m.xword()) check_letter(g, n);
  Element e(n);
  if (c.is_zero()) return e;
  Monomial ym(m.yword(), {});
  Monomial xm({}, m.xword());
  mono_mul_into(ym, xm, n, c, e.terms_);
  canonicalize(e.terms_);
  return e;
}

Element Element::from_terms(std::vector<Term> terms, int n) {
  Element e(n);
  e.terms_ = std::move(terms);
  canonicalize(e.terms_);
  return e;
}

bool Element::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff.is_one(); }

std::optional<Coefficient> Element::as_scalar() const {
  if (terms_.empty()) return Coefficient(0);
  if (terms_.size() == 1 && terms_[0].mono.is_one()) return terms_[0].coeff;
  return std::nullopt;
}

Coefficient Element::coefficient_of(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& k) { return t.mono < k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Coefficient(0);
}

int Element::max_length() const {
  int best = 0;
  for (const auto& t : terms_) best = std::max(best, t.mono.length());
  return best;
}

Element Element::operator-() const {
  Element e(*this);
  for (auto& t : e.terms_) t.coeff = -t.coeff;
  return e;
}

Element& Element::operator+=(const Element& other) {
  check_arity(n_, other.n_);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      merged.push_back(*b++);
    } else {
      Coefficient c = a->coeff + b->coeff;
      if (!c.is_zero()) merged.push_back({std::move(a->mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Element& Element::operator-=(const Element& other) { return *this += -other; }

Element& Element::operator*=(const Coefficient& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Element operator*(const Element& a, const Element& b) {
  check_arity(a.n_, b.n_);
  Element r(a.n_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) mono_mul_into(s.mono, t.mono, a.n_, s.coeff * t.coeff, r.terms_);
  }
  canonicalize(r.terms_);
  return r;
}

std::string Element::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Coefficient c = t.coeff;
    if (first) {
      if (c.sign() < 0) {
        s += '-';
        c = -c;
      }
    } else {
      if (c.sign() < 0) {
        s += " - ";
        c = -c;
      } else {
        s += " + ";
      }
    }
    s += c.to_string();
    if (!t.mono.is_one()) {
      s += '*';
      s += t.mono.to_string();
    }
    first = false;
  }
  return s;
}

std::size_t Element::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (const auto& t : terms_) h = mix(mix(h, t.mono.hash()), t.coeff.hash());
  return h;
}

Element add(const Element& a, const Element& b) { return a + b; }
Element scalar_mul(const Coefficient& c, const Element& a) { return c * a; }
Element mul(const Element& a, const Element& b) { return a * b; }

void mono_mul_into(const Monomial& a, const Monomial& b, int n, const Coefficient& c, std::vector<Term>& out) {
  const Word& beta = a.xword();
  const Word& gamma = b.yword();
  std::size_t bi = beta.size();
  std::size_t gj = 0;
  while (bi > 0 && gj < gamma.size()) {
    if (beta[bi - 1] != gamma[gj]) return;
    --bi;
    ++gj;
  }
  Word ys(a.yword());
  ys.insert(ys.end(), gamma.begin() + static_cast<std::ptrdiff_t>(gj), gamma.end());
  Word xs(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(bi));
  xs.insert(xs.end(), b.xword().begin(), b.xword().end());

  const auto nn = static_cast<GenIndex>(n);
  std::size_t ty = 0;
  while (ty < ys.size() && ys[ys.size() - 1 - ty] == nn) ++ty;
  std::size_t lx = 0;
  while (lx < xs.size() && xs[lx] == nn) ++lx;
  std::size_t m = std::min(ty, lx);
  if (m == 0) {
    out.push_back({Monomial(std::move(ys), std::move(xs)), c});
    return;
  }
  // y_A y_n x_n x_B = y_A x_B - sum_{j<n} y_A y_j x_j x_B, applied m times.
  Coefficient neg = -c;
  for (std::size_t l = 1; l <= m; ++l) {
    std::size_t ylen = ys.size() - l;
    for (GenIndex j = 1; j < nn; ++j) {
      Word yw(ys.begin(), ys.begin() + static_cast<std::ptrdiff_t>(ylen));
      yw.push_back(j);
      Word xw;
      xw.reserve(xs.size() - l + 1);
      xw.push_back(j);
      xw.insert(xw.end(), xs.begin() + static_cast<std::ptrdiff_t>(l), xs.end());
      out.push_back({Monomial(std::move(yw), std::move(xw)), neg});
    }
  }
  Word yw(ys.begin(), ys.end() - static_cast<std::ptrdiff_t>(m));
  Word xw(xs.begin() + static_cast<std::ptrdiff_t>(m), xs.end());
  out.push_back({Monomial(std::move(yw), std::move(xw)), c});
}

Element mono_mul(const Monomial& a, const Monomial& b, int n) {
  if (!a.is_reduced(n) || !b.is_reduced(n)) throw Error(ErrorCode::InvalidArgument, "mono_mul expects reduced monomials");
  if (a.max_letter() > n || b.max_letter() > n) throw Error(ErrorCode::ArityMismatch, "monomial letter exceeds arity");
  std::vector<Term> out;
  mono_mul_into(a, b, n, Coefficient(1), out);
  return Element::from_terms(std::move(out), n);
}

Element involute(const Element& a) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) out.push_back({t.mono.involute(), t.coeff});
  return Element::from_terms(std::move(out), a.arity());
}

Degree degree(const Element& a) {
  if (a.is_zero()) return Degree::all();
  int d = a.terms().front().mono.degree();
  for (const auto& t : a.terms()) {
    if (t.mono.degree() != d) return Degree::mixed();
  }
  return Degree::of(d);
}

ScalarMatrix degree_zero_image(const Element& a, int level) {
  Degree deg = degree(a);
  if (deg.kind == Degree::Kind::Mixed || (deg.kind == Degree::Kind::Homogeneous && deg.value != 0)) {
    throw Error(ErrorCode::NotHomogeneous, "degree_zero_image needs a degree-0 element");
  }
  if (level < 0) throw Error(ErrorCode::LevelTooSmall, "negative level");
  for (const auto& t : a.terms()) {
    if (static_cast<int>(t.mono.yword().size()) > level) {
      throw Error(ErrorCode::LevelTooSmall, "monomial " + t.mono.to_string() + " longer than level " + std::to_string(level));
    }
  }
  const std::size_t n = static_cast<std::size_t>(a.arity());
  std::size_t size = 1;
  for (int i = 0; i < level; ++i) size *= n;
  ScalarMatrix m(size);
  auto index = [n](auto begin, auto end) {
    std::size_t v = 0;
    for (auto it = begin; it != end; ++it) v = v * n + (*it - 1);
    return v;
  };
  for (const auto& t : a.terms()) {
    const Word& alpha = t.mono.yword();
    const Word& beta = t.mono.xword();
    std::size_t pad = static_cast<std::size_t>(level) - alpha.size();
    std::size_t pad_count = 1;
    for (std::size_t i = 0; i < pad; ++i) pad_count *= n;
    std::size_t row0 = index(alpha.begin(), alpha.end()) * pad_count;
    std::size_t col0 = index(beta.rbegin(), beta.rend()) * pad_count;
    for (std::size_t w = 0; w < pad_count; ++w) m.at(row0 + w, col0 + w) += t.coeff;
  }
  return m;
}

std::vector<std::size_t> redexes(const RawWord& word, int n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const Letter& a = word[p];
    const Letter& b = word[p + 1];
    if (a.is_x && !b.is_x) out.push_back(p);
    else if (!a.is_x && b.is_x && a.index == n && b.index == n) out.push_back(p);
  }
  return out;
}

namespace {

Monomial word_to_monomial(const RawWord& word) {
  Word ys;
  Word xs;
  for (const Letter& l : word) (l.is_x ? xs : ys).push_back(l.index);
  return Monomial(std::move(ys), std::move(xs));
}

// Applies the rule at position p of item, appending the results to pending.
void rewrite_at(const RawTerm& item, std::size_t p, int n, std::vector<RawTerm>& pending) {
  const RawWord& w = item.word;
  const Letter& a = w[p];
  const Letter& b = w[p + 1];
  auto splice = [&](std::initializer_list<Letter> middle) {
    RawWord nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
    nw.insert(nw.end(), middle);
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(p + 2), w.end());
    return nw;
  };
  if (a.is_x) {
    if (a.index == b.index) pending.push_back({item.coeff, splice({})});
    return;
  }
  pending.push_back({item.coeff, splice({})});
  Coefficient neg = -item.coeff;
  for (int j = 1; j < n; ++j) {
    auto g = static_cast<GenIndex>(j);
    pending.push_back({neg, splice({Letter{false, g}, Letter{true, g}})});
  }
}

void check_raw(const RawCombination& raw, int n) {
  for (const auto& t : raw) {
    for (const Letter& l : t.word) check_letter(l.index, n);
  }
}

}  // namespace

Element reduce(const RawCombination& raw, int n) {
  check_raw(raw, n);
  std::vector<RawTerm> pending(raw.rbegin(), raw.rend());
  std::vector<Term> done;
  while (!pending.empty()) {
    RawTerm item = std::move(pending.back());
    pending.pop_back();
    if (item.coeff.is_zero()) continue;
    auto rs = redexes(item.word, n);
    if (rs.empty()) {
      done.push_back({word_to_monomial(item.word), item.coeff});
      continue;
    }
    std::vector<RawTerm> produced;
    rewrite_at(item, rs.front(), n, produced);
    pending.insert(pending.end(), std::make_move_iterator(produced.rbegin()), std::make_move_iterator(produced.rend()));
  }
  return Element::from_terms(std::move(done), n);
}

Element reduce_randomized(const RawCombination& raw, int n, std::mt19937_64& rng) {
  check_raw(raw, n);
  std::vector<RawTerm> pending(raw.begin(), raw.end());
  std::vector<Term> done;
  while (!pending.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
    std::size_t k = pick(rng);
    std::swap(pending[k], pending.back());
    RawTerm item = std::move(pending.back());
    pending.pop_back();
    if (item.coeff.is_zero()) continue;
    auto rs = redexes(item.word, n);
    if (rs.empty()) {
      done.push_back({word_to_monomial(item.word), item.coeff});
      continue;
    }
    std::uniform_int_distribution<std::size_t> choose(0, rs.size() - 1);
    rewrite_at(item, rs[choose(rng)], n, pending);
  }
  return Element::from_terms(std::move(done), n);
}

Element evaluate_word(const RawWord& word, int n) {
  Element acc = Element::one(n);
  for (const Letter& l : word) acc = acc * (l.is_x ? Element::x(l.index, n) : Element::y(l.index, n));
  return acc;
}

RawWord parse_word(std::string_view text) {
  RawWord word;
  if (text == "1") return word;
  std::size_t i = 0;
  while (i < text.size()) {
    char k = text[i];
    if (k != 'x' && k != 'y') throw Error(ErrorCode::ParseError, "bad word: " + std::string(text));
    ++i;
    std::size_t start = i;
    unsigned long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + static_cast<unsigned long>(text[i] - '0');
      if (v > 65535) throw Error(ErrorCode::ParseError, "generator index too large");
      ++i;
    }
    if (i == start || v == 0) throw Error(ErrorCode::ParseError, "bad word: " + std::string(text));
    word.push_back(Letter{k == 'x', static_cast<GenIndex>(v)});
    if (i < text.size()) {
      if (text[i] != '.') throw Error(ErrorCode::ParseError, "bad word: " + std::string(text));
      ++i;
      if (i == text.size()) throw Error(ErrorCode::ParseError, "bad word: " + std::string(text));
    }
  }
  return word;
}

std::string word_to_string(const RawWord& word) {
  if (word.empty()) return "1";
  std::string s;
  for (const Letter& l : word) {
    if (!s.empty()) s += '.';
    s += l.is_x ? 'x' : 'y';
    s += std::to_string(l.index);
  }
  return s;
}

Element parse_element(std::string_view text, int n) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty element text");
  RawCombination raw;
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    bool negative = false;
    if (s[i] == '+' || s[i] == '-') {
      negative = s[i] == '-';
      ++i;
    } else if (!first) {
      throw Error(ErrorCode::ParseError, "expected sign in: " + s);
    }
    std::size_t end = i;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(i, end - i);
    if (term.empty()) throw Error(ErrorCode::ParseError, "empty term in: " + s);
    Coefficient c(1);
    std::string word = term;
    auto star = term.find('*');
    if (star != std::string::npos) {
      c = Coefficient::parse(term.substr(0, star));
      word = term.substr(star + 1);
    } else if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      c = Coefficient::parse(term);
      word = "1";
    }
    if (negative) c = -c;
    raw.push_back({c, parse_word(word)});
    i = end;
    first = false;
  }
  return reduce(raw, n);
}

}  // namespace leavitt
