#include "leavitt/closure.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <map>
#include <unordered_map>

#include "leavitt/error.hpp"
#include "leavitt/verify.hpp"

namespace leavitt {

LMatrix ClosureTarget::matrix(int d, int n) const { return element_unit(Element::monomial(mono, n), d, row, col); }

std::string ClosureTarget::label() const {
  std::string unit = "e_{" + std::to_string(row) + "," + std::to_string(col) + "}";
  return mono.is_one() ? unit : mono.to_string() + "*" + unit;
}

std::vector<ClosureTarget> default_targets(int n, int d) {
  std::vector<ClosureTarget> out;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) out.push_back({i, j, Monomial()});
  }
  for (int w = 1; w <= n; ++w) {
    auto g = static_cast<GenIndex>(w);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        out.push_back({i, j, Monomial::x({g})});
        out.push_back({i, j, Monomial::y({g})});
      }
    }
  }
  return out;
}

const char* closure_status_name(ClosureStatus s) { return s == ClosureStatus::Verified ? "verified" : "inconclusive"; }

LMatrix apply_generators(const GeneratorSet& g, const Element& t) {
  if (t.arity() != g.n) throw Error(ErrorCode::ArityMismatch, "element arity differs from the generator set");
  std::map<Word, LMatrix> y_cache;
  std::map<Word, LMatrix> x_cache;
  auto word_product = [&](const Word& w, bool is_x, std::map<Word, LMatrix>& cache) -> const LMatrix& {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    LMatrix acc = LMatrix::identity(g.d, g.n);
    for (GenIndex letter : w) acc = acc * (is_x ? g.x(letter) : g.y(letter));
    return cache.emplace(w, std::move(acc)).first->second;
  };
  LMatrix sum(g.d, g.n);
  for (const auto& term : t.terms()) {
    LMatrix m = word_product(term.mono.yword(), false, y_cache) * word_product(term.mono.xword(), true, x_cache);
    sum += term.coeff * m;
  }
  return sum;
}

namespace {

// Peels the first generator off the image when it is determined and otherwise splits the domain:
// T = Y_a (X_a T) when X_b T = 0 for all b != a, and T = sum_b (T Y_b) X_b in general.
class CompressionEngine {
 public:
  CompressionEngine(const GeneratorSet& g, const ClosureOptions& options) : g_(g), options_(options) {}

  struct Outcome {
    bool ok = false;
    bool clean = true;
    int depth = 0;
    Element preimage;
  };

  Outcome resolve(const LMatrix& T, int remaining) {
    Outcome out;
    out.preimage = Element(g_.n);
    if (T.is_zero()) {
      out.ok = true;
      return out;
    }
    if (auto c = T.as_scalar()) {
      out.ok = true;
      out.preimage = Element::scalar(*c, g_.n);
      return out;
    }
    auto it = memo_.find(T);
    if (it != memo_.end()) {
      Memo& m = it->second;
      if (m.state == State::Resolved) {
        out.ok = true;
        out.depth = m.depth;
        out.preimage = m.preimage;
        return out;
      }
      if (m.state == State::InProgress) {
        out.clean = false;
        return out;
      }
      if (m.budget >= remaining) return out;
    }
    if (T.max_entry_length() > options_.degree_bound) {
      memo_[T] = Memo{State::Failed, std::numeric_limits<int>::max(), 0, Element(g_.n)};
      return out;
    }
    if (++states_ > options_.state_limit) {
      out.clean = false;
      return out;
    }
    memo_[T] = Memo{State::InProgress, remaining, 0, Element(g_.n)};

    int single = 0;
    LMatrix peeled(g_.d, g_.n);
    for (int a = 1; a <= g_.n; ++a) {
      LMatrix c = g_.x(a) * T;
      if (c.is_zero()) continue;
      if (single != 0) {
        single = -1;
        break;
      }
      single = a;
      peeled = std::move(c);
    }

    Outcome done;
    done.ok = true;
    if (single > 0) {
      Outcome r = resolve(peeled, remaining);
      if (!r.ok) return fail(T, remaining, r.clean);
      done.depth = r.depth + 1;
      done.preimage = Element::y(static_cast<GenIndex>(single), g_.n) * r.preimage;
    } else {
      if (remaining == 0) return fail(T, remaining, true);
      std::vector<LMatrix> rights, lefts;
      int right_len = 0, left_len = 0;
      for (int b = 1; b <= g_.n; ++b) {
        rights.push_back(T * g_.y(b));
        right_len = std::max(right_len, rights.back().max_entry_length());
        lefts.push_back(g_.x(b) * T);
        left_len = std::max(left_len, lefts.back().max_entry_length());
      }
      const bool use_left = left_len < right_len;
      done.preimage = Element(g_.n);
      for (int b = 1; b <= g_.n; ++b) {
        const LMatrix& c = use_left ? lefts[static_cast<std::size_t>(b - 1)] : rights[static_cast<std::size_t>(b - 1)];
        if (c.is_zero()) continue;
        Outcome r = resolve(c, remaining - 1);
        if (!r.ok) return fail(T, remaining, r.clean);
        done.depth = std::max(done.depth, r.depth + 1);
        auto g = static_cast<GenIndex>(b);
        done.preimage += use_left ? Element::y(g, g_.n) * r.preimage : r.preimage * Element::x(g, g_.n);
      }
    }
    memo_[T] = Memo{State::Resolved, remaining, done.depth, done.preimage};
    return done;
  }

  std::size_t states() const { return states_; }

 private:
  enum class State { InProgress, Resolved, Failed };
  struct Memo {
    State state;
    int budget;
    int depth;
    Element preimage;
  };

  Outcome fail(const LMatrix& T, int remaining, bool clean) {
    if (clean) memo_[T] = Memo{State::Failed, remaining, 0, Element(g_.n)};
    else memo_.erase(T);
    Outcome out;
    out.clean = clean;
    out.preimage = Element(g_.n);
    return out;
  }

  const GeneratorSet& g_;
  const ClosureOptions& options_;
  std::unordered_map<LMatrix, Memo, LMatrixHash> memo_;
  std::size_t states_ = 0;
};

// Sparse vector keyed by interned (position, monomial) coordinates.
using SparseVec = std::map<int, Coefficient>;

class SpanEngine {
 public:
  SpanEngine(int d, int n) : d_(d), n_(n) {}

  SparseVec to_vector(const LMatrix& m) {
    SparseVec v;
    for (int i = 1; i <= d_; ++i) {
      for (int j = 1; j <= d_; ++j) {
        for (const auto& t : m.at(i, j).terms()) v[coordinate((i - 1) * d_ + (j - 1), t.mono)] = t.coeff;
      }
    }
    return v;
  }

  LMatrix to_matrix(const SparseVec& v) const {
    LMatrix m(d_, n_);
    for (const auto& [col, c] : v) {
      const auto& [pos, mono] = coords_[static_cast<std::size_t>(col)];
      m.at(pos / d_ + 1, pos % d_ + 1) += Element::monomial(mono, n_, c);
    }
    return m;
  }

  SparseVec reduce(SparseVec v) const {
    auto it = v.begin();
    while (it != v.end()) {
      auto pivot = basis_.find(it->first);
      if (pivot == basis_.end()) {
        ++it;
        continue;
      }
      Coefficient c = it->second;
      int key = it->first;
      for (const auto& [col, value] : pivot->second) {
        Coefficient nv = v[col] - c * value;
        if (nv.is_zero()) v.erase(col);
        else v[col] = std::move(nv);
      }
      it = v.upper_bound(key);
    }
    return v;
  }

  // Adds v to the span; returns true when it was new.
  bool insert(SparseVec v) {
    v = reduce(std::move(v));
    if (v.empty()) return false;
    Coefficient lead = v.begin()->second;
    for (auto& [col, value] : v) value /= lead;
    basis_.emplace(v.begin()->first, std::move(v));
    return true;
  }

  bool contains(const LMatrix& m) { return reduce(to_vector(m)).empty(); }

  std::size_t dimension() const { return basis_.size(); }

 private:
  int coordinate(int pos, const Monomial& mono) {
    auto key = std::make_pair(pos, mono);
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    int id = static_cast<int>(coords_.size());
    coords_.push_back(key);
    index_.emplace(std::move(key), id);
    return id;
  }

  int d_;
  int n_;
  std::map<std::pair<int, Monomial>, int> index_;
  std::vector<std::pair<int, Monomial>> coords_;
  std::map<int, SparseVec> basis_;
};

}  // namespace

ClosureResult compression_closure(const GeneratorSet& g, const std::vector<ClosureTarget>& targets,
                                  const ClosureOptions& options) {
  auto start = std::chrono::steady_clock::now();
  ClosureResult result;
  result.engine = "compression";
  CompressionEngine engine(g, options);
  bool all = true;
  for (const auto& target : targets) {
    LMatrix T = target.matrix(g.d, g.n);
    auto outcome = engine.resolve(T, options.iteration_bound);
    if (outcome.ok && options.check_preimages && !(apply_generators(g, outcome.preimage) == T)) {
      throw Error(ErrorCode::CertificateMismatch, "closure preimage for " + target.label() + " does not map to the target");
    }
    if (outcome.ok) {
      result.depth = std::max(result.depth, outcome.depth);
      result.preimages.emplace_back(std::move(outcome.preimage));
    } else {
      all = false;
      result.unresolved.push_back(target.label());
      result.preimages.emplace_back(std::nullopt);
    }
  }
  result.states = engine.states();
  result.status = all ? ClosureStatus::Verified : ClosureStatus::Inconclusive;
  if (!all) result.depth = options.iteration_bound;
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ClosureResult span_closure(const std::vector<LMatrix>& generators, const std::vector<ClosureTarget>& targets,
                           const ClosureOptions& options) {
  auto start = std::chrono::steady_clock::now();
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "span_closure needs at least one generator");
  const int d = generators.front().dim();
  const int n = generators.front().arity();
  ClosureResult result;
  result.engine = "span";
  SpanEngine span(d, n);
  std::vector<LMatrix> target_matrices;
  for (const auto& t : targets) target_matrices.push_back(t.matrix(d, n));
  std::vector<bool> done(targets.size(), false);
  auto all_found = [&]() {
    bool all = true;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (!done[k]) done[k] = span.contains(target_matrices[k]);
      all = all && done[k];
    }
    return all;
  };
  auto within_bound = [&](const LMatrix& m) { return m.max_entry_length() <= options.degree_bound; };

  std::vector<LMatrix> frontier;
  LMatrix id = LMatrix::identity(d, n);
  if (span.insert(span.to_vector(id))) frontier.push_back(id);
  int round = 0;
  bool verified = all_found();
  while (!verified && round < options.iteration_bound && !frontier.empty() && span.dimension() < options.state_limit) {
    ++round;
    std::vector<LMatrix> next;
    for (const LMatrix& f : frontier) {
      for (const LMatrix& gen : generators) {
        for (LMatrix prod : {gen * f, f * gen}) {
          if (prod.is_zero() || !within_bound(prod)) continue;
          if (span.insert(span.to_vector(prod))) next.push_back(std::move(prod));
        }
      }
    }
    frontier = std::move(next);
    verified = all_found();
  }
  result.states = span.dimension();
  result.status = verified ? ClosureStatus::Verified : ClosureStatus::Inconclusive;
  result.depth = verified ? round : options.iteration_bound;
  for (std::size_t k = 0; k < targets.size(); ++k) {
    if (!done[k]) result.unresolved.push_back(targets[k].label());
  }
  result.preimages.assign(targets.size(), std::nullopt);
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

ClosureResult span_closure_verify(const GeneratorSet& g, const std::vector<ClosureTarget>& targets,
                                  const ClosureOptions& options) {
  if (check_relations(g).ok) return compression_closure(g, targets, options);
  std::vector<LMatrix> gens(g.X);
  gens.insert(gens.end(), g.Y.begin(), g.Y.end());
  return span_closure(gens, targets, options);
}

}  // namespace leavitt
