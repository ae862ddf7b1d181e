#include "leavitt/construct.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

int entry_class(const Profile& p, const ListEntry& e) { return class_of(p, e.u).cls; }

std::vector<int> rows_in_h_order(const Profile& p, int first_row) {
  std::vector<int> rows;
  for (int h : p.hseq) {
    if (h >= first_row) rows.push_back(h);
  }
  return rows;
}

void check_coprime(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorCode::OutOfRange, "need n >= 2 and d >= 1");
  if (gcd(d, n - 1) != 1) {
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(d) + ", " + std::to_string(n - 1) + ") != 1");
  }
  if (d >= n) throw Error(ErrorCode::RequiresReduction, "d = " + std::to_string(d) + " >= n = " + std::to_string(n));
}

}  // namespace

Monomial ListEntry::monomial() const {
  Word xs;
  xs.push_back(static_cast<GenIndex>(u));
  for (int i = 0; i < t; ++i) xs.push_back(1);
  return Monomial({}, std::move(xs));
}

std::string ListEntry::to_string() const { return monomial().to_string(); }

std::vector<ListEntry> the_list(int n, int d) {
  if (d < 2) throw Error(ErrorCode::EmptyConstruction, "The List is empty for d = 1");
  std::vector<ListEntry> list;
  list.push_back({1, d - 2});
  for (int k = d - 2; k >= 0; --k) {
    for (int u = 2; u <= n; ++u) list.push_back({u, k});
  }
  return list;
}

std::vector<ListEntry> the_list(const Profile& p) { return the_list(p.n, p.d); }

std::vector<Box> boxes(const Profile& p) {
  std::vector<Box> out;
  if (p.d < 2) return out;
  for (int m = p.q + 2; m <= p.n; ++m) {
    for (int row : rows_in_h_order(p, m == p.q + 2 ? p.r - 1 : 1)) out.push_back({m, row});
  }
  return out;
}

const char* strategy_name(PlacementStrategy s) {
  switch (s) {
    case PlacementStrategy::Canonical: return "canonical";
    case PlacementStrategy::SeededRandom: return "random";
    case PlacementStrategy::Explicit: return "explicit";
  }
  return "unknown";
}

std::optional<Box> Placement::box_of(const ListEntry& e) const {
  for (const auto& pe : assignment) {
    if (pe.entry == e) return pe.box;
  }
  return std::nullopt;
}

Placement make_placement(const Profile& p, const std::vector<ListEntry>& list, PlacementStrategy strategy,
                         std::uint64_t seed) {
  if (strategy == PlacementStrategy::Explicit) {
    throw Error(ErrorCode::InvalidArgument, "explicit placements are built with make_explicit_placement");
  }
  std::vector<Box> bs = boxes(p);
  if (bs.size() != list.size()) {
    throw Error(ErrorCode::InvalidPlacement, "List has " + std::to_string(list.size()) + " entries but there are " +
                                                 std::to_string(bs.size()) + " boxes");
  }
  std::vector<std::size_t> by_class[3];
  for (std::size_t i = 0; i < list.size(); ++i) by_class[entry_class(p, list[i])].push_back(i);
  if (strategy == PlacementStrategy::SeededRandom) {
    std::mt19937_64 rng(seed);
    std::shuffle(by_class[1].begin(), by_class[1].end(), rng);
    std::shuffle(by_class[2].begin(), by_class[2].end(), rng);
  }
  std::size_t next[3] = {0, 0, 0};
  std::vector<std::optional<Box>> assigned(list.size());
  for (const Box& b : bs) {
    int cls = row_class(p, b.row);
    if (next[cls] >= by_class[cls].size()) {
      throw Error(ErrorCode::InvalidPlacement, "class " + std::to_string(cls) + " has more boxes than List entries");
    }
    assigned[by_class[cls][next[cls]++]] = b;
  }
  Placement placement;
  placement.strategy = strategy;
  if (strategy == PlacementStrategy::SeededRandom) placement.seed = seed;
  for (std::size_t i = 0; i < list.size(); ++i) placement.assignment.push_back({list[i], *assigned[i]});
  return placement;
}

Placement make_explicit_placement(const Profile& p, std::vector<PlacedEntry> assignment) {
  std::vector<ListEntry> list = the_list(p);
  Placement placement;
  placement.strategy = PlacementStrategy::Explicit;
  for (const ListEntry& e : list) {
    auto it = std::find_if(assignment.begin(), assignment.end(), [&](const PlacedEntry& pe) { return pe.entry == e; });
    if (it == assignment.end()) throw Error(ErrorCode::InvalidPlacement, "entry " + e.to_string() + " is not placed");
    placement.assignment.push_back(*it);
  }
  if (assignment.size() != list.size()) throw Error(ErrorCode::InvalidPlacement, "placement has extra entries");
  if (auto problem = placement_problem(p, placement); !problem.empty()) throw Error(ErrorCode::InvalidPlacement, problem);
  return placement;
}

std::string placement_problem(const Profile& p, const Placement& placement) {
  std::vector<ListEntry> list = the_list(p);
  std::vector<Box> bs = boxes(p);
  if (placement.assignment.size() != list.size()) return "placement size differs from the List";
  std::vector<bool> used_entry(list.size(), false);
  std::vector<bool> used_box(bs.size(), false);
  for (const auto& pe : placement.assignment) {
    auto ei = std::find(list.begin(), list.end(), pe.entry);
    if (ei == list.end()) return "entry " + pe.entry.to_string() + " is not on the List";
    auto bi = std::find(bs.begin(), bs.end(), pe.box);
    if (bi == bs.end()) {
      return "box (" + std::to_string(pe.box.matrix) + "," + std::to_string(pe.box.row) + ") is not a free box";
    }
    auto ek = static_cast<std::size_t>(ei - list.begin());
    auto bk = static_cast<std::size_t>(bi - bs.begin());
    if (used_entry[ek]) return "entry " + pe.entry.to_string() + " placed twice";
    if (used_box[bk]) return "box (" + std::to_string(pe.box.matrix) + "," + std::to_string(pe.box.row) + ") filled twice";
    used_entry[ek] = true;
    used_box[bk] = true;
    if (entry_class(p, pe.entry) != row_class(p, pe.box.row)) {
      return "entry " + pe.entry.to_string() + " is not class compatible with row " + std::to_string(pe.box.row);
    }
  }
  return "";
}

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::MainConstruction: return "main-construction";
    case Provenance::Graded: return "graded";
    case Provenance::LeavittLex: return "leavitt-lex";
    case Provenance::External: return "external";
  }
  return "external";
}

Provenance parse_provenance(const std::string& s) {
  if (s == "main-construction") return Provenance::MainConstruction;
  if (s == "graded") return Provenance::Graded;
  if (s == "leavitt-lex") return Provenance::LeavittLex;
  if (s == "external") return Provenance::External;
  throw Error(ErrorCode::ParseError, "unknown provenance: " + s);
}

GeneratorSet GeneratorSet::from_x(int n, int d, Provenance provenance, std::vector<LMatrix> xs) {
  if (static_cast<int>(xs.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(n) + " matrices, got " + std::to_string(xs.size()));
  }
  GeneratorSet g;
  g.n = n;
  g.d = d;
  g.provenance = provenance;
  for (const auto& m : xs) {
    if (m.dim() != d) throw Error(ErrorCode::DimensionMismatch, "generator of dimension " + std::to_string(m.dim()));
    if (m.arity() != n) throw Error(ErrorCode::ArityMismatch, "generator of arity " + std::to_string(m.arity()));
    g.Y.push_back(mat_involute(m));
  }
  g.X = std::move(xs);
  return g;
}

bool operator==(const GeneratorSet& a, const GeneratorSet& b) {
  return a.n == b.n && a.d == b.d && a.provenance == b.provenance && a.X == b.X && a.Y == b.Y;
}

GeneratorSet build_generators(const Profile& p, const Placement& placement) {
  const int n = p.n, d = p.d, q = p.q, r = p.r, s = p.s;
  std::vector<LMatrix> xs(static_cast<std::size_t>(n), LMatrix(d, n));
  auto X = [&](int i) -> LMatrix& { return xs[static_cast<std::size_t>(i - 1)]; };
  auto x = [&](int w) { return Element::x(static_cast<GenIndex>(w), n); };
  if (d == 1) {
    for (int i = 1; i <= n; ++i) X(i).at(1, 1) = x(i);
    GeneratorSet g = GeneratorSet::from_x(n, d, Provenance::MainConstruction, std::move(xs));
    g.placement = placement;
    return g;
  }
  if (auto problem = placement_problem(p, placement); !problem.empty()) throw Error(ErrorCode::InvalidPlacement, problem);
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j <= d; ++j) X(i).at(j, 1) = x((i - 1) * d + j);
  }
  for (int i = 1; i <= d - r; ++i) X(q + 1).at(i + r, i + 1) = Element::one(n);
  for (int t = 1; t <= r; ++t) X(q + 1).at(t, 1) = x(q * d + t);
  for (int j = 1; j <= r - 2; ++j) X(q + 2).at(j, j + s) = Element::one(n);
  for (const auto& pe : placement.assignment) X(pe.box.matrix).at(pe.box.row, d) = Element::monomial(pe.entry.monomial(), n);
  GeneratorSet g = GeneratorSet::from_x(n, d, Provenance::MainConstruction, std::move(xs));
  g.placement = placement;
  return g;
}

GeneratorSet construct_main(const Profile& p, PlacementStrategy strategy, std::uint64_t seed) {
  if (p.d == 1) return build_generators(p, Placement{strategy, std::nullopt, {}});
  return build_generators(p, make_placement(p, the_list(p), strategy, seed));
}

std::optional<Placement> infer_placement(const Profile& p, const GeneratorSet& g) {
  if (g.n != p.n || g.d != p.d) return std::nullopt;
  if (p.d == 1) {
    Placement empty{PlacementStrategy::Explicit, std::nullopt, {}};
    if (build_generators(p, empty) == GeneratorSet::from_x(g.n, g.d, Provenance::MainConstruction, g.X)) return empty;
    return std::nullopt;
  }
  std::vector<PlacedEntry> assignment;
  for (const Box& box : boxes(p)) {
    const Element& e = g.x(box.matrix).at(box.row, p.d);
    if (e.size() != 1 || !e.terms()[0].coeff.is_one()) return std::nullopt;
    const Monomial& m = e.terms()[0].mono;
    const Word& xs = m.xword();
    if (!m.yword().empty() || xs.empty() || !std::all_of(xs.begin() + 1, xs.end(), [](GenIndex v) { return v == 1; })) {
      return std::nullopt;
    }
    assignment.push_back({ListEntry{xs.front(), static_cast<int>(xs.size()) - 1}, box});
  }
  Placement placement;
  try {
    placement = make_explicit_placement(p, std::move(assignment));
  } catch (const Error&) {
    return std::nullopt;
  }
  GeneratorSet rebuilt = build_generators(p, placement);
  if (rebuilt.X != g.X) return std::nullopt;
  return placement;
}

GeneratorSet build_graded_generators(int n, int d) {
  if (n < 2 || d < 1) throw Error(ErrorCode::OutOfRange, "need n >= 2 and d >= 1");
  if (n % d != 0) throw Error(ErrorCode::NotDivisible, std::to_string(d) + " does not divide " + std::to_string(n));
  const int blocks = n / d;
  std::vector<LMatrix> xs(static_cast<std::size_t>(n), LMatrix(d, n));
  for (int c = 1; c <= d; ++c) {
    for (int k = 1; k <= blocks; ++k) {
      LMatrix& m = xs[static_cast<std::size_t>((c - 1) * blocks + k - 1)];
      for (int j = 1; j <= d; ++j) m.at(j, c) = Element::x(static_cast<GenIndex>((k - 1) * d + j), n);
    }
  }
  return GeneratorSet::from_x(n, d, Provenance::Graded, std::move(xs));
}

GeneratorSet leavitt_lexicographic_generators(int n, int d) {
  check_coprime(n, d);
  std::vector<LMatrix> xs(static_cast<std::size_t>(n), LMatrix(d, n));
  for (int k = 0; k < n * d; ++k) {
    LMatrix& m = xs[static_cast<std::size_t>(k / d)];
    m.at(k % d + 1, k / n + 1) = Element::x(static_cast<GenIndex>(k % n + 1), n);
  }
  return GeneratorSet::from_x(n, d, Provenance::LeavittLex, std::move(xs));
}

mpz_class automorphism_count(const Profile& p) {
  if (p.degenerate) return 1;
  auto fact = [](long v) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(v));
    return f;
  };
  const long free_matrices = p.n - (p.q + 2);
  if (free_matrices < 0) throw Error(ErrorCode::InvalidArgument, "n < q + 2");
  mpz_class per_matrix = fact(p.d1) * fact(p.d2);
  mpz_class power;
  mpz_pow_ui(power.get_mpz_t(), per_matrix.get_mpz_t(), static_cast<unsigned long>(free_matrices));
  return mpz_class(p.d) * fact(free_matrices) * fact(p.e1) * fact(p.e2) * power;
}

}  // namespace leavitt
