#include "leavitt/verify.hpp"

#include <chrono>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

double since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

RelationReport check_relations(const GeneratorSet& g) {
  auto start = std::chrono::steady_clock::now();
  RelationReport report;
  const int n = g.n, d = g.d;
  if (static_cast<int>(g.X.size()) != n || static_cast<int>(g.Y.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "generator set must have n matrices X and n matrices Y");
  }
  report.pair_ok.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  const LMatrix identity = LMatrix::identity(d, n);
  const LMatrix zero(d, n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      LMatrix prod = g.x(i) * g.y(j);
      const LMatrix& expected = i == j ? identity : zero;
      bool ok = prod == expected;
      report.pair_ok[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = ok;
      if (!ok) {
        report.ok = false;
        if (!report.first_failure) report.first_failure = RelationFailure{i, j, prod - expected};
      }
    }
  }
  LMatrix sum(d, n);
  for (int j = 1; j <= n; ++j) sum += g.y(j) * g.x(j);
  report.sum_ok = sum == identity;
  if (!report.sum_ok) {
    report.ok = false;
    if (!report.first_failure) report.first_failure = RelationFailure{0, 0, sum - identity};
  }
  report.seconds = since(start);
  return report;
}

Element dagger_sum(const std::vector<ListEntry>& list, int n) {
  Element sum(n);
  for (const auto& entry : list) {
    Element a = Element::monomial(entry.monomial(), n);
    sum += involute(a) * a;
  }
  return sum;
}

bool check_dagger(const std::vector<ListEntry>& list, int n, int d) {
  if (d < 2) return false;
  for (const auto& entry : list) {
    if (entry.u < 1 || entry.u > n || entry.t < 0) return false;
  }
  return dagger_sum(list, n).is_one();
}

const char* generation_status_name(GenerationStatus s) {
  switch (s) {
    case GenerationStatus::Certified: return "certified";
    case GenerationStatus::VerifiedByClosure: return "verified-by-closure";
    case GenerationStatus::NotFoundUpToBound: return "not-found-up-to-bound";
    case GenerationStatus::NotChecked: return "not-checked";
  }
  return "not-checked";
}

int VerifyReport::exit_code() const {
  if (!relations.ok) return 1;
  if (generation == GenerationStatus::Certified || generation == GenerationStatus::VerifiedByClosure) return 0;
  return 2;
}

VerifyReport verify_constructed(const Profile& p, const GeneratorSet& g) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.relations = check_relations(g);
  if (report.relations.ok) {
    Certificate cert = generation_certificate(p, g, false);
    report.certificate = evaluate_certificate(cert, g);
    report.generation = report.certificate->ok ? GenerationStatus::Certified : GenerationStatus::NotFoundUpToBound;
  }
  report.seconds = since(start);
  return report;
}

VerifyReport verify_by_closure(const GeneratorSet& g, const ClosureOptions& options) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.relations = check_relations(g);
  if (report.relations.ok) {
    report.closure = compression_closure(g, default_targets(g.n, g.d), options);
    report.depth = report.closure->depth;
    report.generation = report.closure->status == ClosureStatus::Verified ? GenerationStatus::VerifiedByClosure
                                                                          : GenerationStatus::NotFoundUpToBound;
  }
  report.seconds = since(start);
  return report;
}

}  // namespace leavitt
