#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leavitt/certificate.hpp"
#include "leavitt/closure.hpp"
#include "leavitt/construct.hpp"

namespace leavitt {

struct RelationFailure {
  int i = 0;  // 0 for the sum relation
  int j = 0;
  LMatrix residual;
};

struct RelationReport {
  bool ok = true;
  // pair_ok[i-1][j-1] for X_i Y_j = delta_ij I.
  std::vector<std::vector<bool>> pair_ok;
  bool sum_ok = true;
  std::optional<RelationFailure> first_failure;
  double seconds = 0;
};

RelationReport check_relations(const GeneratorSet& g);

// sum over the List of a* a.
Element dagger_sum(const std::vector<ListEntry>& list, int n);
bool check_dagger(const std::vector<ListEntry>& list, int n, int d);

enum class GenerationStatus { Certified, VerifiedByClosure, NotFoundUpToBound, NotChecked };

const char* generation_status_name(GenerationStatus s);

struct VerifyReport {
  RelationReport relations;
  GenerationStatus generation = GenerationStatus::NotChecked;
  int depth = 0;  // closure depth, or the bound when nothing was found
  std::optional<CertificateReport> certificate;
  std::optional<ClosureResult> closure;
  double seconds = 0;

  // 0 verified, 1 relation failure, 2 inconclusive.
  int exit_code() const;
};

// Relations, then the generation certificate for a set built by
// build_generators.
VerifyReport verify_constructed(const Profile& p, const GeneratorSet& g);
// Relations, then span closure on the default targets.
VerifyReport verify_by_closure(const GeneratorSet& g, const ClosureOptions& options);

}  // namespace leavitt
