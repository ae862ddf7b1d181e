#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leavitt/construct.hpp"

namespace leavitt {

// mono * e_{row,col}.
struct ClosureTarget {
  int row = 1;
  int col = 1;
  Monomial mono;

  LMatrix matrix(int d, int n) const;
  std::string label() const;
};

// e_{i,j}, x_w e_{i,j} and y_w e_{i,j} for all i, j, w.
std::vector<ClosureTarget> default_targets(int n, int d);

struct ClosureOptions {
  int degree_bound = 6;      // longest monomial allowed in any explored matrix entry
  int iteration_bound = 24;  // number of splits along one branch, or multiplication rounds for the span engine
  std::size_t state_limit = 200000;
  bool check_preimages = true;
};

enum class ClosureStatus { Verified, Inconclusive };

const char* closure_status_name(ClosureStatus s);

struct ClosureResult {
  ClosureStatus status = ClosureStatus::Inconclusive;
  std::string engine;  // "compression" or "span"
  int depth = 0;
  std::size_t states = 0;
  std::vector<std::string> unresolved;
  // For the compression engine: t with psi(t) = target, where psi sends
  // x_i, y_i to X_i, Y_i. Parallel to the target list; empty when unresolved.
  std::vector<std::optional<Element>> preimages;
  double seconds = 0;
};

// Image of t under x_i -> X_i, y_i -> Y_i.
LMatrix apply_generators(const GeneratorSet& g, const Element& t);

// Membership in the subalgebra generated by the X_i, Y_i. For sets satisfying
// the defining relations, T = sum_a Y_a X_a T = sum_b T Y_b X_b, so T lies in it
// iff every X_a T does, iff every T Y_b does. The compression engine peels Y_a
// off when a single X_a T is nonzero and otherwise splits on the side whose
// pieces have shorter entries, bottoming out at scalar matrices; a state that
// recurs below itself is left unresolved. Sets that fail the relations go to
// the span engine. Never reports non-generation, only Inconclusive.
ClosureResult span_closure_verify(const GeneratorSet& g, const std::vector<ClosureTarget>& targets,
                                  const ClosureOptions& options);

ClosureResult compression_closure(const GeneratorSet& g, const std::vector<ClosureTarget>& targets,
                                  const ClosureOptions& options);

// Breadth-first linear span of the unital algebra generated by an arbitrary
// list of matrices: round k adds all products of the current span with a
// generator on either side, reduced by exact Gaussian elimination. Products with
// a monomial longer than degree_bound are dropped.
ClosureResult span_closure(const std::vector<LMatrix>& generators, const std::vector<ClosureTarget>& targets,
                           const ClosureOptions& options);

}  // namespace leavitt
