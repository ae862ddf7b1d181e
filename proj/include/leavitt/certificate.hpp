#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "leavitt/construct.hpp"

namespace leavitt {

struct SparseTarget {
  int dim = 0;
  int arity = 0;
  struct Entry {
    int row;
    int col;
    Element value;
  };
  std::vector<Entry> entries;

  LMatrix to_matrix() const;
  SparseTarget involute() const;
  static SparseTarget from_matrix(const LMatrix& m);
};

enum class NodeOp { GenX, GenY, Identity, Product, LinComb };

const char* node_op_name(NodeOp op);

struct CertNode {
  NodeOp op = NodeOp::Identity;
  int gen = 0;                       // GenX / GenY
  std::vector<int> args;             // Product / LinComb, ids of earlier nodes
  std::vector<Coefficient> weights;  // LinComb
  std::string label;                 // empty for unnamed nodes
  std::optional<SparseTarget> target;
};

// Expression DAG over the generators. Node ids are indices into nodes, and
// every argument id is smaller than the node that uses it.
struct Certificate {
  int n = 0;
  int d = 0;
  std::vector<CertNode> nodes;

  std::optional<int> find(const std::string& label) const;
  std::size_t named_count() const;
};

struct NodeFailure {
  int id;
  std::string label;
  LMatrix residual;
};

struct CertificateReport {
  bool ok = true;
  std::size_t node_count = 0;
  std::size_t named_count = 0;
  std::size_t checked = 0;
  std::size_t max_entry_terms = 0;
  int max_entry_length = 0;
  double seconds = 0;
  std::optional<NodeFailure> failure;
};

// Builds the constructive generation proof for a set produced by
// build_generators. With check set, every named node is evaluated while the
// certificate is built and the first mismatch raises CertificateMismatch.
Certificate generation_certificate(const Profile& p, const GeneratorSet& g, bool check = true);

CertificateReport evaluate_certificate(const Certificate& cert, const GeneratorSet& g);

// Swaps X and Y leaves, reverses products and involutes targets. Labels get a
// trailing "*".
Certificate dual_certificate(const Certificate& cert);

// "x1^2" style rendering of an x-word, used in node labels.
std::string power_label(const Monomial& m);

}  // namespace leavitt
