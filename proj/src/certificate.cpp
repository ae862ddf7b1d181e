#include "leavitt/certificate.hpp"

#include <chrono>
#include <map>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

std::string unit_label(int i, int j) { return "e_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

SparseTarget single(int d, int n, int i, int j, Element value) {
  SparseTarget t{d, n, {}};
  t.entries.push_back({i, j, std::move(value)});
  return t;
}

SparseTarget diagonal_ones(int d, int n, int from, int to) {
  SparseTarget t{d, n, {}};
  for (int k = from; k <= to; ++k) t.entries.push_back({k, k, Element::one(n)});
  return t;
}

using Values = std::vector<std::optional<LMatrix>>;

LMatrix eval_node(const CertNode& node, const Values& values, const GeneratorSet& g) {
  auto arg = [&](int id) -> const LMatrix& {
    const auto& v = values[static_cast<std::size_t>(id)];
    if (!v) throw Error(ErrorCode::InvalidArgument, "certificate node " + std::to_string(id) + " used after release");
    return *v;
  };
  switch (node.op) {
    case NodeOp::GenX: return g.x(node.gen);
    case NodeOp::GenY: return g.y(node.gen);
    case NodeOp::Identity: return LMatrix::identity(g.d, g.n);
    case NodeOp::Product: {
      LMatrix acc = arg(node.args.front());
      for (std::size_t k = 1; k < node.args.size(); ++k) acc = acc * arg(node.args[k]);
      return acc;
    }
    case NodeOp::LinComb: {
      LMatrix acc(g.d, g.n);
      for (std::size_t k = 0; k < node.args.size(); ++k) {
        const Coefficient& w = node.weights[k];
        if (w.is_one()) acc += arg(node.args[k]);
        else acc += w * arg(node.args[k]);
      }
      return acc;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown node op");
}

class Builder {
 public:
  Builder(const GeneratorSet& g, bool check) : g_(g), check_(check) {
    cert_.n = g.n;
    cert_.d = g.d;
  }

  int gen_x(int i) { return leaf(NodeOp::GenX, i, x_leaves_); }
  int gen_y(int i) { return leaf(NodeOp::GenY, i, y_leaves_); }

  int identity() {
    if (identity_ < 0) identity_ = push({NodeOp::Identity, 0, {}, {}, {}, std::nullopt});
    return identity_;
  }

  int product(std::vector<int> args) { return push({NodeOp::Product, 0, std::move(args), {}, {}, std::nullopt}); }

  int lincomb(const std::vector<std::pair<Coefficient, int>>& terms) {
    CertNode node{NodeOp::LinComb, 0, {}, {}, {}, std::nullopt};
    for (const auto& [w, id] : terms) {
      node.weights.push_back(w);
      node.args.push_back(id);
    }
    return push(std::move(node));
  }

  // Attaches a label and target; a node that already has a label gets an alias.
  int name(int id, std::string label, SparseTarget target) {
    if (!cert_.nodes[static_cast<std::size_t>(id)].label.empty() || is_leaf(id)) id = lincomb({{Coefficient(1), id}});
    CertNode& node = cert_.nodes[static_cast<std::size_t>(id)];
    node.label = std::move(label);
    node.target = std::move(target);
    if (check_) {
      LMatrix expected = node.target->to_matrix();
      const LMatrix& got = *values_[static_cast<std::size_t>(id)];
      if (!(got == expected)) {
        throw Error(ErrorCode::CertificateMismatch, "node " + node.label + " residual:\n" + (got - expected).to_string());
      }
    }
    return id;
  }

  void release(int id) {
    if (check_) values_[static_cast<std::size_t>(id)].reset();
  }

  int dual(int id) {
    if (auto it = dual_memo_.find(id); it != dual_memo_.end()) return it->second;
    const CertNode node = cert_.nodes[static_cast<std::size_t>(id)];
    int out = -1;
    switch (node.op) {
      case NodeOp::GenX: out = gen_y(node.gen); break;
      case NodeOp::GenY: out = gen_x(node.gen); break;
      case NodeOp::Identity: out = identity(); break;
      case NodeOp::Product: {
        std::vector<int> args;
        for (auto it = node.args.rbegin(); it != node.args.rend(); ++it) args.push_back(dual(*it));
        out = product(std::move(args));
        break;
      }
      case NodeOp::LinComb: {
        std::vector<std::pair<Coefficient, int>> terms;
        for (std::size_t k = 0; k < node.args.size(); ++k) terms.emplace_back(node.weights[k], dual(node.args[k]));
        out = lincomb(terms);
        break;
      }
    }
    dual_memo_[id] = out;
    return out;
  }

  Certificate finish() { return std::move(cert_); }

 private:
  bool is_leaf(int id) const {
    NodeOp op = cert_.nodes[static_cast<std::size_t>(id)].op;
    return op == NodeOp::GenX || op == NodeOp::GenY || op == NodeOp::Identity;
  }

  int leaf(NodeOp op, int i, std::map<int, int>& memo) {
    if (auto it = memo.find(i); it != memo.end()) return it->second;
    int id = push({op, i, {}, {}, {}, std::nullopt});
    memo[i] = id;
    return id;
  }

  int push(CertNode node) {
    int id = static_cast<int>(cert_.nodes.size());
    if (check_) values_.emplace_back(eval_node(node, values_, g_));
    cert_.nodes.push_back(std::move(node));
    return id;
  }

  const GeneratorSet& g_;
  bool check_;
  Certificate cert_;
  Values values_;
  std::map<int, int> x_leaves_;
  std::map<int, int> y_leaves_;
  std::map<int, int> dual_memo_;
  int identity_ = -1;
};

}  // namespace

LMatrix SparseTarget::to_matrix() const {
  LMatrix m(dim, arity);
  for (const auto& e : entries) m.at(e.row, e.col) += e.value;
  return m;
}

SparseTarget SparseTarget::involute() const {
  SparseTarget t{dim, arity, {}};
  for (const auto& e : entries) t.entries.push_back({e.col, e.row, leavitt::involute(e.value)});
  return t;
}

SparseTarget SparseTarget::from_matrix(const LMatrix& m) {
  SparseTarget t{m.dim(), m.arity(), {}};
  for (int i = 1; i <= m.dim(); ++i) {
    for (int j = 1; j <= m.dim(); ++j) {
      if (!m.at(i, j).is_zero()) t.entries.push_back({i, j, m.at(i, j)});
    }
  }
  return t;
}

const char* node_op_name(NodeOp op) {
  switch (op) {
    case NodeOp::GenX: return "x";
    case NodeOp::GenY: return "y";
    case NodeOp::Identity: return "identity";
    case NodeOp::Product: return "product";
    case NodeOp::LinComb: return "lincomb";
  }
  return "unknown";
}

std::optional<int> Certificate::find(const std::string& label) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].label == label) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::size_t Certificate::named_count() const {
  std::size_t c = 0;
  for (const auto& node : nodes) c += node.target.has_value();
  return c;
}

std::string power_label(const Monomial& m) {
  std::string s;
  auto emit = [&](char kind, const Word& w) {
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (!s.empty()) s += '.';
      s += kind;
      s += std::to_string(w[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
  };
  emit('y', m.yword());
  emit('x', m.xword());
  return s.empty() ? "1" : s;
}

Certificate generation_certificate(const Profile& p, const GeneratorSet& g, bool check) {
  if (g.n != p.n || g.d != p.d) throw Error(ErrorCode::InvalidArgument, "generator set does not match the profile");
  const int n = p.n, d = p.d, q = p.q, r = p.r, s = p.s;
  Builder b(g, check);
  auto X = [&](int i) { return b.gen_x(i); };
  auto Y = [&](int i) { return b.gen_y(i); };
  const Coefficient one(1);
  const Coefficient minus_one(-1);

  int I = b.name(b.product({X(1), Y(1)}), "I", diagonal_ones(d, n, 1, d));

  if (d == 1) {
    b.name(I, unit_label(1, 1), diagonal_ones(1, n, 1, 1));
    for (int w = 1; w <= n; ++w) {
      b.name(X(w), "x" + std::to_string(w) + "*" + unit_label(1, 1), single(1, n, 1, 1, Element::x(static_cast<GenIndex>(w), n)));
      b.name(Y(w), "y" + std::to_string(w) + "*" + unit_label(1, 1), single(1, n, 1, 1, Element::y(static_cast<GenIndex>(w), n)));
    }
    return b.finish();
  }
  if (!g.placement) throw Error(ErrorCode::InvalidArgument, "generation_certificate needs the placement of the set");
  const Placement& placement = *g.placement;

  std::vector<std::pair<Coefficient, int>> es_terms;
  for (int i = 1; i <= q + 1; ++i) es_terms.emplace_back(one, b.product({Y(i), X(i)}));
  int Es = b.name(b.lincomb(es_terms), "E_s", diagonal_ones(d, n, 1, s));

  std::vector<int> En(static_cast<std::size_t>(d + 1), -1);
  En[static_cast<std::size_t>(s)] = b.name(Es, "E_" + std::to_string(s), diagonal_ones(d, n, 1, s));
  for (int i = 0; i + 2 < d; ++i) {
    int u = p.useq[static_cast<std::size_t>(i)];
    int next = p.useq[static_cast<std::size_t>(i + 1)];
    int Eu = En[static_cast<std::size_t>(u)];
    int node;
    if (u <= r - 2) {
      int phi = b.product({Y(q + 2), Eu, X(q + 2)});
      node = b.lincomb({{one, Es}, {one, phi}});
    } else {
      int complement = b.lincomb({{one, I}, {minus_one, Eu}});
      int beta = b.product({Y(q + 1), complement, X(q + 1)});
      node = b.lincomb({{one, Es}, {minus_one, beta}});
    }
    En[static_cast<std::size_t>(next)] = b.name(node, "E_" + std::to_string(next), diagonal_ones(d, n, 1, next));
  }
  En[static_cast<std::size_t>(d)] = b.name(I, "E_" + std::to_string(d), diagonal_ones(d, n, 1, d));

  std::vector<int> e(static_cast<std::size_t>(d + 1), -1);
  e[1] = b.name(En[1], "e_1", diagonal_ones(d, n, 1, 1));
  for (int j = 2; j <= d; ++j) {
    int node = b.lincomb({{one, En[static_cast<std::size_t>(j)]}, {minus_one, En[static_cast<std::size_t>(j - 1)]}});
    e[static_cast<std::size_t>(j)] = b.name(node, "e_" + std::to_string(j), diagonal_ones(d, n, j, j));
  }

  std::map<std::pair<int, int>, int> U;
  auto unit = [&](int i, int j) {
    if (i == j) return e[static_cast<std::size_t>(i)];
    auto it = U.find({i, j});
    if (it == U.end()) throw Error(ErrorCode::InvalidArgument, "missing unit " + unit_label(i, j));
    return it->second;
  };
  auto name_unit = [&](int node, int i, int j) {
    U[{i, j}] = b.name(node, unit_label(i, j), single(d, n, i, j, Element::one(n)));
  };

  if (1 + s < d) name_unit(b.product({e[1], X(q + 2), e[static_cast<std::size_t>(1 + s)]}), 1, 1 + s);
  if (r != d) name_unit(b.product({e[static_cast<std::size_t>(d)], X(q + 1), e[static_cast<std::size_t>(s)]}), d, s);

  auto h = [&](int pos) { return p.hseq[static_cast<std::size_t>(pos - 1)]; };
  auto y_step = [&](int from, int to) { return to == from + s ? Y(q + 2) : Y(q + 1); };
  auto x_step = [&](int from, int to) { return to == from + s ? X(q + 2) : X(q + 1); };
  auto propagate = [&](int first, int last) {
    for (int pos = first; pos + 2 <= last; ++pos) {
      int a = h(pos), c = h(pos + 1), f = h(pos + 2);
      name_unit(b.product({y_step(a, c), unit(a, c), x_step(c, f)}), c, f);
    }
    for (int lo = first; lo <= last; ++lo) {
      for (int hi = lo + 2; hi <= last; ++hi) {
        name_unit(b.product({unit(h(lo), h(hi - 1)), unit(h(hi - 1), h(hi))}), h(lo), h(hi));
      }
    }
    for (int lo = first; lo <= last; ++lo) {
      for (int hi = lo + 1; hi <= last; ++hi) name_unit(b.dual(unit(h(lo), h(hi))), h(hi), h(lo));
    }
  };
  propagate(1, p.d1);
  propagate(p.d1 + 1, d);

  auto locate = [&](int u, int t) {
    auto box = placement.box_of({u, t});
    if (!box) throw Error(ErrorCode::InvalidPlacement, "List entry " + ListEntry{u, t}.to_string() + " not placed");
    return *box;
  };
  std::map<int, int> y_nodes;
  auto y_node = [&](int w) {
    if (auto it = y_nodes.find(w); it != y_nodes.end()) return it->second;
    ClassInfo ci = class_of(p, w);
    int node = b.product({e[1], Y(ci.qw + 1), e[static_cast<std::size_t>(ci.what)]});
    node = b.name(node, "y" + std::to_string(w) + "*" + unit_label(1, ci.what),
                  single(d, n, 1, ci.what, Element::y(static_cast<GenIndex>(w), n)));
    y_nodes[w] = node;
    return node;
  };
  auto x1_power = [&](int k) {
    Word xs(static_cast<std::size_t>(k), GenIndex{1});
    return Monomial({}, std::move(xs));
  };
  auto descent_label = [&](int k, int row) {
    std::string l = unit_label(row, d);
    return k == 0 ? l : power_label(x1_power(k)) + "*" + l;
  };

  Box top_box = locate(1, d - 2);
  int top = b.name(b.product({e[static_cast<std::size_t>(top_box.row)], X(top_box.matrix), e[static_cast<std::size_t>(d)]}),
                   descent_label(d - 1, top_box.row),
                   single(d, n, top_box.row, d, Element::monomial(x1_power(d - 1), n)));
  int P = b.name(b.product({unit(1, top_box.row), top}), descent_label(d - 1, 1),
                 single(d, n, 1, d, Element::monomial(x1_power(d - 1), n)));
  int y1 = y_node(1);
  for (int k = d - 1; k >= 1; --k) {
    std::vector<std::pair<Coefficient, int>> terms;
    terms.emplace_back(one, b.product({y1, P}));
    for (int w = 2; w <= n; ++w) {
      Box box = locate(w, k - 1);
      ListEntry entry{w, k - 1};
      int pick = b.name(b.product({e[static_cast<std::size_t>(box.row)], X(box.matrix), e[static_cast<std::size_t>(d)]}),
                        power_label(entry.monomial()) + "*" + unit_label(box.row, d),
                        single(d, n, box.row, d, Element::monomial(entry.monomial(), n)));
      int what = class_of(p, w).what;
      terms.emplace_back(one, b.product({y_node(w), unit(what, box.row), pick}));
    }
    P = b.name(b.lincomb(terms), descent_label(k - 1, 1),
               single(d, n, 1, d, Element::monomial(x1_power(k - 1), n)));
  }
  U[{1, d}] = P;
  name_unit(b.dual(P), d, 1);

  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      int ci = row_class(p, i), cj = row_class(p, j);
      if (ci == cj || U.count({i, j})) continue;
      if (ci == 1) name_unit(b.product({unit(i, 1), unit(1, d), unit(d, j)}), i, j);
      else name_unit(b.product({unit(i, d), unit(d, 1), unit(1, j)}), i, j);
    }
  }

  for (int w = 1; w <= n; ++w) {
    ClassInfo ci = class_of(p, w);
    int xw = b.name(b.product({e[static_cast<std::size_t>(ci.what)], X(ci.qw + 1), e[1]}),
                    "x" + std::to_string(w) + "*" + unit_label(ci.what, 1),
                    single(d, n, ci.what, 1, Element::x(static_cast<GenIndex>(w), n)));
    int yw = y_node(w);
    const Element xe = Element::x(static_cast<GenIndex>(w), n);
    const Element ye = Element::y(static_cast<GenIndex>(w), n);
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        if (!(i == ci.what && j == 1)) {
          int node = b.name(b.product({unit(i, ci.what), xw, unit(1, j)}),
                            "x" + std::to_string(w) + "*" + unit_label(i, j), single(d, n, i, j, xe));
          b.release(node);
        }
        if (!(i == 1 && j == ci.what)) {
          int node = b.name(b.product({unit(i, 1), yw, unit(ci.what, j)}),
                            "y" + std::to_string(w) + "*" + unit_label(i, j), single(d, n, i, j, ye));
          b.release(node);
        }
      }
    }
  }
  return b.finish();
}

CertificateReport evaluate_certificate(const Certificate& cert, const GeneratorSet& g) {
  auto start = std::chrono::steady_clock::now();
  if (cert.n != g.n || cert.d != g.d) throw Error(ErrorCode::InvalidArgument, "certificate does not match the generator set");
  CertificateReport report;
  report.node_count = cert.nodes.size();
  report.named_count = cert.named_count();
  const std::size_t count = cert.nodes.size();
  std::vector<std::size_t> last_use(count, 0);
  for (std::size_t k = 0; k < count; ++k) {
    const CertNode& node = cert.nodes[k];
    if ((node.op == NodeOp::GenX || node.op == NodeOp::GenY) && (node.gen < 1 || node.gen > g.n)) {
      throw Error(ErrorCode::OutOfRange, "certificate leaf refers to generator " + std::to_string(node.gen));
    }
    for (int a : node.args) {
      if (a < 0 || static_cast<std::size_t>(a) >= k) throw Error(ErrorCode::InvalidArgument, "certificate is not topologically ordered");
      last_use[static_cast<std::size_t>(a)] = k;
    }
    if ((node.op == NodeOp::Product || node.op == NodeOp::LinComb) && node.args.empty()) {
      throw Error(ErrorCode::InvalidArgument, "certificate node without arguments");
    }
    if (node.op == NodeOp::LinComb && node.weights.size() != node.args.size()) {
      throw Error(ErrorCode::InvalidArgument, "weight count differs from argument count");
    }
  }
  Values values(count);
  for (std::size_t k = 0; k < count; ++k) {
    const CertNode& node = cert.nodes[k];
    values[k] = eval_node(node, values, g);
    report.max_entry_terms = std::max(report.max_entry_terms, values[k]->max_entry_terms());
    report.max_entry_length = std::max(report.max_entry_length, values[k]->max_entry_length());
    if (node.target) {
      ++report.checked;
      LMatrix expected = node.target->to_matrix();
      if (!(*values[k] == expected) && report.ok) {
        report.ok = false;
        report.failure = NodeFailure{static_cast<int>(k), node.label, *values[k] - expected};
      }
    }
    for (int a : node.args) {
      if (last_use[static_cast<std::size_t>(a)] == k) values[static_cast<std::size_t>(a)].reset();
    }
    if (last_use[k] <= k) values[k].reset();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Certificate dual_certificate(const Certificate& cert) {
  Certificate out;
  out.n = cert.n;
  out.d = cert.d;
  for (const CertNode& node : cert.nodes) {
    CertNode dual = node;
    if (node.op == NodeOp::GenX) dual.op = NodeOp::GenY;
    else if (node.op == NodeOp::GenY) dual.op = NodeOp::GenX;
    else if (node.op == NodeOp::Product) dual.args.assign(node.args.rbegin(), node.args.rend());
    if (!node.label.empty()) dual.label = node.label + "*";
    if (node.target) dual.target = node.target->involute();
    out.nodes.push_back(std::move(dual));
  }
  return out;
}

}  // namespace leavitt
