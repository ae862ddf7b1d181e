#include "leavitt/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "leavitt/error.hpp"

namespace leavitt {

namespace {

Word word_from_json(const json& j) {
  Word w;
  for (const auto& v : j) {
    int g = v.get<int>();
    if (g < 1 || g > 65535) throw Error(ErrorCode::ParseError, "generator index out of range in JSON");
    w.push_back(static_cast<GenIndex>(g));
  }
  return w;
}

json word_to_json(const Word& w) {
  json a = json::array();
  for (GenIndex g : w) a.push_back(g);
  return a;
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

std::string display_element(const Element& e) {
  if (e.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : e.terms()) {
    Coefficient c = t.coeff;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) s += negative ? "-" : "";
    else s += negative ? " - " : " + ";
    if (t.mono.is_one()) s += c.to_string();
    else s += (c.is_one() ? "" : c.to_string() + "*") + power_label(t.mono);
    first = false;
  }
  return s;
}

}  // namespace

json element_to_json(const Element& e) {
  json a = json::array();
  for (const auto& t : e.terms()) {
    a.push_back({{"coeff", t.coeff.to_string()}, {"y", word_to_json(t.mono.yword())}, {"x", word_to_json(t.mono.xword())}});
  }
  return a;
}

Element element_from_json(const json& j, int n) {
  if (j.is_string()) return parse_element(j.get<std::string>(), n);
  if (j.is_number_integer()) return Element::scalar(Coefficient(j.get<long long>()), n);
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "element must be a term array or a string");
  RawCombination raw;
  for (const auto& term : j) {
    Coefficient c = term.contains("coeff") ? Coefficient::parse(term.at("coeff").get<std::string>()) : Coefficient(1);
    RawWord word;
    for (GenIndex g : word_from_json(term.value("y", json::array()))) word.push_back(Letter{false, g});
    for (GenIndex g : word_from_json(term.value("x", json::array()))) word.push_back(Letter{true, g});
    raw.push_back({c, std::move(word)});
  }
  return reduce(raw, n);
}

json matrix_to_json(const LMatrix& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(element_to_json(e));
  return {{"dim", m.dim()}, {"arity", m.arity()}, {"entries", entries}};
}

LMatrix matrix_from_json(const json& j, int d, int n) {
  LMatrix m(d, n);
  if (j.is_object()) {
    if (get_int(j, "dim") != d) throw Error(ErrorCode::DimensionMismatch, "matrix dim differs from the set");
    if (get_int(j, "arity") != n) throw Error(ErrorCode::ArityMismatch, "matrix arity differs from the set");
    const json& entries = j.at("entries");
    if (entries.size() != static_cast<std::size_t>(d * d)) throw Error(ErrorCode::ParseError, "matrix needs d*d entries");
    for (int k = 0; k < d * d; ++k) m.at(k / d + 1, k % d + 1) = element_from_json(entries.at(static_cast<std::size_t>(k)), n);
    return m;
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(d)) throw Error(ErrorCode::ParseError, "matrix needs d rows");
  for (int i = 0; i < d; ++i) {
    const json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || row.size() != static_cast<std::size_t>(d)) throw Error(ErrorCode::ParseError, "matrix row needs d entries");
    for (int c = 0; c < d; ++c) m.at(i + 1, c + 1) = element_from_json(row.at(static_cast<std::size_t>(c)), n);
  }
  return m;
}

json placement_to_json(const Placement& p) {
  json a = json::array();
  for (const auto& pe : p.assignment) {
    a.push_back({{"entry", pe.entry.to_string()}, {"matrix", pe.box.matrix}, {"row", pe.box.row}});
  }
  return a;
}

json generator_set_to_json(const GeneratorSet& g) {
  json xs = json::array();
  for (const auto& m : g.X) xs.push_back(matrix_to_json(m));
  json j = {{"n", g.n}, {"d", g.d}, {"provenance", provenance_name(g.provenance)}, {"X", xs}};
  if (g.placement) {
    j["placement"] = placement_to_json(*g.placement);
    j["placement_strategy"] = strategy_name(g.placement->strategy);
    j["seed"] = g.placement->seed ? json(*g.placement->seed) : json(nullptr);
  }
  return j;
}

GeneratorSet generator_set_from_json(const json& j) {
  const int n = get_int(j, "n");
  const int d = get_int(j, "d");
  if (n < 2 || d < 1) throw Error(ErrorCode::ParseError, "need n >= 2 and d >= 1");
  Provenance prov = parse_provenance(j.value("provenance", std::string("external")));
  if (!j.contains("X") || !j.at("X").is_array()) throw Error(ErrorCode::ParseError, "missing matrix list 'X'");
  std::vector<LMatrix> xs;
  for (const auto& m : j.at("X")) xs.push_back(matrix_from_json(m, d, n));
  GeneratorSet g = GeneratorSet::from_x(n, d, prov, std::move(xs));
  if (prov == Provenance::MainConstruction && j.contains("placement") && d >= 2) {
    Profile p = make_profile(n, d);
    std::vector<PlacedEntry> assignment;
    for (const auto& pe : j.at("placement")) {
      RawWord w = parse_word(pe.at("entry").get<std::string>());
      if (w.empty() || !std::all_of(w.begin(), w.end(), [](const Letter& l) { return l.is_x; }) ||
          !std::all_of(w.begin() + 1, w.end(), [](const Letter& l) { return l.index == 1; })) {
        throw Error(ErrorCode::ParseError, "placement entry is not of the form x_u x_1^t");
      }
      assignment.push_back({ListEntry{w.front().index, static_cast<int>(w.size()) - 1}, Box{get_int(pe, "matrix"), get_int(pe, "row")}});
    }
    Placement placement = make_explicit_placement(p, std::move(assignment));
    std::string strategy = j.value("placement_strategy", std::string("explicit"));
    if (strategy == "canonical") placement.strategy = PlacementStrategy::Canonical;
    else if (strategy == "random") placement.strategy = PlacementStrategy::SeededRandom;
    if (j.contains("seed") && j.at("seed").is_number_unsigned()) placement.seed = j.at("seed").get<std::uint64_t>();
    if (!(build_generators(p, placement) == g)) {
      throw Error(ErrorCode::InvalidPlacement, "matrices do not match the recorded placement");
    }
    g.placement = std::move(placement);
  }
  return g;
}

json profile_to_json(const Profile& p) {
  Counts c = counts(p);
  return {{"n", p.n},
          {"d", p.d},
          {"q", p.q},
          {"r", p.r},
          {"s", p.s},
          {"hseq", p.hseq},
          {"useq", p.useq},
          {"s1hat", p.s1hat},
          {"s2hat", p.s2hat},
          {"d1", p.d1},
          {"d2", p.d2},
          {"e1", p.e1},
          {"e2", p.e2},
          {"f1", p.f1},
          {"f2", p.f2},
          {"b", p.b},
          {"t", p.t},
          {"degenerate", p.degenerate},
          {"counts",
           {{"list_size", c.list_size},
            {"box_count", c.box_count},
            {"s1_box_count", c.s1_box_count},
            {"s1_list_count", c.s1_list_count}}}};
}

json certificate_to_json(const Certificate& c) {
  json nodes = json::array();
  for (std::size_t k = 0; k < c.nodes.size(); ++k) {
    const CertNode& node = c.nodes[k];
    json jn = {{"id", k}, {"op", node_op_name(node.op)}};
    if (node.op == NodeOp::GenX || node.op == NodeOp::GenY) jn["gen"] = node.gen;
    if (!node.args.empty()) jn["args"] = node.args;
    if (node.op == NodeOp::LinComb) {
      json w = json::array();
      for (const auto& c2 : node.weights) w.push_back(c2.to_string());
      jn["weights"] = w;
    }
    if (!node.label.empty()) jn["label"] = node.label;
    if (node.target) {
      json entries = json::array();
      for (const auto& e : node.target->entries) {
        entries.push_back({{"row", e.row}, {"col", e.col}, {"value", element_to_json(e.value)}});
      }
      jn["target"] = entries;
    }
    nodes.push_back(std::move(jn));
  }
  return {{"n", c.n}, {"d", c.d}, {"nodes", nodes}};
}

json certificate_report_to_json(const CertificateReport& r) {
  json j = {{"ok", r.ok},
            {"node_count", r.node_count},
            {"named_count", r.named_count},
            {"checked", r.checked},
            {"max_entry_terms", r.max_entry_terms},
            {"max_entry_length", r.max_entry_length},
            {"seconds", r.seconds}};
  if (r.failure) {
    j["failure"] = {{"id", r.failure->id}, {"label", r.failure->label}, {"residual", matrix_to_json(r.failure->residual)}};
  }
  return j;
}

json relation_report_to_json(const RelationReport& r) {
  json pairs = json::array();
  for (const auto& row : r.pair_ok) pairs.push_back(row);
  json j = {{"ok", r.ok}, {"pair_ok", pairs}, {"sum_ok", r.sum_ok}, {"seconds", r.seconds}};
  if (r.first_failure) {
    j["first_failure"] = {{"i", r.first_failure->i}, {"j", r.first_failure->j}, {"residual", matrix_to_json(r.first_failure->residual)}};
  }
  return j;
}

json closure_result_to_json(const ClosureResult& r, bool with_preimages) {
  json j = {{"status", closure_status_name(r.status)},
            {"engine", r.engine},
            {"depth", r.depth},
            {"states", r.states},
            {"unresolved", r.unresolved},
            {"seconds", r.seconds}};
  if (with_preimages) {
    json pre = json::array();
    for (const auto& p : r.preimages) pre.push_back(p ? json(p->to_string()) : json(nullptr));
    j["preimages"] = pre;
  }
  return j;
}

json verify_report_to_json(const VerifyReport& r) {
  json j = {{"relations", relation_report_to_json(r.relations)},
            {"generation", generation_status_name(r.generation)},
            {"depth", r.depth},
            {"exit_code", r.exit_code()},
            {"seconds", r.seconds}};
  if (r.certificate) j["certificate"] = certificate_report_to_json(*r.certificate);
  if (r.closure) j["closure"] = closure_result_to_json(*r.closure);
  return j;
}

ClosureTarget target_from_json(const json& j) {
  ClosureTarget t;
  t.row = get_int(j, "row");
  t.col = get_int(j, "col");
  RawWord w = parse_word(j.value("mono", std::string("1")));
  Word ys, xs;
  bool seen_x = false;
  for (const Letter& l : w) {
    if (l.is_x) {
      seen_x = true;
      xs.push_back(l.index);
    } else {
      if (seen_x) throw Error(ErrorCode::ParseError, "target monomial must have the form y...x...");
      ys.push_back(l.index);
    }
  }
  t.mono = Monomial(std::move(ys), std::move(xs));
  return t;
}

json target_to_json(const ClosureTarget& t) { return {{"row", t.row}, {"col", t.col}, {"mono", t.mono.to_string()}}; }

Fixture fixture_from_json(const json& j) {
  Fixture f;
  f.name = j.value("name", std::string());
  f.description = j.value("description", std::string());
  f.set = generator_set_from_json(j);
  if (j.contains("expect")) {
    const json& e = j.at("expect");
    f.expect_relations = e.value("relations", true);
    std::string closure = e.value("closure", std::string("verified"));
    if (closure == "verified") f.expect_closure = ClosureStatus::Verified;
    else if (closure == "inconclusive") f.expect_closure = ClosureStatus::Inconclusive;
    else throw Error(ErrorCode::ParseError, "unknown closure expectation: " + closure);
  }
  if (j.contains("targets")) {
    for (const auto& t : j.at("targets")) {
      ClosureTarget target = target_from_json(t);
      if (target.row < 1 || target.row > f.set.d || target.col < 1 || target.col > f.set.d) {
        throw Error(ErrorCode::OutOfRange, "target position outside the matrix");
      }
      f.targets.push_back(std::move(target));
    }
  }
  return f;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open fixture " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  Fixture f = fixture_from_json(j);
  f.path = path;
  if (f.name.empty()) f.name = std::filesystem::path(path).stem().string();
  return f;
}

std::vector<Fixture> load_fixtures(const std::string& dir) {
  std::vector<std::string> paths;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path().string());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<Fixture> out;
  for (const auto& p : paths) out.push_back(load_fixture(p));
  return out;
}

std::string default_fixture_dir() {
#ifdef LEAVITT_FIXTURE_DIR
  return LEAVITT_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

std::string render_matrix(const LMatrix& m) {
  const int d = m.dim();
  std::vector<std::string> cells;
  std::vector<std::size_t> width(static_cast<std::size_t>(d), 1);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      cells.push_back(display_element(m.at(i, j)));
      width[static_cast<std::size_t>(j - 1)] = std::max(width[static_cast<std::size_t>(j - 1)], cells.back().size());
    }
  }
  std::ostringstream out;
  for (int i = 0; i < d; ++i) {
    out << "[ ";
    for (int j = 0; j < d; ++j) {
      const std::string& c = cells[static_cast<std::size_t>(i * d + j)];
      out << c << std::string(width[static_cast<std::size_t>(j)] - c.size(), ' ') << (j + 1 < d ? "  " : " ");
    }
    out << "]\n";
  }
  return out.str();
}

std::string render_generator_set(const GeneratorSet& g) {
  std::ostringstream out;
  out << "M_" << g.d << "(L_" << g.n << ") " << provenance_name(g.provenance) << "\n";
  for (int i = 1; i <= g.n; ++i) out << "X_" << i << " =\n" << render_matrix(g.x(i));
  return out.str();
}

}  // namespace leavitt
