#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "leavitt/certificate.hpp"
#include "leavitt/classify.hpp"
#include "leavitt/closure.hpp"
#include "leavitt/construct.hpp"
#include "leavitt/profile.hpp"
#include "leavitt/verify.hpp"

namespace leavitt {

using nlohmann::json;

json element_to_json(const Element& e);
// Accepts the canonical term array or a text form such as "x5.x1 - 1".
Element element_from_json(const json& j, int n);

json matrix_to_json(const LMatrix& m);
// Accepts {dim, arity, entries} (row-major) or an array of rows.
LMatrix matrix_from_json(const json& j, int d, int n);

json placement_to_json(const Placement& p);
json generator_set_to_json(const GeneratorSet& g);
GeneratorSet generator_set_from_json(const json& j);

json profile_to_json(const Profile& p);
json certificate_to_json(const Certificate& c);
json certificate_report_to_json(const CertificateReport& r);
json relation_report_to_json(const RelationReport& r);
json closure_result_to_json(const ClosureResult& r, bool with_preimages = false);
json verify_report_to_json(const VerifyReport& r);

ClosureTarget target_from_json(const json& j);
json target_to_json(const ClosureTarget& t);

struct Fixture {
  std::string name;
  std::string description;
  GeneratorSet set;
  bool expect_relations = true;
  ClosureStatus expect_closure = ClosureStatus::Verified;
  // Empty means the default target list.
  std::vector<ClosureTarget> targets;
  std::string path;
};

Fixture fixture_from_json(const json& j);
Fixture load_fixture(const std::string& path);
// All *.json fixtures of a directory, sorted by name.
std::vector<Fixture> load_fixtures(const std::string& dir);
std::string default_fixture_dir();

// Matrix layout for eyeballing: rows in brackets, entries aligned.
std::string render_matrix(const LMatrix& m);
std::string render_generator_set(const GeneratorSet& g);

}  // namespace leavitt
