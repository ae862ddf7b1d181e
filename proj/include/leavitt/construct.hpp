#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "leavitt/matrix.hpp"
#include "leavitt/profile.hpp"

namespace leavitt {

// x_u x_1^t.
struct ListEntry {
  int u = 1;
  int t = 0;

  Monomial monomial() const;
  std::string to_string() const;
  bool operator==(const ListEntry&) const = default;
};

// x_1^{d-1}, then x_2 x_1^k ... x_n x_1^k for k = d-2 down to 0.
std::vector<ListEntry> the_list(const Profile& p);
// The same family for any n >= 2, d >= 2, coprime or not.
std::vector<ListEntry> the_list(int n, int d);

struct Box {
  int matrix = 0;
  int row = 0;
  bool operator==(const Box&) const = default;
};

// Boxes of X_{q+2} (rows r-1..d) and X_{q+3}..X_n (rows 1..d), all in column d,
// ordered by matrix index and then by the position of the row in the h-sequence.
std::vector<Box> boxes(const Profile& p);

enum class PlacementStrategy { Canonical, SeededRandom, Explicit };

const char* strategy_name(PlacementStrategy s);

struct PlacedEntry {
  ListEntry entry;
  Box box;
};

struct Placement {
  PlacementStrategy strategy = PlacementStrategy::Canonical;
  std::optional<std::uint64_t> seed;
  std::vector<PlacedEntry> assignment;  // in List order

  std::optional<Box> box_of(const ListEntry& e) const;
};

Placement make_placement(const Profile& p, const std::vector<ListEntry>& list, PlacementStrategy strategy,
                         std::uint64_t seed = 0);
// Checks an externally chosen assignment and puts it in List order.
Placement make_explicit_placement(const Profile& p, std::vector<PlacedEntry> assignment);
// Empty when the placement is a class-compatible bijection onto the boxes.
std::string placement_problem(const Profile& p, const Placement& placement);

enum class Provenance { MainConstruction, Graded, LeavittLex, External };

const char* provenance_name(Provenance p);
Provenance parse_provenance(const std::string& s);

struct GeneratorSet {
  int n = 0;
  int d = 0;
  Provenance provenance = Provenance::External;
  std::vector<LMatrix> X;
  std::vector<LMatrix> Y;
  std::optional<Placement> placement;

  // X_i and Y_i for 1-based i.
  const LMatrix& x(int i) const { return X.at(static_cast<std::size_t>(i - 1)); }
  const LMatrix& y(int i) const { return Y.at(static_cast<std::size_t>(i - 1)); }

  static GeneratorSet from_x(int n, int d, Provenance provenance, std::vector<LMatrix> xs);
};

bool operator==(const GeneratorSet& a, const GeneratorSet& b);

GeneratorSet build_generators(const Profile& p, const Placement& placement);
// the_list + make_placement + build_generators; d = 1 gives X_i = (x_i).
GeneratorSet construct_main(const Profile& p, PlacementStrategy strategy = PlacementStrategy::Canonical,
                            std::uint64_t seed = 0);
// Reads the column-d List entries back out of a set shaped like the main
// construction; nullopt when the set is not build_generators of any placement.
std::optional<Placement> infer_placement(const Profile& p, const GeneratorSet& g);
GeneratorSet build_graded_generators(int n, int d);
GeneratorSet leavitt_lexicographic_generators(int n, int d);

mpz_class automorphism_count(const Profile& p);

}  // namespace leavitt
