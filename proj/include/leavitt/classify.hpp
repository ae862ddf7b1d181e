#pragma once

#include <string>

namespace leavitt {

// (Z/(n-1)Z, [d]).
struct K0Class {
  int modulus = 1;
  int unit_class = 0;
};

struct ModuleType {
  int first = 1;
  int second = 1;
};

struct IsoDecision {
  bool isomorphic = false;
  // "k0-unit-orbit" when the unit classes are related by a unit (or differ),
  // "modulus-mismatch" when n != m, "trivial-group" when n = m = 2.
  std::string reason;
};

K0Class k0_data(int n, int d);
ModuleType module_type(int n, int d);
// M_d(L_n) versus M_k(L_m).
IsoDecision is_isomorphic(int n, int d, int m, int k);
// d divides some power of n.
bool graded_iso_exists(int n, int d);
bool degree_one_generating_set_possible(int n, int d);

}  // namespace leavitt
