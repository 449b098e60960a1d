#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ybx/report.hpp"

namespace ybx {

// A map X x X -> X x X on a finite indexed set, stored as a full lookup
// table over flat input index x*size + y.
struct FiniteYBMap {
  int size = 0;
  std::vector<std::pair<int, int>> table;
  bool invertible = false;

  std::pair<int, int> apply(int x, int y) const { return table[x * size + y]; }
};

FiniteYBMap make_yb_map(int size, std::vector<std::pair<int, int>> table);
FiniteYBMap swap_map(int size);      // P(x, y) = (y, x)
FiniteYBMap identity_yb_map(int size);

CheckReport check_ybe(const FiniteYBMap& r);
CheckReport check_braid(const FiniteYBMap& s);

enum class ConvertDirection { yb_to_braid, braid_to_yb };
FiniteYBMap convert(const FiniteYBMap& m, ConvertDirection direction);

// (left, right): left <=> every sigma_y (x -> first component of R(x, y)) is
// a bijection; right <=> every tau_x (y -> second component) is.
std::pair<bool, bool> nondegeneracy(const FiniteYBMap& r);

FiniteYBMap guitar_map(const FiniteYBMap& r);

struct BinaryOpTable {
  int size = 0;
  std::vector<int> table;  // x*size + y -> x <| y

  int apply(int x, int y) const { return table[x * size + y]; }
};

BinaryOpTable make_binop(int size, std::vector<int> table);
CheckReport check_self_distributive(const BinaryOpTable& op);
FiniteYBMap braiding_from_sd(const BinaryOpTable& op);  // S(x,y) = (y, x <| y)

struct GroupTable {
  int size = 0;
  std::vector<int> mult;  // row-major, identity at index 0

  int mul(int a, int b) const { return mult[a * size + b]; }
  int inverse(int a) const;
};

GroupTable make_group(int size, std::vector<int> mult);
BinaryOpTable conjugation_quandle(const GroupTable& g);  // x <| y = y^-1 x y

struct SetMapping {
  int domain_size = 0;
  int codomain_size = 0;
  std::vector<int> table;

  int apply(int x) const { return table[x]; }
};

SetMapping make_mapping(int domain_size, int codomain_size,
                        std::vector<int> table);

CheckReport is_morphism(const SetMapping& f, const FiniteYBMap& rx,
                        const FiniteYBMap& ry);
bool is_homogeneous(const SetMapping& f);

struct KernelResult {
  CheckReport report;
  std::optional<FiniteYBMap> restriction;  // present iff the fiber is invariant
};

KernelResult kernel_check(const SetMapping& f, int k, const FiniteYBMap& rx);

enum class Equation { ybe, braid };

// Complete, duplicate-free, lexicographically ordered (by flattened table)
// list of solutions.  n = 2 enumerates all 256 maps when invertible_only is
// false; n = 3 restricts to the 9! bijections in either mode.
std::vector<FiniteYBMap> enumerate_solutions(int n, Equation equation,
                                             bool invertible_only);

}  // namespace ybx
