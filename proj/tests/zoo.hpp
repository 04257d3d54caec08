#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pargroup/group.hpp"

namespace zoo {

using pargroup::FiniteGroup;
using pargroup::Permutation;

inline FiniteGroup s3() {
  return pargroup::group_from_permutations(3, {Permutation{1, 0, 2}, Permutation{1, 2, 0}});
}

inline FiniteGroup d4() {
  // <(1 2 3 4), (1 3)>
  return pargroup::group_from_permutations(4, {Permutation{1, 2, 3, 0}, Permutation{2, 1, 0, 3}});
}

inline FiniteGroup a4() {
  // <(1 2 3), (1 2)(3 4)>
  return pargroup::group_from_permutations(4, {Permutation{1, 2, 0, 3}, Permutation{1, 0, 3, 2}});
}

// {1, -1, i, -i, j, -j, k, -k}: index = 2*axis + sign with axes 1, i, j, k.
inline FiniteGroup q8() {
  // axis products with signs: i*j = k, j*i = -k, ...
  static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<int>> rows(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
      rows[x][y] = 2 * axis[ax][ay] + ((sx + sy + sign[ax][ay]) % 2);
    }
  return pargroup::group_from_table(8, rows);
}

// Order <= 12 groups used by the cross-method oracle.
inline std::vector<std::pair<std::string, FiniteGroup>> oracle_zoo() {
  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (int n = 1; n <= 12; ++n)
    out.emplace_back("Z" + std::to_string(n), pargroup::group_cyclic(n));
  out.emplace_back("Z2xZ2", pargroup::group_abelian({2, 2}));
  out.emplace_back("Z2xZ4", pargroup::group_abelian({2, 4}));
  out.emplace_back("Z2xZ2xZ2", pargroup::group_abelian({2, 2, 2}));
  out.emplace_back("Z3xZ3", pargroup::group_abelian({3, 3}));
  out.emplace_back("Z2xZ6", pargroup::group_abelian({2, 6}));
  out.emplace_back("S3", s3());
  out.emplace_back("D4", d4());
  out.emplace_back("Q8", q8());
  out.emplace_back("A4", a4());
  return out;
}

}  // namespace zoo
