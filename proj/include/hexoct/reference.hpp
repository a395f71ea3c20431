#pragma once

// Published values that the computations are checked against.

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace hexoct::published {

inline constexpr int kCrystClassSize = 192;
inline constexpr int kB6PlusClassSize = 96;

struct SubgroupFacts {
  std::string_view name;
  int order;
  int n_g;              // copies inside the icosahedral group
  int class_size_b6;    // size of the B6 class of the embedded copy
  std::string_view decomposition;
  int degree;           // of the G-graph
  std::vector<std::pair<std::int64_t, int>> spectrum;  // eigenvalue, multiplicity
  int components;
  int component_size;
};

// Rows in the order T, D10, D6, C5, D4, C3, C2, trivial. The trivial group
// carries no published class size or decomposition; those fields hold the
// values implied by its definition.
inline const std::array<SubgroupFacts, 8>& subgroup_facts() {
  static const std::array<SubgroupFacts, 8> facts{{
      {"T", 12, 5, 480, "2T", 5, {{5, 1}, {3, 45}, {1, 50}, {-1, 50}, {-3, 45}, {-5, 1}}, 1, 192},
      {"D10", 10, 6, 576, "2A2 + E1 + E2", 6, {{6, 6}, {2, 90}, {-2, 90}, {-6, 6}}, 6, 32},
      {"D6", 6, 10, 960, "2A2 + 2E", 10, {{10, 6}, {2, 90}, {-2, 90}, {-10, 6}}, 6, 32},
      {"C5", 5, 6, 576, "2A + E1 + E2", 0, {{0, 192}}, 192, 1},
      {"D4", 4, 5, 120, "2B1 + 2B2 + 2B3", 30,
       {{30, 1}, {18, 5}, {12, 5}, {6, 15}, {2, 45}, {0, 31}, {-2, 30}, {-4, 45}, {-8, 15}}, 1, 192},
      {"C3", 3, 10, 320, "2A + 2E", 20, {{20, 2}, {4, 90}, {-4, 100}}, 2, 96},
      {"C2", 2, 15, 180, "2A + 4B", 60, {{60, 2}, {4, 90}, {-4, 90}, {-12, 10}}, 2, 96},
      {"trivial", 1, 1, 1, "6A", 60, {{60, 1}, {12, 5}, {4, 90}, {-4, 90}, {-12, 5}, {-60, 1}}, 1, 192},
  }};
  return facts;
}

// Off-diagonal row content of the subgroup matrix: value -> count per row.
inline const std::vector<std::pair<int, int>>& subgroup_matrix_row() {
  static const std::vector<std::pair<int, int>> row{{12, 5}, {10, 6}, {6, 10}, {4, 30}, {3, 20}, {2, 60}, {1, 60}};
  return row;
}

// Printed matrices over Q(sqrt5), entry by entry (see QfElem::parse).
using LiteralMatrix = std::vector<std::vector<std::string_view>>;

// Projection operators of the reference representation, times 2 sqrt5.
inline const LiteralMatrix& p1_times_2sqrt5() {
  static const LiteralMatrix m{{"sqrt5", "1", "-1", "-1", "1", "1"}, {"1", "sqrt5", "1", "-1", "-1", "1"},
                               {"-1", "1", "sqrt5", "1", "-1", "1"}, {"-1", "-1", "1", "sqrt5", "1", "1"},
                               {"1", "-1", "-1", "1", "sqrt5", "1"}, {"1", "1", "1", "1", "1", "sqrt5"}};
  return m;
}

inline const LiteralMatrix& p2_times_2sqrt5() {
  static const LiteralMatrix m{{"sqrt5", "-1", "1", "1", "-1", "-1"}, {"-1", "sqrt5", "-1", "1", "1", "-1"},
                               {"1", "-1", "sqrt5", "-1", "1", "-1"}, {"1", "1", "-1", "sqrt5", "-1", "-1"},
                               {"-1", "1", "1", "-1", "sqrt5", "-1"}, {"-1", "-1", "-1", "-1", "-1", "sqrt5"}};
  return m;
}

// Reducing matrix and parallel projection without their 1/sqrt(2(2+tau)) factor.
inline const LiteralMatrix& r_pattern() {
  static const LiteralMatrix m{{"tau", "1", "0", "tau", "0", "1"},   {"0", "tau", "1", "-1", "tau", "0"},
                               {"-1", "0", "tau", "0", "-1", "tau"}, {"0", "-tau", "1", "1", "tau", "0"},
                               {"tau", "-1", "0", "-tau", "0", "1"}, {"1", "0", "tau", "0", "-1", "-tau"}};
  return m;
}

inline const LiteralMatrix& pi_parallel_pattern() {
  static const LiteralMatrix m{
      {"tau", "0", "-1", "0", "tau", "1"}, {"1", "tau", "0", "-tau", "-1", "0"}, {"0", "1", "tau", "1", "0", "tau"}};
  return m;
}

// Reduced generators of the reference representation, times 2.
inline const LiteralMatrix& t1_g2_times_2() {
  static const LiteralMatrix m{{"tau-1", "1", "tau"}, {"1", "-tau", "tau-1"}, {"tau", "tau-1", "-1"}};
  return m;
}
inline const LiteralMatrix& t2_g2_times_2() {
  static const LiteralMatrix m{{"tau-1", "-tau", "-1"}, {"-tau", "-1", "tau-1"}, {"-1", "tau-1", "-tau"}};
  return m;
}
inline const LiteralMatrix& t1_g3_times_2() {
  static const LiteralMatrix m{{"tau", "tau-1", "1"}, {"1-tau", "-1", "tau"}, {"1", "-tau", "1-tau"}};
  return m;
}
inline const LiteralMatrix& t2_g3_times_2() {
  static const LiteralMatrix m{{"-1", "1-tau", "-tau"}, {"tau-1", "tau", "-1"}, {"tau", "-1", "1-tau"}};
  return m;
}

inline constexpr int kD4Blocks = 12;
inline constexpr int kD4BlockSize = 16;

}  // namespace hexoct::published
