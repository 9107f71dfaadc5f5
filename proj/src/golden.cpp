#include "breadthlab/golden.hpp"

#include <array>

namespace breadthlab::golden {

namespace {

// d, c_d, |L_d|, b_d
constexpr std::array<BreadthRow, 23> kPsl2_9{{
    {1, 1, 1, 1},      {2, 45, 46, 23},   {3, 40, 81, 27},   {4, 45, 136, 34},  {5, 36, 145, 29},
    {6, 0, 126, 21},   {8, 0, 136, 17},   {9, 0, 81, 9},     {10, 0, 190, 19},  {12, 0, 216, 18},
    {15, 0, 225, 15},  {18, 0, 126, 7},   {20, 0, 280, 14},  {24, 0, 216, 9},   {30, 0, 270, 9},
    {36, 0, 216, 6},   {40, 0, 280, 7},   {60, 0, 360, 6},   {72, 0, 216, 3},   {90, 0, 270, 3},
    {120, 0, 360, 3},  {180, 0, 360, 2},  {360, 0, 360, 1},
}};

// Row order as in the reference. Its c_d cells for d = 5, 13, 65 read 2080;
// the census gives 2016.
constexpr std::array<BreadthRow, 19> kPgl2_64{{
    {1, 1, 1, 1},           {2, 4095, 4096, 2048},   {3, 2080, 4161, 1387},  {5, 2080, 8065, 1613},
    {7, 2080, 12481, 1783}, {9, 2080, 16641, 1849},  {13, 2080, 24193, 1861}, {21, 2080, 41601, 1981},
    {63, 2080, 128961, 2047}, {65, 2080, 129025, 1985}, {4, 0, 4096, 1024},  {8, 0, 4096, 512},
    {16, 0, 4096, 256},     {32, 0, 4096, 128},      {64, 0, 4096, 64},      {6, 0, 8256, 1376},
    {12, 0, 8256, 688},     {15, 0, 12225, 815},     {18, 0, 20736, 1152},
}};

constexpr std::array<BreadthSpot, 11> kBreadthList{{
    {"dihedral:6", 2}, {"alt:4", 3}, {"dihedral:8", 3}, {"dihedral:10", 3}, {"dihedral:14", 4}, {"hol:5", 4},
    {"sym:4", 5},      {"hol:7", 6}, {"gl23", 7},       {"aff:8", 7},       {"alt:5", 8},
}};

constexpr std::array<std::pair<u64, u64>, 7> kFrobenius{{
    {5, 4}, {7, 6}, {7, 3}, {9, 8}, {13, 4}, {13, 6}, {13, 12},
}};

constexpr std::array<u64, 10> kPsl2Q{4, 5, 7, 8, 9, 11, 13, 16, 25, 27};
constexpr std::array<u64, 8> kPgl2Q{5, 7, 8, 9, 11, 13, 16, 64};
constexpr std::array<u64, 1> kSuzukiQ{8};

}  // namespace

std::span<const BreadthRow> psl2_9_rows() { return kPsl2_9; }
std::span<const BreadthRow> pgl2_64_rows() { return kPgl2_64; }
std::span<const BreadthSpot> breadth_list() { return kBreadthList; }
std::span<const std::pair<u64, u64>> frobenius_instances() { return kFrobenius; }

std::span<const u64> closed_form_q(ClosedFormFamily f) {
  switch (f) {
    case ClosedFormFamily::psl2: return kPsl2Q;
    case ClosedFormFamily::pgl2: return kPgl2Q;
    case ClosedFormFamily::suzuki: return kSuzukiQ;
  }
  return {};
}

}  // namespace breadthlab::golden
