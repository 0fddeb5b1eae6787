#pragma once

#include "varbench/stats.hpp"

namespace varbench {

// Bucket/count distribution of the full-scale reference campaign
// (1,431,167 measurements, floor-bucketed improvement factors). Shipped as
// a replay fixture: expanding it through the statistics pipeline must
// reproduce the campaign's published aggregates within the documented
// tolerances.
inline const ReplayFixture& full_scale_replay_fixture() {
  static const ReplayFixture fixture{{
    {0, 0}, {1, 1}, {2, 15}, {3, 73}, {4, 206},
    {5, 347}, {6, 554}, {7, 941}, {8, 1267}, {9, 1744},
    {10, 2237}, {11, 2700}, {12, 3261}, {13, 3865}, {14, 4680},
    {15, 5099}, {16, 5706}, {17, 6308}, {18, 6867}, {19, 7373},
    {20, 7745}, {21, 8538}, {22, 9697}, {23, 10550}, {24, 10197},
    {25, 10578}, {26, 11198}, {27, 12213}, {28, 14516}, {29, 17100},
    {30, 18408}, {31, 19757}, {32, 20334}, {33, 25315}, {34, 34979},
    {35, 50686}, {36, 75008}, {37, 74050}, {38, 67220}, {39, 111896},
    {40, 204995}, {41, 198600}, {42, 107758}, {43, 41314}, {44, 20683},
    {45, 12754}, {46, 9901}, {47, 10292}, {48, 15058}, {49, 25051},
    {50, 29930}, {51, 25890}, {52, 20040}, {53, 14809}, {54, 10833},
    {55, 7644}, {56, 4931}, {57, 2780}, {58, 1446}, {59, 692},
    {60, 399}, {61, 313}, {62, 234}, {63, 206}, {64, 171},
    {65, 147}, {66, 132}, {67, 121}, {68, 91}, {69, 63},
    {70, 94}, {71, 123}, {72, 128}, {73, 120}, {74, 96},
    {75, 39}, {76, 24}, {77, 13}, {78, 8}, {79, 2},
    {80, 2}, {81, 1}, {82, 3}, {83, 0}, {84, 0},
    {85, 2}, {86, 1}, {87, 0}, {88, 0}, {89, 1},
    {90, 0}, {91, 0}, {92, 2}, {93, 0}, {94, 0},
    {95, 0}, {96, 0}, {97, 0}, {98, 1}, {99, 0}
  }};
  return fixture;
}

}  // namespace varbench
