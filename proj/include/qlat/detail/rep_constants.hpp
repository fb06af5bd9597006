#pragma once

#include <string_view>

namespace qlat::detail {

// Matrix constants in the toolkit text format ("rows cols" header,
// entries n or n/d with d a power of two).

// Single-slot generator images of the rank-4 representation, ordered
// (slot 1, i), (slot 1, j), ..., (slot 4, j).
inline constexpr std::string_view kSlotBasisText[8] = {
R"(16 16
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0
)",
R"(16 16
0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0
0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
)",
R"(16 16
0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0
)",
R"(16 16
0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
)",
R"(16 16
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
)",
R"(16 16
0 0 1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0
)",
R"(16 16
0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
)",
R"(16 16
0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0
)",
};

// The seven generators of the Barnes-Wall automorphism group.
inline constexpr std::string_view kAutGenText[7] = {
R"(16 16
1/2 0 0 -1/2 0 0 0 0 0 0 0 0 0 1/2 1/2 0
0 1/2 -1/2 0 0 0 0 0 0 0 0 0 1/2 0 0 1/2
0 -1/2 1/2 0 0 0 0 0 0 0 0 0 1/2 0 0 1/2
-1/2 0 0 1/2 0 0 0 0 0 0 0 0 0 1/2 1/2 0
0 0 0 0 1/2 0 0 1/2 0 -1/2 1/2 0 0 0 0 0
0 0 0 0 0 1/2 1/2 0 -1/2 0 0 1/2 0 0 0 0
0 0 0 0 0 1/2 1/2 0 1/2 0 0 -1/2 0 0 0 0
0 0 0 0 1/2 0 0 1/2 0 1/2 -1/2 0 0 0 0 0
0 0 0 0 0 -1/2 1/2 0 1/2 0 0 1/2 0 0 0 0
0 0 0 0 -1/2 0 0 1/2 0 1/2 1/2 0 0 0 0 0
0 0 0 0 1/2 0 0 -1/2 0 1/2 1/2 0 0 0 0 0
0 0 0 0 0 1/2 -1/2 0 1/2 0 0 1/2 0 0 0 0
0 1/2 1/2 0 0 0 0 0 0 0 0 0 1/2 0 0 -1/2
1/2 0 0 1/2 0 0 0 0 0 0 0 0 0 1/2 -1/2 0
1/2 0 0 1/2 0 0 0 0 0 0 0 0 0 -1/2 1/2 0
0 1/2 1/2 0 0 0 0 0 0 0 0 0 -1/2 0 0 1/2
)",
R"(16 16
1/2 1/2 1/2 -1/2 0 0 0 0 0 0 0 0 0 0 0 0
1/2 1/2 -1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 0
1/2 -1/2 1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 0
-1/2 1/2 1/2 1/2 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 1/2 -1/2 1/2 1/2 0 0 0 0 0 0 0 0
0 0 0 0 -1/2 1/2 1/2 1/2 0 0 0 0 0 0 0 0
0 0 0 0 1/2 1/2 1/2 -1/2 0 0 0 0 0 0 0 0
0 0 0 0 1/2 1/2 -1/2 1/2 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1/2 1/2 -1/2 1/2 0 0 0 0
0 0 0 0 0 0 0 0 1/2 1/2 1/2 -1/2 0 0 0 0
0 0 0 0 0 0 0 0 -1/2 1/2 1/2 1/2 0 0 0 0
0 0 0 0 0 0 0 0 1/2 -1/2 1/2 1/2 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1/2 -1/2 -1/2 -1/2
0 0 0 0 0 0 0 0 0 0 0 0 -1/2 1/2 -1/2 -1/2
0 0 0 0 0 0 0 0 0 0 0 0 -1/2 -1/2 1/2 -1/2
0 0 0 0 0 0 0 0 0 0 0 0 -1/2 -1/2 -1/2 1/2
)",
R"(16 16
1/2 0 -1/2 0 0 0 0 0 0 0 0 0 0 1/2 0 1/2
0 1/2 0 -1/2 0 0 0 0 0 0 0 0 1/2 0 1/2 0
-1/2 0 1/2 0 0 0 0 0 0 0 0 0 0 1/2 0 1/2
0 -1/2 0 1/2 0 0 0 0 0 0 0 0 1/2 0 1/2 0
0 0 0 0 1/2 0 1/2 0 0 -1/2 0 1/2 0 0 0 0
0 0 0 0 0 1/2 0 1/2 -1/2 0 1/2 0 0 0 0 0
0 0 0 0 1/2 0 1/2 0 0 1/2 0 -1/2 0 0 0 0
0 0 0 0 0 1/2 0 1/2 1/2 0 -1/2 0 0 0 0 0
0 0 0 0 0 -1/2 0 1/2 1/2 0 1/2 0 0 0 0 0
0 0 0 0 -1/2 0 1/2 0 0 1/2 0 1/2 0 0 0 0
0 0 0 0 0 1/2 0 -1/2 1/2 0 1/2 0 0 0 0 0
0 0 0 0 1/2 0 -1/2 0 0 1/2 0 1/2 0 0 0 0
0 1/2 0 1/2 0 0 0 0 0 0 0 0 1/2 0 -1/2 0
1/2 0 1/2 0 0 0 0 0 0 0 0 0 0 1/2 0 -1/2
0 1/2 0 1/2 0 0 0 0 0 0 0 0 -1/2 0 1/2 0
1/2 0 1/2 0 0 0 0 0 0 0 0 0 0 -1/2 0 1/2
)",
R"(16 16
0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 -1 0 0 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
-1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 -1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 -1 0 0 0 0 0 0
)",
R"(16 16
0 0 0 0 1 0 0 0 0 0 0 0 0 0 0 0
0 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 -1 0 0 0 0 0 0 0 0 0
0 0 0 1 0 0 0 0 0 0 0 0 0 0 0 0
1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 0 0 0 0 0 0 0 0 0
0 0 -1 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 -1
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 0
0 0 0 0 0 0 0 0 0 1 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 -1 0 0 0 0
)",
R"(16 16
1/2 0 0 0 0 1/2 0 0 0 0 0 -1/2 0 0 -1/2 0
0 1/2 0 0 -1/2 0 0 0 0 0 -1/2 0 0 0 0 1/2
0 0 1/2 0 0 0 0 1/2 0 1/2 0 0 1/2 0 0 0
0 0 0 1/2 0 0 -1/2 0 1/2 0 0 0 0 -1/2 0 0
0 -1/2 0 0 1/2 0 0 0 0 0 -1/2 0 0 0 0 1/2
1/2 0 0 0 0 1/2 0 0 0 0 0 1/2 0 0 1/2 0
0 0 0 -1/2 0 0 1/2 0 1/2 0 0 0 0 -1/2 0 0
0 0 1/2 0 0 0 0 1/2 0 -1/2 0 0 -1/2 0 0 0
0 0 0 1/2 0 0 1/2 0 1/2 0 0 0 0 1/2 0 0
0 0 1/2 0 0 0 0 -1/2 0 1/2 0 0 -1/2 0 0 0
0 -1/2 0 0 -1/2 0 0 0 0 0 1/2 0 0 0 0 1/2
-1/2 0 0 0 0 1/2 0 0 0 0 0 1/2 0 0 -1/2 0
0 0 1/2 0 0 0 0 -1/2 0 -1/2 0 0 1/2 0 0 0
0 0 0 -1/2 0 0 -1/2 0 1/2 0 0 0 0 1/2 0 0
-1/2 0 0 0 0 1/2 0 0 0 0 0 -1/2 0 0 1/2 0
0 1/2 0 0 1/2 0 0 0 0 0 1/2 0 0 0 0 1/2
)",
R"(16 16
1/2 0 0 0 0 1/2 0 0 0 1/2 0 0 1/2 0 0 0
0 1/2 0 0 1/2 0 0 0 1/2 0 0 0 0 1/2 0 0
0 0 1/2 0 0 0 0 1/2 0 0 0 -1/2 0 0 -1/2 0
0 0 0 1/2 0 0 1/2 0 0 0 -1/2 0 0 0 0 -1/2
0 -1/2 0 0 1/2 0 0 0 1/2 0 0 0 0 -1/2 0 0
-1/2 0 0 0 0 1/2 0 0 0 1/2 0 0 -1/2 0 0 0
0 0 0 -1/2 0 0 1/2 0 0 0 -1/2 0 0 0 0 1/2
0 0 -1/2 0 0 0 0 1/2 0 0 0 -1/2 0 0 1/2 0
0 -1/2 0 0 -1/2 0 0 0 1/2 0 0 0 0 1/2 0 0
-1/2 0 0 0 0 -1/2 0 0 0 1/2 0 0 1/2 0 0 0
0 0 0 1/2 0 0 1/2 0 0 0 1/2 0 0 0 0 1/2
0 0 1/2 0 0 0 0 1/2 0 0 0 1/2 0 0 1/2 0
-1/2 0 0 0 0 1/2 0 0 0 -1/2 0 0 1/2 0 0 0
0 -1/2 0 0 1/2 0 0 0 -1/2 0 0 0 0 1/2 0 0
0 0 1/2 0 0 0 0 -1/2 0 0 0 -1/2 0 0 1/2 0
0 0 0 1/2 0 0 -1/2 0 0 0 -1/2 0 0 0 0 1/2
)",
};

inline constexpr std::string_view kF4BasisText = R"(4 4
1/2 1/2 1/2 1/2
0 1 0 0
0 0 1 0
0 0 0 1
)";

inline constexpr std::string_view kBw16BasisText = R"(16 16
1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4 1/4
0 1/2 0 0 0 0 0 1/2 0 0 0 1/2 0 1/2 0 0
0 0 1/2 0 0 0 0 1/2 0 0 0 1/2 0 0 1/2 0
0 0 0 1/2 0 0 0 1/2 0 0 0 1/2 0 0 0 1/2
0 0 0 0 1/2 0 0 1/2 0 0 0 0 0 1/2 1/2 0
0 0 0 0 0 1/2 0 1/2 0 0 0 0 0 1/2 0 1/2
0 0 0 0 0 0 1/2 1/2 0 0 0 0 0 0 1/2 1/2
0 0 0 0 0 0 0 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1/2 0 0 1/2 0 1/2 1/2 0
0 0 0 0 0 0 0 0 0 1/2 0 1/2 0 1/2 0 1/2
0 0 0 0 0 0 0 0 0 0 1/2 1/2 0 0 1/2 1/2
0 0 0 0 0 0 0 0 0 0 0 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1/2 1/2 1/2 1/2
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1
)";

}  // namespace qlat::detail
