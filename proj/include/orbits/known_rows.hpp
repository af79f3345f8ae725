#pragma once

#include <cstdint>

namespace orbits {

// Reference orbit counts for tiny n, used by `verify table` and the test
// suites. kKnownRow4Half holds k = 0..12; the row is symmetric about n!/2.
inline constexpr std::uint64_t kKnownRow3[7] = {1, 1, 2, 2, 2, 1, 1};
inline constexpr std::uint64_t kKnownRow4Half[13] = {1,    1,    4,    10,   41,   103,  309,
                                                     691,  1458, 2448, 3703, 4587, 5050};

}  // namespace orbits
