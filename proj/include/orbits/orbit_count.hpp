#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orbits/exact.hpp"

namespace orbits {

// Full row T(n, 0..n!) with the metadata persisted alongside it.
struct RowCache {
    unsigned n = 0;
    std::vector<ExactInt> row;
    int format_version = 1;
    std::string checksum;  // sha256 hex of the serialized header + row lines
};

// Default row limit: the n=7 row has 5041 entries of ~1500-digit integers
// (minutes). n=8 (40321 entries) only behind force_large.
inline constexpr unsigned kRowLimitDefault = 7;
inline constexpr unsigned kRowLimitForced = 8;

// Burnside aggregation over ordered pairs of cycle types:
//   S(k) = sum_{(nu1,nu2)} class_size(nu1) class_size(nu2)
//                          * [x^k] prod_j (1+x^j)^{|T_{nu1,nu2}(j)|/j}.
// Returned before the division by n!^2. The OpenMP kernel; pair contributions
// are independent and the reduction is an exact-integer sum, so the result is
// thread-count independent.
std::vector<ExactInt> burnside_pair_sum(unsigned n, bool force_large = false);
// Straight serial loop over the same pairs, kept as the reference the
// parallel kernel is tested and benchmarked against.
std::vector<ExactInt> burnside_pair_sum_serial(unsigned n, bool force_large = false);

// row[k] = S(k) / n!^2 with the division checked exact at every k, plus the
// structural row invariants (endpoints, symmetry, T(n,2) = p(n)-1).
RowCache compute_row(unsigned n, bool force_large = false);
RowCache compute_row_serial(unsigned n, bool force_large = false);

void validate_row(const RowCache& rc);

// --- persistent cache -------------------------------------------------------
// One file per n under $ORBITS_CACHE (default ./.orbits-cache):
//   orbits-row v1 n=<n>
//   <k> <decimal value>          (one line per k = 0..n!)
//   sha256=<hex of all preceding bytes>
std::string cache_directory();
std::string row_cache_path(unsigned n);
std::string serialize_row(const RowCache& rc);
RowCache parse_row(const std::string& text);  // throws IoError on any mismatch
void save_row(const RowCache& rc);            // temp file + atomic rename
std::optional<RowCache> load_row(unsigned n); // nullopt when absent or invalid

// compute_row behind a read-through disk cache.
RowCache t_row(unsigned n, bool force_large = false);

// T(n,k) via the cached row; for k within the partition-sum budget the value
// is re-derived through the partition-sum evaluator and checked equal.
ExactInt t_value(unsigned n, std::uint64_t k);

}  // namespace orbits
