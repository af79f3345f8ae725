#include "orbits/orbit_count.hpp"

#include <omp.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "orbits/partitions.hpp"
#include "orbits/perm.hpp"
#include "orbits/profile.hpp"
#include "orbits/sha256.hpp"

namespace orbits {

namespace {

void check_row_request(unsigned n, bool force_large) {
    if (n < 1) throw std::invalid_argument("row computation requires n >= 1");
    const unsigned limit = force_large ? kRowLimitForced : kRowLimitDefault;
    if (n > limit)
        throw ResourceError("row computation refused: n=" + std::to_string(n) + " exceeds limit " +
                            std::to_string(limit) +
                            (force_large ? "" : " (use force to allow n=8)"));
}

// One ordered pair's weighted contribution to S(0..n!).
void add_pair_contribution(const Partition& nu1, const Partition& nu2, const ExactInt& weight,
                           std::uint64_t nf, std::vector<ExactInt>& sum) {
    PeriodProfile prof = profile_pair(nu1, nu2);
    std::vector<ExactInt> row = fixed_count_genfun(prof, nf);
    for (std::uint64_t k = 0; k <= nf; ++k)
        if (row[k] != 0) sum[k] += weight * row[k];
}

}  // namespace

std::vector<ExactInt> burnside_pair_sum_serial(unsigned n, bool force_large) {
    check_row_request(n, force_large);
    const std::uint64_t nf = factorial_u64(n);
    const std::vector<Partition> types = enumerate_partitions(n);
    std::vector<ExactInt> sizes(types.size());
    for (std::size_t i = 0; i < types.size(); ++i) sizes[i] = class_size(types[i]);

    std::vector<ExactInt> sum(nf + 1);
    for (std::size_t i = 0; i < types.size(); ++i)
        for (std::size_t j = 0; j < types.size(); ++j)
            add_pair_contribution(types[i], types[j], sizes[i] * sizes[j], nf, sum);
    return sum;
}

std::vector<ExactInt> burnside_pair_sum(unsigned n, bool force_large) {
    check_row_request(n, force_large);
    const std::uint64_t nf = factorial_u64(n);
    const std::vector<Partition> types = enumerate_partitions(n);
    const std::size_t count = types.size();
    std::vector<ExactInt> sizes(count);
    for (std::size_t i = 0; i < count; ++i) sizes[i] = class_size(types[i]);

    std::vector<ExactInt> sum(nf + 1);
#pragma omp parallel
    {
        std::vector<ExactInt> local(nf + 1);
#pragma omp for schedule(dynamic) nowait
        for (long long idx = 0; idx < static_cast<long long>(count * count); ++idx) {
            const std::size_t i = static_cast<std::size_t>(idx) / count;
            const std::size_t j = static_cast<std::size_t>(idx) % count;
            add_pair_contribution(types[i], types[j], sizes[i] * sizes[j], nf, local);
        }
#pragma omp critical(orbits_row_merge)
        {
            for (std::uint64_t k = 0; k <= nf; ++k)
                if (local[k] != 0) sum[k] += local[k];
        }
    }
    return sum;
}

namespace {

std::string row_body(const RowCache& rc) {
    std::string body = "orbits-row v" + std::to_string(rc.format_version) +
                       " n=" + std::to_string(rc.n) + "\n";
    for (std::size_t k = 0; k < rc.row.size(); ++k)
        body += std::to_string(k) + " " + rc.row[k].get_str() + "\n";
    return body;
}

RowCache row_from_sum(unsigned n, std::vector<ExactInt> sum) {
    const std::uint64_t nf = factorial_u64(n);
    const ExactInt nf2 = factorial(n) * factorial(n);
    RowCache rc;
    rc.n = n;
    rc.row.resize(nf + 1);
    for (std::uint64_t k = 0; k <= nf; ++k)
        rc.row[k] = exact_div(sum[k], nf2);  // Burnside: the sum is divisible by |G| = n!^2
    validate_row(rc);
    rc.checksum = Sha256::hex(row_body(rc));
    return rc;
}

}  // namespace

RowCache compute_row(unsigned n, bool force_large) {
    return row_from_sum(n, burnside_pair_sum(n, force_large));
}

RowCache compute_row_serial(unsigned n, bool force_large) {
    return row_from_sum(n, burnside_pair_sum_serial(n, force_large));
}

void validate_row(const RowCache& rc) {
    const std::uint64_t nf = factorial_u64(rc.n);
    internal_check(rc.row.size() == nf + 1, "row: wrong length");
    internal_check(rc.row[0] == 1 && rc.row[nf] == 1, "row: endpoints must be 1");
    internal_check(rc.row[1] == 1, "row: T(n,1) must be 1");
    if (nf >= 2)
        internal_check(rc.row[2] == ExactInt(static_cast<unsigned long>(partition_count(rc.n)) - 1),
                       "row: T(n,2) must equal p(n)-1");
    for (std::uint64_t k = 0; k <= nf / 2; ++k)
        internal_check(rc.row[k] == rc.row[nf - k], "row: T(n,k) != T(n,n!-k)");
}

std::string cache_directory() {
    if (const char* env = std::getenv("ORBITS_CACHE"); env && *env) return env;
    return "./.orbits-cache";
}

std::string row_cache_path(unsigned n) {
    return cache_directory() + "/row-n" + std::to_string(n) + ".txt";
}

std::string serialize_row(const RowCache& rc) {
    std::string body = row_body(rc);
    return body + "sha256=" + Sha256::hex(body) + "\n";
}

RowCache parse_row(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw IoError("row cache: empty file");
    unsigned n = 0;
    if (std::sscanf(line.c_str(), "orbits-row v1 n=%u", &n) != 1)
        throw IoError("row cache: bad header '" + line + "'");
    if (n < 1 || n > kRowLimitForced) throw IoError("row cache: n out of range");
    std::string body = line + "\n";

    RowCache rc;
    rc.n = n;
    const std::uint64_t nf = factorial_u64(n);
    rc.row.reserve(nf + 1);
    for (std::uint64_t k = 0; k <= nf; ++k) {
        if (!std::getline(in, line)) throw IoError("row cache: truncated row");
        std::size_t space = line.find(' ');
        if (space == std::string::npos || line.substr(0, space) != std::to_string(k))
            throw IoError("row cache: bad row line '" + line + "'");
        ExactInt v;
        if (mpz_set_str(v.get_mpz_t(), line.c_str() + space + 1, 10) != 0)
            throw IoError("row cache: bad value in line '" + line + "'");
        rc.row.push_back(std::move(v));
        body += line + "\n";
    }
    if (!std::getline(in, line) || line.rfind("sha256=", 0) != 0)
        throw IoError("row cache: missing checksum line");
    rc.checksum = line.substr(7);
    if (rc.checksum != Sha256::hex(body)) throw IoError("row cache: checksum mismatch");
    if (std::getline(in, line) && !line.empty()) throw IoError("row cache: trailing data");
    validate_row(rc);
    return rc;
}

void save_row(const RowCache& rc) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(cache_directory(), ec);
    if (ec) throw IoError("cannot create cache directory " + cache_directory());

    const std::string path = row_cache_path(rc.n);
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << serialize_row(rc);
        if (!out) throw IoError("cannot write " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw IoError("cannot rename " + tmp + " to " + path);
    }
}

std::optional<RowCache> load_row(unsigned n) {
    std::ifstream in(row_cache_path(n), std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_row(buf.str());
    } catch (const std::exception& e) {
        std::fprintf(stderr, "warning: ignoring cache %s: %s\n", row_cache_path(n).c_str(),
                     e.what());
        return std::nullopt;
    }
}

RowCache t_row(unsigned n, bool force_large) {
    check_row_request(n, force_large);
    if (auto cached = load_row(n)) return std::move(*cached);
    RowCache rc = compute_row(n, force_large);
    try {
        save_row(rc);
    } catch (const IoError& e) {
        std::fprintf(stderr, "warning: %s\n", e.what());  // cache is best effort
    }
    return rc;
}

ExactInt t_value(unsigned n, std::uint64_t k) {
    if (n < 1) throw std::invalid_argument("t_value requires n >= 1");
    const std::uint64_t nf = factorial_u64(n);
    if (k > nf) throw std::invalid_argument("t_value: k out of range [0, n!]");
    RowCache rc = t_row(n);
    ExactInt value = rc.row[k];

    if (k <= kPartitionSumKLimit) {
        // Independent route: partition-sum evaluator per pair.
        const std::vector<Partition> types = enumerate_partitions(n);
        std::vector<ExactInt> sizes(types.size());
        for (std::size_t i = 0; i < types.size(); ++i) sizes[i] = class_size(types[i]);
        ExactInt sum = 0;
        for (std::size_t i = 0; i < types.size(); ++i)
            for (std::size_t j = 0; j < types.size(); ++j)
                sum += sizes[i] * sizes[j] *
                       fixed_count_partition_sum(profile_pair(types[i], types[j]), k);
        internal_check(exact_div(sum, factorial(n) * factorial(n)) == value,
                       "t_value: partition-sum route disagrees with the row");
    }
    return value;
}

}  // namespace orbits
