#pragma once

#include <cstdint>
#include <vector>

#include "primezeta/primes.hpp"

namespace primezeta {

/// SplitMix64 pseudo-random stream: 64-bit state advanced by the golden-gamma
/// increment, output tempered by two xor-shift-multiply rounds.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, a): the top 53 output bits scaled by 2^-53 * a.
    double uniform(double a);

  private:
    std::uint64_t state_;
};

/// One emitted row: an odd probe integer, its tuning divisor, and the
/// generator value at the probe (the probe itself when prime, else zero).
struct TableRow {
    int set_index = 0;       ///< which recurrence stream produced the row
    int row_index = 0;       ///< position within the stream, starting at 0
    long long k_param = 0;   ///< per-set divisor K = 1 + floor(rnd(100))
    long long u = 0;         ///< odd probe from the doubling recurrence
    double generated = 0.0;  ///< u at primes, 0 at non-primes
};

inline constexpr int kRowsPerSet = 16;

/// Drive the odd-probe recurrence with an arbitrary rnd(a) -> [0, a) source:
///   K     = 1 + floor(rnd(100))
///   u_0   = 2 * floor(rnd(K / 2)) + 1
///   u_i+1 = 2 * (u_i + floor(rnd(u_i / K))) + 1
/// Each call covers one set of kRowsPerSet rows. A constant-zero source
/// yields K = 1 and the probes 1, 3, 7, 15, ... deterministically.
template <typename Rnd>
std::vector<TableRow> generate_set_with(Rnd&& rnd, int set_index,
                                        IndicatorMode mode = IndicatorMode::optimized) {
    std::vector<TableRow> rows;
    rows.reserve(kRowsPerSet);
    const long long k_param = 1 + static_cast<long long>(rnd(100.0));
    long long u = 2 * static_cast<long long>(rnd(static_cast<double>(k_param) / 2.0)) + 1;
    for (int i = 0; i < kRowsPerSet; ++i) {
        TableRow row{};
        row.set_index = set_index;
        row.row_index = i;
        row.k_param = k_param;
        row.u = u;
        row.generated = generate(static_cast<double>(u), mode);
        rows.push_back(row);
        const long long jump = static_cast<long long>(
            rnd(static_cast<double>(u) / static_cast<double>(k_param)));
        u = 2 * (u + jump) + 1;
    }
    return rows;
}

/// Seeded table: a master SplitMix64 stream hands one sub-seed per set, and
/// each set runs the recurrence on its own stream. Identical (seed, sets)
/// always reproduces the identical table.
std::vector<TableRow> generate_table(std::uint64_t seed, int sets,
                                     IndicatorMode mode = IndicatorMode::optimized);

} // namespace primezeta
