#include "primezeta/random_table.hpp"

#include <stdexcept>

namespace primezeta {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::uniform(double a) {
    return static_cast<double>(next() >> 11) * 0x1.0p-53 * a;
}

std::vector<TableRow> generate_table(std::uint64_t seed, int sets,
                                     IndicatorMode mode) {
    if (sets < 1) throw std::invalid_argument("table requires at least one set");
    SplitMix64 master(seed);
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(sets) * kRowsPerSet);
    for (int s = 0; s < sets; ++s) {
        SplitMix64 stream(master.next());
        auto set_rows = generate_set_with(
            [&stream](double a) { return stream.uniform(a); }, s, mode);
        rows.insert(rows.end(), set_rows.begin(), set_rows.end());
    }
    return rows;
}

} // namespace primezeta
