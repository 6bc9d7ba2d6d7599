#pragma once

#include <cmath>
#include <cstdint>

namespace qaskey::detail {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream: draw i of sample `index` in stream `stream` depends
// only on (seed, stream, index, i), so samples can be generated in any order.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index)
        : key_(splitmix64(splitmix64(seed) ^ splitmix64((stream << 32) ^ index))) {}

    std::uint64_t next() { return splitmix64(key_ + 0x632be59bd9b4e019ULL * ++counter_); }

    // [0, 1)
    double uniform() { return double(next() >> 11) * 0x1p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    double log_uniform(double lo, double hi) {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }
    // uniform integer in [lo, hi]
    int integer(int lo, int hi) { return lo + int(next() % std::uint64_t(hi - lo + 1)); }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace qaskey::detail
