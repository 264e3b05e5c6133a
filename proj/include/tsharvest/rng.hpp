#pragma once

#include <cstdint>
#include <random>

namespace tsh {

// Names one reproducible noise stream. Identical (seed, stream_id) replays
// the identical variate sequence bit-for-bit on the same build; workers get
// distinct stream_ids so ensembles are independent of scheduling.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_id = 0;
};

class Rng {
public:
    explicit Rng(RngStream stream) : gen_(mix(stream)) {}

    double uniform() { return unif_(gen_); }          // U[0,1)
    double normal() { return norm_(gen_); }           // N(0,1)
    long long poisson(double mean) {
        return pois_(gen_, std::poisson_distribution<long long>::param_type(mean));
    }

    std::mt19937_64& raw() { return gen_; }

private:
    // splitmix64 mix of (seed, stream_id) into one well-distributed word
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }
    static std::uint64_t mix(RngStream s) {
        return splitmix(splitmix(s.seed) ^ splitmix(s.stream_id + 0x632BE59BD9B4E019ULL));
    }

    std::mt19937_64 gen_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
    std::normal_distribution<double> norm_{0.0, 1.0};
    std::poisson_distribution<long long> pois_;
};

}  // namespace tsh
