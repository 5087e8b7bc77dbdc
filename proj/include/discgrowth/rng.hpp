#ifndef DISCGROWTH_RNG_HPP
#define DISCGROWTH_RNG_HPP

#include <cstdint>
#include <random>

namespace discgrowth {

// Deterministic uniform sampling on top of mt19937_64.  The standard
// distributions are implementation-defined, so verdicts would not be
// reproducible across standard libraries; these helpers are fully pinned.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    std::uint64_t bits() { return engine_(); }

    std::uint64_t index(std::uint64_t n) { return engine_() % n; }

private:
    std::mt19937_64 engine_;
};

} // namespace discgrowth

#endif
