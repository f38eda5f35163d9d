#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "rlab/spectral.hpp"

namespace rlab {

// splitmix64 step; used to derive independent substreams from (seed, index)
// so parallel instance evaluation stays reproducible.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), base_seed_(seed) {}

    Rng substream(std::uint64_t index) const { return Rng(derive_seed(base_seed_, index)); }

    double uniform(double lo, double hi);
    double normal();
    int uniform_int(int lo, int hi);  // inclusive bounds
    cplx complex_normal();

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t base_seed_ = 0;
};

// Complex Ginibre matrix (iid standard complex normal entries).
Mat ginibre(Rng& rng, int n);

// Haar-distributed unitary via QR of a Ginibre matrix with the diagonal phase
// fix.
Mat haar_unitary(Rng& rng, int n);
Operator haar_unitary_operator(Rng& rng, const AlgebraPtr& alg);

struct DensityOptions {
    double spectrum_min = 0.05;
    double spectrum_max = 1.0;
    bool degenerate = false;     // force at least one eigenvalue collision
    bool normalize_trace = true; // scale to tau(h) = 1
};

// Density with uniformly sampled eigenvalues on [spectrum_min, spectrum_max]
// and a Haar-random eigenbasis per block.
Density random_density(Rng& rng, const AlgebraPtr& alg, const DensityOptions& opts = {});

// PSD element g g* / n (not trace-normalized).
HermitianOperator random_psd(Rng& rng, const AlgebraPtr& alg);

HermitianOperator random_hermitian(Rng& rng, const AlgebraPtr& alg, double scale = 1.0);

}  // namespace rlab
