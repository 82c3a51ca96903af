#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fpq/subset.hpp"

namespace fpq {

/// Exact representation counts r_b(t) = #{ t = y_1+..+y_b - z_1-..-z_b, y,z in E }.
struct RepProfile {
    std::uint32_t b = 0;
    std::vector<std::uint64_t> counts;  // indexed by point rank
};

// Exact integer group convolution (a * b)[t] = sum_s a[s] b[t - s] over F_p^n.
std::vector<std::uint64_t> convolve_direct(const PrimeField& f, std::uint32_t n,
                                           const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b);
// Same values via the group Fourier transform, rounded from extended-precision
// complex arithmetic (guard < 0.5). Exposed so exactness can be cross-checked.
std::vector<std::uint64_t> convolve_via_dft(const PrimeField& f, std::uint32_t n,
                                            const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b);

RepProfile rep_counts(const GroupSubset& e, std::uint32_t b,
                      std::uint64_t budget = kDefaultBudget);

// All frequencies xi with |hat(1_E)(xi)| >= gamma * |E| (1e-9 guard band);
// always contains xi = 0.
std::vector<Vec> spectrum(const GroupSubset& e, double gamma);

struct BogolyubovResult {
    bool found = false;
    std::uint32_t b = 0;
    Subspace subspace;
    std::uint64_t min_reps = 0;
    double c_ratio = 0;  // min_reps / |U|^(2b-1)
    std::uint32_t spectrum_size = 0;
};

// Escalates b = 1..max_b with U = annihilator(span(spectrum(E, sqrt(mu/2)))).
// Returns only after exhaustively verifying r_b(t) > 0 for every t in U; a
// none-result is a legitimate reported outcome.
std::optional<BogolyubovResult> bogolyubov_search(const GroupSubset& e, std::uint32_t max_b,
                                                  std::uint32_t max_codim,
                                                  std::uint64_t budget = kDefaultBudget);

}  // namespace fpq
