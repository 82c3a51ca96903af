#pragma once

#include <cstdint>
#include <vector>

#include "fpq/quadform.hpp"

namespace fpq {

struct DirectionReport {
    Vec direction;
    bool found = false;        // some presentation with at most `cap` products
    std::uint32_t width = 0;   // minimal number of linear forms used
};

/// Quadratic pool extracted from derivative presentations. The invariant the
/// pipeline relies on: for every direction marked found, the cubic part of
/// D_y f lies in the ideal generated by the pool.
struct ExtractResult {
    std::vector<Polynomial> pool;  // homogeneous quadratics, canonical span basis
    std::vector<DirectionReport> directions;
    bool complete = false;
};

// Presentation hunt per direction y (a basis plus 2n seeded samples): find the
// smallest r <= cap such that the cubic part of D_y f lies in the ideal of an
// r-dimensional space of linear forms (enumerated projectively over RREF
// bases), then read quadratic multipliers off a canonical division. The
// collected pool is deduplicated modulo linear span and then minimized while
// it keeps covering every direction's cubic.
ExtractResult extract_quadratic_pool(const Polynomial& f, std::uint32_t cap,
                                     std::uint64_t seed = 0x5eedULL,
                                     std::uint64_t budget = kDefaultBudget);

// Membership of a homogeneous cubic in the degree-3 part of the ideal
// generated by homogeneous quadratics (a linear solve).
bool cubic_in_quadratic_ideal(const Polynomial& cubic,
                              const std::vector<Polynomial>& quads);

// Homogeneous cubic part of D_y f.
Polynomial derivative_cubic_slice(const Polynomial& f, const Vec& y);

}  // namespace fpq
