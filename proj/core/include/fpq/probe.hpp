#pragma once

#include <cstdint>
#include <vector>

#include "fpq/poly.hpp"

namespace fpq {

/// Exhaustive bounded search for presentations f = sum g_i h_i + g_0 with
/// deg(g_i), deg(h_i) < deg(f) over normalized factor shapes: each g_i is
/// monic in graded-lex order and the degree splits searched are (1, d-1) and
/// (2, d-2). A value result certifies that no presentation with fewer
/// products exists within this normal form.
struct RankProbe {
    enum class Status { kExact, kGreaterThanCap, kUnknownBudget };
    Status status = Status::kUnknownBudget;
    std::uint32_t rank = 0;
    std::vector<std::pair<Polynomial, Polynomial>> products;
};

RankProbe bounded_schmidt_rank(const Polynomial& f, std::uint32_t cap,
                               std::uint64_t budget = kDefaultBudget);

// Graded-lex ordered list of all monomials of total degree <= d in n vars.
std::vector<Monomial> monomials_up_to(std::uint32_t n, std::uint32_t d);

}  // namespace fpq
