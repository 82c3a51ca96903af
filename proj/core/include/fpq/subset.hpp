#pragma once

#include <cstdint>
#include <vector>

#include "fpq/linalg.hpp"

namespace fpq {

/// Dense subset of the group F_p^n, indexed by row-major base-p point rank.
class GroupSubset {
  public:
    GroupSubset(const PrimeField& f, std::uint32_t n, std::uint64_t budget = kDefaultBudget);

    static GroupSubset from_indices(const PrimeField& f, std::uint32_t n,
                                    const std::vector<std::uint64_t>& indices,
                                    std::uint64_t budget = kDefaultBudget);
    static GroupSubset from_points(const PrimeField& f, std::uint32_t n,
                                   const std::vector<Vec>& points,
                                   std::uint64_t budget = kDefaultBudget);
    static GroupSubset full(const PrimeField& f, std::uint32_t n,
                            std::uint64_t budget = kDefaultBudget);
    static GroupSubset from_subspace(const Subspace& s, std::uint64_t budget = kDefaultBudget);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint64_t group_order() const { return bits_.size(); }
    std::uint64_t size() const { return size_; }
    double density() const {
        return static_cast<double>(size_) / static_cast<double>(bits_.size());
    }

    bool contains_index(std::uint64_t idx) const { return bits_[idx] != 0; }
    bool contains(const Vec& x) const;
    void insert_index(std::uint64_t idx);

    std::vector<std::uint64_t> indices() const;

  private:
    std::uint32_t p_;
    std::uint32_t n_;
    std::vector<std::uint8_t> bits_;
    std::uint64_t size_ = 0;
};

}  // namespace fpq
