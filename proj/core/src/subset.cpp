#include "fpq/subset.hpp"

namespace fpq {

GroupSubset::GroupSubset(const PrimeField& f, std::uint32_t n, std::uint64_t budget)
    : p_(f.p()), n_(n) {
    bits_.assign(checked_pow(f.p(), n, budget), 0);
}

GroupSubset GroupSubset::from_indices(const PrimeField& f, std::uint32_t n,
                                      const std::vector<std::uint64_t>& indices,
                                      std::uint64_t budget) {
    GroupSubset s(f, n, budget);
    for (auto idx : indices) {
        if (idx >= s.bits_.size()) throw UsageError("subset index out of range");
        s.insert_index(idx);
    }
    return s;
}

GroupSubset GroupSubset::from_points(const PrimeField& f, std::uint32_t n,
                                     const std::vector<Vec>& points, std::uint64_t budget) {
    GroupSubset s(f, n, budget);
    for (const auto& x : points) s.insert_index(point_rank(f, x));
    return s;
}

GroupSubset GroupSubset::full(const PrimeField& f, std::uint32_t n, std::uint64_t budget) {
    GroupSubset s(f, n, budget);
    std::fill(s.bits_.begin(), s.bits_.end(), 1);
    s.size_ = s.bits_.size();
    return s;
}

GroupSubset GroupSubset::from_subspace(const Subspace& sub, std::uint64_t budget) {
    PrimeField f = sub.field();
    GroupSubset s(f, sub.ambient_dim(), budget);
    for_each_point(sub, [&](const Vec& x) { s.insert_index(point_rank(f, x)); }, budget);
    return s;
}

bool GroupSubset::contains(const Vec& x) const {
    return contains_index(point_rank(PrimeField(p_), x));
}

void GroupSubset::insert_index(std::uint64_t idx) {
    if (!bits_[idx]) {
        bits_[idx] = 1;
        ++size_;
    }
}

std::vector<std::uint64_t> GroupSubset::indices() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_);
    for (std::uint64_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

}  // namespace fpq
