#include "fpq/sumset.hpp"

#include <cmath>
#include <complex>

namespace fpq {

namespace {

using cplx = std::complex<long double>;

// In-place multidimensional group DFT; sign = -1 forward, +1 inverse (no
// normalization).
void group_dft(const PrimeField& f, std::uint32_t n, std::vector<cplx>& a, int sign) {
    const std::uint32_t p = f.p();
    const long double tau = 2.0L * std::acos(-1.0L);
    std::vector<cplx> roots(p);
    for (std::uint32_t k = 0; k < p; ++k)
        roots[k] = cplx(std::cos(tau * k / p), sign * std::sin(tau * k / p));
    std::uint64_t size = a.size();
    std::uint64_t stride = size / p;
    std::vector<cplx> slice(p), spec(p);
    for (std::uint32_t axis = 0; axis < n; ++axis) {
        std::uint64_t block = stride * p;
        for (std::uint64_t base = 0; base < size; base += block) {
            for (std::uint64_t off = 0; off < stride; ++off) {
                for (std::uint32_t v = 0; v < p; ++v) slice[v] = a[base + off + v * stride];
                for (std::uint32_t k = 0; k < p; ++k) {
                    cplx acc = 0;
                    for (std::uint32_t v = 0; v < p; ++v)
                        acc += slice[v] * roots[(k * v) % p];
                    spec[k] = acc;
                }
                for (std::uint32_t k = 0; k < p; ++k) a[base + off + k * stride] = spec[k];
            }
        }
        stride /= p;
    }
}

}  // namespace

std::vector<std::uint64_t> convolve_direct(const PrimeField& f, std::uint32_t n,
                                           const std::vector<std::uint64_t>& a,
                                           const std::vector<std::uint64_t>& b) {
    const std::uint64_t size = a.size();
    std::vector<std::uint64_t> out(size, 0);
    for (std::uint64_t s = 0; s < size; ++s) {
        if (a[s] == 0) continue;
        for (std::uint64_t t = 0; t < size; ++t) {
            if (b[t] == 0) continue;
            out[rank_add(f, n, s, t)] += a[s] * b[t];
        }
    }
    return out;
}

std::vector<std::uint64_t> convolve_via_dft(const PrimeField& f, std::uint32_t n,
                                            const std::vector<std::uint64_t>& a,
                                            const std::vector<std::uint64_t>& b) {
    const std::uint64_t size = a.size();
    std::vector<cplx> fa(size), fb(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        fa[i] = static_cast<long double>(a[i]);
        fb[i] = static_cast<long double>(b[i]);
    }
    group_dft(f, n, fa, -1);
    group_dft(f, n, fb, -1);
    for (std::uint64_t i = 0; i < size; ++i) fa[i] *= fb[i];
    group_dft(f, n, fa, +1);
    std::vector<std::uint64_t> out(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        long double v = fa[i].real() / static_cast<long double>(size);
        long double r = std::round(v);
        if (std::fabs(v - r) >= 0.5L)
            throw std::logic_error("DFT convolution rounding guard exceeded");
        out[i] = static_cast<std::uint64_t>(r);
    }
    return out;
}

RepProfile rep_counts(const GroupSubset& e, std::uint32_t b, std::uint64_t budget) {
    if (b < 1 || b > 3) throw UsageError("rep_counts: b must be in [1, 3]");
    PrimeField f(e.p());
    const std::uint64_t size = e.group_order();
    // direct convolution is O(size^2) per step
    if (size > budget || size * size > 64 * budget)
        throw BudgetError("rep_counts: group order " + std::to_string(size) +
                          " too large for exact convolution budget");
    std::vector<std::uint64_t> ind(size, 0);
    for (std::uint64_t i = 0; i < size; ++i) ind[i] = e.contains_index(i) ? 1 : 0;

    std::vector<std::uint64_t> acc = ind;  // 1_E^{*b}
    for (std::uint32_t i = 1; i < b; ++i) acc = convolve_direct(f, e.n(), acc, ind);
    std::vector<std::uint64_t> refl(size);
    for (std::uint64_t i = 0; i < size; ++i) refl[rank_neg(f, e.n(), i)] = acc[i];

    RepProfile prof;
    prof.b = b;
    prof.counts = convolve_direct(f, e.n(), acc, refl);
    return prof;
}

std::vector<Vec> spectrum(const GroupSubset& e, double gamma) {
    if (gamma <= 0) throw UsageError("spectrum: gamma must be positive");
    PrimeField f(e.p());
    const std::uint64_t size = e.group_order();
    std::vector<cplx> a(size);
    for (std::uint64_t i = 0; i < size; ++i)
        a[i] = e.contains_index(i) ? 1.0L : 0.0L;
    group_dft(f, e.n(), a, -1);
    const long double threshold =
        static_cast<long double>(gamma) * static_cast<long double>(e.size()) - 1e-9L;
    std::vector<Vec> out;
    out.push_back(Vec(e.n(), 0));
    for (std::uint64_t i = 1; i < size; ++i)
        if (std::abs(a[i]) >= threshold) out.push_back(point_unrank(f, e.n(), i));
    return out;
}

std::optional<BogolyubovResult> bogolyubov_search(const GroupSubset& e, std::uint32_t max_b,
                                                  std::uint32_t max_codim,
                                                  std::uint64_t budget) {
    if (e.size() == 0) throw UsageError("bogolyubov_search: empty set");
    PrimeField f(e.p());
    double mu = e.density();
    auto spec = spectrum(e, std::sqrt(mu / 2.0));
    Mat spec_rows(spec.begin(), spec.end());
    Subspace u = Subspace::from_vectors(f, e.n(),
                                        null_space(f, spec_rows, e.n()));
    if (u.codim() > max_codim) return std::nullopt;
    for (std::uint32_t b = 1; b <= max_b; ++b) {
        RepProfile prof = rep_counts(e, b, budget);
        std::uint64_t min_reps = UINT64_MAX;
        bool all_positive = true;
        for_each_point(u, [&](const Vec& t) {
            std::uint64_t c = prof.counts[point_rank(f, t)];
            if (c == 0) all_positive = false;
            min_reps = std::min(min_reps, c);
        }, budget);
        if (!all_positive) continue;
        BogolyubovResult res{true, b, u, min_reps, 0.0,
                             static_cast<std::uint32_t>(spec.size())};
        double denom = 1.0;
        std::uint64_t usize = checked_pow(f.p(), u.dim(), budget);
        for (std::uint32_t i = 0; i + 1 < 2 * b; ++i) denom *= static_cast<double>(usize);
        res.c_ratio = static_cast<double>(min_reps) / denom;
        return res;
    }
    return std::nullopt;
}

}  // namespace fpq
