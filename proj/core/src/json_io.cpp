#include "fpq/json_io.hpp"

namespace fpq {

ordered_json to_json(const Polynomial& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        ordered_json t;
        t["coef"] = c;
        t["exps"] = std::vector<int>(m.exps.begin(), m.exps.end());
        terms.push_back(std::move(t));
    }
    return ordered_json{{"p", p.p()}, {"n", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const ordered_json& j) {
    PrimeField f(j.at("p").get<std::uint32_t>());
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    Polynomial out(f, n);
    for (const auto& t : j.at("terms")) {
        auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
        if (exps.size() != n) throw UsageError("polynomial json: exps arity mismatch");
        Monomial m{std::vector<std::uint8_t>(exps.begin(), exps.end())};
        out.add_term(std::move(m), t.at("coef").get<Scalar>());
    }
    return out;
}

ordered_json to_json(const Subspace& s) {
    return ordered_json{{"ambient", s.ambient_dim()}, {"basis", s.basis()}};
}

Subspace subspace_from_json(const PrimeField& f, const ordered_json& j) {
    std::uint32_t n = j.at("ambient").get<std::uint32_t>();
    Mat rows = j.at("basis").get<Mat>();
    return Subspace::from_vectors(f, n, std::move(rows));
}

ordered_json to_json(const AffineSubspace& s) {
    return ordered_json{{"offset", s.offset}, {"direction", to_json(s.direction)}};
}

AffineSubspace affine_from_json(const PrimeField& f, const ordered_json& j) {
    return AffineSubspace(j.at("offset").get<Vec>(),
                          subspace_from_json(f, j.at("direction")));
}

ordered_json to_json(const ValueTable& t) {
    return ordered_json{{"p", t.p}, {"n", t.n}, {"values", t.values}};
}

ValueTable table_from_json(const ordered_json& j) {
    ValueTable t;
    t.p = j.at("p").get<std::uint32_t>();
    t.n = j.at("n").get<std::uint32_t>();
    t.values = j.at("values").get<std::vector<Scalar>>();
    return t;
}

ordered_json to_json(const GroupSubset& s) {
    return ordered_json{{"p", s.p()}, {"n", s.n()}, {"points", s.indices()}};
}

GroupSubset subset_from_json(const ordered_json& j) {
    PrimeField f(j.at("p").get<std::uint32_t>());
    return GroupSubset::from_indices(f, j.at("n").get<std::uint32_t>(),
                                     j.at("points").get<std::vector<std::uint64_t>>());
}

ordered_json to_json(const LinearForm& f) {
    return ordered_json{{"coeffs", f.coeffs}, {"constant", f.constant}};
}

ordered_json to_json(const RankCertificate& c) {
    ordered_json factors = ordered_json::array();
    for (const auto& [a, b] : c.factors)
        factors.push_back(ordered_json::array({to_json(a), to_json(b)}));
    return ordered_json{{"m", c.gram_rank},
                        {"witt", witt_name(c.witt)},
                        {"r", c.schmidt_rank},
                        {"factors", factors},
                        {"remainder", to_json(c.remainder)}};
}

ordered_json to_json(const QuadFamily& fam) {
    ordered_json quads = ordered_json::array();
    for (const auto& q : fam.quads) quads.push_back(to_json(q.to_poly()));
    return ordered_json{{"p", fam.field().p()},
                        {"n", fam.nvars()},
                        {"quads", quads},
                        {"ambient", to_json(fam.ambient)}};
}

QuadFamily family_from_json(const ordered_json& j) {
    PrimeField f(j.at("p").get<std::uint32_t>());
    std::uint32_t n = j.at("n").get<std::uint32_t>();
    std::vector<QuadraticPoly> quads;
    for (const auto& q : j.at("quads"))
        quads.push_back(QuadraticPoly::from_poly(polynomial_from_json(q)));
    Subspace amb = j.contains("ambient") ? subspace_from_json(f, j.at("ambient"))
                                         : Subspace::full(f, n);
    return QuadFamily(std::move(quads), std::move(amb));
}

}  // namespace fpq
