#pragma once

#include <json.hpp>

#include "fpq/family.hpp"
#include "fpq/quadform.hpp"
#include "fpq/subset.hpp"

namespace fpq {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const ordered_json& j);

ordered_json to_json(const Subspace& s);
Subspace subspace_from_json(const PrimeField& f, const ordered_json& j);

ordered_json to_json(const AffineSubspace& s);
AffineSubspace affine_from_json(const PrimeField& f, const ordered_json& j);

ordered_json to_json(const ValueTable& t);
ValueTable table_from_json(const ordered_json& j);

ordered_json to_json(const GroupSubset& s);
GroupSubset subset_from_json(const ordered_json& j);

ordered_json to_json(const LinearForm& f);
ordered_json to_json(const RankCertificate& c);

ordered_json to_json(const QuadFamily& fam);
QuadFamily family_from_json(const ordered_json& j);

}  // namespace fpq
