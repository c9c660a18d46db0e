#ifndef LIECOH_JSON_IO_HPP
#define LIECOH_JSON_IO_HPP

#include <json.hpp>

#include "liecoh/cochain.hpp"
#include "liecoh/equivariance.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/subspace.hpp"

namespace liecoh {

using Json = nlohmann::ordered_json;

/// Structure-constant wire format, bit-exact:
///   {"dim": n, "labels": [...],
///    "brackets": [{"i": int, "j": int,
///                  "terms": [{"k": int, "num": "...", "den": "..."}]}]}
/// with i < j, decimal-string num/den, den > 0, gcd(num, den) = 1, terms
/// sorted by k and brackets sorted by (i, j).
Json algebra_to_json(const LieAlgebra& L);
LieAlgebra algebra_from_json(const Json& j, bool defer_validation = false);

Json basis_to_json(const SubspaceBasis& b);

Json cohomology_to_json(const std::string& algebra_label, const std::string& coefficients,
                        const CohomologyReport& rep);
Json invariant_to_json(const std::string& algebra_label, const std::string& coefficients,
                       const InvariantReport& rep);
Json hs_to_json(const std::string& algebra_label, const std::string& coefficients,
                const HSReport& rep);

}  // namespace liecoh

#endif
