#pragma once

#include <json.hpp>

#include "chromsym/colourings.hpp"
#include "chromsym/csp.hpp"
#include "chromsym/geometry.hpp"
#include "chromsym/hessenberg.hpp"
#include "chromsym/partitions.hpp"
#include "chromsym/qpoly.hpp"

namespace chromsym {

using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
Json to_json(const BigInt& value);
BigInt bigint_from_json(const Json& j);

Json to_json(const ReverseHessenberg& r);           // [r1, ..., rn]
ReverseHessenberg hessenberg_from_json(const Json& j);

Json to_json(const QPoly& p);                       // {"offset": k, "coeffs": [...]}
QPoly qpoly_from_json(const Json& j);

Json to_json(const Partition& p);                   // [parts...]
Json to_json(const KostkaTable& table);             // {"index": [[...]], "matrix": [[...]]}
Json to_json(const VerificationReport& report);
Json to_json(const GeometryReport& report);

/// {n, m, r, E_r, d_r, monomial, schur, verification}; d_r is null when
/// infeasible. Monomial weights are padded to length m.
Json csp_document(const SchurExpansion& expansion, const VerificationReport& report);

}  // namespace chromsym
