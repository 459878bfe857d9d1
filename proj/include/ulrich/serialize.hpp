#ifndef ULRICH_SERIALIZE_HPP
#define ULRICH_SERIALIZE_HPP

#include "ulrich/engine.hpp"
#include "ulrich/ideal.hpp"
#include "ulrich/module.hpp"
#include "ulrich/semigroup.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ulrich {

/// "3,4,5" -> {3,4,5}. Errors: InvalidGenerator on anything unparsable.
std::vector<long long> parse_generator_list(const std::string& text);

// JSON forms. Semigroups carry the full invariant report; ideals the
// ambient plus minimal generators; certificates and reports every measured
// quantity, so failures are diagnosable offline.
void to_json(nlohmann::json& j, const NumericalSemigroup& H);
void from_json(const nlohmann::json& j, NumericalSemigroup& H);
NumericalSemigroup semigroup_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const RelativeIdeal& E);
RelativeIdeal ideal_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const UlrichCertificate& cert);
UlrichCertificate certificate_from_json(const nlohmann::json& j);

void to_json(nlohmann::json& j, const HomologicalProfile& p);
void from_json(const nlohmann::json& j, HomologicalProfile& p);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

/// Debug dump: dimension, labels when present, dense action matrices with
/// exact rational entries as canonical strings.
void to_json(nlohmann::json& j, const FiniteLengthModule& M);

} // namespace ulrich

#endif
