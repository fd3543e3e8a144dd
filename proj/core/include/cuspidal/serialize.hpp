#pragma once

#include <string>

#include <json.hpp>

#include "cuspidal/analysis.hpp"
#include "cuspidal/classgroup.hpp"
#include "cuspidal/criterion.hpp"
#include "cuspidal/psi.hpp"
#include "cuspidal/units.hpp"

namespace cuspidal {

// Deterministic key order everywhere; numerators/denominators are emitted as
// JSON integers when they fit in 64 bits and as decimal strings otherwise.
using json = nlohmann::ordered_json;

json rat_to_json(const Rat& x);           // {"num": ..., "den": ...}
Rat rat_from_json(const json& j);

json cusp_to_json(const Cusp& P);         // {"c": c, "a": a}
Cusp cusp_from_json(long N, const json& j);

json exponent_to_json(const ExponentVector& f);
ExponentVector exponent_from_json(const json& j);

json divisor_to_json(const Divisor& D);
Divisor divisor_from_json(const json& j);

json criterion_report_to_json(const CriterionReport& rep);

json operator_to_json(const LinearOperator& op);
std::string operator_to_csv(const LinearOperator& op);

json relation_to_json(const RelationCheck& rc);

json certificate_to_json(const ConjectureACertificate& cert);

json classgroup_to_json(const ClassGroupData& data);
std::string classgroup_to_csv(const ClassGroupData& data);

json group_to_json(const AbelianGroupStructure& g);

}  // namespace cuspidal
