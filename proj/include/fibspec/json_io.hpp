// JSON views of the public result types.
//
// Conventions: arbitrary-precision Counts serialize as decimal strings
// (lossless interop); census values additionally appear as plain JSON
// numbers since they are bounded by 2^n at census scale; point sets
// serialize as sorted hex lists ("0x.." strings).  Rationals serialize as
// "num/den" strings.
#pragma once

#include <json.hpp>

#include "fibspec/avoider.hpp"
#include "fibspec/census.hpp"
#include "fibspec/construction.hpp"
#include "fibspec/counting.hpp"
#include "fibspec/spectra.hpp"

namespace fibspec {

nlohmann::json value_set_json(const ValueSet& v);
nlohmann::json shifted_digit_set_json(const ShiftedDigitSet& s);
nlohmann::json polynomial_json(const IndependencePolynomial& p);
nlohmann::json census_json(const CensusResult& c);
nlohmann::json matching_report_json(const MatchingBoundReport& r);
nlohmann::json main_params_json(const MainParams& p);
nlohmann::json closed_form_json(const ClosedForm& c);
nlohmann::json combination_plan_json(const CombinationPlan& p);
nlohmann::json toy_certificate_json(const ToyCertificate& c);
// include_points materializes the sorted hex list; otherwise only the
// dimension and cardinality are emitted.
nlohmann::json point_set_json(const PointSet& s, bool include_points);
nlohmann::json flat_json(const AffineFlat& f);
nlohmann::json verdict_json(const AvoiderVerdict& v);
nlohmann::json gap_report_json(const SpectrumGapReport& r);

// Reads {"n": ..., "points": ["0x..", ...]}; points also accept decimal
// strings or numbers.
PointSet point_set_from_json(const nlohmann::json& j);

}  // namespace fibspec
