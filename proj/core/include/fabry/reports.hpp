#pragma once

#include <string>

#include "fabry/concentration.hpp"
#include "fabry/goodness.hpp"
#include "fabry/kernels.hpp"
#include "fabry/probe.hpp"
#include "fabry/selftest.hpp"
#include "fabry/trig_poly.hpp"

namespace fabry {

// Machine-readable report emission.  Each JSON document carries a versioned
// `schema` field and a `claim` field naming the property it exercises, and
// re-parses losslessly into the originating type.  Serialization is
// deterministic: fixed key order, shortest round-trip number formatting.

std::string to_json(const GoodnessReport& r, int indent = 2);
std::string to_json(const QuotientDriftReport& r, int indent = 2);
std::string to_json(const NegativityCertificate& r, int indent = 2);
std::string to_json(const DenominatorCheck& r, int indent = 2);
std::string to_json(const ConstantEstimate& r, int indent = 2);
std::string to_json(const CorollaryReport& r, int indent = 2);
std::string to_json(const PoincareReport& r, int indent = 2);
std::string to_json(const ConcentrationReport& r, int indent = 2);
std::string to_json(const SelftestReport& r, int indent = 2);

// Coefficient dump of a named kernel/polynomial.
std::string to_json(const TrigPoly& p, const std::string& name, int N, int indent = 2);

GoodnessReport goodness_report_from_json(const std::string& text);
QuotientDriftReport quotient_drift_from_json(const std::string& text);
NegativityCertificate negativity_certificate_from_json(const std::string& text);
DenominatorCheck denominator_check_from_json(const std::string& text);
ConstantEstimate constant_estimate_from_json(const std::string& text);
CorollaryReport corollary_report_from_json(const std::string& text);
PoincareReport poincare_report_from_json(const std::string& text);
ConcentrationReport concentration_report_from_json(const std::string& text);
SelftestReport selftest_report_from_json(const std::string& text);
TrigPoly trig_poly_from_json(const std::string& text);

// CSV views.  The sweep table has the fixed header
// tau,rho,growth_l1,...,growth_lL; polynomial dumps use k,re,im.
std::string to_csv(const ConcentrationReport& r);
std::string to_csv(const TrigPoly& p);

}  // namespace fabry
