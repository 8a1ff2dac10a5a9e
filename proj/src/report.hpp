#ifndef NOETHER_REPORT_HPP
#define NOETHER_REPORT_HPP

#include <json.hpp>

#include "session.hpp"

namespace noether {

using nlohmann::json;

inline constexpr int kReportSchemaVersion = 1;

// Polynomials are serialized twice over: a human-diffable expression string
// and a sparse exponent/coefficient list for lossless round-trips.
json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const json& j, const ContextPtr& ctx);

json polys_to_json(const PolyList& ps);
PolyList polys_from_json(const json& j, const ContextPtr& ctx);

json hilbert_to_json(const HilbertData& hd);
json complex_to_json(const GradedComplex& c);
GradedComplex complex_from_json(const json& j, const ContextPtr& ctx);
json system_to_json(const NoetherianSystem& sys, const ContextPtr& ctx);
json membership_to_json(const MembershipReport& r);
json bound_to_json(const DegreeBoundReport& b);
json certificate_to_json(const Certificate& c);
json certify_to_json(const CertifyReport& r);

std::string fnv1a_digest(const std::string& bytes);

struct VerifyCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyResult {
  bool verified = true;
  std::vector<VerifyCheck> checks;
};

// Re-checks every identity a report embeds (certificate expansion, basis
// S-pair reduction, complex composition, operator clearing) by pure
// arithmetic; no basis or solver search is rerun.
VerifyResult verify_report(const json& report, const Session& session);

}  // namespace noether

#endif
