#pragma once

// JSON artifacts. Rationals are {"num": "...", "den": "..."} with decimal
// strings so arbitrary precision survives any reader.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>

#include "latcurve/cf_lattice.hpp"
#include "latcurve/curve_synth.hpp"
#include "latcurve/error.hpp"
#include "latcurve/jarnik.hpp"

namespace latcurve {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonVersion = 1;

Json to_json(const Rational& q);
Json to_json(const RatPoint& p);
Json to_json(LatticeVec v);
Json to_json(const Frame& f);

Rational rational_from_json(const Json& j);
RatPoint point_from_json(const Json& j);
Frame frame_from_json(const Json& j);

struct ChainCertificate {
  std::optional<Rational> c;  // requested constant, when given
  bool verified = false;
  std::optional<Violation> violation;
};

Json broken_line_to_json(const BrokenLine& line, const ChainCertificate& cert);

Json suitable_to_json(const RationalInterval& alpha, double eps, std::int64_t bound, const SuitableSearch& r);

Json curve_to_json(const Curve& curve, const std::string& series, const std::string& admissible);

/// Rebuilds a curve written by curve_to_json. Throws Configuration on an
/// unknown format or version.
Curve curve_from_json(const Json& j);

Json error_to_json(ErrorKind kind, const std::string& message);

}  // namespace latcurve
