#include "latcurve/json_io.hpp"

namespace latcurve {

namespace {

void expect_format(const Json& j, const char* format) {
  if (!j.is_object() || j.value("format", "") != format) {
    throw Error(ErrorKind::Configuration, std::string("expected a ") + format + " document");
  }
  if (j.value("version", 0) != kJsonVersion) {
    throw Error(ErrorKind::Configuration, std::string("unsupported ") + format + " version");
  }
}

Json points_to_json(const std::vector<RatPoint>& pts) {
  Json arr = Json::array();
  for (const auto& p : pts) arr.push_back(to_json(p));
  return arr;
}

std::vector<RatPoint> points_from_json(const Json& j) {
  std::vector<RatPoint> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

}  // namespace

Json to_json(const Rational& q) { return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}}; }

Json to_json(const RatPoint& p) { return {{"x", to_json(p.x)}, {"y", to_json(p.y)}}; }

Json to_json(LatticeVec v) { return {{"x", v.x}, {"y", v.y}}; }

Json to_json(const Frame& f) { return {{"A", to_json(f.a())}, {"B", to_json(f.b())}, {"C", to_json(f.c())}}; }

Rational rational_from_json(const Json& j) {
  try {
    return make_rational(Integer(j.at("num").get<std::string>()), Integer(j.at("den").get<std::string>()));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Configuration, std::string("malformed rational: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw Error(ErrorKind::Configuration, "malformed rational digits");
  }
}

RatPoint point_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Configuration, "point must be an object");
  return {rational_from_json(j.at("x")), rational_from_json(j.at("y"))};
}

Frame frame_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Configuration, "frame must be an object");
  return Frame::make(point_from_json(j.at("A")), point_from_json(j.at("B")), point_from_json(j.at("C")));
}

Json broken_line_to_json(const BrokenLine& line, const ChainCertificate& cert) {
  const Frame& f = line.frame;
  Json c = {
      {"intermediate_vertices", line.intermediate_count()},
      {"verified", cert.verified},
  };
  if (cert.c) c["c"] = to_json(*cert.c);
  if (line.n) {
    c["vertex_bound"] = max_vertex_bound(f.doubled_area(), *line.n);
    c["within_vertex_bound"] = within_vertex_bound(line.intermediate_count(), f.doubled_area(), *line.n);
  }
  if (cert.violation) {
    c["violation"] = {{"kind", std::string(to_string(cert.violation->kind))},
                      {"index", cert.violation->index},
                      {"message", cert.violation->message}};
  } else {
    c["violation"] = nullptr;
  }
  Json out = {{"format", "latcurve.broken_line"}, {"version", kJsonVersion}, {"frame", to_json(f)},
              {"doubled_area", to_json(f.doubled_area())}};
  out["n"] = line.n ? Json(*line.n) : Json(nullptr);
  out["vertices"] = points_to_json(line.vertices);
  out["certificate"] = c;
  return out;
}

Json suitable_to_json(const RationalInterval& alpha, double eps, std::int64_t bound, const SuitableSearch& r) {
  Json out = {{"format", "latcurve.suitable_triangle"},
              {"version", kJsonVersion},
              {"alpha", {{"lo", to_json(alpha.lo)}, {"hi", to_json(alpha.hi)}}},
              {"eps", eps},
              {"bound", bound},
              {"found", r.found.has_value()},
              {"pairs_scanned", r.pairs_scanned},
              {"precision_limited", r.precision_limited}};
  if (r.found) {
    const SuitableTriangle& s = *r.found;
    out["triangle"] = {{"A", to_json(s.triangle.a)},
                       {"B", to_json(s.triangle.b)},
                       {"side_ratio", s.metrics.side_ratio},
                       {"angle", s.metrics.angle},
                       {"convergent_index", s.convergent_index},
                       {"stretch_index", s.stretch_index}};
  } else {
    out["triangle"] = nullptr;
  }
  return out;
}

Json curve_to_json(const Curve& curve, const std::string& series, const std::string& admissible) {
  const TangentDecomposition& d = curve.decomposition;
  Json params = Json::array();
  for (const auto& t : d.tangent_params) params.push_back(to_json(t));
  Json stages = Json::array();
  for (std::size_t i = 0; i < curve.stages.size(); ++i) {
    const CurveStage& st = curve.stages[i];
    stages.push_back({{"index", i + 1},
                      {"q", st.q},
                      {"c", to_json(st.c)},
                      {"frame", to_json(st.frame)},
                      {"doubled_area", to_json(st.frame.doubled_area())},
                      {"certified_count", st.certified_count},
                      {"attempts", st.attempts},
                      {"chain", points_to_json(st.chain.vertices)}});
  }
  return {{"format", "latcurve.curve"},
          {"version", kJsonVersion},
          {"series", series},
          {"admissible", admissible},
          {"decomposition",
           {{"homothety", d.homothety.get_str()},
            {"tangent_denominator", d.tangent_denominator},
            {"tangent_params", params},
            {"touch_points", points_to_json(d.touch_points)},
            {"apexes", points_to_json(d.apexes)},
            {"turning", d.turning}}},
          {"stages", stages},
          {"vertices", points_to_json(curve.global_vertices)}};
}

Curve curve_from_json(const Json& j) {
  expect_format(j, "latcurve.curve");
  try {
    Curve curve;
    const Json& d = j.at("decomposition");
    TangentDecomposition& td = curve.decomposition;
    td.homothety = Integer(d.at("homothety").get<std::string>());
    td.tangent_denominator = d.at("tangent_denominator").get<std::int64_t>();
    for (const auto& t : d.at("tangent_params")) td.tangent_params.push_back(rational_from_json(t));
    td.touch_points = points_from_json(d.at("touch_points"));
    td.apexes = points_from_json(d.at("apexes"));
    td.turning = d.at("turning").get<double>();
    for (const auto& s : j.at("stages")) {
      Frame f = frame_from_json(s.at("frame"));
      td.frames.push_back(f);
      std::int64_t q = s.at("q").get<std::int64_t>();
      BrokenLine chain{points_from_json(s.at("chain")), f, q};
      curve.stages.push_back(CurveStage{f, std::move(chain), q, rational_from_json(s.at("c")),
                                        s.at("certified_count").get<std::size_t>(),
                                        s.at("attempts").get<std::size_t>()});
    }
    curve.global_vertices = points_from_json(j.at("vertices"));
    return curve;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Configuration, std::string("malformed curve document: ") + e.what());
  }
}

Json error_to_json(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", std::string(to_string(kind))}, {"message", message}}}};
}

}  // namespace latcurve
