#include "latcurve/curve_synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "latcurve/error.hpp"

namespace latcurve {

namespace {

RatPoint circle_point(const Rational& t) {
  Rational w = 1 + t * t;
  return {Rational((1 - t * t) / w), Rational(2 * t / w)};
}

// Tangents to the unit circle at P and Q meet at (P + Q)/(1 + P.Q).
RatPoint tangent_apex(const RatPoint& p, const RatPoint& q) {
  Rational k = 1 / (1 + p.x * q.x + p.y * q.y);
  return k * (p + q);
}

Integer ceil_sqrt(const Integer& n) {
  Integer s;
  mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
  if (s * s < n) s += 1;
  return s;
}

std::int64_t ceil_to_int64(const Rational& x) { return to_int64(ceil(x)); }

}  // namespace

TangentDecomposition tangent_decomposition(const std::vector<Rational>& c_prefix) {
  if (c_prefix.empty()) throw Error(ErrorKind::DegenerateSeries, "empty series prefix");
  Rational total = 0;
  for (const Rational& c : c_prefix) {
    if (c <= 0) throw Error(ErrorKind::DegenerateSeries, "series terms must be positive");
    total += c;
  }

  const std::size_t m = c_prefix.size();
  std::vector<double> exact_t(m + 1);
  Rational partial = 0;
  for (std::size_t j = 0; j <= m; ++j) {
    double phi = std::numbers::pi * (-0.49 + 0.98 * to_double(Rational(partial / total)));
    exact_t[j] = std::tan(phi / 2);
    if (j < m) partial += c_prefix[j];
  }

  // Smallest power-of-two denominator keeping every rounded step at least
  // half of its exact size.
  TangentDecomposition out;
  std::vector<Rational> t(m + 1);
  for (std::int64_t den = 16;; den *= 2) {
    if (den > (std::int64_t{1} << 40)) {
      throw Error(ErrorKind::DegenerateSeries, "series terms too uneven for a rational tangent grid");
    }
    std::vector<std::int64_t> num(m + 1);
    for (std::size_t j = 0; j <= m; ++j) num[j] = std::llround(exact_t[j] * static_cast<double>(den));
    // End parameters round inward so the total turning stays below 0.98 pi.
    num[0] = static_cast<std::int64_t>(std::ceil(exact_t[0] * static_cast<double>(den)));
    num[m] = static_cast<std::int64_t>(std::floor(exact_t[m] * static_cast<double>(den)));
    bool ok = true;
    for (std::size_t j = 0; j < m && ok; ++j) {
      double step = static_cast<double>(num[j + 1] - num[j]) / static_cast<double>(den);
      ok = step >= (exact_t[j + 1] - exact_t[j]) / 2 && num[j + 1] > num[j];
    }
    if (!ok) continue;
    for (std::size_t j = 0; j <= m; ++j) t[j] = make_rational(num[j], den);
    out.tangent_denominator = den;
    break;
  }

  std::vector<RatPoint> a(m + 1), b(m);
  for (std::size_t j = 0; j <= m; ++j) a[j] = circle_point(t[j]);
  Rational need = 0;
  for (std::size_t j = 0; j < m; ++j) {
    b[j] = tangent_apex(a[j], a[j + 1]);
    Rational s = doubled_area(a[j], b[j], a[j + 1]);
    const Rational& c = c_prefix[j];
    Rational r = 100 * c * c * c / s;
    need = std::max(need, r);
  }
  out.homothety = std::max(Integer(1), ceil_sqrt(ceil(need)));
  Rational lambda(out.homothety);

  for (std::size_t j = 0; j <= m; ++j) out.touch_points.push_back(lambda * a[j]);
  for (std::size_t j = 0; j < m; ++j) {
    out.apexes.push_back(lambda * b[j]);
    out.frames.push_back(Frame::make(out.touch_points[j], out.touch_points[j + 1], out.apexes[j]));
  }
  out.tangent_params = t;
  out.turning = 2 * (std::atan(to_double(t[m])) - std::atan(to_double(t[0])));
  return out;
}

AdmissibleSet AdmissibleSet::all() { return {}; }

AdmissibleSet AdmissibleSet::list(std::vector<std::int64_t> values) {
  AdmissibleSet s;
  s.kind_ = Kind::List;
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  values.erase(values.begin(), std::lower_bound(values.begin(), values.end(), 1));
  s.values_ = std::move(values);
  return s;
}

AdmissibleSet AdmissibleSet::predicate(std::function<bool(std::int64_t)> accept, std::int64_t scan_limit) {
  AdmissibleSet s;
  s.kind_ = Kind::Predicate;
  s.accept_ = std::move(accept);
  s.scan_limit_ = scan_limit;
  return s;
}

std::optional<std::int64_t> AdmissibleSet::next_at_least(std::int64_t from) const {
  from = std::max<std::int64_t>(from, 1);
  switch (kind_) {
    case Kind::All:
      return from;
    case Kind::List: {
      auto it = std::lower_bound(values_.begin(), values_.end(), from);
      if (it == values_.end()) return std::nullopt;
      return *it;
    }
    case Kind::Predicate:
      for (std::int64_t q = from; q - from < scan_limit_ && q > 0; ++q) {
        if (accept_(q)) return q;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

bool AdmissibleSet::contains(std::int64_t q) const {
  if (q < 1) return false;
  switch (kind_) {
    case Kind::All: return true;
    case Kind::List: return std::binary_search(values_.begin(), values_.end(), q);
    case Kind::Predicate: return accept_(q);
  }
  return false;
}

std::string AdmissibleSet::describe() const {
  switch (kind_) {
    case Kind::All: return "all";
    case Kind::List: {
      std::string s = "list:";
      for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(values_[i]);
      }
      return s;
    }
    case Kind::Predicate: return "predicate";
  }
  return "";
}

bool meets_certificate(const Integer& count, const Rational& c, std::int64_t q) {
  Rational lhs(count * count * count);
  return lhs >= c * c * c * Rational(Integer(q) * q);
}

bool strictly_convex(const std::vector<RatPoint>& v) {
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    if (doubled_area(v[i], v[i + 1], v[i + 2]) <= 0) return false;
  }
  return true;
}

Curve synthesize(const std::vector<Rational>& series, const AdmissibleSet& admissible, std::size_t stages,
                 const SynthOptions& opts) {
  if (stages == 0) throw Error(ErrorKind::Configuration, "at least one stage is required");
  if (series.size() < stages) throw Error(ErrorKind::Configuration, "series shorter than the stage count");
  std::vector<Rational> prefix(series.begin(), series.begin() + static_cast<std::ptrdiff_t>(stages));

  Curve curve;
  curve.decomposition = tangent_decomposition(prefix);
  std::int64_t q_prev = 0;

  for (std::size_t i = 0; i < stages; ++i) {
    const Frame& frame = curve.decomposition.frames[i];
    const Rational& c = prefix[i];
    Rational seed_q = Rational(125) / (c * c * c) / frame.doubled_area();
    std::int64_t threshold = std::max(q_prev + 1, ceil_to_int64(seed_q));
    const std::int64_t first_tried = threshold;
    std::optional<CurveStage> stage;
    std::size_t attempts = 0;
    std::int64_t last_tried = 0;

    for (std::size_t d = 0; d <= opts.max_doublings && !stage; ++d) {
      std::optional<std::int64_t> cand = admissible.next_at_least(threshold);
      if (!cand) break;
      std::int64_t q = *cand;
      last_tried = q;
      ++attempts;
      Integer need = ceil_cbrt(c * c * c * Rational(Integer(q) * q));
      std::size_t edges = need > 2 ? static_cast<std::size_t>(to_int64(need - 1)) : 1;
      try {
        BrokenLine chain = build_chain_with_edges(frame, q, edges);
        if (meets_certificate(Integer(chain.intermediate_count()), c, q)) {
          if (frame.swapped()) std::reverse(chain.vertices.begin(), chain.vertices.end());
          stage = CurveStage{frame, std::move(chain), q, c, 0, attempts};
          stage->certified_count = stage->chain.intermediate_count();
        }
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::ConstructionFailure && e.kind() != ErrorKind::Overflow) throw;
      }
      if (q > INT64_MAX / 2) break;
      threshold = 2 * q;
    }
    if (!stage && attempts == 0) {
      throw Error(ErrorKind::SearchExhausted, "stage " + std::to_string(i + 1) + ": admissible set has no q >= " +
                                                  std::to_string(first_tried));
    }
    if (!stage) {
      throw Error(ErrorKind::SearchExhausted, "stage " + std::to_string(i + 1) + ": no admissible q in [" +
                                                  std::to_string(first_tried) + ", " +
                                                  std::to_string(last_tried) + "] after " +
                                                  std::to_string(attempts) + " attempts");
    }
    q_prev = stage->q;
    curve.stages.push_back(std::move(*stage));
  }

  for (const CurveStage& st : curve.stages) {
    const auto& v = st.chain.vertices;
    auto begin = v.begin();
    if (!curve.global_vertices.empty()) {
      if (!(curve.global_vertices.back() == v.front())) {
        throw Error(ErrorKind::ConstructionFailure, "stages do not share their touch point");
      }
      ++begin;
    }
    curve.global_vertices.insert(curve.global_vertices.end(), begin, v.end());
  }
  if (!strictly_convex(curve.global_vertices)) {
    throw Error(ErrorKind::ConstructionFailure, "assembled curve is not strictly convex");
  }
  return curve;
}

Integer count_on_curve(const std::vector<RatPoint>& vertices, std::int64_t n) {
  if (vertices.size() == 1) return on_lattice(vertices[0], n) ? 1 : 0;
  return polyline_lattice_count(vertices, n);
}

Integer count_on_curve(const Curve& curve, std::int64_t n) { return count_on_curve(curve.global_vertices, n); }

std::vector<Rational> geometric_series(const Rational& ratio, std::size_t terms) {
  if (ratio <= 0) throw Error(ErrorKind::DegenerateSeries, "geometric ratio must be positive");
  std::vector<Rational> out;
  Rational term = ratio;
  for (std::size_t k = 0; k < terms; ++k) {
    out.push_back(term);
    term *= ratio;
  }
  return out;
}

}  // namespace latcurve
