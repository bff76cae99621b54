#include "cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latcurve/affine_length.hpp"
#include "latcurve/cf_lattice.hpp"
#include "latcurve/curve_synth.hpp"
#include "latcurve/equidist.hpp"
#include "latcurve/error.hpp"
#include "latcurve/girth_enum.hpp"
#include "latcurve/jarnik.hpp"
#include "latcurve/json_io.hpp"
#include "latcurve/parallel.hpp"

namespace latcurve::cli {

namespace {

constexpr std::int64_t kOracleLimit = 60;

std::string num(double v) { return fmt::format("{:.12g}", v); }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) parts.push_back(cur);
  return parts;
}

Frame parse_frame(const std::string& text) {
  std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 6) throw Error(ErrorKind::Configuration, "--frame needs Ax,Ay,Bx,By,Cx,Cy");
  std::vector<Rational> v;
  for (const auto& p : parts) v.push_back(parse_rational(p));
  return Frame::make({v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]});
}

std::vector<Rational> parse_series(const std::string& text, std::size_t terms) {
  if (text.rfind("geometric:", 0) == 0) return geometric_series(parse_rational(text.substr(10)), terms);
  if (text.rfind("list:", 0) == 0) {
    std::vector<Rational> out;
    for (const auto& p : split(text.substr(5), ',')) out.push_back(parse_rational(p));
    return out;
  }
  throw Error(ErrorKind::Configuration, "--series must be geometric:R or list:c1,c2,...");
}

AdmissibleSet parse_admissible(const std::string& text) {
  if (text == "all") return AdmissibleSet::all();
  if (text.rfind("list:", 0) == 0) {
    std::vector<std::int64_t> values;
    for (const auto& p : split(text.substr(5), ',')) {
      try {
        values.push_back(std::stoll(p));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Configuration, "bad admissible value '" + p + "'");
      }
    }
    return AdmissibleSet::list(std::move(values));
  }
  throw Error(ErrorKind::Configuration, "--admissible must be all or list:q1,q2,...");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Configuration, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::Configuration, path + ": " + e.what());
  }
}

std::vector<std::size_t> doubling_schedule(std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t j = 1; j < k; j *= 2) out.push_back(j);
  out.push_back(k);
  return out;
}

int usage_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Configuration:
    case ErrorKind::DegenerateTriangle:
    case ErrorKind::DegenerateSeries:
      return 1;
    default:
      return 2;
  }
}

// --- subcommands --------------------------------------------------------

void girth_sum_cmd(const Frame& f, std::size_t k, std::ostream& out) {
  std::vector<Rational> sums = girth_prefix_sums(f, k);
  out << "k,sum,bound,ratio\n";
  for (std::size_t j : doubling_schedule(k)) {
    const Rational& s = sums[j - 1];
    double lead = girth_sum_leading_term(f, j);
    out << j << ',' << to_string(s) << ',' << num(lead) << ',' << num(to_double(s) / lead) << '\n';
  }
}

int jarnik_cmd(const Frame& f, std::int64_t n, const Rational& c, bool verify, std::ostream& out,
               std::ostream& err) {
  BrokenLine line = build_chain(f, n, c);
  ChainCertificate cert;
  cert.c = c;
  if (verify) {
    cert.violation = verify_abc_broken_line(line);
    cert.verified = !cert.violation;
  }
  out << broken_line_to_json(line, cert).dump(2) << '\n';
  if (cert.violation) {
    err << error_to_json(ErrorKind::ConstructionFailure, cert.violation->message).dump() << '\n';
    return 2;
  }
  return 0;
}

int equidist_cmd(std::int64_t m, const std::vector<std::int64_t>& ns, const StarDomain& d1, const StarDomain& d2,
                 bool oracle, std::ostream& out, std::ostream& err) {
  out << "n,count,prediction,ratio" << (oracle ? ",oracle_count" : "") << '\n';
  for (std::int64_t n : ns) {
    std::int64_t count = count_pairs_fast(d1, d2, m, n);
    double pred = pair_prediction(d1, d2, m, n);
    out << n << ',' << count << ',' << num(pred) << ',' << num(static_cast<double>(count) / pred);
    if (oracle) {
      std::int64_t brute = count_pairs_bruteforce(d1, d2, m, n);
      out << ',' << brute << '\n';
      if (brute != count) {
        err << error_to_json(ErrorKind::OracleMismatch,
                             fmt::format("n={}: fast count {} but brute force {}", n, count, brute))
                   .dump()
            << '\n';
        return 2;
      }
    } else {
      out << '\n';
    }
  }
  return 0;
}

void special_points_cmd(const Frame& f, std::int64_t m, const std::vector<std::int64_t>& big_ns,
                        const StarDomain& omega, std::ostream& out) {
  out << "m,N,count,prediction,ratio\n";
  for (std::int64_t big_n : big_ns) {
    PairCount pc = special_point_count(f, m, big_n, omega);
    out << m << ',' << big_n << ',' << pc.count << ',' << num(pc.prediction) << ','
        << num(static_cast<double>(pc.count) / pc.prediction) << '\n';
  }
}

void synth_cmd(const std::string& series_text, std::size_t stages, const std::string& admissible_text,
               const std::string& out_path, std::ostream& out) {
  std::vector<Rational> series = parse_series(series_text, stages);
  AdmissibleSet admissible = parse_admissible(admissible_text);
  Curve curve = synthesize(series, admissible, stages);

  std::ofstream file(out_path);
  if (!file) throw Error(ErrorKind::Configuration, "cannot write " + out_path);
  file << curve_to_json(curve, series_text, admissible.describe()).dump(2) << '\n';

  out << "stage,q,c,doubled_area,certified_count,threshold,count_on_curve,holds\n";
  for (std::size_t i = 0; i < curve.stages.size(); ++i) {
    const CurveStage& st = curve.stages[i];
    Integer on_curve = count_on_curve(curve, st.q);
    double threshold = to_double(st.c) * std::cbrt(static_cast<double>(st.q) * static_cast<double>(st.q));
    out << i + 1 << ',' << st.q << ',' << to_string(st.c) << ',' << to_string(st.frame.doubled_area()) << ','
        << st.certified_count << ',' << num(threshold) << ',' << on_curve.get_str() << ','
        << (meets_certificate(on_curve, st.c, st.q) ? "true" : "false") << '\n';
  }
}

void decay_cmd(const Curve& curve, std::vector<std::int64_t> ns, std::ostream& out) {
  std::set<std::int64_t> certified;
  for (const auto& st : curve.stages) certified.insert(st.q);
  if (ns.empty()) {
    std::set<std::int64_t> pick;
    for (int j = 2; j <= 14; ++j) pick.insert(std::llround(std::pow(10.0, j / 2.0)));
    for (std::int64_t q : certified) {
      pick.insert(q - 1);
      pick.insert(q + 1);
    }
    for (std::int64_t n : pick) {
      if (n >= 1 && !certified.count(n)) ns.push_back(n);
    }
  }
  out << "n,count,ratio,certificate_scale\n";
  for (std::int64_t n : ns) {
    Integer k = count_on_curve(curve, n);
    double ratio = k.get_d() / std::cbrt(static_cast<double>(n) * static_cast<double>(n));
    out << n << ',' << k.get_str() << ',' << num(ratio) << ',' << (certified.count(n) ? "true" : "false") << '\n';
  }
}

void deficit_cmd(const Frame& f, const std::vector<std::int64_t>& ns, const Rational& c, std::ostream& out) {
  out << "n,k,l_A,deficit,spread\n";
  for (std::int64_t n : ns) {
    DeficitProbe p = affine_deficit_probe(f, n, c);
    out << n << ',' << p.k << ',' << num(p.l_a) << ',' << num(p.deficit) << ',' << num(p.spread) << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice points on convex curves: constructions, counts and certificates", "latcurve"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> threads;
  app.add_option("--threads", threads, "worker threads (default: all cores)")->check(CLI::Range(1u, 4096u));

  std::string frame_text, c_text = "1/100", domain1, domain2, omega_text, alpha_text, series_text,
                          admissible_text = "all", curve_path, out_path;
  std::int64_t k = 0, n = 0, m = 1, bound = 0;
  std::size_t stages = 0;
  std::vector<std::int64_t> n_list;
  double eps = 0;
  bool verify = false, oracle = false;

  auto* girth = app.add_subcommand("girth-sum", "girth sums of the k least vectors against the leading term");
  girth->add_option("--frame", frame_text, "Ax,Ay,Bx,By,Cx,Cy")->required();
  girth->add_option("--k", k)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{100'000'000}));

  auto* jarnik = app.add_subcommand("jarnik", "build a convex lattice chain in a frame");
  jarnik->add_option("--frame", frame_text)->required();
  jarnik->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  jarnik->add_option("--c", c_text, "vertex constant (rational)");
  jarnik->add_flag("--verify", verify, "check every broken-line condition exactly");

  auto* equi = app.add_subcommand("equidist", "pairs x1 x x2 = m in n*domain1 x n*domain2");
  equi->add_option("--m", m)->check(CLI::PositiveNumber);
  equi->add_option("--n", n_list)->required()->check(CLI::PositiveNumber);
  equi->add_option("--domain1", domain1)->required();
  equi->add_option("--domain2", domain2)->required();
  equi->add_flag("--oracle", oracle, "cross-check against brute force (n <= 60)");

  auto* special = app.add_subcommand("special-points", "girth images of pairs with fixed pseudoscalar product");
  special->add_option("--frame", frame_text)->required();
  special->add_option("--m", m)->check(CLI::PositiveNumber);
  special->add_option("--N", n_list)->required()->check(CLI::PositiveNumber);
  special->add_option("--omega", omega_text)->required();

  auto* suitable = app.add_subcommand("cf-suitable", "eps-suitable basic triangle along y = alpha x");
  suitable->add_option("--alpha", alpha_text, "p/q, decimal, sqrt:X, isqrt:X or golden")->required();
  suitable->add_option("--eps", eps)->required();
  suitable->add_option("--bound", bound)->required()->check(CLI::PositiveNumber);

  auto* synth = app.add_subcommand("synth", "curve certified at a sequence of scales");
  synth->add_option("--series", series_text, "geometric:R or list:c1,c2,...")->required();
  synth->add_option("--stages", stages)->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  synth->add_option("--admissible", admissible_text, "all or list:q1,q2,...");
  synth->add_option("--out", out_path, "curve JSON file")->required();

  auto* count = app.add_subcommand("count", "points of (Z/n)^2 on a stored curve");
  count->add_option("--curve", curve_path)->required();
  count->add_option("--n", n)->required()->check(CLI::PositiveNumber);

  auto* decay = app.add_subcommand("decay", "k(curve, n)/n^(2/3) away from the certified scales");
  decay->add_option("--curve", curve_path)->required();
  decay->add_option("--n", n_list, "scales (default: a fixed schedule)")->check(CLI::PositiveNumber);

  auto* deficit = app.add_subcommand("deficit", "affine length deficit of Jarnik chains");
  deficit->add_option("--frame", frame_text)->required();
  deficit->add_option("--n", n_list)->required()->check(CLI::PositiveNumber);
  deficit->add_option("--c", c_text);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (threads) set_thread_count(*threads);
    if (*girth) {
      girth_sum_cmd(parse_frame(frame_text), static_cast<std::size_t>(k), out);
    } else if (*jarnik) {
      return jarnik_cmd(parse_frame(frame_text), n, parse_rational(c_text), verify, out, err);
    } else if (*equi) {
      if (oracle) {
        for (std::int64_t v : n_list) {
          if (v > kOracleLimit) {
            err << "--oracle requires n <= " << kOracleLimit << '\n';
            return 1;
          }
        }
      }
      return equidist_cmd(m, n_list, StarDomain::parse(domain1), StarDomain::parse(domain2), oracle, out, err);
    } else if (*special) {
      special_points_cmd(parse_frame(frame_text), m, n_list, StarDomain::parse(omega_text), out);
    } else if (*suitable) {
      if (!(eps > 0 && eps < 1)) throw Error(ErrorKind::Configuration, "--eps must lie in (0, 1)");
      RationalInterval alpha = parse_real(alpha_text);
      out << suitable_to_json(alpha, eps, bound, find_suitable(alpha, eps, bound)).dump(2) << '\n';
    } else if (*synth) {
      synth_cmd(series_text, stages, admissible_text, out_path, out);
    } else if (*count) {
      out << count_on_curve(curve_from_json(read_json_file(curve_path)), n).get_str() << '\n';
    } else if (*decay) {
      decay_cmd(curve_from_json(read_json_file(curve_path)), n_list, out);
    } else if (*deficit) {
      deficit_cmd(parse_frame(frame_text), n_list, parse_rational(c_text), out);
    }
  } catch (const Error& e) {
    err << error_to_json(e.kind(), e.what()).dump() << '\n';
    return usage_code(e.kind());
  }
  return 0;
}

}  // namespace latcurve::cli
