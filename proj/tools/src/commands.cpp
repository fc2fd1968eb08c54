#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bettimap/betti/betti.hpp"
#include "bettimap/betti/pipeline.hpp"
#include "bettimap/divseq/divseq.hpp"
#include "bettimap/error.hpp"
#include "bettimap/exact/poly.hpp"
#include "bettimap/heights/heights.hpp"
#include "bettimap/mp/real.hpp"
#include "bettimap/periods/periods.hpp"
#include "bettimap/tangency/audit.hpp"
#include "bettimap/tangency/detector.hpp"
#include "bettimap/tangency/source.hpp"
#include "bettimap/version.hpp"

namespace bettimap::cli {

namespace fs = std::filesystem;
using mp::Complex;
using mp::Real;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int digits_for(long bits) { return int(double(bits) * 0.30103); }

std::vector<legendre::Section> build_sections(const RunConfig& cfg) {
  std::vector<legendre::Section> out;
  for (const auto& s : cfg.sections) out.push_back(s.build());
  return out;
}

// Cell centres of a samples x samples grid over the disc's bounding square
// that fall inside the disc.
std::vector<Complex> sample_points(const Disc& d, int samples) {
  std::vector<Complex> pts;
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j) {
      double re = d.re + d.radius * (-1.0 + (2.0 * i + 1.0) / samples);
      double im = d.im + d.radius * (-1.0 + (2.0 * j + 1.0) / samples);
      Complex lam(re, im);
      if (d.contains(lam)) pts.push_back(lam);
    }
  return pts;
}

void put(std::ostream& os, const Complex& z, int digits) { os << z.re.str(digits) << ',' << z.im.str(digits); }

class Artifacts {
 public:
  explicit Artifacts(const RunConfig& cfg) : dir_(cfg.out), bits_(cfg.prec) { fs::create_directories(dir_); }

  void write(const std::string& name, const std::string& content, const std::string& kind) {
    std::ofstream f(dir_ / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + (dir_ / name).string());
    f << content;
    list_.push_back(json{{"path", name}, {"kind", kind}, {"certified_bits", bits_}});
  }
  const json& list() const { return list_; }
  fs::path dir() const { return dir_; }

 private:
  fs::path dir_;
  long bits_;
  json list_ = json::array();
};

json strings(const std::vector<std::string>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s);
  return a;
}

json run_periods(const RunConfig& cfg, Artifacts& art) {
  periods::PeriodField field(cfg.disc);
  int dig = digits_for(cfg.prec);
  Complex k0 = field.wronskian_constant();
  std::ostringstream csv;
  csv << "lambda_re,lambda_im,f_re,f_im,g_re,g_im,df_re,df_im,dg_re,dg_im,ode_f,ode_g,wronskian_dev\n";
  Real worst_ode = 0, worst_w = 0;
  auto pts = sample_points(cfg.disc, cfg.samples);
  for (const auto& lam : pts) {
    auto b = field.evaluate(lam);
    Real of = mp::abs(periods::ode_residual(lam, b.f, b.df, b.d2f)) / mp::max(Real(1), mp::abs(b.f));
    Real og = mp::abs(periods::ode_residual(lam, b.g, b.dg, b.d2g)) / mp::max(Real(1), mp::abs(b.g));
    Real wd = mp::abs(b.wronskian_constant() - k0) / mp::abs(k0);
    worst_ode = mp::max(worst_ode, mp::max(of, og));
    worst_w = mp::max(worst_w, wd);
    put(csv, lam, 17);
    for (const Complex* z : {&b.f, &b.g, &b.df, &b.dg}) {
      csv << ',';
      put(csv, *z, dig);
    }
    csv << ',' << of.str(3) << ',' << og.str(3) << ',' << wd.str(3) << '\n';
  }
  art.write("periods.csv", csv.str(), "csv");
  return json{{"samples", pts.size()},
              {"wronskian_constant", json{{"re", k0.re.str(dig)}, {"im", k0.im.str(dig)}}},
              {"max_ode_residual", worst_ode.str(3)},
              {"max_wronskian_deviation", worst_w.str(3)}};
}

json run_ellog(const RunConfig& cfg, Artifacts& art) {
  betti::Pipeline pipe(build_sections(cfg), cfg.disc);
  int dig = digits_for(cfg.prec);
  std::ostringstream csv;
  csv << "lambda_re,lambda_im";
  for (std::size_t j = 1; j <= pipe.size(); ++j)
    csv << ",x" << j << "_re,x" << j << "_im,z" << j << "_re,z" << j << "_im,dz" << j << "_re,dz" << j << "_im";
  csv << '\n';
  std::vector<std::string> skipped;
  std::size_t rows = 0;
  for (const auto& lam : sample_points(cfg.disc, cfg.samples)) {
    betti::LocalData ld;
    try {
      ld = pipe.evaluate(lam);
    } catch (const Error& e) {
      skipped.push_back(lam.str(10) + ": " + e.what());
      continue;
    }
    put(csv, lam, 17);
    for (const auto& s : ld.sections) {
      for (const Complex* z : {&s.x, &s.z, &s.deriv.dz}) {
        csv << ',';
        put(csv, *z, dig);
      }
    }
    csv << '\n';
    ++rows;
  }
  art.write("ellog.csv", csv.str(), "csv");
  return json{{"rows", rows}, {"skipped", strings(skipped)}};
}

json run_betti(const RunConfig& cfg, Artifacts& art) {
  betti::Pipeline pipe(build_sections(cfg), cfg.disc);
  int dig = digits_for(cfg.prec);
  std::ostringstream csv;
  csv << betti::theta_csv_header(pipe.size()) << '\n';
  std::vector<std::string> skipped;
  std::size_t rows = 0;
  for (const auto& lam : sample_points(cfg.disc, cfg.samples)) {
    try {
      csv << betti::theta_csv_row(betti::theta_map(pipe, lam), dig) << '\n';
      ++rows;
    } catch (const Error& e) {
      skipped.push_back(lam.str(10) + ": " + e.what());
    }
  }
  art.write("theta.csv", csv.str(), "csv");
  return json{{"rows", rows}, {"skipped", strings(skipped)}};
}

tangency::ScanResult do_scan(const RunConfig& cfg, const tangency::LogSource& src) {
  tangency::DetectorConfig dc;
  dc.grid = cfg.grid;
  dc.threads = cfg.threads;
  auto scan = tangency::scan_D_a(src, cfg.tmax, dc);
  if (cfg.oracle && cfg.sections.size() == 1) {
    auto P = cfg.sections[0].build();
    std::vector<std::vector<long>> heads;
    std::vector<std::vector<Complex>> roots;
    for (long m = 1; m <= cfg.tmax; ++m) {
      try {
        roots.push_back(divseq::tangency_oracle_roots(int(m), P, cfg.disc));
        heads.push_back({m});
      } catch (const DomainError& e) {
        scan.warnings.push_back(std::string("oracle skipped for m = ") + std::to_string(m) + ": " + e.what());
      }
    }
    tangency::attach_oracle(scan, heads, roots, 1e-10);
  }
  return scan;
}

json scan_summary(const tangency::ScanResult& scan) {
  // counts[k-1]: hits with |a| <= k
  json counts = scan.counts;
  return json{{"T", scan.T},
              {"n", scan.n},
              {"grid_nodes", scan.grid_nodes},
              {"hits", scan.hits.size()},
              {"counts", counts},
              {"warnings", strings(scan.warnings)},
              {"failures", strings(scan.failures)}};
}

json run_scan(const RunConfig& cfg, Artifacts& art, int& exit_code) {
  tangency::PipelineSource src(build_sections(cfg), cfg.disc, cfg.working_bits());
  auto scan = do_scan(cfg, src);
  art.write("scan.csv", tangency::scan_csv(scan, digits_for(cfg.prec)), "csv");
  if (!scan.failures.empty()) exit_code = kPartialFailure;
  return scan_summary(scan);
}

json divisor_json(const divseq::BaseDivisor& d) {
  json j;
  j["divisor"] = json::parse(d.json());
  divseq::BaseDivisor ex;
  ex.entries = d.excluded;
  j["excluded"] = json::parse(ex.json());
  j["reduced"] = divseq::is_reduced(d);
  j["notes"] = strings(d.notes);
  return j;
}

json run_divseq(const RunConfig& cfg, Artifacts& art) {
  auto P = cfg.sections[0].build();
  auto Q = cfg.target ? cfg.target->build() : legendre::Section::identity();
  auto rep = divseq::xi_structure(P, Q, cfg.nmax, cfg.prec);
  json out;
  out["P"] = cfg.sections[0].to_json();
  out["Q"] = cfg.target ? cfg.target->to_json() : json{{"x", "O"}, {"sign", 1}};
  out["divisors"] = json::array();
  for (std::size_t i = 0; i < rep.divisors.size(); ++i) {
    json d = divisor_json(rep.divisors[i]);
    d["n"] = i + 1;
    out["divisors"].push_back(d);
  }
  out["xi"] = json{{"raw", rep.raw}, {"structure", json::parse(rep.ap.json())}};
  art.write("divseq.json", out.dump(2) + "\n", "json");
  return json{{"raw", rep.raw}, {"structure", out["xi"]["structure"]}};
}

json height_json(const heights::CanonicalHeight& c) {
  json gaps = json::array();
  for (const auto& g : c.cauchy_gaps) gaps.push_back(g.str(3));
  return json{{"neron_tate", c.value.str(20)},
              {"tolerance", c.tolerance.str(3)},
              {"iterations", c.iterations},
              {"torsion", c.torsion},
              {"cauchy_gaps", gaps}};
}

json run_heights(const RunConfig& cfg, Artifacts& art) {
  exact::Rational lam = exact::parse_rational(cfg.lambda);
  json out;
  out["lambda"] = exact::to_string(lam);
  out["H_lambda"] = heights::rational_height_H(lam).get_str();
  out["h_lambda"] = heights::naive_height(lam).str(20);
  out["sections"] = json::array();
  for (const auto& spec : cfg.sections) {
    json s = spec.to_json();
    auto sec = spec.build();
    if (sec.is_identity()) {
      s["neron_tate"] = "0";
      s["torsion"] = true;
    } else {
      exact::Rational x;
      try {
        x = sec.x_at(lam);
      } catch (const std::exception&) {
        s["error"] = "x has a pole at lambda";
        out["sections"].push_back(s);
        continue;
      }
      s["x_at_lambda"] = exact::to_string(x);
      s.update(height_json(heights::canonical_height(x, lam, cfg.height_iterations)));
    }
    out["sections"].push_back(s);
  }
  art.write("heights.json", out.dump(2) + "\n", "json");
  return out;
}

json run_audit(const RunConfig& cfg, Artifacts& art, int& exit_code) {
  auto sections = build_sections(cfg);
  tangency::PipelineSource src(sections, cfg.disc, cfg.working_bits());
  auto scan = do_scan(cfg, src);
  if (!scan.failures.empty()) exit_code = kPartialFailure;
  tangency::AuditConfig ac;
  ac.delta1 = cfg.delta1;
  ac.delta2 = cfg.delta2;
  json reports = json::array();
  double gamma1 = 0;
  bool any = false;
  for (const auto& hit : scan.hits) {
    if (hit.provenance == tangency::Provenance::SymbolicOracle) continue;
    json r;
    r["a"] = hit.a.a;
    r["lambda"] = json{{"re", hit.lambda.re.str(25)}, {"im", hit.lambda.im.str(25)}};
    auto alg = heights::recognize_algebraic(hit.lambda, cfg.max_degree);
    if (!alg) {
      r["recognized"] = false;
      r["note"] = "lambda not recognised as algebraic of degree <= " + std::to_string(cfg.max_degree);
      exit_code = kPartialFailure;
      reports.push_back(r);
      continue;
    }
    r["recognized"] = true;
    r["minimal_polynomial"] = exact::to_string(alg->minpoly, "l");
    double h = heights::weil_height(*alg).to_double();
    double q = cfg.q;
    std::string q_source = "config";
    if (alg->degree() == 1) {
      exact::Rational lam = -alg->minpoly.coeff(0);
      q = 1;
      q_source = "neron-tate";
      for (const auto& s : sections) {
        auto c = heights::canonical_height(s.x_at(lam), lam, cfg.height_iterations);
        q = std::max(q, c.value.to_double());
      }
    }
    auto rep = tangency::small_generator_audit(hit, src, alg->degree(), h, q, ac);
    r["q_source"] = q_source;
    r["report"] = json::parse(rep.json());
    gamma1 = any ? std::max(gamma1, h) : h;
    any = true;
    reports.push_back(r);
  }
  json out = scan_summary(scan);
  out["audits"] = reports;
  if (any) out["empirical_gamma1"] = gamma1;
  art.write("scan.csv", tangency::scan_csv(scan, digits_for(cfg.prec)), "csv");
  art.write("audit.json", out.dump(2) + "\n", "json");
  return out;
}

}  // namespace

json strip_timings(json summary) {
  summary.erase("timings");
  return summary;
}

RunOutcome run(const RunConfig& cfg) {
  auto t0 = Clock::now();
  RunOutcome out;
  json& s = out.summary;
  s["version"] = kVersion;
  s["command"] = cfg.command;
  s["config"] = cfg.to_json();
  s["precision"] = json{{"working_bits", cfg.working_bits()}, {"certified_bits", cfg.prec}};
  Artifacts art(cfg);
  mp::PrecisionScope scope(cfg.working_bits());
  int code = kSuccess;
  try {
    json result;
    if (cfg.command == "periods") result = run_periods(cfg, art);
    else if (cfg.command == "ellog") result = run_ellog(cfg, art);
    else if (cfg.command == "betti") result = run_betti(cfg, art);
    else if (cfg.command == "scan") result = run_scan(cfg, art, code);
    else if (cfg.command == "divseq") result = run_divseq(cfg, art);
    else if (cfg.command == "heights") result = run_heights(cfg, art);
    else if (cfg.command == "audit") result = run_audit(cfg, art, code);
    s["status"] = code == kSuccess ? "ok" : "partial";
    s["result"] = result;
  } catch (const Error& e) {
    code = kPartialFailure;
    s["status"] = "failed";
    s["error"] = e.what();
  }
  s["artifacts"] = art.list();
  s["timings"] = json{{"total_seconds", seconds_since(t0)}};
  out.exit_code = code;
  std::ofstream f(art.dir() / "summary.json", std::ios::binary);
  f << s.dump(2) << '\n';
  return out;
}

}  // namespace bettimap::cli
