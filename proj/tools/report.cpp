#include "report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hsetkit/error.hpp"

namespace hsetkit::report {

namespace {

// Round-trip precision keeps the CSVs bit-faithful and deterministic.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json point_json(std::span<const double> p) { return Json(std::vector<double>(p.begin(), p.end())); }

Json points_json(const PointSet& ps) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) out.push_back(point_json(ps[i]));
  return out;
}

const char* criterion_name(GreedyCriterion c) {
  return c == GreedyCriterion::DividedDifference ? "divided-difference" : "interpolation-error";
}

}  // namespace

Json to_json(const Kernel& k) { return {{"family", k.name()}, {"scale", k.scale()}}; }

Json to_json(const HSetCertificate& cert) {
  Json j{{"is_hset", cert.is_hset},
         {"objective", cert.objective},
         {"rows", cert.rows},
         {"cols", cert.cols},
         {"rank", cert.rank},
         {"tolerance", cert.tolerance},
         {"weights", cert.weights}};
  j["witness"] = cert.witness ? Json(*cert.witness) : Json(nullptr);
  return j;
}

Json to_json(const SandwichVerdict& v) {
  return {{"applicable", v.applicable},
          {"lower", v.lower},
          {"upper", v.upper},
          {"gap_ratio", v.gap_ratio},
          {"reason", v.reason}};
}

Json to_json(const Candidate& c) {
  return {{"rule", c.rule},
          {"threshold", c.threshold},
          {"count", c.indices.size()},
          {"is_hset", c.certificate.is_hset},
          {"mu", c.mu},
          {"indices", c.indices},
          {"signs", c.set.signs()},
          {"certificate", to_json(c.certificate)},
          {"sandwich", to_json(c.sandwich)}};
}

Json to_json(const ReduceReport& r) {
  return {{"size_before", r.size_before},
          {"size_after", r.size_after},
          {"mu_before", r.mu_before},
          {"mu_after", r.mu_after},
          {"max_residual", r.max_residual},
          {"recertified", r.recertified},
          {"reduced", to_json(r.reduced)}};
}

Json to_json(const SignedSetReduction& r) {
  return {{"certificate", to_json(r.certificate)},
          {"size_before", r.certificate.rows},
          {"size_after", r.reduced.size()},
          {"reduced_points", points_json(r.reduced.points())},
          {"reduced_signs", r.reduced.signs()},
          {"recertificate", to_json(r.recertificate)}};
}

Json to_json(const ExperimentConfig& config) {
  Json j{{"kernel", to_json(config.kernel)},
         {"n_centers", config.centers ? config.centers->size() : config.n_centers},
         {"seed", config.seed},
         {"centers_source", config.centers ? "file" : "seeded-uniform"},
         {"domain", {{"lower", config.domain.lower}, {"upper", config.domain.upper}}},
         {"grid_resolution", config.grid_resolution},
         {"eval_grid_resolution", config.eval_grid_resolution},
         {"target", config.target == TargetKind::Peaks ? "peaks" : "tabulated"},
         {"peaks_rescale", config.peaks_rescale},
         {"thresholds", config.thresholds}};
  j["multiplier_threshold"] =
      config.multiplier_threshold ? Json(*config.multiplier_threshold) : Json(nullptr);
  return j;
}

Json approx_json(const ExperimentConfig& config, const ApproxResult& approx) {
  return {{"config", to_json(config)},
          {"centers", points_json(approx.centers)},
          {"eta_star_on_T", approx.eta_star_on_grid},
          {"sup_error_on_eval_grid", approx.sup_error_on_eval_grid},
          {"coefficients", approx.solution.coefficients},
          {"dual_support", dual_support(approx.solution)}};
}

Json maps_json(const ExperimentConfig& config, const MapsResult& maps) {
  std::size_t missing = 0;
  for (const auto& n : maps.divdiff)
    if (!n.value) ++missing;
  return {{"config", to_json(config)},
          {"lagrangian_crossings", maps.lagrangian_zeros.size()},
          {"divdiff_nodes", maps.divdiff.size()},
          {"divdiff_missing", missing},
          {"error_crossings", maps.error_zeros.crossings.size()},
          {"error_identically_zero", maps.error_zeros.identically_zero},
          {"fill_distance", maps.fill_distance},
          {"zero_set_distance", maps.zero_set_distance.value},
          {"zero_set_fallback", maps.zero_set_distance.fell_back},
          {"grid_spacing", maps.grid_spacing}};
}

Json greedy_json(const ExperimentConfig& config, const GreedyReport& greedy) {
  Json steps = Json::array();
  for (const auto& s : greedy.steps)
    steps.push_back({{"candidate", s.candidate}, {"point", s.point}, {"score", s.score}});
  return {{"config", to_json(config)},
          {"criterion", criterion_name(greedy.criterion)},
          {"steps", steps},
          {"sup_error_after", greedy.sup_error_after}};
}

Json repro_json(const ExperimentConfig& config, const ReproReport& repro) {
  Json sweep = Json::array();
  for (const auto& c : repro.sweep) sweep.push_back(to_json(c));
  Json j = approx_json(config, repro.approx);
  j["extremal"] = to_json(repro.extremal);
  j["multiplier"] = repro.multiplier ? to_json(*repro.multiplier) : Json(nullptr);
  j["sweep"] = sweep;
  j["reduced_from"] = repro.reduced_from ? Json(*repro.reduced_from) : Json(nullptr);
  j["reduction"] = repro.reduction ? to_json(*repro.reduction) : Json(nullptr);
  return j;
}

std::string residuals_csv(const ApproxResult& approx) {
  std::ostringstream out;
  out << "x,y,f,approximant,residual\n";
  const auto& r = approx.solution.residuals;
  for (std::size_t k = 0; k < approx.grid_points.size(); ++k) {
    const auto p = approx.grid_points[k];
    out << num(p[0]) << ',' << num(p[1]) << ',' << num(approx.f_values[k]) << ','
        << num(approx.f_values[k] - r[k]) << ',' << num(r[k]) << '\n';
  }
  return out.str();
}

std::string signed_set_csv(const SignedPointSet& h, const std::vector<double>& weights) {
  std::ostringstream out;
  out << "x,y,sign,weight\n";
  for (std::size_t k = 0; k < h.size(); ++k) {
    const auto p = h.points()[k];
    out << num(p[0]) << ',' << num(p[1]) << ',' << h.signs()[k] << ','
        << num(k < weights.size() ? weights[k] : 0.0) << '\n';
  }
  return out.str();
}

std::string candidate_csv(const Candidate& c) {
  return signed_set_csv(c.set, c.certificate.weights);
}

std::string lagrangian_zeros_csv(const std::vector<LagrangianCrossing>& zeros) {
  std::ostringstream out;
  out << "center,x,y\n";
  for (const auto& z : zeros)
    out << z.center << ',' << num(z.location[0]) << ',' << num(z.location[1]) << '\n';
  return out.str();
}

std::string divdiff_csv(const std::vector<MapNode>& nodes) {
  std::ostringstream out;
  out << "x,y,value\n";
  for (const auto& n : nodes)
    out << num(n.location[0]) << ',' << num(n.location[1]) << ','
        << (n.value ? num(*n.value) : std::string("nan")) << '\n';
  return out.str();
}

std::string error_zeros_csv(const ErrorZeroMap& map) {
  std::ostringstream out;
  out << "kind,x,y\n";
  auto emit = [&](const char* kind, const std::vector<Point>& pts) {
    for (const auto& p : pts) out << kind << ',' << num(p[0]) << ',' << num(p[1]) << '\n';
  };
  emit("crossing", map.crossings);
  emit("node", map.zero_nodes);
  emit("center", map.centers);
  return out.str();
}

std::string greedy_csv(const GreedyReport& greedy) {
  std::ostringstream out;
  out << "step,candidate,x,y,score,sup_error_after\n";
  for (std::size_t s = 0; s < greedy.steps.size(); ++s) {
    const auto& st = greedy.steps[s];
    out << s + 1 << ',' << st.candidate << ',' << num(st.point[0]) << ',' << num(st.point[1])
        << ',' << num(st.score) << ',' << num(greedy.sup_error_after[s + 1]) << '\n';
  }
  return out.str();
}

CsvPoints read_points_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  CsvPoints out;
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> columns;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> fields;
    std::stringstream ss(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ss, cell, ',')) {
      try {
        std::size_t used = 0;
        fields.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (out.points.empty() && !columns) {
        columns = 0;  // header seen
        continue;
      }
      throw Error(Errc::Io, path.string() + ":" + std::to_string(line_no) + ": not numeric");
    }
    if (fields.size() < 2 || fields.size() > 4)
      throw Error(Errc::Io, path.string() + ":" + std::to_string(line_no) +
                                ": expected x,y[,value[,weight]] columns");
    if (columns && *columns != 0 && *columns != fields.size())
      throw Error(Errc::Io, path.string() + ":" + std::to_string(line_no) +
                                ": inconsistent column count");
    columns = fields.size();
    out.points.push_back(std::span<const double>(fields.data(), 2));
    if (fields.size() >= 3) out.extra.push_back(fields[2]);
  }
  if (out.points.empty()) throw Error(Errc::EmptyInput, path.string() + " has no points");
  out.has_extra = !out.extra.empty();
  return out;
}

SignedPointSet read_signed_csv(const std::filesystem::path& path) {
  CsvPoints csv = read_points_csv(path);
  if (!csv.has_extra)
    throw Error(Errc::InvalidArgument, path.string() + " needs a sign column");
  std::vector<int> signs;
  for (double s : csv.extra) {
    if (s != 1.0 && s != -1.0)
      throw Error(Errc::InvalidArgument, path.string() + ": signs must be +1 or -1");
    signs.push_back(static_cast<int>(s));
  }
  return {std::move(csv.points), std::move(signs)};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::Io, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(Errc::Io, "write failed for " + path.string());
}

}  // namespace hsetkit::report
