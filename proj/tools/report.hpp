#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hsetkit/experiment.hpp"

namespace hsetkit::report {

using Json = nlohmann::ordered_json;

Json to_json(const Kernel& k);
Json to_json(const HSetCertificate& cert);
Json to_json(const SandwichVerdict& v);
Json to_json(const Candidate& c);
Json to_json(const ReduceReport& r);
Json to_json(const SignedSetReduction& r);
Json to_json(const ExperimentConfig& config);

Json approx_json(const ExperimentConfig& config, const ApproxResult& approx);
Json maps_json(const ExperimentConfig& config, const MapsResult& maps);
Json greedy_json(const ExperimentConfig& config, const GreedyReport& greedy);
Json repro_json(const ExperimentConfig& config, const ReproReport& repro);

/// x,y,f,approximant,residual on T, one line per node.
std::string residuals_csv(const ApproxResult& approx);
/// x,y,sign,weight for a signed candidate.
std::string candidate_csv(const Candidate& c);
std::string signed_set_csv(const SignedPointSet& h, const std::vector<double>& weights);
std::string lagrangian_zeros_csv(const std::vector<LagrangianCrossing>& zeros);
std::string divdiff_csv(const std::vector<MapNode>& nodes);
/// kind,x,y with kind one of crossing, node, center.
std::string error_zeros_csv(const ErrorZeroMap& map);
std::string greedy_csv(const GreedyReport& greedy);

/// Points from CSV with columns x,y[,third[,fourth]]. A leading non-numeric
/// line is taken as a header. The optional third column is returned in
/// `extra`; a fourth (the weight column of our own outputs) is ignored.
struct CsvPoints {
  PointSet points{2};
  std::vector<double> extra;
  bool has_extra = false;
};
CsvPoints read_points_csv(const std::filesystem::path& path);

/// Signs from the third column; throws Errc::InvalidArgument if absent or not +-1.
SignedPointSet read_signed_csv(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace hsetkit::report
