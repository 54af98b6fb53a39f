#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "indpath/bnb.hpp"
#include "indpath/model.hpp"

namespace indpath {

/// One benchmark row. The config string round-trips through
/// config_from_string; the certificate path is carried by the JSON report
/// only, CSV stays flat.
struct RunRecord {
  std::string instance;
  int n = 0;
  int m = 0;
  std::string config;
  std::string status;  // optimal | timeout | error
  int opt = 0;
  double root_lp = 0.0;
  long bnb_nodes = 0;
  long cuts = 0;
  double time_s = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> path;
};

// Paper-style configuration names: W; F with optional ^{n,c}; C with
// optional ^{n,c} and mandatory _{int} or _{frac}. A bounded clique family
// carries its bound, e.g. C^{c4}_{int}.
std::string config_to_string(const ModelConfig& cfg);
ModelConfig config_from_string(const std::string& text);

// Fixed CSV schema, version 1:
// instance,n,m,config,status,opt,root_lp,bnb_nodes,cuts,time_s,seed
std::string csv_header();
std::string to_csv_row(const RunRecord& record);
RunRecord from_csv_row(const std::string& line);

std::string to_json(const RunRecord& record);
void print_text(const RunRecord& record, std::ostream& out);

RunRecord make_record(const std::string& instance, const Graph& g, const ModelConfig& cfg,
                      const SolveResult& result, std::uint64_t seed);

}  // namespace indpath
