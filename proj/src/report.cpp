#include "indpath/report.hpp"

#include <json.hpp>

#include <charconv>
#include <ostream>
#include <sstream>

namespace indpath {

std::string config_to_string(const ModelConfig& cfg) {
  cfg.validate();
  std::string out;
  switch (cfg.formulation) {
    case ModelConfig::Formulation::walk:
      return "W";
    case ModelConfig::Formulation::cut:
      out = "C";
      break;
    case ModelConfig::Formulation::flow:
      out = "F";
      break;
  }
  if (cfg.node_variables || cfg.clique_constraints) {
    out += "^{";
    if (cfg.node_variables) out += "n";
    if (cfg.clique_constraints) {
      if (cfg.node_variables) out += ",";
      out += "c";
      if (cfg.clique_size_bound) out += std::to_string(*cfg.clique_size_bound);
    }
    out += "}";
  }
  if (cfg.formulation == ModelConfig::Formulation::cut)
    out += cfg.fractional_separation ? "_{frac}" : "_{int}";
  return out;
}

ModelConfig config_from_string(const std::string& text) {
  ModelConfig cfg;
  std::size_t pos = 0;
  const auto fail = [&]() {
    throw Error("cannot parse config string '" + text + "'");
  };
  if (pos >= text.size()) fail();
  switch (text[pos++]) {
    case 'W':
      cfg.formulation = ModelConfig::Formulation::walk;
      break;
    case 'C':
      cfg.formulation = ModelConfig::Formulation::cut;
      break;
    case 'F':
      cfg.formulation = ModelConfig::Formulation::flow;
      break;
    default:
      fail();
  }
  if (pos < text.size() && text[pos] == '^') {
    if (text.compare(pos, 2, "^{") != 0) fail();
    pos += 2;
    const std::size_t close = text.find('}', pos);
    if (close == std::string::npos) fail();
    std::string inner = text.substr(pos, close - pos);
    pos = close + 1;
    std::istringstream parts(inner);
    std::string token;
    while (std::getline(parts, token, ',')) {
      if (token == "n") {
        cfg.node_variables = true;
      } else if (token == "c") {
        cfg.clique_constraints = true;
      } else if (token.size() > 1 && token[0] == 'c') {
        int bound = 0;
        const auto res = std::from_chars(token.data() + 1, token.data() + token.size(), bound);
        if (res.ec != std::errc() || res.ptr != token.data() + token.size()) fail();
        cfg.clique_constraints = true;
        cfg.clique_size_bound = bound;
      } else {
        fail();
      }
    }
  }
  if (cfg.formulation == ModelConfig::Formulation::cut) {
    if (text.compare(pos, 6, "_{int}") == 0) {
      cfg.fractional_separation = false;
      pos += 6;
    } else if (text.compare(pos, 7, "_{frac}") == 0) {
      cfg.fractional_separation = true;
      pos += 7;
    } else {
      fail();
    }
  }
  if (pos != text.size()) fail();
  cfg.validate();
  return cfg;
}

std::string csv_header() {
  return "instance,n,m,config,status,opt,root_lp,bnb_nodes,cuts,time_s,seed";
}

namespace {

// Config names such as C^{n,c}_{int} contain commas; quote those fields.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> csv_split(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  fields.push_back(std::move(field));
  return fields;
}

}  // namespace

std::string to_csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << csv_escape(r.instance) << ',' << r.n << ',' << r.m << ',' << csv_escape(r.config)
      << ',' << r.status << ',' << r.opt << ',' << r.root_lp << ',' << r.bnb_nodes << ','
      << r.cuts << ',' << r.time_s << ',' << r.seed;
  return out.str();
}

RunRecord from_csv_row(const std::string& line) {
  const std::vector<std::string> fields = csv_split(line);
  if (fields.size() != 11) throw Error("CSV row has " + std::to_string(fields.size()) +
                                       " fields, expected 11");
  RunRecord r;
  r.instance = fields[0];
  r.n = std::stoi(fields[1]);
  r.m = std::stoi(fields[2]);
  r.config = fields[3];
  r.status = fields[4];
  r.opt = std::stoi(fields[5]);
  r.root_lp = std::stod(fields[6]);
  r.bnb_nodes = std::stol(fields[7]);
  r.cuts = std::stol(fields[8]);
  r.time_s = std::stod(fields[9]);
  r.seed = std::stoull(fields[10]);
  return r;
}

std::string to_json(const RunRecord& r) {
  nlohmann::json j{{"instance", r.instance}, {"n", r.n},
                   {"m", r.m},               {"config", r.config},
                   {"status", r.status},     {"opt", r.opt},
                   {"root_lp", r.root_lp},   {"bnb_nodes", r.bnb_nodes},
                   {"cuts", r.cuts},         {"time_s", r.time_s},
                   {"seed", r.seed},         {"path", r.path}};
  return j.dump();
}

void print_text(const RunRecord& r, std::ostream& out) {
  out << "instance : " << r.instance << " (n=" << r.n << ", m=" << r.m << ")\n"
      << "config   : " << r.config << '\n'
      << "status   : " << r.status << '\n'
      << "opt      : " << r.opt << '\n'
      << "root LP  : " << r.root_lp << '\n'
      << "nodes    : " << r.bnb_nodes << ", cuts: " << r.cuts << '\n'
      << "time [s] : " << r.time_s << '\n';
  if (!r.path.empty()) {
    out << "path     :";
    for (int v : r.path) out << ' ' << v;
    out << '\n';
  }
}

RunRecord make_record(const std::string& instance, const Graph& g, const ModelConfig& cfg,
                      const SolveResult& result, std::uint64_t seed) {
  RunRecord r;
  r.instance = instance;
  r.n = g.num_nodes();
  r.m = g.num_edges();
  r.config = config_to_string(cfg);
  switch (result.status) {
    case SolveOutcome::optimal: r.status = "optimal"; break;
    case SolveOutcome::timeout: r.status = "timeout"; break;
    case SolveOutcome::infeasible: r.status = "error"; break;
  }
  r.opt = result.opt_value;
  r.root_lp = result.stats.root_lp_value;
  r.bnb_nodes = result.stats.bnb_nodes;
  r.cuts = result.stats.cuts_added;
  r.time_s = result.stats.wall_time_seconds;
  r.seed = seed;
  r.path = result.path;
  return r;
}

}  // namespace indpath
