#include "job.hpp"

#include <cstdlib>
#include <fstream>

#include <CLI11.hpp>

#include "ratcurve/error.hpp"

namespace ratcurve::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw Error(ErrorKind::ParseError, "unsupported value in job file: " + v.dump());
}

void put(JobFile& job, const std::string& key, const Json& v) {
  auto& slot = job.values[key];
  slot.clear();
  if (v.is_array())
    for (const auto& x : v) slot.push_back(scalar(x));
  else
    slot.push_back(scalar(v));
}

JobFile read_json(std::istream& in) {
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("job file: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "job file must hold an object");
  JobFile job;
  if (j.contains("command")) job.command = j["command"].get<std::string>();
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "command" && !it->is_object()) put(job, it.key(), *it);
  if (!job.command.empty() && j.contains(job.command) && j[job.command].is_object())
    for (auto it = j[job.command].begin(); it != j[job.command].end(); ++it) put(job, it.key(), *it);
  return job;
}

std::string unquote(std::string s) {
  if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) return s.substr(1, s.size() - 2);
  return s;
}

JobFile read_toml(std::istream& in) {
  CLI::ConfigTOML reader;
  JobFile job;
  std::vector<CLI::ConfigItem> items;
  try {
    items = reader.from_config(in);
  } catch (const CLI::Error& e) {
    throw Error(ErrorKind::ParseError, std::string("job file: ") + e.what());
  }
  for (const auto& it : items)
    if (it.parents.empty() && it.name == "command" && !it.inputs.empty()) job.command = unquote(it.inputs[0]);
  for (const auto& it : items) {
    bool top = it.parents.empty() || (it.parents.size() == 1 && it.parents[0] == "default");
    bool mine = it.parents.size() == 1 && it.parents[0] == job.command;
    if (!(top || mine) || it.name == "command" || it.name == "++" || it.name == "--") continue;
    std::vector<std::string> vals;
    for (const auto& v : it.inputs) vals.push_back(unquote(v));
    if (mine || !job.values.count(it.name)) job.values[it.name] = vals;
  }
  return job;
}

}  // namespace

JobFile read_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open job file " + path);
  if (ends_with(path, ".json")) return read_json(in);
  return read_toml(in);
}

std::string command_in_job_file(const std::string& path) { return read_job_file(path).command; }

long default_precision() {
  if (const char* s = std::getenv("RATCURVE_PRECISION_BITS")) {
    try {
      long v = std::stol(s);
      if (v >= 16 && v <= 65536) return v;
    } catch (...) {
    }
    throw Error(ErrorKind::InvalidArgument, "RATCURVE_PRECISION_BITS must be an integer in [16, 65536]");
  }
  return NumberField::kDefaultPrecision;
}

Json to_json(const InjectivityCertificate& c) {
  Json j{{"verdict", to_string(c.verdict)},
         {"method", c.method},
         {"resultant_degree", c.resultant_degree},
         {"real_candidates", c.real_candidates},
         {"pairs_excluded", c.pairs_excluded}};
  if (c.witness) j["witness"] = {c.witness->first.to_string(), c.witness->second.to_string()};
  return j;
}

Json to_json(const CircleVerdict& c) {
  Json j{{"verdict", c.circle ? "Circle" : "NotCircle"}};
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(p.get_str());
  j["points"] = pts;
  if (c.lambda) j["lambda"] = c.lambda->to_string();
  if (c.rho) j["rho"] = c.rho->to_string();
  return j;
}

Json to_json(const WeakInjectivity& w) {
  Json j{{"verdict", w.found ? "Witness" : "NoWitnessFound"}, {"search", w.search}};
  if (w.z0) {
    j["z0"] = w.z0->get_str();
    j["certificate"] = w.certificate;
  }
  return j;
}

Json to_json(const FamilyInstance& f) {
  Json params = Json::object();
  for (const auto& [k, v] : f.parameters) params[k] = v;
  Json checks{{"identity", f.checks.identity}, {"real", f.checks.real}, {"degree", f.checks.degree}};
  if (f.checks.circle) checks["circle"] = *f.checks.circle ? "Circle" : "NotCircle";
  if (f.checks.self_intersections) checks["self_intersections_lower_bound"] = *f.checks.self_intersections;
  return Json{{"family", f.name}, {"parameters", params}, {"field", f.field->name()},
              {"f", f.f.to_string()}, {"g", f.g.to_string()}, {"checks", checks}};
}

Json to_json(const SearchCandidate& c) {
  return Json{{"source", c.source}, {"degree", c.degree}, {"order", c.order}, {"generators", c.generators},
              {"sigma", c.sigma}, {"intermediate_subgroups", c.intermediate}, {"ok", c.ok}};
}

}  // namespace ratcurve::cli
