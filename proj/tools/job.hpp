#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratcurve/certificates.hpp"
#include "ratcurve/construction.hpp"
#include "ratcurve/families.hpp"
#include "ratcurve/permcheck.hpp"

namespace ratcurve::cli {

using Json = nlohmann::json;

// Flat key -> values map read from a TOML or JSON job file.  Keys in a table
// named after the command are merged in with the top-level ones.
struct JobFile {
  std::string command;
  std::map<std::string, std::vector<std::string>> values;
};

JobFile read_job_file(const std::string& path);
std::string command_in_job_file(const std::string& path);

long default_precision();

Json to_json(const InjectivityCertificate& c);
Json to_json(const CircleVerdict& c);
Json to_json(const WeakInjectivity& w);
Json to_json(const FamilyInstance& f);
Json to_json(const SearchCandidate& c);

}  // namespace ratcurve::cli
