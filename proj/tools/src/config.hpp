#pragma once

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bettimap/disc.hpp"
#include "bettimap/legendre/section.hpp"

namespace bettimap::cli {

using nlohmann::json;

// Invalid configuration; `path` names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

struct SectionSpec {
  std::string x;  // rational function of l, or "O" for the zero section
  int sign = 1;

  legendre::Section build() const;
  json to_json() const;
};

struct RunConfig {
  std::string command;
  std::vector<SectionSpec> sections;
  std::optional<SectionSpec> target;  // divseq: Q (defaults to O)
  Disc disc;
  long prec = 128;  // certified bits; the work runs with guard bits on top
  long tmax = 10;
  long nmax = 12;
  int threads = 1;
  std::string out = "out";
  int grid = 32;
  int samples = 8;
  std::string lambda;  // heights: rational parameter
  int height_iterations = 8;
  double delta1 = 1.0, delta2 = 10.0;
  double q = 1.0;  // audit: q when it cannot be computed
  int max_degree = 8;
  bool oracle = false;

  long working_bits() const;
  json to_json() const;
};

const std::vector<std::string>& commands();

// Merges `overrides` over `file` (both JSON objects, possibly empty) and
// validates. Throws ConfigError.
RunConfig make_config(const std::string& command, const json& file, const json& overrides);

// "RE,IM,RADIUS".
Disc parse_disc(const std::string& s, const std::string& path);

// "EXPR" or "EXPR:SIGN".
SectionSpec parse_section_arg(const std::string& s, const std::string& path);

}  // namespace bettimap::cli
