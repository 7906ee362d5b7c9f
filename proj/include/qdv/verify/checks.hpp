#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdv/verify/report.hpp"

namespace qdv::verify {

/// A request outside the command grammar or refused for its parameters (exit 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  std::size_t max_order = 10'000'000;
  std::optional<std::string> dump_tables;  // directory for coset and iota tables
};

const std::vector<std::string>& lemma_ids();
const std::vector<std::string>& crosscheck_suites();

/// `verify lemma --id ID --p P`.
Report lemma(const std::string& id, unsigned p, const Options& opt);
/// `verify theorem --main --p P --mode direct|structural`.
Report theorem_main(unsigned p, const std::string& mode, const Options& opt);
/// `verify theorem --side --group SPEC`; SPEC is s4.
Report theorem_side(const std::string& group, const Options& opt);
/// `verify crosscheck --suite NAME`; "all" runs every suite.
std::vector<Report> crosscheck(const std::string& suite, const Options& opt);

/// Green-type instances: random (G, H) with |G:H| a power of p, each checked for indecomposability.
struct GreenInstances {
  std::size_t kept = 0;
  std::size_t attempts = 0;
  std::size_t indecomposable = 0;
  std::vector<std::size_t> indices;
  json first_failure;  // null when every instance passed
};
GreenInstances green_instances(unsigned p, std::size_t pairs, std::uint64_t seed, std::size_t max_index = 128);

/// Writes coset representatives and iota images as text; returns the FNV-1a hash of each file by name.
json write_tables(unsigned p, const std::optional<std::string>& dir);

}  // namespace qdv::verify
