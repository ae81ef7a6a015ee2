#pragma once

// Graph files and the pmlat command line.
//
// File format: first line "n m", then m lines "u v" with 1-based vertex ids. '#' starts a
// comment, blank lines are skipped, repeated lines give parallel edges, and edge ids follow
// line order from 0.

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "pml/graph.hpp"

namespace pml::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNotMatchingCovered = 3,
  kVerificationFailed = 4,
  kDiagnostic = 5,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

MultiGraph parse_graph(std::istream& in);
MultiGraph parse_graph_file(const std::string& path);
std::string print_graph(const MultiGraph& g);

struct Output {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

Output cmd_info(const MultiGraph& g, bool json);
Output cmd_decompose(const MultiGraph& g, bool json);

struct BasisOptions {
  bool json = false;
  bool verify = false;
  std::size_t oracle_cap = 10000;
};
Output cmd_basis(const MultiGraph& g, const BasisOptions& opt);

struct VerifyOptions {
  std::string suite = "all";  // all | facets | dims | lovasz
  bool json = false;
  bool corrupt_basis = false;  // testing aid: duplicates a basis element before checking
  std::size_t oracle_cap = 100000;
};
Output cmd_verify(const MultiGraph& g, const VerifyOptions& opt);

/// Parses arguments, runs one subcommand, writes its streams and returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pml::cli
