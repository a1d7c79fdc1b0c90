#ifndef POLECALC_CLI_HPP
#define POLECALC_CLI_HPP

#include <iosfwd>
#include <string>

#include "polecalc/decompose.hpp"

namespace polecalc {

struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// On-disk poset/lattice description: order matrix as rows of '0'/'1'.
struct LatticeFile {
  std::string name;
  int size = 0;
  std::vector<std::string> leq_rows;
  std::vector<std::string> labels;  // optional

  bool operator==(const LatticeFile& o) const = default;
};

LatticeFile parse_lattice_file(const std::string& path);
LatticeFile lattice_file_from_json_text(const std::string& text);
std::string lattice_file_to_json_text(const LatticeFile& f);
Poset poset_from_file(const LatticeFile& f);  // throws parse_error on a bad matrix

std::string report_to_json_text(const DecompositionReport& rep);
DecompositionReport report_from_json_text(const std::string& text);
bool report_equal(const DecompositionReport& a, const DecompositionReport& b);

std::string checks_to_json_text(const std::string& suite, const std::vector<CheckResult>& checks);

// Exit codes: 0 affirmative, 1 negative mathematical answer, 2 usage/input error.
int cmd_check_pole(const std::string& path, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& path, bool json, std::ostream& out, std::ostream& err);
int cmd_rank(const std::string& path, int set_size, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& path, const std::string& suite, int max_size, int jobs, bool json,
               std::ostream& out, std::ostream& err);

}  // namespace polecalc

#endif
