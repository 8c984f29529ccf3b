#pragma once

/**
 * @file cli.hpp
 * @brief Command front end: every subcommand builds a Section, and the
 *        driver prints header, records and summary for each.
 *
 * Output is byte-stable for a fixed command line: records are sorted by
 * the producing module and nothing time-dependent is written to stdout.
 */

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "symdes/feasibility.hpp"
#include "symdes/records.hpp"

namespace symdes {

struct Section {
  std::string command;
  std::string config_hash;
  CommandResult result;
};

Section params_check_section(std::int64_t v, std::int64_t k, std::int64_t lambda);
Section brc_section(std::int64_t v, std::int64_t k, std::int64_t lambda);
/// The three classical gates with their expected outcomes.
Section brc_gates_section();
Section order_section(const std::string& family);
/// name: alt-intransitive, alt-imprimitive, m6 or alt-primitive.
Section search_section(const std::string& name, const std::map<std::string, Range>& ranges = {});
Section scan_section(const std::string& id, const std::map<std::string, Range>& ranges = {}, unsigned jobs = 1);
Section table2_section();
/// kind: "biplane11" or "plane" (with prime n). Writes fixture files into
/// out_dir when it is non-empty.
Section construct_section(const std::string& kind, int n = 0, const std::string& out_dir = "");
Section verify_ft_section(const std::string& structure_path, const std::string& generators_path);
std::vector<Section> report_all_sections(unsigned jobs = 1);

void write_section(std::ostream& out, const Section& s, OutputFormat format);

/// Exit codes: 0 success, 1 when a must-be-empty check found survivors
/// (or a verification failed), 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symdes
