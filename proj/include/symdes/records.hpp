#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdes/arith.hpp"

namespace symdes {

using json = nlohmann::json;

/// One result line. Keys serialize in sorted order, big integers as
/// decimal strings, so the output is byte-stable.
struct Record {
  json inputs = json::object();
  json derived = json::object();
  std::string verdict;
  std::vector<std::string> reasons;
  std::string basis;  // the mathematical fact the verdict rests on

  json to_json() const;
};

std::string big(const Integer& x);

/// Records of one command, plus whether a must-be-empty check found a
/// survivor.
struct CommandResult {
  std::vector<Record> records;
  bool claim_violated = false;
  std::string summary;
};

enum class OutputFormat { json_lines, csv };

void write_records(std::ostream& out, const std::vector<Record>& records, OutputFormat format);

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace symdes
