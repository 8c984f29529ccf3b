#include "symdes/records.hpp"

#include <cstdint>
#include <cstdio>

namespace symdes {

std::string big(const Integer& x) { return x.str(); }

json Record::to_json() const {
  return json{{"inputs", inputs}, {"derived", derived}, {"verdict", verdict}, {"reasons", reasons}, {"basis", basis}};
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_records(std::ostream& out, const std::vector<Record>& records, OutputFormat format) {
  if (format == OutputFormat::json_lines) {
    for (const auto& r : records) out << r.to_json().dump() << '\n';
    return;
  }
  out << "verdict,inputs,derived,reasons,basis\n";
  for (const auto& r : records) {
    std::string reasons;
    for (const auto& s : r.reasons) reasons += (reasons.empty() ? "" : "; ") + s;
    out << csv_field(r.verdict) << ',' << csv_field(r.inputs.dump()) << ',' << csv_field(r.derived.dump()) << ','
        << csv_field(reasons) << ',' << csv_field(r.basis) << '\n';
  }
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace symdes
