#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fuzzydepth/depth.hpp"
#include "fuzzydepth/fuzzy_number.hpp"

namespace fuzzydepth {

// Dataset CSV schema: header `a,b,c,d[,count][,label]`, one trapezoid per
// row.  count defaults to 1.  Errors carry 1-based line numbers.
Sample load_csv(std::istream& in, const std::string& source_name = "<stream>");
Sample load_csv_file(const std::string& path);

// Writes the dataset back in the same schema.  Coordinates use shortest
// round-trip formatting so that load -> save -> load is the identity.
void save_csv(const Sample& sample, std::ostream& out);
void save_csv_file(const Sample& sample, const std::string& path);

enum class ReportFormat { csv, json };

// One persisted report row: identification plus depths and dense ranks.
struct ReportRow {
  std::string label;
  Trapezoid shape;
  std::uint32_t count;
  double d_ns, d_ms, d_fs;
  std::size_t rank_ns, rank_ms, rank_fs;
};

struct ReportFile {
  std::vector<ReportRow> rows;
  Trapezoid median;
};

ReportFile assemble_report(const Sample& sample, const DepthReport& report);

// Depth values are printed with 12 significant digits (round half to even).
void write_report(const ReportFile& report, std::ostream& out,
                  ReportFormat format);
void write_report_file(const ReportFile& report, const std::string& path,
                       ReportFormat format);

// Reads back a CSV report (as written above).
ReportFile read_report(std::istream& in);
ReportFile read_report_file(const std::string& path);

// Shortest decimal that parses back to exactly the same double.
std::string format_roundtrip(double x);

// 12 significant digits, round half to even.
std::string format_sig12(double x);

}  // namespace fuzzydepth
