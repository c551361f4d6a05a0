#include "fuzzydepth/dataset.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "fuzzydepth/errors.hpp"

namespace fuzzydepth {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, std::size_t line) {
  std::string t = trimmed(field);
  if (t.empty()) throw ParseError("empty numeric field", line);
  const char* begin = t.c_str();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(begin, &end);
  if (end != begin + t.size() || errno == ERANGE)
    throw ParseError("not a number: '" + t + "'", line);
  return v;
}

std::uint32_t parse_count(const std::string& field, std::size_t line) {
  double v = parse_number(field, line);
  if (v < 1.0 || v != std::floor(v) || v > 4e9)
    throw ParseError("count must be a positive integer", line);
  return static_cast<std::uint32_t>(v);
}

struct Header {
  bool has_count = false;
  bool has_label = false;
};

Header parse_header(const std::string& line) {
  std::vector<std::string> cols = split_fields(line);
  for (auto& c : cols) c = trimmed(c);
  if (cols.size() < 4 || cols[0] != "a" || cols[1] != "b" || cols[2] != "c" ||
      cols[3] != "d")
    throw ParseError("expected header a,b,c,d[,count][,label]", 1);
  Header h;
  std::size_t i = 4;
  if (i < cols.size() && cols[i] == "count") {
    h.has_count = true;
    ++i;
  }
  if (i < cols.size() && cols[i] == "label") {
    h.has_label = true;
    ++i;
  }
  if (i != cols.size()) throw ParseError("unrecognized header columns", 1);
  return h;
}

}  // namespace

Sample load_csv(std::istream& in, const std::string& source_name) {
  std::string line;
  if (!std::getline(in, line))
    throw EmptyDataset(source_name + ": no header line");
  Header header = parse_header(line);

  std::vector<SampleItem> items;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<std::string> fields = split_fields(line);
    std::size_t expected =
        4 + (header.has_count ? 1 : 0) + (header.has_label ? 1 : 0);
    if (fields.size() != expected)
      throw ParseError("expected " + std::to_string(expected) + " fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    double a = parse_number(fields[0], line_no);
    double b = parse_number(fields[1], line_no);
    double c = parse_number(fields[2], line_no);
    double d = parse_number(fields[3], line_no);
    Trapezoid t{};
    try {
      t = make_trapezoid(a, b, c, d);
    } catch (const OrderingViolation& e) {
      throw OrderingViolation(source_name + ":" + std::to_string(line_no) +
                                  ": " + e.what(),
                              line_no);
    }
    std::uint32_t count =
        header.has_count ? parse_count(fields[4], line_no) : 1;
    std::string label =
        header.has_label ? trimmed(fields[4 + (header.has_count ? 1 : 0)]) : "";
    items.push_back({FuzzyNumber::from_trapezoid(t), t, count, label});
  }
  if (items.empty()) throw EmptyDataset(source_name + ": no data rows");
  return Sample(std::move(items));
}

Sample load_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return load_csv(in, path);
}

std::string format_roundtrip(double x) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, p);
}

std::string format_sig12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void save_csv(const Sample& sample, std::ostream& out) {
  out << "a,b,c,d,count,label\n";
  for (const SampleItem& it : sample.items()) {
    if (!it.shape) throw NotTrapezoidal("dataset rows must be trapezoids");
    const Trapezoid& t = *it.shape;
    out << format_roundtrip(t.a) << ',' << format_roundtrip(t.b) << ','
        << format_roundtrip(t.c) << ',' << format_roundtrip(t.d) << ','
        << it.count << ',' << it.label << '\n';
  }
}

void save_csv_file(const Sample& sample, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  save_csv(sample, out);
  if (!out) throw IoError("failed writing " + path);
}

ReportFile assemble_report(const Sample& sample, const DepthReport& report) {
  if (sample.items().size() != report.rows.size())
    throw DomainError("report does not match the sample");
  ReportFile file;
  file.median = report.median;
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const SampleItem& it = sample.items()[i];
    if (!it.shape) throw NotTrapezoidal("report rows must be trapezoids");
    const DepthReport::Row& r = report.rows[i];
    file.rows.push_back({it.label, *it.shape, it.count, r.d_ns, r.d_ms, r.d_fs,
                         r.rank_ns, r.rank_ms, r.rank_fs});
  }
  return file;
}

namespace {

void write_report_csv(const ReportFile& report, std::ostream& out) {
  out << "label,a,b,c,d,count,d_nS,d_mS,d_FS,rank_nS,rank_mS,rank_FS\n";
  for (const ReportRow& r : report.rows) {
    out << r.label << ',' << format_roundtrip(r.shape.a) << ','
        << format_roundtrip(r.shape.b) << ',' << format_roundtrip(r.shape.c)
        << ',' << format_roundtrip(r.shape.d) << ',' << r.count << ','
        << format_sig12(r.d_ns) << ',' << format_sig12(r.d_ms) << ','
        << format_sig12(r.d_fs) << ',' << r.rank_ns << ',' << r.rank_ms << ','
        << r.rank_fs << '\n';
  }
  out << "# median," << format_sig12(report.median.a) << ','
      << format_sig12(report.median.b) << ',' << format_sig12(report.median.c)
      << ',' << format_sig12(report.median.d) << '\n';
}

void write_report_json(const ReportFile& report, std::ostream& out) {
  nlohmann::json doc;
  doc["items"] = nlohmann::json::array();
  for (const ReportRow& r : report.rows) {
    doc["items"].push_back({{"label", r.label},
                            {"a", r.shape.a},
                            {"b", r.shape.b},
                            {"c", r.shape.c},
                            {"d", r.shape.d},
                            {"count", r.count},
                            {"d_nS", round_sig12(r.d_ns)},
                            {"d_mS", round_sig12(r.d_ms)},
                            {"d_FS", round_sig12(r.d_fs)},
                            {"rank_nS", r.rank_ns},
                            {"rank_mS", r.rank_ms},
                            {"rank_FS", r.rank_fs}});
  }
  doc["median"] = {{"a", round_sig12(report.median.a)},
                   {"b", round_sig12(report.median.b)},
                   {"c", round_sig12(report.median.c)},
                   {"d", round_sig12(report.median.d)}};
  out << doc.dump(2) << '\n';
}

}  // namespace

void write_report(const ReportFile& report, std::ostream& out,
                  ReportFormat format) {
  if (format == ReportFormat::csv)
    write_report_csv(report, out);
  else
    write_report_json(report, out);
  if (!out) throw IoError("failed writing report");
}

void write_report_file(const ReportFile& report, const std::string& path,
                       ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  write_report(report, out, format);
}

ReportFile read_report(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw EmptyDataset("report: no header line");
  ReportFile file{};
  bool have_median = false;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<std::string> f = split_fields(line);
    if (f[0] == "# median") {
      if (f.size() != 5) throw ParseError("bad median row", line_no);
      file.median = make_trapezoid(
          parse_number(f[1], line_no), parse_number(f[2], line_no),
          parse_number(f[3], line_no), parse_number(f[4], line_no));
      have_median = true;
      continue;
    }
    if (f.size() != 12) throw ParseError("expected 12 report fields", line_no);
    ReportRow row;
    row.label = trimmed(f[0]);
    row.shape = make_trapezoid(
        parse_number(f[1], line_no), parse_number(f[2], line_no),
        parse_number(f[3], line_no), parse_number(f[4], line_no));
    row.count = parse_count(f[5], line_no);
    row.d_ns = parse_number(f[6], line_no);
    row.d_ms = parse_number(f[7], line_no);
    row.d_fs = parse_number(f[8], line_no);
    row.rank_ns = static_cast<std::size_t>(parse_count(f[9], line_no));
    row.rank_ms = static_cast<std::size_t>(parse_count(f[10], line_no));
    row.rank_fs = static_cast<std::size_t>(parse_count(f[11], line_no));
    file.rows.push_back(std::move(row));
  }
  if (file.rows.empty()) throw EmptyDataset("report: no rows");
  if (!have_median) throw ParseError("report lacks a median row", line_no);
  return file;
}

ReportFile read_report_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return read_report(in);
}

}  // namespace fuzzydepth
