#include "qdisc/output.hpp"

#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace qdisc {

std::string format_real(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round_to_output_precision(double value) {
  return std::strtod(format_real(value).c_str(), nullptr);
}

OutputRow to_output_row(const DiscrepancyRecord& record) {
  const auto& params = record.params;
  OutputRow row;
  row.channel = std::string(to_string(params.channel));
  row.p = params.p.value();
  row.k = params.channel == ChannelKind::kNone ? 0.0 : params.k.value();
  row.r_a = params.ra.radians();
  row.r_b = params.rb.radians();
  row.pair = to_string(params.pair);
  row.d_numeric = record.d_numeric;
  row.d_closed_form = record.d_closed;
  row.branch_ok = record.branch_ok;
  return row;
}

std::string_view sweep_csv_header() {
  return "channel,p,k,r_a,r_b,pair,d_numeric,d_closed_form,branch_ok";
}

std::string to_csv_line(const OutputRow& row) {
  std::string line = row.channel;
  for (double v : {row.p, row.k, row.r_a, row.r_b}) {
    line += ',';
    line += format_real(v);
  }
  line += ',';
  line += row.pair;
  line += ',';
  line += format_real(row.d_numeric);
  line += ',';
  line += format_real(row.d_closed_form);
  line += row.branch_ok ? ",1" : ",0";
  return line;
}

void write_sweep_csv(std::span<const DiscrepancyRecord> records, std::ostream& out) {
  out << sweep_csv_header() << '\n';
  for (const auto& record : records) out << to_csv_line(to_output_row(record)) << '\n';
}

}  // namespace qdisc
