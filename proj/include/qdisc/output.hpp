#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "qdisc/analytic.hpp"

namespace qdisc {

/// printf("%.12g"); zero of either sign prints as "0".
std::string format_real(double value);

/// format_real's value parsed back, for serializers that print shortest
/// round-trip representations.
double round_to_output_precision(double value);

struct OutputRow {
  std::string channel;
  double p = 0.0;
  double k = 0.0;
  double r_a = 0.0;
  double r_b = 0.0;
  std::string pair;
  double d_numeric = 0.0;
  double d_closed_form = 0.0;
  bool branch_ok = false;
};

OutputRow to_output_row(const DiscrepancyRecord& record);

/// channel,p,k,r_a,r_b,pair,d_numeric,d_closed_form,branch_ok
std::string_view sweep_csv_header();
std::string to_csv_line(const OutputRow& row);

void write_sweep_csv(std::span<const DiscrepancyRecord> records, std::ostream& out);

}  // namespace qdisc
