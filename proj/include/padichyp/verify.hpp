#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace padichyp {

enum class Status { Pass, Fail, Skip };

/// One checked case of a suite. lhs/rhs are centered integers (or an error text).
struct ReportEntry {
  std::string suite;
  long p = 0;
  std::string case_id;
  std::string lhs;
  std::string rhs;
  std::string modulus;  // p^N as a decimal integer, or "exact"
  Status status = Status::Pass;
  std::string reason;   // skip reason

  std::string status_text() const;
};

/// Suite names in canonical order.
const std::vector<std::string>& suite_names();
/// Default precision N for a suite (3 for identity suites, 2 for value suites).
int default_precision(std::string_view suite);
/// Smallest prime a suite accepts.
long min_prime(std::string_view suite);

/// Runs one suite over the primes in [p_min, p_max]. Entries are ordered by
/// prime, then by case, regardless of `threads`. Throws std::invalid_argument
/// for an unknown suite name or an invalid range.
std::vector<ReportEntry> run_suite(std::string_view name, long p_min, long p_max, int N,
                                   int threads = 1);

/// The five special values of 3G3[1/2,1/6,5/6 | t].
std::vector<ReportEntry> run_cor43(long p_min, long p_max, int N, int threads = 1);

enum class ReportFormat { JsonLines, Csv, Summary };
ReportFormat parse_format(std::string_view name);

void emit_report(std::span<const ReportEntry> entries, ReportFormat format, std::ostream& out);
bool any_failed(std::span<const ReportEntry> entries);

struct Counts {
  long pass = 0, fail = 0, skip = 0;
};
Counts count_entries(std::span<const ReportEntry> entries);

}  // namespace padichyp
