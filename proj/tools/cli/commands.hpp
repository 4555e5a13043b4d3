#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "regconn/bounds.hpp"

namespace regconn::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kHypothesisViolation = 3,
    kNumericFailure = 4,
};

struct SweepSpec {
    std::string family;
    std::vector<std::int64_t> v;
    std::vector<std::int64_t> delta;
    std::vector<std::int64_t> alpha;
    std::vector<std::int64_t> m;
    std::size_t count = 1;
    std::uint64_t seed = 0;
};

struct RunConfig {
    std::string command;
    std::string input_path;
    std::string output_path;
    SweepSpec sweep;
    double tolerance = kSpectralTolerance;
    bool show_exact = false;
    std::size_t threads = 0;  ///< 0: hardware concurrency
};

/// Fixed 10-significant-digit rendering used in every table and CSV.
std::string format_number(double x);

/// Parses "7,11,15" or ranges "4:10" (inclusive), or mixes of both.
std::vector<std::int64_t> parse_int_list(const std::string& text);

inline constexpr const char* kCompareHeader =
    "graph,v,delta,paper_bound,fiedler_bound,exact,gap_paper,gap_fiedler";
inline constexpr const char* kSweepHeader =
    "graph,v,delta,paper_bound,fiedler_bound,exact,gap_paper,gap_fiedler,certified,error";

std::string compare_csv_row(const BoundComparison& c);

int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_srg(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line (argv[0] included). Returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace regconn::cli
