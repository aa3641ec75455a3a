#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mmp {

// Self-describing problem file: a line-oriented "key value..." text format.
//
//   schema_version 1
//   kind moments            # or: switches
//   domain_scale 2          # optional
//   imag_tol 1e-06          # optional
//   residual_tol 1e-06      # optional
//   values 0.5 0.53000000000000003 0.53900000000000003 0.5345
//
// '#' starts a comment; blank lines are ignored; unknown keys are rejected.
// Doubles are written with 17 significant digits so that reading a written
// file reproduces every value bit for bit.
enum class ProblemKind { moments, switches };

struct ProblemFile {
    int schema_version = 1;
    ProblemKind kind = ProblemKind::moments;
    std::vector<double> values;
    std::optional<double> domain_scale;
    std::optional<double> imag_tol;
    std::optional<double> residual_tol;
};

// Parses a problem file; throws InputError on malformed content, unknown
// keys, an unsupported schema_version, an odd-length moments vector, or
// decreasing switch values.
ProblemFile read_problem_file(std::istream& in);
ProblemFile load_problem_file(const std::string& path);  // "-" reads stdin

void write_problem_file(std::ostream& out, const ProblemFile& f);
void save_problem_file(const std::string& path, const ProblemFile& f);

// %.17g rendering used for all numeric output.
std::string format_double(double v);

}  // namespace mmp
