// io.hpp -- the text formats: matrix files, codeword files and key=value
// reports.  All CLI outputs are versioned with a "# format=1" first line.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "z4/invariants.hpp"

namespace z4::io {

inline constexpr const char* kFormatLine = "# format=1";

/// Rows of m rendered as digit strings, block-2 rows in doubled form.
std::vector<std::string> matrix_row_strings(const QuaternaryMatrix& m);

/// Header "# z4matrix n=<n> k1=<k1> k2=<k2>" followed by one row per line.
void write_matrix(std::ostream& os, const QuaternaryMatrix& m);

/// Parses the write_matrix format; "#" comment lines before the header are
/// skipped, block-2 rows are read in their doubled {0,2} form.
QuaternaryMatrix read_matrix(std::istream& is);

/// Header "# z4code family=<H|C> r1=<r1> r2=<r2> n=<n> alphabet=<...>".
void write_code_header(std::ostream& os, char family, int r1, int r2,
                       std::size_t n, const std::string& alphabet);

/// One key=value line per present field.
void write_report(std::ostream& os, const InvariantReport& r);

std::string weights_to_string(const std::map<int, std::uint64_t>& w);

}  // namespace z4::io
