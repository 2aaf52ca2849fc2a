#include "z4/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace z4::io {

std::vector<std::string> matrix_row_strings(const QuaternaryMatrix& m) {
    std::vector<std::string> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows4(); ++i)
        rows.push_back(m.row4(i).to_string());
    for (std::size_t j = 0; j < m.rows2(); ++j)
        rows.push_back(m.row2_doubled(j).to_string());
    return rows;
}

void write_matrix(std::ostream& os, const QuaternaryMatrix& m) {
    os << "# z4matrix n=" << m.cols() << " k1=" << m.rows4()
       << " k2=" << m.rows2() << "\n";
    for (const std::string& row : matrix_row_strings(m)) os << row << "\n";
}

QuaternaryMatrix read_matrix(std::istream& is) {
    std::string line;
    std::size_t n = 0, k1 = 0, k2 = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        if (line.rfind("# z4matrix", 0) == 0) {
            std::istringstream hdr(line.substr(10));
            std::string field;
            while (hdr >> field) {
                const auto eq = field.find('=');
                if (eq == std::string::npos) continue;
                const std::string key = field.substr(0, eq);
                const std::size_t value = std::stoull(field.substr(eq + 1));
                if (key == "n")
                    n = value;
                else if (key == "k1")
                    k1 = value;
                else if (key == "k2")
                    k2 = value;
            }
            have_header = true;
            break;
        }
        if (!line.empty() && line[0] != '#')
            throw std::invalid_argument("read_matrix: missing z4matrix header");
    }
    if (!have_header || n == 0)
        throw std::invalid_argument("read_matrix: missing z4matrix header");

    QuaternaryMatrix m(n);
    for (std::size_t i = 0; i < k1 + k2; ++i) {
        if (!std::getline(is, line))
            throw std::invalid_argument("read_matrix: truncated matrix");
        if (line.size() != n)
            throw std::invalid_argument("read_matrix: row length mismatch");
        const Z4Word row = Z4Word::from_string(line);
        if (i < k1)
            m.append_row4(row);
        else
            m.append_row2(halved(row));
    }
    return m;
}

void write_code_header(std::ostream& os, char family, int r1, int r2,
                       std::size_t n, const std::string& alphabet) {
    os << "# z4code family=" << family << " r1=" << r1 << " r2=" << r2
       << " n=" << n << " alphabet=" << alphabet << "\n";
}

std::string weights_to_string(const std::map<int, std::uint64_t>& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [weight, count] : w) {
        if (!first) os << ",";
        os << weight << ":" << count;
        first = false;
    }
    return os.str();
}

void write_report(std::ostream& os, const InvariantReport& r) {
    os << "length=" << r.length << "\n";
    os << "log2_cardinality=" << r.log2_cardinality << "\n";
    if (r.cardinality) os << "cardinality=" << *r.cardinality << "\n";
    if (r.min_distance) os << "min_distance=" << *r.min_distance << "\n";
    if (r.kernel_size) os << "kernel_size=" << *r.kernel_size << "\n";
    if (r.rank) os << "rank=" << *r.rank << "\n";
    if (r.linear) os << "linear=" << (*r.linear ? "true" : "false") << "\n";
    if (r.weight_distribution)
        os << "weights=" << weights_to_string(*r.weight_distribution) << "\n";
}

}  // namespace z4::io
