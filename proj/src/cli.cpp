#include "z4/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "z4/classify.hpp"
#include "z4/io.hpp"

namespace z4::cli {

namespace {

struct FamilyArgs {
    std::string family = "H";
    int r1 = 0;
    int r2 = 0;

    FamilyParams params() const { return FamilyParams(r1, r2); }
    QuaternaryCode make(int max_k = 7) const {
        return family == "H" ? hadamard_code(params(), max_k)
                             : perfect_code(params(), max_k);
    }
};

void add_family_options(CLI::App* cmd, FamilyArgs& fa, bool with_family) {
    if (with_family)
        cmd->add_option("--family", fa.family, "code family, H or C")
            ->required()
            ->check(CLI::IsMember({"H", "C"}));
    cmd->add_option("--r1", fa.r1, "family parameter r1")
        ->required()
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--r2", fa.r2, "family parameter r2")
        ->required()
        ->check(CLI::NonNegativeNumber);
}

// Runs `body` with either the --out file or the default stream as sink.
int with_sink(const std::string& out_path, std::ostream& out, std::ostream& err,
              const std::function<void(std::ostream&)>& body) {
    if (out_path.empty()) {
        body(out);
        return 0;
    }
    std::ofstream file(out_path);
    if (!file) {
        err << "error: cannot open " << out_path << " for writing\n";
        return 1;
    }
    body(file);
    return 0;
}

void write_codewords(std::ostream& os, const QuaternaryCode& code,
                     const FamilyArgs& fa, const std::string& alphabet) {
    os << io::kFormatLine << "\n";
    io::write_code_header(os, fa.family[0], fa.r1, fa.r2, code.length(),
                          alphabet);
    const bool binary = alphabet == "binary";
    code.for_each_codeword([&](const Z4Word& w) {
        os << (binary ? gray_map(w).to_string() : w.to_string()) << "\n";
    });
}

void classify_row_line(std::ostream& os, const ClassificationRow& row) {
    os << "family=" << row.family << " k=" << row.k
       << " classes=" << row.class_count
       << " invariant=" << (row.family == 'H' ? "kernel" : "rank")
       << " values=";
    bool first = true;
    for (const auto& rep : row.reps) {
        if (!first) os << ",";
        os << "(" << rep.params.r1 << "," << rep.params.r2
           << "):" << rep.invariant;
        first = false;
    }
    os << "\n";
}

void print_verify_report(std::ostream& os, const VerifyReport& report) {
    os << io::kFormatLine << "\n";
    for (const CheckResult& c : report.checks) {
        if (c.skipped)
            os << "[skip] " << c.id << " " << c.name << ": " << c.detail
               << "\n";
        else
            os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.id << " " << c.name
               << ":" << c.detail << "\n";
    }
    int passed = 0;
    int ran = 0;
    for (const CheckResult& c : report.checks) {
        if (c.skipped) continue;
        ++ran;
        if (c.pass) ++passed;
    }
    os << (passed == ran ? "verify: " : "verify: FAILED, ") << passed << "/"
       << ran << " criteria passed\n";
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out,
             std::ostream& err) {
    CLI::App app{"Z4-linear Hadamard and extended perfect codes"};
    app.name("z4codes");
    app.require_subcommand(1);

    // Only the text format exists; the option pins the choice for callers.
    std::string format = "text";
    const auto add_format_option = [&format](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text"}));
    };

    // matrix
    FamilyArgs mat;
    std::string mat_out;
    CLI::App* matrix_cmd =
        app.add_subcommand("matrix", "print the family matrix A(r1,r2)");
    add_family_options(matrix_cmd, mat, false);
    add_format_option(matrix_cmd);
    matrix_cmd->add_option("--out", mat_out, "write to file instead of stdout");

    // code
    FamilyArgs code_args;
    std::string code_alphabet = "quaternary";
    std::string code_out;
    CLI::App* code_cmd =
        app.add_subcommand("code", "print all codewords of H or C");
    add_family_options(code_cmd, code_args, true);
    code_cmd->add_option("--alphabet", code_alphabet, "quaternary or binary")
        ->check(CLI::IsMember({"quaternary", "binary"}));
    add_format_option(code_cmd);
    code_cmd->add_option("--out", code_out, "write to file instead of stdout");

    // invariants
    FamilyArgs inv_args;
    std::string inv_out;
    bool inv_cardinality = false, inv_min_distance = false, inv_kernel = false;
    bool inv_rank = false, inv_linear = false, inv_weights = false;
    bool inv_slow = false;
    CLI::App* inv_cmd =
        app.add_subcommand("invariants", "compute invariants of H or C");
    add_family_options(inv_cmd, inv_args, true);
    inv_cmd->add_flag("--cardinality", inv_cardinality, "cardinality");
    inv_cmd->add_flag("--min-distance", inv_min_distance, "minimum distance");
    inv_cmd->add_flag("--kernel", inv_kernel, "kernel size of the Gray image");
    inv_cmd->add_flag("--rank", inv_rank, "rank of the Gray image");
    inv_cmd->add_flag("--linear", inv_linear, "linearity of the Gray image");
    inv_cmd->add_flag("--weights", inv_weights, "weight distribution");
    inv_cmd->add_flag("--slow", inv_slow, "allow 2^26-scale enumerations");
    add_format_option(inv_cmd);
    inv_cmd->add_option("--out", inv_out, "write to file instead of stdout");

    // project
    FamilyArgs proj_args;
    std::string proj_parity = "even";
    std::string proj_out;
    CLI::App* proj_cmd = app.add_subcommand(
        "project", "even/odd projection of the binary image");
    add_family_options(proj_cmd, proj_args, true);
    proj_cmd->add_option("--parity", proj_parity, "even or odd")
        ->check(CLI::IsMember({"even", "odd"}));
    add_format_option(proj_cmd);
    proj_cmd->add_option("--out", proj_out, "write to file instead of stdout");

    // construct
    FamilyArgs cons_args;
    std::string cons_op;
    std::string cons_alphabet = "quaternary";
    std::string cons_out;
    CLI::App* cons_cmd = app.add_subcommand(
        "construct", "double/quadruple H(r1,r2), or build it recurrently");
    add_family_options(cons_cmd, cons_args, false);
    cons_cmd->add_option("--op", cons_op, "double, quadruple or recurrent")
        ->required()
        ->check(CLI::IsMember({"double", "quadruple", "recurrent"}));
    cons_cmd->add_option("--alphabet", cons_alphabet, "quaternary or binary")
        ->check(CLI::IsMember({"quaternary", "binary"}));
    add_format_option(cons_cmd);
    cons_cmd->add_option("--out", cons_out, "write to file instead of stdout");

    // classify
    std::string cls_family;
    int cls_max_k = 7;
    bool cls_slow = false;
    std::string cls_out;
    CLI::App* cls_cmd = app.add_subcommand(
        "classify", "equivalence classes per length, both families");
    cls_cmd->add_option("--family", cls_family, "restrict to one family")
        ->check(CLI::IsMember({"H", "C"}));
    cls_cmd->add_option("--max-k", cls_max_k, "largest k (N = 2^k)")
        ->check(CLI::Range(3, 7));
    cls_cmd->add_flag("--slow", cls_slow, "rank by enumeration up to 2^26");
    add_format_option(cls_cmd);
    cls_cmd->add_option("--out", cls_out, "write to file instead of stdout");

    // verify
    int ver_max_k = 7;
    bool ver_slow = false;
    std::string ver_out;
    CLI::App* ver_cmd =
        app.add_subcommand("verify", "run the whole verification suite");
    ver_cmd->add_option("--max-k", ver_max_k, "largest k (N = 2^k)")
        ->check(CLI::Range(3, 7));
    ver_cmd->add_flag("--slow", ver_slow, "include 2^26-scale checks");
    add_format_option(ver_cmd);
    ver_cmd->add_option("--out", ver_out, "write to file instead of stdout");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (matrix_cmd->parsed()) {
            return with_sink(mat_out, out, err, [&](std::ostream& os) {
                os << io::kFormatLine << "\n";
                io::write_matrix(os, build_a(mat.r1, mat.r2));
            });
        }
        if (code_cmd->parsed()) {
            const QuaternaryCode code = code_args.make();
            if (code.log2_size() > 20) {
                err << "error: code has 2^" << code.log2_size()
                    << " words; refusing to print more than 2^20\n";
                return 1;
            }
            return with_sink(code_out, out, err, [&](std::ostream& os) {
                write_codewords(os, code, code_args, code_alphabet);
            });
        }
        if (inv_cmd->parsed()) {
            const QuaternaryCode code = inv_args.make();
            const bool all = !inv_cardinality && !inv_min_distance &&
                             !inv_kernel && !inv_rank && !inv_linear &&
                             !inv_weights;
            std::ostringstream body;
            if (all) {
                io::write_report(body, standard_report(code));
            } else {
                const int log2 = code.log2_size();
                if (inv_cardinality) {
                    body << "log2_cardinality=" << log2 << "\n";
                    if (log2 <= 62)
                        body << "cardinality=" << (std::uint64_t(1) << log2)
                             << "\n";
                }
                if (inv_min_distance) {
                    const auto d = min_distance(code, inv_slow ? 26 : 16);
                    body << "min_distance=";
                    if (d)
                        body << *d << "\n";
                    else
                        body << "none\n";
                }
                if (inv_kernel)
                    body << "kernel_size="
                         << kernel(binary_image(code)).size() << "\n";
                if (inv_rank) {
                    const int cap = inv_slow ? 26 : 16;
                    const int r =
                        log2 <= cap
                            ? rank_via_enumeration(binary_image(code), cap)
                            : rank_via_generators(code);
                    body << "rank=" << r << "\n";
                }
                if (inv_linear)
                    body << "linear="
                         << (is_linear(binary_image(code)) ? "true" : "false")
                         << "\n";
                if (inv_weights)
                    body << "weights="
                         << io::weights_to_string(
                                weight_distribution(code, inv_slow ? 26 : 20))
                         << "\n";
            }
            return with_sink(inv_out, out, err, [&](std::ostream& os) {
                os << io::kFormatLine << "\n" << body.str();
            });
        }
        if (proj_cmd->parsed()) {
            const QuaternaryCode code = proj_args.make();
            const BinaryCode projected =
                proj_parity == "even" ? even_projection(binary_image(code))
                                      : odd_projection(binary_image(code));
            return with_sink(proj_out, out, err, [&](std::ostream& os) {
                os << io::kFormatLine << "\n";
                io::write_code_header(os, proj_args.family[0], proj_args.r1,
                                      proj_args.r2, projected.length() / 2,
                                      "binary");
                for (const BinaryWord& w : projected.words())
                    os << w.to_string() << "\n";
            });
        }
        if (cons_cmd->parsed()) {
            const FamilyParams p = cons_args.params();
            QuaternaryCode code =
                cons_op == "recurrent"
                    ? recurrent_build(p)
                    : (cons_op == "double" ? plotkin_double(hadamard_code(p))
                                           : quadruple(hadamard_code(p)));
            FamilyArgs out_args = cons_args;
            out_args.family = "H";
            return with_sink(cons_out, out, err, [&](std::ostream& os) {
                write_codewords(os, code, out_args, cons_alphabet);
            });
        }
        if (cls_cmd->parsed()) {
            return with_sink(cls_out, out, err, [&](std::ostream& os) {
                os << io::kFormatLine << "\n";
                if (cls_family.empty() || cls_family == "H")
                    for (int k = 3; k <= cls_max_k; ++k)
                        classify_row_line(os, classify_hadamard(k));
                if (cls_family.empty() || cls_family == "C")
                    for (int k = 4; k <= cls_max_k; ++k)
                        classify_row_line(os, classify_perfect(k, cls_slow));
            });
        }
        if (ver_cmd->parsed()) {
            const VerifyReport report = verify_suite(ver_max_k, ver_slow);
            const int status = report.all_pass() ? 0 : 1;
            const int sink_status =
                with_sink(ver_out, out, err, [&](std::ostream& os) {
                    print_verify_report(os, report);
                });
            return sink_status ? sink_status : status;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "error: no subcommand given\n";
    return 1;
}

}  // namespace z4::cli
