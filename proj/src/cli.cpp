#include "mfp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "mfp/baxter.hpp"
#include "mfp/codec.hpp"
#include "mfp/io.hpp"
#include "mfp/oracle.hpp"
#include "mfp/render.hpp"

namespace mfp {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBadCode = 3;
constexpr int kExitUsage = 64;

int exit_code_for(const Error& e) {
    switch (e.code()) {
        case Errc::InvalidCode:
        case Errc::BadLength:
        case Errc::BadMagic:
        case Errc::TruncatedPayload:
        case Errc::TrailingGarbage:
            return kExitBadCode;
        default:
            return kExitBadInput;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::uint8_t> read_file_bytes(const std::string& path) {
    std::string s = read_file(path);
    return std::vector<std::uint8_t>(s.begin(), s.end());
}

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
    out << data;
    if (!out) throw Error(Errc::ParseError, "write to " + path + " failed");
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mosaic floorplan codec"};
    app.require_subcommand(1);

    std::string in_path, in_path_b, out_path, binary_path, code_arg, perm_arg;
    unsigned n = 0;
    Coord scale = 40;
    bool count_only = false, csv = false;

    auto* c_encode = app.add_subcommand("encode", "encode a .fp drawing as bits");
    c_encode->add_option("input", in_path, "drawing file (.fp)")->required();
    c_encode->add_option("--binary", binary_path, "also write the binary container (.mfc)");

    auto* c_decode = app.add_subcommand("decode", "decode bits back to a drawing");
    c_decode->add_option("bits", code_arg, "code as 0/1 text (spaces allowed)");
    c_decode->add_option("--binary", in_path_b, "read the code from a binary container (.mfc)");

    auto* c_normalize = app.add_subcommand("normalize", "rewrite a drawing in standard form");
    c_normalize->add_option("input", in_path, "drawing file (.fp)")->required();

    auto* c_equiv = app.add_subcommand("equiv", "test mosaic equivalence of two drawings");
    c_equiv->add_option("a", in_path, "first drawing (.fp)")->required();
    c_equiv->add_option("b", in_path_b, "second drawing (.fp)")->required();

    auto* c_enum = app.add_subcommand("enumerate", "list or count all valid codes of size n");
    c_enum->add_option("--n", n, "block count")->required();
    c_enum->add_flag("--count-only", count_only, "print only the number of valid codes");
    c_enum->add_flag("--csv", csv, "print the verification report as CSV");

    auto* c_bn = app.add_subcommand("baxter-number", "print B(n)");
    c_bn->add_option("--n", n, "index")->required();

    auto* c_isb = app.add_subcommand("is-baxter", "test whether a permutation is Baxter");
    c_isb->add_option("perm", perm_arg, "permutation, e.g. \"3 1 4 2\"")->required();

    auto* c_fp2bp = app.add_subcommand("fp2bp", "permutation of a drawing");
    c_fp2bp->add_option("input", in_path, "drawing file (.fp)")->required();

    auto* c_bp2fp = app.add_subcommand("bp2fp", "drawing of a Baxter permutation");
    c_bp2fp->add_option("perm", perm_arg, "permutation, e.g. \"3 1 4 2\"")->required();

    auto* c_render = app.add_subcommand("render", "render a drawing to SVG");
    c_render->add_option("input", in_path, "drawing file (.fp)")->required();
    c_render->add_option("-o,--output", out_path, "output SVG path")->required();
    c_render->add_option("--scale", scale, "pixels per grid unit");

    auto* c_stats = app.add_subcommand("stats", "bits used vs. bits required for size n");
    c_stats->add_option("--n", n, "block count")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (c_encode->parsed()) {
            CodeString code = encode(parse_floorplan_text(read_file(in_path)));
            if (!binary_path.empty()) {
                auto bytes = pack(code);
                write_file(binary_path, std::string(bytes.begin(), bytes.end()));
            }
            out << code_to_ascii(code) << "\n";
            return kExitOk;
        }
        if (c_decode->parsed()) {
            if (!in_path_b.empty() && c_decode->count("bits") > 0) {
                err << "decode: give either bits or --binary, not both\n";
                return kExitUsage;
            }
            CodeString code;
            if (!in_path_b.empty())
                code = unpack(read_file_bytes(in_path_b));
            else if (c_decode->count("bits") > 0)
                code = code_from_ascii(code_arg);
            else {
                err << "decode: need bits or --binary\n";
                return kExitUsage;
            }
            out << format_floorplan_text(decode(code));
            return kExitOk;
        }
        if (c_normalize->parsed()) {
            out << format_floorplan_text(normalize(parse_floorplan_text(read_file(in_path))));
            return kExitOk;
        }
        if (c_equiv->parsed()) {
            bool eq = equivalent(parse_floorplan_text(read_file(in_path)),
                                 parse_floorplan_text(read_file(in_path_b)));
            out << (eq ? "equivalent" : "not equivalent") << "\n";
            return eq ? kExitOk : kExitNo;
        }
        if (c_enum->parsed()) {
            if (csv) {
                EnumerationReport r = enumeration_report(n);
                out << report_csv_header() << "\n" << report_csv_row(r) << "\n";
            } else if (count_only) {
                out << count_valid_codes(n) << "\n";
            } else {
                enumerate_floorplans(n, [&](const CodeString& code, const FloorplanDrawing&) {
                    out << code_to_ascii(code) << "\n";
                });
            }
            return kExitOk;
        }
        if (c_bn->parsed()) {
            out << baxter_number(n).get_str() << "\n";
            return kExitOk;
        }
        if (c_isb->parsed()) {
            bool b = is_baxter(parse_permutation_text(perm_arg));
            out << (b ? "true" : "false") << "\n";
            return b ? kExitOk : kExitNo;
        }
        if (c_fp2bp->parsed()) {
            out << format_permutation_text(fp2bp(parse_floorplan_text(read_file(in_path)))) << "\n";
            return kExitOk;
        }
        if (c_bp2fp->parsed()) {
            out << format_floorplan_text(bp2fp(parse_permutation_text(perm_arg)));
            return kExitOk;
        }
        if (c_render->parsed()) {
            std::string svg = render_svg(parse_floorplan_text(read_file(in_path)), scale);
            write_file(out_path, svg);
            return kExitOk;
        }
        if (c_stats->parsed()) {
            out << entropy_text(entropy_report(n)) << "\n";
            return kExitOk;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitBadInput;
    }
    err << "no subcommand\n";
    return kExitUsage;
}

} // namespace mfp
