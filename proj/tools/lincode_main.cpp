#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lincode/code.hpp"
#include "lincode/decoder.hpp"
#include "lincode/io.hpp"
#include "lincode/mindist.hpp"
#include "lincode/oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace lincode;

// Exit codes shared with shell-level test harnesses.
enum ExitCode : int {
    exit_ok = 0,
    exit_failure = 1,
    exit_parse = 2,
    exit_degenerate = 3,
    exit_budget = 4,
    exit_non_decodable = 5,
    exit_inconsistent_d = 6,
};

struct CommonFlags {
    std::string format = "text";
    unsigned threads = 0;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--threads", flags.threads,
                    "Worker threads (0 = machine parallelism)");
}

json vec_json(const Vec& v) {
    json a = json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

json vecs_json(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(vec_json(v));
    return a;
}

LinearCode load_code(const std::string& path) {
    return LinearCode::create(read_matrix_file(path));
}

int cmd_mindist(const std::string& path, const ScanOptions& opts,
                const CommonFlags& flags) {
    LinearCode code = load_code(path);
    DistanceReport report = min_distance(code, opts);
    if (flags.format == "json") {
        json out;
        out["d"] = report.d;
        out["X"] = vecs_json(report.solutions);
        out["Y"] = vecs_json(report.codewords);
        out["levels"] = json::array();
        for (const auto& l : report.levels)
            out["levels"].push_back({{"j", l.level}, {"subsets", l.subsets}});
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "d = " << report.d << '\n';
        std::cout << "X (" << report.solutions.size() << " points):\n";
        for (const auto& x : report.solutions)
            std::cout << "  " << format_vec(x) << '\n';
        std::cout << "Y (" << report.codewords.size() << " codewords):\n";
        for (const auto& y : report.codewords)
            std::cout << "  " << format_vec(y) << '\n';
        std::cout << "levels:\n";
        for (const auto& l : report.levels)
            std::cout << "  j=" << l.level << ": " << l.subsets << " subsets\n";
    }
    return exit_ok;
}

int cmd_decode(const std::string& path, const std::string& word_arg,
               std::optional<std::size_t> known_d, const ScanOptions& opts,
               const CommonFlags& flags) {
    LinearCode code = load_code(path);
    Vec w = parse_word(word_arg, code.field(), code.length());
    DecodeResult r = decode(code, w, known_d, opts);
    if (flags.format == "json") {
        json out;
        switch (r.status) {
        case DecodeResult::Status::decoded:
            out["status"] = "decoded";
            out["e"] = vec_json(r.error);
            out["v"] = vec_json(r.codeword);
            out["positions"] = r.error_positions;
            out["corrections"] = r.corrections;
            break;
        case DecodeResult::Status::already_codeword:
            out["status"] = "already-codeword";
            out["v"] = vec_json(r.codeword);
            break;
        case DecodeResult::Status::non_decodable:
            out["status"] = "non-decodable";
            break;
        }
        out["radius"] = r.radius;
        std::cout << out.dump(2) << '\n';
    } else {
        switch (r.status) {
        case DecodeResult::Status::decoded: {
            std::cout << "decoded\n";
            std::cout << "e = " << format_vec(r.error) << '\n';
            std::cout << "v = " << format_vec(r.codeword) << '\n';
            std::cout << "positions =";
            for (auto p : r.error_positions) std::cout << ' ' << p;
            std::cout << '\n';
            std::cout << "corrections = " << r.corrections << '\n';
            break;
        }
        case DecodeResult::Status::already_codeword:
            std::cout << "already a codeword\n";
            std::cout << "v = " << format_vec(r.codeword) << '\n';
            break;
        case DecodeResult::Status::non_decodable:
            std::cout << "non-decodable\n";
            break;
        }
        std::cout << "radius = " << r.radius << '\n';
    }
    return r.status == DecodeResult::Status::non_decodable ? exit_non_decodable
                                                           : exit_ok;
}

int cmd_wdist(const std::string& path, const CommonFlags& flags) {
    LinearCode code = load_code(path);
    WeightDistribution wd = weight_distribution(code);
    if (flags.format == "json") {
        json out;
        out["n"] = code.length();
        out["k"] = code.dimension();
        out["q"] = code.field().order();
        out["alpha"] = wd.alpha;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "n = " << code.length() << ", k = " << code.dimension()
                  << ", q = " << code.field().order() << '\n';
        std::cout << "weight distribution:\n";
        for (std::size_t i = 0; i < wd.alpha.size(); ++i)
            if (wd.alpha[i] != 0)
                std::cout << "  " << i << ": " << wd.alpha[i] << '\n';
    }
    return exit_ok;
}

int cmd_dual(const std::string& path, const CommonFlags& flags) {
    LinearCode code = load_code(path);
    FieldMatrix dual = dual_matrix(code);
    if (flags.format == "json") {
        json out;
        out["q"] = dual.field().order();
        out["rows"] = dual.rows();
        out["cols"] = dual.cols();
        json rows = json::array();
        for (std::size_t r = 0; r < dual.rows(); ++r)
            rows.push_back(vec_json(dual.row_vec(r)));
        out["matrix"] = rows;
        std::cout << out.dump(2) << '\n';
    } else {
        write_matrix(std::cout, dual);
    }
    return exit_ok;
}

int cmd_macwilliams_check(const std::string& path, const CommonFlags& flags) {
    LinearCode code = load_code(path);
    WeightDistribution primal = weight_distribution(code);
    WeightDistribution transformed =
        macwilliams_transform(primal, code.field().order(), code.dimension());
    WeightDistribution dual_direct = span_weight_distribution(dual_matrix(code));
    bool holds = transformed == dual_direct;
    if (flags.format == "json") {
        json out;
        out["alpha"] = primal.alpha;
        out["dual_alpha_transform"] = transformed.alpha;
        out["dual_alpha_enumerated"] = dual_direct.alpha;
        out["identity_holds"] = holds;
        std::cout << out.dump(2) << '\n';
    } else {
        auto print_alpha = [](const char* label, const WeightDistribution& wd) {
            std::cout << label << " = [";
            for (std::size_t i = 0; i < wd.alpha.size(); ++i) {
                if (i) std::cout << ' ';
                std::cout << wd.alpha[i];
            }
            std::cout << "]\n";
        };
        print_alpha("alpha", primal);
        print_alpha("dual alpha (MacWilliams)", transformed);
        print_alpha("dual alpha (enumerated)", dual_direct);
        std::cout << (holds ? "identity holds\n" : "identity FAILS\n");
    }
    return holds ? exit_ok : exit_failure;
}

int cmd_oracle_mindist(const std::string& path, const CommonFlags& flags) {
    LinearCode code = load_code(path);
    OracleDistance od = oracle_min_distance(code);
    if (flags.format == "json") {
        json out;
        out["d"] = od.d;
        out["codewords"] = vecs_json(od.min_weight_codewords);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "d = " << od.d << '\n';
        std::cout << "minimum-weight codewords (" << od.min_weight_codewords.size()
                  << "):\n";
        for (const auto& y : od.min_weight_codewords)
            std::cout << "  " << format_vec(y) << '\n';
    }
    return exit_ok;
}

int cmd_oracle_decode(const std::string& path, const std::string& word_arg,
                      const CommonFlags& flags) {
    LinearCode code = load_code(path);
    Vec w = parse_word(word_arg, code.field(), code.length());
    NearestResult nr = oracle_nearest(code, w);
    if (flags.format == "json") {
        json out;
        out["distance"] = nr.distance;
        out["nearest"] = vecs_json(nr.nearest);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "distance = " << nr.distance << '\n';
        std::cout << "nearest (" << nr.nearest.size() << "):\n";
        for (const auto& y : nr.nearest) std::cout << "  " << format_vec(y) << '\n';
    }
    return exit_ok;
}

int cmd_gen_cyclic(const std::string& g_arg, std::size_t n, std::uint32_t q,
                   const std::string& output) {
    PrimeField field(q);
    std::string spaced = g_arg;
    for (auto& ch : spaced)
        if (ch == ',') ch = ' ';
    Vec g;
    {
        std::istringstream ss(spaced);
        std::uint64_t v;
        while (ss >> v) {
            if (v >= q) throw parse_error("coefficient not a residue mod q");
            g.push_back(static_cast<std::uint32_t>(v));
        }
        if (!ss.eof()) throw parse_error("invalid generator coefficients");
    }
    FieldMatrix m = cyclic_generator_matrix(g, n, field);
    if (output.empty()) {
        write_matrix(std::cout, m);
    } else {
        std::ofstream out(output);
        if (!out) throw parse_error("cannot open '" + output + "' for writing");
        write_matrix(out, m);
    }
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum distance and bounded-distance decoding of linear "
                 "codes over prime fields, by exact Gaussian elimination"};
    app.require_subcommand(1);

    std::string matrix_path, word_arg, g_arg, output;
    std::size_t cyclic_n = 0;
    std::uint32_t cyclic_q = 2;
    ScanOptions scan;
    CommonFlags flags;
    std::optional<std::size_t> known_d;
    std::size_t d_flag = 0;

    auto* mindist_cmd = app.add_subcommand(
        "mindist", "Minimum distance, solution points X and codewords Y");
    mindist_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    mindist_cmd->add_option("--start-level", scan.start_level,
                            "First deletion level (a valid lower bound on d)");
    mindist_cmd->add_option("--max-work", scan.max_work,
                            "Cap on cumulative subset evaluations");
    add_common(mindist_cmd, flags);

    auto* decode_cmd =
        app.add_subcommand("decode", "Bounded-distance decode a received word");
    decode_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    decode_cmd->add_option("word", word_arg, "Received word (file or comma list)")
        ->required();
    decode_cmd->add_option("--d", d_flag,
                           "Known minimum distance (must be correct)");
    decode_cmd->add_option("--max-work", scan.max_work,
                           "Cap on cumulative subset evaluations");
    add_common(decode_cmd, flags);

    auto* wdist_cmd =
        app.add_subcommand("wdist", "Weight distribution by enumeration");
    wdist_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    add_common(wdist_cmd, flags);

    auto* dual_cmd = app.add_subcommand("dual", "Dual code basis matrix");
    dual_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    add_common(dual_cmd, flags);

    auto* mw_cmd = app.add_subcommand(
        "macwilliams-check",
        "Check the MacWilliams identity against direct dual enumeration");
    mw_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    add_common(mw_cmd, flags);

    auto* omd_cmd = app.add_subcommand("oracle-mindist",
                                       "Brute-force minimum distance");
    omd_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    add_common(omd_cmd, flags);

    auto* odec_cmd = app.add_subcommand("oracle-decode",
                                        "Brute-force nearest-neighbor search");
    odec_cmd->add_option("matrix", matrix_path, "MatrixFile path")->required();
    odec_cmd->add_option("word", word_arg, "Received word (file or comma list)")
        ->required();
    add_common(odec_cmd, flags);

    auto* gen_cmd = app.add_subcommand(
        "gen-cyclic", "Write the generator matrix of a cyclic code");
    gen_cmd->add_option("--g", g_arg,
                        "Generator polynomial coefficients, constant term first")
        ->required();
    gen_cmd->add_option("--n", cyclic_n, "Code length")->required();
    gen_cmd->add_option("--q", cyclic_q, "Field order");
    gen_cmd->add_option("-o,--output", output, "Output file (default stdout)");

    CLI11_PARSE(app, argc, argv);
    scan.threads = flags.threads;

    try {
        if (decode_cmd->parsed() && decode_cmd->count("--d") > 0)
            known_d = d_flag;
        if (mindist_cmd->parsed())
            return cmd_mindist(matrix_path, scan, flags);
        if (decode_cmd->parsed())
            return cmd_decode(matrix_path, word_arg, known_d, scan, flags);
        if (wdist_cmd->parsed()) return cmd_wdist(matrix_path, flags);
        if (dual_cmd->parsed()) return cmd_dual(matrix_path, flags);
        if (mw_cmd->parsed()) return cmd_macwilliams_check(matrix_path, flags);
        if (omd_cmd->parsed()) return cmd_oracle_mindist(matrix_path, flags);
        if (odec_cmd->parsed())
            return cmd_oracle_decode(matrix_path, word_arg, flags);
        if (gen_cmd->parsed())
            return cmd_gen_cyclic(g_arg, cyclic_n, cyclic_q, output);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    } catch (const degenerate_code& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_budget;
    } catch (const inconsistent_distance& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_inconsistent_d;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_failure;
}
