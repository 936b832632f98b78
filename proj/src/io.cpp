#include "lincode/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace lincode {

namespace {

// Significant lines only: blank lines and '#' comments dropped.
std::vector<std::string> significant_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::uint64_t> parse_integers(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::uint64_t> out;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t pos = 0;
            unsigned long long v = std::stoull(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw parse_error("invalid integer '" + tok + "'");
        }
    }
    return out;
}

} // namespace

FieldMatrix read_matrix(std::istream& in) {
    auto lines = significant_lines(in);
    if (lines.empty()) throw parse_error("empty matrix file");
    auto header = parse_integers(lines[0]);
    if (header.size() != 3)
        throw parse_error("header must be 'q k n', got '" + lines[0] + "'");
    std::uint64_t q = header[0], k = header[1], n = header[2];
    if (q < 2 || q >= (1u << 16)) throw parse_error("field order out of range");
    PrimeField field = [&] {
        try {
            return PrimeField(static_cast<std::uint32_t>(q));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }();
    if (k == 0 || n == 0) throw parse_error("k and n must be positive");
    if (lines.size() - 1 != k)
        throw parse_error("expected " + std::to_string(k) + " matrix rows, got " +
                          std::to_string(lines.size() - 1));
    FieldMatrix m(field, static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < k; ++r) {
        auto row = parse_integers(lines[r + 1]);
        if (row.size() != n)
            throw parse_error("row " + std::to_string(r + 1) + " has " +
                              std::to_string(row.size()) + " entries, expected " +
                              std::to_string(n));
        for (std::size_t c = 0; c < n; ++c) {
            if (row[c] >= q)
                throw parse_error("entry " + std::to_string(row[c]) +
                                  " is not a residue mod " + std::to_string(q));
            m.set(r, c, static_cast<std::uint32_t>(row[c]));
        }
    }
    return m;
}

FieldMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
    out << m.field().order() << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out << ' ';
            out << m.at(r, c);
        }
        out << '\n';
    }
}

Vec parse_word(const std::string& arg, const PrimeField& field, std::size_t n) {
    std::vector<std::uint64_t> values;
    if (arg.find(',') == std::string::npos &&
        std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        if (!in) throw parse_error("cannot open '" + arg + "'");
        std::stringstream all;
        for (const auto& line : significant_lines(in)) all << line << ' ';
        values = parse_integers(all.str());
    } else {
        std::string spaced = arg;
        for (auto& ch : spaced)
            if (ch == ',') ch = ' ';
        values = parse_integers(spaced);
    }
    if (values.size() != n)
        throw parse_error("word has " + std::to_string(values.size()) +
                          " entries, expected " + std::to_string(n));
    Vec w(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] >= field.order())
            throw parse_error("entry " + std::to_string(values[i]) +
                              " is not a residue mod " +
                              std::to_string(field.order()));
        w[i] = static_cast<std::uint32_t>(values[i]);
    }
    return w;
}

std::string format_vec(const Vec& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    s += ']';
    return s;
}

} // namespace lincode
