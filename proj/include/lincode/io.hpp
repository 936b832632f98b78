#pragma once

#include <iosfwd>
#include <string>

#include "lincode/matrix.hpp"

namespace lincode {

// MatrixFile format: a header line "q k n", then k lines of n entries in
// [0, q), all base-10 and space-separated. Blank lines and lines starting
// with '#' are ignored.

FieldMatrix read_matrix(std::istream& in);
FieldMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const FieldMatrix& m);

/// A received word: either the path of a file holding n space-separated
/// entries, or an inline comma-separated list ("0,1,1,1,0,0").
Vec parse_word(const std::string& arg, const PrimeField& field, std::size_t n);

/// Bracketed space-separated form, e.g. "[0 1 1 1 1 0]".
std::string format_vec(const Vec& v);

} // namespace lincode
