#pragma once

#include "paircorr/point_set.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paircorr {

/// Raised when a point file cannot be read or parsed. The message names the
/// offending line.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses the point text format: one decimal floating literal per line,
/// surrounding whitespace and blank lines ignored, values reduced mod 1.
PointSet parse_points(std::istream& in);
PointSet load_points(const std::filesystem::path& path);

/// Writes one point per line with 17 significant digits.
void write_points(std::ostream& out, const PointSet& ps);

/// Shortest-safe formatting used by all CSV output: '.' separator,
/// 17 significant digits, no grouping.
std::string format_real(double v);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so readers never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace paircorr
