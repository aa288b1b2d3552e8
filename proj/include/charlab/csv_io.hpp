#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "charlab/characteristics.hpp"
#include "charlab/field.hpp"

namespace charlab {

/// Shortest representation that round-trips a double (17 significant digits).
std::string format_double(double v);

/// Writes via a temp file in the same directory, then renames into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

/// `x,t,h,u` rows, one per node, x-major.
std::string field_to_csv(const SolutionField& field);
SolutionField field_from_csv_text(const std::string& text);
SolutionField field_from_csv(const std::filesystem::path& path);

/// `family,t,x,h,u,J` rows; curves concatenated in order.
std::string traces_to_csv(const std::vector<CharCurve>& curves);

struct ResidualRow {
    std::string check;
    double x; // point coordinate; (h,u) for state-space checks
    double t;
    double value;
};

/// `check,x,t,value` rows.
std::string residuals_to_csv(const std::vector<ResidualRow>& rows);

} // namespace charlab
