#include "charlab/csv_io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "charlab/errors.hpp"

namespace charlab {

std::string format_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw NumericalError("cannot open " + tmp.string() + " for writing");
        out << content;
        if (!out)
            throw NumericalError("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string field_to_csv(const SolutionField& field)
{
    std::string out = "x,t,h,u\n";
    out.reserve(out.size() + static_cast<size_t>(field.nx()) *
                                 static_cast<size_t>(field.nt()) * 48);
    for (int i = 0; i < field.nx(); ++i)
        for (int j = 0; j < field.nt(); ++j) {
            out += format_double(field.x(i));
            out += ',';
            out += format_double(field.t(j));
            out += ',';
            out += format_double(field.h(i, j));
            out += ',';
            out += format_double(field.u(i, j));
            out += '\n';
        }
    return out;
}

namespace {

std::vector<std::string> split_line(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ','))
        cells.push_back(cell);
    return cells;
}

double parse_double(const std::string& s)
{
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || (end && *end != '\0' && *end != '\r'))
        throw ConfigError("malformed number in CSV: '" + s + "'");
    return v;
}

} // namespace

SolutionField field_from_csv_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError("empty field CSV");
    if (line.rfind("x,t,h,u", 0) != 0)
        throw ConfigError("field CSV must start with header 'x,t,h,u'");

    std::vector<double> xs, ts, hs, us;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        const auto cells = split_line(line);
        if (cells.size() != 4)
            throw ConfigError("field CSV row must have 4 columns");
        xs.push_back(parse_double(cells[0]));
        ts.push_back(parse_double(cells[1]));
        hs.push_back(parse_double(cells[2]));
        us.push_back(parse_double(cells[3]));
    }
    if (xs.empty())
        throw ConfigError("field CSV has no data rows");

    // the writer emits x-major rows over uniform grids; recover both grids
    std::vector<double> t_grid;
    for (size_t k = 0; k < ts.size(); ++k) {
        if (k > 0 && ts[k] == ts[0])
            break;
        t_grid.push_back(ts[k]);
    }
    const size_t nt = t_grid.size();
    if (nt == 0 || xs.size() % nt != 0)
        throw ConfigError("field CSV rows do not form a complete x-major grid");
    const size_t nx = xs.size() / nt;
    std::vector<double> x_grid(nx);
    for (size_t i = 0; i < nx; ++i) {
        x_grid[i] = xs[i * nt];
        for (size_t j = 0; j < nt; ++j) {
            const size_t k = i * nt + j;
            if (xs[k] != x_grid[i] || ts[k] != t_grid[j])
                throw ConfigError("field CSV rows are not in x-major grid order");
        }
    }
    return SolutionField(std::move(x_grid), std::move(t_grid), std::move(hs), std::move(us));
}

SolutionField field_from_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot open field CSV: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return field_from_csv_text(ss.str());
}

std::string traces_to_csv(const std::vector<CharCurve>& curves)
{
    std::string out = "family,t,x,h,u,J\n";
    for (const CharCurve& curve : curves)
        for (const CharSample& s : curve.samples) {
            out += std::to_string(curve.family);
            out += ',';
            out += format_double(s.t);
            out += ',';
            out += format_double(s.x);
            out += ',';
            out += format_double(s.h);
            out += ',';
            out += format_double(s.u);
            out += ',';
            out += format_double(s.j);
            out += '\n';
        }
    return out;
}

std::string residuals_to_csv(const std::vector<ResidualRow>& rows)
{
    std::string out = "check,x,t,value\n";
    for (const ResidualRow& r : rows) {
        out += r.check;
        out += ',';
        out += format_double(r.x);
        out += ',';
        out += format_double(r.t);
        out += ',';
        out += format_double(r.value);
        out += '\n';
    }
    return out;
}

} // namespace charlab
