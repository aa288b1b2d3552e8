#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "charlab/errors.hpp"

namespace charlab {

struct DomainSpec {
    double x_min = -8.0;
    double x_max = 8.0;
    double t_end = 0.5;
    int nx = 401;
    double dt = 0.0;  // 0: derive from cfl
    double cfl = 0.45;
    int nt_out = 101;
};

struct InitialSpec {
    std::string type = "constant"; // constant | gaussian-hump
    double h = 1.0;
    double u = 0.0;
    double base = 1.0;      // gaussian-hump: h = base + amplitude*exp(-((x-center)/width)^2)
    double amplitude = 0.2;
    double width = 1.0;
    double center = 0.0;
};

struct FSpec {
    std::string type = "constant"; // constant | h | h-plus-u | sin-offset | profile
    double value = 2.0;            // constant
    double offset = 2.0;           // sin-offset: f(y) = offset + amplitude*sin(y)
    double amplitude = 0.3;
};

struct ProfileSpec {
    std::string type = "sin"; // constant | sin | from-f
    double h = 1.0;           // constant
    double base = 1.0;        // sin: H(y) = base + amplitude*sin(y)
    double amplitude = 0.1;
    FSpec f;                  // from-f
    double y0 = 0.0;
    double h0 = 1.5;
};

struct WaveSpec {
    int a = +1;
    double alpha = 0.0;
    double y_min = -4.0;
    double y_max = 4.0;
    ProfileSpec profile;
};

struct TraceSpec {
    int family = +1;
    std::vector<double> seeds;
    double t0 = 0.0;
    double t1 = 0.0; // 0: field t_max
    double dt = 1e-3;
    double tolerance = 0.0; // 0: no tolerance gate
};

struct VerifySpec {
    std::string check;
    std::string branch = "v1";
    std::string xi = "u";
    int k_sign = +1;
    std::string psi = "zero";
    int a = +1;
    FSpec f;
    int samples = 1000;
    std::array<double, 2> h_range{0.1, 10.0};
    std::array<double, 2> u_range{-5.0, 5.0};
    std::array<double, 2> t_range{0.0, 1.0};
    std::array<double, 2> x_range{-1.0, 1.0};
    double tolerance = 1e-6;
};

struct CompareSpec {
    std::vector<int> levels{200, 400, 800};
    double cfl = 0.45;
    double dt_factor = 0.25; // moc dt = dt_factor * dx
    double min_ratio = 1.5;
};

struct OutputSpec {
    std::string field = "field.csv";
    std::string trace = "trace.csv";
    std::string residuals = "residuals.csv";
    std::string report = "report.json";
    std::string table = "table.csv";
    std::string summary = "summary.json";
};

struct RunConfig {
    std::string command;
    std::string system = "shallow-water";
    std::uint64_t seed = 20260810;
    std::string solver = "moc";
    std::string field_source = "exact"; // exact | simulate | csv
    std::string field_csv;
    DomainSpec domain;
    InitialSpec initial;
    WaveSpec wave;
    TraceSpec trace;
    VerifySpec verify;
    CompareSpec compare;
    OutputSpec output;

    bool has_wave = false;
    bool has_initial = false;
    bool has_trace = false;
    bool has_verify = false;
};

/// The schema document the loader validates against (identical to the copy
/// shipped at schema/charlab-config.schema.json).
const std::string& config_schema_text();

/// Parses and validates a config document. Unknown keys anywhere are
/// rejected against the schema's property sets; types, enums and ranges are
/// enforced on load. Throws ConfigError.
RunConfig parse_config_text(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

} // namespace charlab
