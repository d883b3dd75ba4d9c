#include "emwh/io.hpp"

#include <cstdint>
#include <fstream>
#include <stdexcept>

namespace emwh {

namespace {

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream f(path, mode);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f.precision(17);
    return f;
}

}  // namespace

void write_vtk_scalar(const std::string& path, const std::string& name,
                      const std::vector<double>& data, std::array<int, 3> n,
                      std::array<double, 3> origin, std::array<double, 3> spacing) {
    const std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2];
    if (data.size() != total)
        throw std::length_error("vtk writer: data size does not match extents");
    auto f = open_out(path);
    f << "# vtk DataFile Version 3.0\n"
      << name << "\nASCII\nDATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << n[0] << ' ' << n[1] << ' ' << n[2] << '\n'
      << "ORIGIN " << origin[0] << ' ' << origin[1] << ' ' << origin[2] << '\n'
      << "SPACING " << spacing[0] << ' ' << spacing[1] << ' ' << spacing[2] << '\n'
      << "POINT_DATA " << total << '\n'
      << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
    for (double v : data) f << v << '\n';
}

void write_raw_scalar(const std::string& path, const std::string& name,
                      const std::vector<double>& data, std::array<int, 3> n,
                      std::array<double, 3> origin, std::array<double, 3> spacing) {
    const std::size_t total = static_cast<std::size_t>(n[0]) * n[1] * n[2];
    if (data.size() != total)
        throw std::length_error("raw writer: data size does not match extents");
    {
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file: " + path);
        f.write(reinterpret_cast<const char*>(data.data()),
                static_cast<std::streamsize>(data.size() * sizeof(double)));
    }
    auto s = open_out(path + ".txt");
    s << "field " << name << "\ndims " << n[0] << ' ' << n[1] << ' ' << n[2] << "\norigin "
      << origin[0] << ' ' << origin[1] << ' ' << origin[2] << "\nspacing " << spacing[0]
      << ' ' << spacing[1] << ' ' << spacing[2] << "\nformat float64 fortran-order\n";
}

void write_residual_csv(const std::string& path, const SolveReport& report) {
    auto f = open_out(path);
    f << "iteration,relative_residual,method,converged,wave_solves,wall_seconds\n";
    for (std::size_t i = 0; i < report.residual_history.size(); ++i) {
        f << (i + 1) << ',' << report.residual_history[i];
        if (i == 0)
            f << ',' << report.method << ',' << (report.converged ? 1 : 0) << ','
              << report.wave_solves << ',' << report.wall_seconds;
        else
            f << ",,,,";
        f << '\n';
    }
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
    auto f = open_out(path);
    for (std::size_t i = 0; i < header.size(); ++i)
        f << header[i] << (i + 1 < header.size() ? ',' : '\n');
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::length_error("csv writer: row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i)
            f << row[i] << (i + 1 < row.size() ? ',' : '\n');
    }
}

}  // namespace emwh
