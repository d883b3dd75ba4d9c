#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "emwh/krylov.hpp"
#include "emwh/problem.hpp"

namespace emwh {

/// One volume source entry from a run configuration.
struct SourceConfig {
    std::string type;  // gaussian | point | manufactured-poly | manufactured-affine
    std::array<double, 3> center{0.0, 0.0, 0.0};
    double sigma = 36.0;      // gaussian decay: exp(-sigma r^2)
    double amplitude = 1.0;
    bool scale_by_omega = true;  // multiply the amplitude by the drive frequency
    std::string component = "ez";
    int omega_index = 0;
};

/// Parsed and validated run configuration. Field names mirror the JSON keys.
struct RunConfig {
    int dim = 2;
    std::array<double, 3> lo{0.0, 0.0, 0.0};
    std::array<double, 3> hi{1.0, 1.0, 1.0};
    std::array<int, 3> cells{0, 0, 0};  // used when points_per_omega == 0
    int points_per_omega = 0;           // cells per unit length = this * ceil(max omega)

    std::vector<double> frequencies;
    int periods = 10;
    Forcing forcing = Forcing::Sin;
    Quadrature quadrature = Quadrature::Trapezoid;
    SourceTime profile = SourceTime::SinRecursive;

    BoundarySpec boundary;
    bool dirichlet_affine = false;  // hold dirichlet faces at (x + y) cos(w t)
    bool dirichlet_modified = false;

    MaterialSpec material;
    std::vector<Region> pec_regions;
    std::vector<SourceConfig> sources;

    std::string method = "auto";  // auto | cg | gmres | fixed-point
    double tol = 1e-8;
    int max_iters = 200;
    int restart = 0;
    double cfl_safety = 0.9;

    std::string output_prefix;
    bool output_vtk = false;
    bool output_residuals = true;
};

/// Parse JSON text; throws std::invalid_argument naming the offending key.
RunConfig parse_run_config(const std::string& json_text);
RunConfig load_run_config(const std::string& path);

/// Materialize the grid, sources, filter and time grid described by the
/// configuration.
std::variant<Problem2D, Problem3D> build_problem(const RunConfig& cfg);

/// Resolved settings (including derived quantities such as cell counts and
/// the time step) as a JSON snapshot for reproducibility.
std::string config_snapshot(const RunConfig& cfg);

/// Solve according to cfg.method.
SolveReport run_solver(const WaveHoltzOperator& op, const RunConfig& cfg);

/// Field strength sqrt(integral of ez^2) over an axis-aligned rectangle,
/// midpoint rule on cell centers.
double waveguide_metric(const Grid2D& g, const std::vector<double>& ez,
                        std::array<double, 2> lo, std::array<double, 2> hi);

}  // namespace emwh
