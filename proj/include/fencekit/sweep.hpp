#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fencekit/geometry.hpp"

namespace fencekit {

struct SweepOptions {
    int bodies = 100;
    std::uint64_t seed = 1;
    int body_vertices = 64;   // Valtr polygon size, unit area
    int arc_grid = 128;       // s1 resolution of the arc search
    int chord_grid = 720;
    double c_tol = 5e-3;      // anomaly thresholds against the sharp bounds
    double g_tol = 5e-3;
};

struct SweepRecord {
    int index = 0;
    std::uint64_t seed = 0;
    std::string descriptor;
    double c_value = 0.0;
    double g_value = 0.0;
    std::string c_witness;
    std::string g_witness;
    double wall_ms = 0.0;
    bool anomaly = false;
};

std::vector<SweepRecord> run_sweep(const SweepOptions& opts);

// CSV with a fixed column set; wall-clock timings are emitted only on
// request so that equal seeds give byte-identical output.
std::string sweep_csv(const std::vector<SweepRecord>& records, bool with_timings = false);

}  // namespace fencekit
