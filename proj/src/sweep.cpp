#include "fencekit/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fencekit/arc_solver.hpp"
#include "fencekit/bodies.hpp"
#include "fencekit/chord_solver.hpp"
#include "fencekit/parallel.hpp"

namespace fencekit {

namespace {

std::string witness_summary(const QuotientReport& rep) {
    char buf[128];
    if (const Chord* c = std::get_if<Chord>(&rep.witness)) {
        std::snprintf(buf, sizeof(buf), "chord len=%.9g frac=%.6g", c->length(),
                      rep.witness_area_fraction);
    } else {
        const CircularArc& a = std::get<CircularArc>(rep.witness);
        std::snprintf(buf, sizeof(buf), "arc len=%.9g opening=%.6g frac=%.6g", a.length(),
                      a.opening, rep.witness_area_fraction);
    }
    return buf;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepOptions& opts) {
    std::vector<SweepRecord> out(opts.bodies);
    double c_bound = 8.0 / M_PI + opts.c_tol;
    double g_bound = auerbach_G_constant() + opts.g_tol;

    parallel_for(static_cast<std::size_t>(opts.bodies), [&](std::size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        std::uint64_t body_seed = opts.seed * 0x100000001b3ULL + static_cast<std::uint64_t>(i);
        ConvexBody body = normalized_to_area(random_valtr(opts.body_vertices, body_seed), 1.0);

        ArcSearchOptions arc_opts;
        arc_opts.grid_s1 = opts.arc_grid;
        arc_opts.grid_s2 = std::max(8, opts.arc_grid / 2);
        QuotientReport c_rep = relaxed_C(body, arc_opts);
        QuotientReport g_rep = relaxed_G(body, opts.chord_grid);

        SweepRecord& r = out[i];
        r.index = static_cast<int>(i);
        r.seed = body_seed;
        {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "valtr-%d", opts.body_vertices);
            r.descriptor = buf;
        }
        r.c_value = c_rep.value;
        r.g_value = g_rep.value;
        r.c_witness = witness_summary(c_rep);
        r.g_witness = witness_summary(g_rep);
        r.anomaly = !(c_rep.value <= c_bound && g_rep.value <= g_bound);
        r.wall_ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0).count();
    });
    return out;
}

std::string sweep_csv(const std::vector<SweepRecord>& records, bool with_timings) {
    std::ostringstream out;
    out << "index,seed,descriptor,C,G,c_witness,g_witness,anomaly";
    if (with_timings) out << ",wall_ms";
    out << "\n";
    char buf[64];
    for (const SweepRecord& r : records) {
        out << r.index << "," << r.seed << "," << r.descriptor << ",";
        std::snprintf(buf, sizeof(buf), "%.12g", r.c_value);
        out << buf << ",";
        std::snprintf(buf, sizeof(buf), "%.12g", r.g_value);
        out << buf << ",\"" << r.c_witness << "\",\"" << r.g_witness << "\","
            << (r.anomaly ? "ANOMALY" : "ok");
        if (with_timings) {
            std::snprintf(buf, sizeof(buf), ",%.3f", r.wall_ms);
            out << buf;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace fencekit
