#pragma once

// Intrinsic radius estimation: shortest path in the induced metric from a
// base point to the sample boundary, on the 8-neighbour grid graph with
// chordal (or great-circle) edge weights between adjacent S^4 values.

#include "legendrian/surface.hpp"

namespace legendrian {

struct RadiusOptions {
    bool arc_weights = false;  // 2 asin(chord/2) instead of the chord
};

struct RadiusLevel {
    double h = 0;
    double estimate = 0;
    std::size_t nodes = 0;
};

struct RadiusReport {
    double p0x = 0, p0y = 0;
    double estimate = 0;                // finest level
    std::vector<RadiusLevel> levels;    // coarse to fine
    bool arc_weights = false;
};

// Shortest weighted path from the node nearest (p0x, p0y) to the boundary
// node set.  InvalidInput when the base point misses the sampled domain.
double intrinsic_radius(const SurfaceSample& s, double p0x, double p0y,
                        const RadiusOptions& options = {});

// Runs `levels` grids h, h/2, h/4, ... and records the refinement sequence.
RadiusReport radius_study(const ProjectiveCurve& C, const DomainSpec& domain, double h, int levels,
                          double p0x, double p0y, const RadiusOptions& options = {},
                          const SampleOptions& sample_options = {});

}  // namespace legendrian
