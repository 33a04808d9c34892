#include "legendrian/radius.hpp"

#include <cmath>
#include <limits>
#include <queue>

namespace legendrian {

namespace {

double edge_weight(const S4Point& a, const S4Point& b, bool arc) {
    double chord = s4_distance(a, b);
    if (!arc) return chord;
    double half = std::min(1.0, chord / 2.0);
    return 2.0 * std::asin(half);
}

}  // namespace

double intrinsic_radius(const SurfaceSample& s, double p0x, double p0y,
                        const RadiusOptions& options) {
    if (!s.domain.contains(p0x, p0y)) throw InvalidInput("base point outside the domain");

    // Base node: nearest valid grid node.
    int bi = -1, bj = -1;
    double best = std::numeric_limits<double>::infinity();
    int ci = static_cast<int>(std::round((p0x - s.x0) / s.h));
    int cj = static_cast<int>(std::round((p0y - s.y0) / s.h));
    for (int dj = -2; dj <= 2; ++dj) {
        for (int di = -2; di <= 2; ++di) {
            int i = ci + di, j = cj + dj;
            if (!s.is_valid(i, j)) continue;
            double dx = s.x_at(i) - p0x, dy = s.y_at(j) - p0y;
            double d = dx * dx + dy * dy;
            if (d < best) {
                best = d;
                bi = i;
                bj = j;
            }
        }
    }
    if (bi < 0) throw InvalidInput("base point hits no valid grid node");

    std::size_t n = s.valid.size();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    int start = s.index(bi, bj);
    dist[static_cast<std::size_t>(start)] = 0;
    heap.push({0.0, start});

    double answer = std::numeric_limits<double>::infinity();
    while (!heap.empty()) {
        auto [d, node] = heap.top();
        heap.pop();
        if (d > dist[static_cast<std::size_t>(node)]) continue;
        int i = node % s.nu, j = node / s.nu;

        bool boundary = false;
        for (int dj = -1; dj <= 1 && !boundary; ++dj)
            for (int di = -1; di <= 1 && !boundary; ++di)
                if ((di || dj) && !s.is_valid(i + di, j + dj)) boundary = true;
        if (boundary) {
            answer = d;
            break;  // first boundary node settled: the shortest exit
        }
        for (int dj = -1; dj <= 1; ++dj) {
            for (int di = -1; di <= 1; ++di) {
                if (!di && !dj) continue;
                int ni = i + di, nj = j + dj;
                int next = s.index(ni, nj);
                double w = edge_weight(s.points[static_cast<std::size_t>(node)],
                                       s.points[static_cast<std::size_t>(next)], options.arc_weights);
                double nd = d + w;
                if (nd < dist[static_cast<std::size_t>(next)]) {
                    dist[static_cast<std::size_t>(next)] = nd;
                    heap.push({nd, next});
                }
            }
        }
    }
    if (!std::isfinite(answer)) throw InvalidInput("no boundary reachable from the base point");
    return answer;
}

RadiusReport radius_study(const ProjectiveCurve& C, const DomainSpec& domain, double h, int levels,
                          double p0x, double p0y, const RadiusOptions& options,
                          const SampleOptions& sample_options) {
    if (levels < 1) throw InvalidInput("need at least one refinement level");
    RadiusReport rep;
    rep.p0x = p0x;
    rep.p0y = p0y;
    rep.arc_weights = options.arc_weights;
    double level_h = h;
    for (int level = 0; level < levels; ++level) {
        SurfaceSample s = sample_surface<double>(C, domain, level_h, sample_options);
        RadiusLevel entry;
        entry.h = level_h;
        entry.nodes = s.count_valid();
        entry.estimate = intrinsic_radius(s, p0x, p0y, options);
        rep.levels.push_back(entry);
        rep.estimate = entry.estimate;
        level_h /= 2;
    }
    return rep;
}

}  // namespace legendrian
