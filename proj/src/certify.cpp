#include "syncmap/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "syncmap/rng.hpp"

namespace syncmap {

namespace {

struct Segment {
    PhasePoint a;
    PhasePoint b;
};

// The four lower edges of A1, where the orbital derivative vanishes.
std::array<Segment, 4> lower_edges() {
    const double h = kPi / 2.0;
    return {{{{0.0, 0.0}, {h, -h}},
             {{h, -h}, {kPi, 0.0}},
             {{kPi, 0.0}, {3.0 * h, -h}},
             {{3.0 * h, -h}, {kTwoPi, 0.0}}}};
}

// Max-norm distance from a point to a segment. The objective
// max(|px - a.x - t dx|, |py - a.y - t dy|) is piecewise linear in t, so the
// minimum over [0, 1] is attained at an endpoint, a kink, or a crossing.
double linf_point_segment(PhasePoint p, const Segment& s) {
    const double dx = s.b.x - s.a.x;
    const double dy = s.b.y - s.a.y;
    const double ux = p.x - s.a.x;
    const double uy = p.y - s.a.y;

    double candidates[6] = {0.0, 1.0, 2.0, 2.0, 2.0, 2.0};
    int n = 2;
    if (dx != 0.0) candidates[n++] = ux / dx;                    // |.x| kink
    if (dy != 0.0) candidates[n++] = uy / dy;                    // |.y| kink
    if (dx != dy) candidates[n++] = (ux - uy) / (dx - dy);       // u = v
    if (dx != -dy) candidates[n++] = (ux + uy) / (dx + dy);      // u = -v

    double best = HUGE_VAL;
    for (int i = 0; i < n; ++i) {
        const double t = std::clamp(candidates[i], 0.0, 1.0);
        const double fx = std::fabs(ux - t * dx);
        const double fy = std::fabs(uy - t * dy);
        best = std::min(best, std::max(fx, fy));
    }
    return best;
}

// The distance to each zero-set component is convex, so a cell lies inside
// the eps-neighborhood of a component iff all four corners do.
bool cell_excluded(const Cell& c, double eps) {
    const std::array<PhasePoint, 4> corners = {{{c.x0, c.y0},
                                                {c.x1, c.y0},
                                                {c.x0, c.y1},
                                                {c.x1, c.y1}}};
    for (const Segment& seg : lower_edges()) {
        bool all = true;
        for (const PhasePoint& q : corners) {
            if (linf_point_segment(q, seg) > eps) {
                all = false;
                break;
            }
        }
        if (all) return true;
    }
    const PhasePoint sink{kPi, kPi};
    bool all = true;
    for (const PhasePoint& q : corners) {
        if (linf(q - sink) > eps) {
            all = false;
            break;
        }
    }
    return all;
}

struct Interval {
    double lo, hi;
    bool overlaps(Interval o) const { return lo <= o.hi && o.lo <= hi; }
};

// Exact rectangle-vs-A1 intersection via separating axes x, y, x+y, x-y.
// Each half of A1 is precisely an intersection of half-planes along those
// axes.
bool cell_intersects_a1(const Cell& c) {
    const double h = kPi / 2.0;
    const Interval cx{c.x0, c.x1};
    const Interval cy{c.y0, c.y1};
    const Interval cu{c.x0 + c.y0, c.x1 + c.y1};
    const Interval cv{c.x0 - c.y1, c.x1 - c.y0};

    const bool left = cx.overlaps({0.0, kPi}) && cy.overlaps({-h, kPi}) &&
                      cu.overlaps({0.0, kTwoPi}) && cv.overlaps({0.0, kPi});
    if (left) return true;
    return cx.overlaps({kPi, kTwoPi}) && cy.overlaps({-h, kPi}) &&
           cu.overlaps({kPi, kTwoPi}) && cv.overlaps({0.0, kTwoPi});
}

struct PartialReport {
    std::uint64_t examined = 0;
    std::uint64_t certified = 0;
    std::uint64_t subdivided = 0;
    std::uint64_t excluded = 0;
    double worst = -HUGE_VAL;
    std::vector<Cell> inconclusive;
    std::vector<Cell> certified_cells;
};

struct CellJob {
    Cell cell;
    int depth;
};

class Certifier {
public:
    Certifier(const CertRequest& req)
        : req_(req),
          a_(req.params.a()),
          strip_left_(kPi - 3.0 * req.params.a()),
          l_al_(region_lipschitz(RegionId::AL, req.params)),
          l_am_(region_lipschitz(RegionId::AM, req.params)),
          l_ar_(region_lipschitz(RegionId::AR, req.params)) {}

    void run(const Cell& top, PartialReport& out) const {
        std::vector<CellJob> stack;
        stack.push_back({top, 0});
        while (!stack.empty()) {
            const CellJob job = stack.back();
            stack.pop_back();
            process(job, stack, out);
        }
    }

private:
    void process(const CellJob& job, std::vector<CellJob>& stack,
                 PartialReport& out) const {
        const Cell& c = job.cell;
        if (!cell_intersects_a1(c)) return;
        out.examined += 1;

        if (cell_excluded(c, req_.epsilon)) {
            out.excluded += 1;
            return;
        }

        // Keep subregion boundaries out of cell interiors: split at x = pi
        // (AM|AR seam) and at x = pi - 3a (the strip that brackets Gamma).
        for (const double sx : {kPi, strip_left_}) {
            if (c.x0 < sx && c.x1 > sx) {
                out.subdivided += 1;
                stack.push_back({{c.x0, sx, c.y0, c.y1}, job.depth});
                stack.push_back({{sx, c.x1, c.y0, c.y1}, job.depth});
                return;
            }
        }

        const double bound = certified_bound(c);
        if (bound < 0.0) {
            out.certified += 1;
            out.worst = std::max(out.worst, bound);
            if (req_.record_certified_cells) out.certified_cells.push_back(c);
            return;
        }
        if (job.depth < req_.max_depth) {
            out.subdivided += 1;
            const double mx = 0.5 * (c.x0 + c.x1);
            const double my = 0.5 * (c.y0 + c.y1);
            stack.push_back({{c.x0, mx, c.y0, my}, job.depth + 1});
            stack.push_back({{mx, c.x1, c.y0, my}, job.depth + 1});
            stack.push_back({{c.x0, mx, my, c.y1}, job.depth + 1});
            stack.push_back({{mx, c.x1, my, c.y1}, job.depth + 1});
            return;
        }
        out.inconclusive.push_back(c);
    }

    // Upper bound on Vdot over the cell under every closed form that can
    // apply to points of the cell: value(center) + L * radius.
    double certified_bound(const Cell& c) const {
        const PhasePoint center = c.center();
        const double r = c.radius();
        double bound = -HUGE_VAL;
        if (c.x0 < kPi) {
            bound = std::max(bound,
                             closed_form_value(RegionId::AL, center, req_.params) +
                                 l_al_ * r);
            if (c.x1 > strip_left_) {
                // Inside the strip Gamma may pass through the cell; the cell
                // must certify under the AM form as well.
                bound = std::max(
                    bound, closed_form_value(RegionId::AM, center, req_.params) +
                               l_am_ * r);
            }
        }
        if (c.x1 > kPi || c.x0 >= kPi) {
            bound = std::max(bound,
                             closed_form_value(RegionId::AR, center, req_.params) +
                                 l_ar_ * r);
        }
        return bound;
    }

    const CertRequest& req_;
    double a_;
    double strip_left_;
    double l_al_, l_am_, l_ar_;
};

} // namespace

double Cell::radius() const {
    return 0.5 * std::max(x1 - x0, y1 - y0);
}

double region_lipschitz(RegionId subregion, const MapParams& mp) {
    const double a = mp.a();
    switch (subregion) {
    case RegionId::AL:
        return 6.0 * a;
    case RegionId::AM:
        return 2.0 + 2.0 * a;
    case RegionId::AR:
        return 2.0 * a;
    default:
        throw UnsupportedRegionError(
            "region_lipschitz: no Lipschitz constant for region " +
            std::string(region_name(subregion)));
    }
}

CertReport certify_negative(const CertRequest& req) {
    if (req.region != RegionId::A1) {
        throw UnsupportedRegionError("certify_negative: only A1 is supported");
    }
    if (req.epsilon < 0.0) {
        throw DomainError("certify_negative: exclusion radius must be >= 0");
    }
    if (!(req.initial_cell > 0.0)) {
        throw DomainError("certify_negative: initial cell size must be > 0");
    }
    if (req.max_depth < 1) {
        throw DomainError("certify_negative: max depth must be >= 1");
    }

    // Top-level grid over the bounding box of A1.
    const double h = req.initial_cell;
    const double y_min = -kPi / 2.0;
    const auto nx = static_cast<std::size_t>(std::ceil(kTwoPi / h));
    const auto ny = static_cast<std::size_t>(std::ceil((kPi - y_min) / h));
    std::vector<Cell> grid;
    grid.reserve(nx * ny);
    for (std::size_t iy = 0; iy < ny; ++iy) {
        for (std::size_t ix = 0; ix < nx; ++ix) {
            grid.push_back({static_cast<double>(ix) * h,
                            static_cast<double>(ix + 1) * h,
                            y_min + static_cast<double>(iy) * h,
                            y_min + static_cast<double>(iy + 1) * h});
        }
    }

    const Certifier certifier(req);
    const int workers = std::max(1, req.workers);
    std::vector<PartialReport> partials(static_cast<std::size_t>(workers));

    auto work = [&](int w) {
        PartialReport& out = partials[static_cast<std::size_t>(w)];
        for (std::size_t i = static_cast<std::size_t>(w); i < grid.size();
             i += static_cast<std::size_t>(workers)) {
            certifier.run(grid[i], out);
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (std::thread& t : pool) t.join();
    }

    // Merge is associative and commutative: counts add, bounds take the max.
    CertReport report;
    report.lipschitz_al = region_lipschitz(RegionId::AL, req.params);
    report.lipschitz_am = region_lipschitz(RegionId::AM, req.params);
    report.lipschitz_ar = region_lipschitz(RegionId::AR, req.params);
    double worst = -HUGE_VAL;
    for (const PartialReport& p : partials) {
        report.cells_examined += p.examined;
        report.cells_certified += p.certified;
        report.cells_subdivided += p.subdivided;
        report.cells_excluded += p.excluded;
        worst = std::max(worst, p.worst);
        report.inconclusive_cells.insert(report.inconclusive_cells.end(),
                                         p.inconclusive.begin(),
                                         p.inconclusive.end());
        report.certified_cells.insert(report.certified_cells.end(),
                                      p.certified_cells.begin(),
                                      p.certified_cells.end());
    }
    auto cell_order = [](const Cell& l, const Cell& r) {
        return std::tie(l.x0, l.y0, l.x1, l.y1) <
               std::tie(r.x0, r.y0, r.x1, r.y1);
    };
    std::sort(report.inconclusive_cells.begin(),
              report.inconclusive_cells.end(), cell_order);
    std::sort(report.certified_cells.begin(), report.certified_cells.end(),
              cell_order);
    report.worst_certified_bound = report.cells_certified > 0 ? worst : 0.0;
    report.verdict = report.inconclusive_cells.empty()
                         ? CertVerdict::Certified
                         : CertVerdict::Inconclusive;
    return report;
}

bool check_positivity(RegionId region, PhasePoint sink, std::size_t samples,
                      const MapParams& mp, std::uint64_t seed) {
    const PhasePoint expected{kPi, kPi};
    if (linf(sink - expected) > 1e-12) {
        throw DomainError("check_positivity: the sink must be (pi, pi)");
    }
    if (lyapunov_value(sink) != 0.0) return false;

    const BoundingBox box = region_bounding_box(region, mp);
    const CounterRng rng(seed);
    std::uint64_t accepted = 0;
    std::uint64_t index = 0;
    const std::uint64_t attempt_cap = static_cast<std::uint64_t>(samples) * 64;
    while (accepted < samples && index < attempt_cap) {
        const PhasePoint p{rng.uniform(index, 0, box.x_min, box.x_max),
                           rng.uniform(index, 1, box.y_min, box.y_max)};
        ++index;
        if (!region_contains(region, p, mp)) continue;
        ++accepted;
        if (linf(p - sink) <= 1e-9) continue;
        if (!(lyapunov_value(p) > 0.0)) return false;
    }
    return accepted > 0;
}

} // namespace syncmap
