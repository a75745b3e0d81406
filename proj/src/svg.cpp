#include "scherk/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

namespace scherk {

namespace {

struct Polyline {
    std::vector<std::pair<double, double>> pts;
    const char* cls;
    bool closed = false;
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::pair<double, double> to_disk(double x, double y) {
    // w = (z - i)/(z + i)
    const double nr = x, ni = y - 1.0;
    const double dr = x, di = y + 1.0;
    const double den = dr * dr + di * di;
    return {(nr * dr + ni * di) / den, (ni * dr - nr * di) / den};
}

}  // namespace

std::string render_svg(const CellComplex& c, const HorocycleSystem* hs,
                       const SceneSpec& scene, std::string_view input_hash) {
    const int n = std::max(8, scene.samples);

    // model-space extent from the finite geometry
    double minx = 0.0, maxx = 1.0, maxy = 1.0;
    bool seeded = false;
    const auto grow = [&](double x, double y) {
        if (!seeded) {
            minx = maxx = x;
            maxy = std::max(1e-9, y);
            seeded = true;
            return;
        }
        minx = std::min(minx, x);
        maxx = std::max(maxx, x);
        maxy = std::max(maxy, y);
    };
    for (const BoundaryPoint& v : c.vertices) {
        if (!v.is_infinity()) grow(v.value(), 0.0);
    }
    for (const Side& s : c.sides) {
        if (!s.arc.is_line) {
            grow(s.arc.cx - s.arc.R, 0.0);
            grow(s.arc.cx + s.arc.R, 0.0);
            grow(s.arc.cx, s.arc.cy + s.arc.R);
        }
    }
    if (hs) {
        for (size_t v = 0; v < hs->size.size(); ++v) {
            const Horocycle h = horocycle_at(c, *hs, static_cast<int>(v));
            if (h.base.is_infinity()) {
                grow(minx, h.size);
            } else {
                grow(h.base.value() - h.size, 2.0 * h.size);
                grow(h.base.value() + h.size, 2.0 * h.size);
            }
        }
    }
    const double span = std::max(maxx - minx, 1e-9);
    maxy = std::max(maxy, 0.25 * span);
    const double y_low = 1e-3 * maxy;

    std::vector<Polyline> lines;
    if (scene.show_sides) {
        for (const Side& s : c.sides) {
            Polyline pl;
            pl.cls = s.inc0.kind == SideKind::A ? "sideA" : "sideB";
            if (!s.is_boundary()) pl.cls = "interior";
            const HArc& arc = s.arc;
            if (arc.is_line) {
                const double hi_y = scene.chart == SceneSpec::Chart::disk ? 1e4 * (1.0 + span)
                                                                          : 1.3 * maxy;
                for (int i = 0; i <= n; ++i) {
                    const double u = std::log(y_low) +
                                     (std::log(hi_y) - std::log(y_low)) * i / n;
                    const double y = std::exp(u);
                    pl.pts.emplace_back(arc.x0 + arc.tilt * y, y);
                }
            } else {
                for (int i = 0; i <= n; ++i) {
                    const double t = arc.phi_lo + (arc.phi_hi - arc.phi_lo) * i / n;
                    pl.pts.emplace_back(arc.cx + arc.R * std::cos(t),
                                        std::max(arc.cy + arc.R * std::sin(t), 0.0));
                }
            }
            lines.push_back(std::move(pl));
        }
    }
    if (scene.show_horocycles && hs) {
        for (size_t v = 0; v < hs->size.size(); ++v) {
            const Horocycle h = horocycle_at(c, *hs, static_cast<int>(v));
            Polyline pl;
            pl.cls = "horo";
            if (h.base.is_infinity()) {
                for (int i = 0; i <= n; ++i) {
                    pl.pts.emplace_back(minx - 0.1 * span + 1.2 * span * i / n, h.size);
                }
            } else {
                pl.closed = true;
                for (int i = 0; i < n; ++i) {
                    const double t = 2.0 * 3.14159265358979312 * i / n;
                    pl.pts.emplace_back(h.base.value() + h.size * std::sin(t),
                                        h.size + h.size * std::cos(t));
                }
            }
            lines.push_back(std::move(pl));
        }
    }

    // chart + viewport
    double vx0, vy0, vx1, vy1;
    if (scene.chart == SceneSpec::Chart::disk) {
        for (Polyline& pl : lines) {
            for (auto& p : pl.pts) p = to_disk(p.first, std::max(p.second, 1e-12));
        }
        vx0 = -1.1;
        vy0 = -1.1;
        vx1 = 1.1;
        vy1 = 1.1;
    } else {
        const double m = 0.08;
        vx0 = minx - m * span;
        vx1 = maxx + m * span;
        vy0 = -m * maxy;
        vy1 = maxy * (1.0 + m);
    }
    const double w = vx1 - vx0;
    const double h2 = vy1 - vy0;
    const int W = scene.width_px;
    const int Hpx = static_cast<int>(W * h2 / w);
    const auto px = [&](double x) { return (x - vx0) / w * W; };
    const auto py = [&](double y) { return (vy1 - y) / h2 * Hpx; };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<!-- input-hash: " + std::string(input_hash) + " -->\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(W) + "\" height=\"" + std::to_string(Hpx) + "\" viewBox=\"0 0 " +
           std::to_string(W) + " " + std::to_string(Hpx) + "\">\n";
    out += "<style>path{fill:none;stroke-width:1.5}.sideA{stroke:#c62828}"
           ".sideB{stroke:#1565c0}.interior{stroke:#9e9e9e;stroke-dasharray:4 3}"
           ".horo{stroke:#2e7d32;stroke-width:1}.axis{stroke:#424242;stroke-width:1}"
           "circle.v{fill:#212121}</style>\n";

    if (scene.chart == SceneSpec::Chart::halfplane) {
        out += "<path class=\"axis\" d=\"M " + fmt(px(vx0)) + " " + fmt(py(0.0)) + " L " +
               fmt(px(vx1)) + " " + fmt(py(0.0)) + "\"/>\n";
    } else {
        std::string d = "M ";
        for (int i = 0; i <= 256; ++i) {
            const double t = 2.0 * 3.14159265358979312 * i / 256;
            if (i) d += " L ";
            d += fmt(px(std::cos(t))) + " " + fmt(py(std::sin(t)));
        }
        out += "<path class=\"axis\" d=\"" + d + "\"/>\n";
    }

    for (const Polyline& pl : lines) {
        std::string d;
        for (size_t i = 0; i < pl.pts.size(); ++i) {
            d += i == 0 ? "M " : " L ";
            d += fmt(px(pl.pts[i].first)) + " " + fmt(py(pl.pts[i].second));
        }
        if (pl.closed) d += " Z";
        out += "<path class=\"";
        out += pl.cls;
        out += "\" d=\"" + d + "\"/>\n";
    }

    if (scene.show_vertices) {
        for (const BoundaryPoint& v : c.vertices) {
            double X, Y;
            if (v.is_infinity()) {
                if (scene.chart != SceneSpec::Chart::disk) continue;
                X = px(1.0);
                Y = py(0.0);
            } else if (scene.chart == SceneSpec::Chart::disk) {
                const auto p = to_disk(v.value(), 1e-12);
                X = px(p.first);
                Y = py(p.second);
            } else {
                X = px(v.value());
                Y = py(0.0);
            }
            out += "<circle class=\"v\" cx=\"" + fmt(X) + "\" cy=\"" + fmt(Y) +
                   "\" r=\"2.5\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace scherk
