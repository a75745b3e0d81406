#include "scherk/extend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scherk/numerics.hpp"

namespace scherk {

namespace {

struct StdSideSpec {
    int va, vb;  // indices into the standard vertex array P1..P4
    SideKind kind;
    Bulge bulge;
};

// standard-chart sides in slot order [P1P2], [P2P3], [P3P4], [P4P1]
constexpr StdSideSpec kStdSides[4] = {{0, 1, SideKind::B, Bulge::left},
                                      {1, 2, SideKind::A, Bulge::right},
                                      {2, 3, SideKind::B, Bulge::left},
                                      {3, 0, SideKind::A, Bulge::right}};

std::array<BoundaryPoint, 4> std_vertices(const QuadParams& p) {
    return {BoundaryPoint::finite(0.0), BoundaryPoint::finite(2.0 * p.mu),
            BoundaryPoint::finite(p.d3), BoundaryPoint::infinity()};
}

// Canonical orientation-preserving map with h1 -> 0, h2 -> infinity and the
// auxiliary point pinned at -1 (or +1 when -1 is not realizable in the
// orientation-preserving class).
Isometry frame_map(const BoundaryPoint& h1, const BoundaryPoint& h2, const BoundaryPoint& z) {
    const double A = h1.q() * z.p() - h1.p() * z.q();
    const double B = h2.q() * z.p() - h2.p() * z.q();
    const double scale = 1.0 + std::abs(h1.p()) + std::abs(h2.p()) + std::abs(z.p());
    if (std::abs(A) <= 1e-14 * scale || std::abs(B) <= 1e-14 * scale) {
        throw std::invalid_argument("frame_map: degenerate point triple");
    }
    for (double sign : {-1.0, 1.0}) {
        const double s = sign * B;
        const double t = A;
        const std::array<double, 4> m{s * h1.q(), -s * h1.p(), t * h2.q(), -t * h2.p()};
        if (m[0] * m[3] - m[1] * m[2] > 0.0) return Isometry(m, false);
    }
    throw std::invalid_argument("frame_map: degenerate point triple");
}

Bulge flipped(Bulge b) { return b == Bulge::left ? Bulge::right : Bulge::left; }

std::vector<HPoint> std_arc_probes(const HArc& arc, double mu_param) {
    std::vector<HPoint> pts;
    if (arc.is_line) {
        for (double f : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            pts.push_back(arc.point_at(std::log(mu_param * f)));
        }
    } else {
        for (double q : {1.0 / 6, 2.0 / 6, 3.0 / 6, 4.0 / 6, 5.0 / 6}) {
            pts.push_back(arc.point_at(arc.phi_lo + q * (arc.phi_hi - arc.phi_lo)));
        }
    }
    return pts;
}

int find_boundary_index(const CellComplex& c, int side) {
    for (size_t i = 0; i < c.boundary.size(); ++i) {
        if (c.boundary[i].side == side) return static_cast<int>(i);
    }
    throw std::invalid_argument("side is not on the outer boundary cycle");
}

}  // namespace

PlacedCell place_quadrilateral(CellComplex& c, int host_side, double mu_param,
                               double d3_param, const Tolerances& tol) {
    Side& host = c.sides.at(host_side);
    if (!host.is_boundary()) {
        throw std::invalid_argument("place_quadrilateral: host side is interior");
    }
    const CellRole role =
        host.ambient_kind() == SideKind::A ? CellRole::e_type : CellRole::ep_type;

    const int bidx = find_boundary_index(c, host_side);
    const int nb = static_cast<int>(c.boundary.size());
    const OrientedSide entry = c.boundary[bidx];
    const int h1 = c.boundary_start_vertex(entry);
    const int h2 = c.boundary_end_vertex(entry);
    const int z = c.boundary_start_vertex(c.boundary[(bidx + nb - 1) % nb]);

    const QuadParams params = QuadParams::create(mu_param, d3_param, c.H);
    const auto stdv = std_vertices(params);

    // association of the matched standard side with (h1, h2), and the
    // standard neighbor vertex playing the role of z
    const int matched_slot = role == CellRole::e_type ? 0 : 3;
    const int sv1 = role == CellRole::e_type ? 0 : 3;  // P1 -> h1 / P4 -> h1
    const int sv2 = role == CellRole::e_type ? 1 : 0;  // P2 -> h2 / P1 -> h2
    const int sz = role == CellRole::e_type ? 3 : 2;   // std vertex before sv1 on the cycle

    const HArc std_arc = equidistant_arc(stdv[kStdSides[matched_slot].va],
                                         stdv[kStdSides[matched_slot].vb], c.H,
                                         kStdSides[matched_slot].bulge);

    const Isometry host_frame = frame_map(c.vertices[h1], c.vertices[h2], c.vertices[z]);
    const Isometry std_frame = frame_map(stdv[sv1], stdv[sv2], stdv[sz]);
    const Isometry host_frame_inv = host_frame.inverse();

    const HPoint host_probe = c.interior_probe(host.inc0.cell);
    const double host_side_sign = side_of(host.arc, host_probe);
    const std::vector<HPoint> probes = std_arc_probes(std_arc, mu_param);
    const HPoint std_probe = std_interior_point(params);

    Isometry chart;
    bool found = false;
    for (bool mirror : {false, true}) {
        Isometry candidate = host_frame_inv;
        if (mirror) candidate = candidate * Isometry({1.0, 0.0, 0.0, 1.0}, true);
        candidate = candidate * std_frame;
        bool on_arc = true;
        for (const HPoint& p : probes) {
            if (host.arc.residual(candidate(p)) > tol.probe) on_arc = false;
        }
        if (!on_arc) continue;
        if (side_of(host.arc, candidate(std_probe)) * host_side_sign >= 0.0) continue;
        chart = candidate;
        found = true;
        break;
    }
    if (!found) {
        throw std::domain_error(
            "place_quadrilateral: no orientation class matches the host side");
    }

    // vertex ids: shared ones reuse the host ids, the rest are created
    std::array<int, 4> vid{-1, -1, -1, -1};
    vid[sv1] = h1;
    vid[sv2] = h2;
    for (int i = 0; i < 4; ++i) {
        const BoundaryPoint image = chart(stdv[i]);
        if (vid[i] >= 0) {
            if (!approx_equal(image, c.vertices[vid[i]], 1e-8)) {
                throw std::logic_error("place_quadrilateral: shared vertex mismatch");
            }
            continue;
        }
        if (image.is_infinity()) {
            throw std::logic_error("place_quadrilateral: new vertex landed at infinity");
        }
        vid[i] = static_cast<int>(c.vertices.size());
        c.vertices.push_back(image);
    }

    const int cell_id = static_cast<int>(c.cells.size());
    std::array<int, 4> sid{-1, -1, -1, -1};
    sid[matched_slot] = host_side;
    if (host.inc1) throw std::logic_error("place_quadrilateral: host side already shared");
    host.inc1 = SideIncidence{cell_id, kStdSides[matched_slot].kind};
    if (host.inc0.kind == kStdSides[matched_slot].kind) {
        throw std::logic_error("place_quadrilateral: curvature signs must oppose across the side");
    }
    for (int slot = 0; slot < 4; ++slot) {
        if (slot == matched_slot) continue;
        Side s;
        s.va = vid[kStdSides[slot].va];
        s.vb = vid[kStdSides[slot].vb];
        Bulge bulge = kStdSides[slot].bulge;
        if (chart.reflect()) bulge = flipped(bulge);
        s.arc = equidistant_arc(c.vertices[s.va], c.vertices[s.vb], c.H, bulge);
        s.inc0 = SideIncidence{cell_id, kStdSides[slot].kind};
        sid[slot] = static_cast<int>(c.sides.size());
        c.sides.push_back(s);
    }

    Cell cell;
    cell.params = params;
    cell.chart = chart;
    cell.v = vid;
    cell.s = sid;
    c.cells.push_back(cell);

    // splice the three new sides into the boundary cycle in place of the host
    std::vector<OrientedSide> chain;
    int cursor = h1;
    std::array<bool, 4> used{false, false, false, false};
    for (int k = 0; k < 3; ++k) {
        bool advanced = false;
        for (int slot = 0; slot < 4 && !advanced; ++slot) {
            if (slot == matched_slot || used[slot]) continue;
            const Side& s = c.sides[sid[slot]];
            if (s.va == cursor || s.vb == cursor) {
                const bool fwd = s.va == cursor;
                chain.push_back({sid[slot], fwd});
                cursor = fwd ? s.vb : s.va;
                used[slot] = true;
                advanced = true;
            }
        }
        if (!advanced) throw std::logic_error("place_quadrilateral: broken boundary chain");
    }
    if (cursor != h2) throw std::logic_error("place_quadrilateral: boundary chain endpoint mismatch");
    c.boundary.erase(c.boundary.begin() + bidx);
    c.boundary.insert(c.boundary.begin() + bidx, chain.begin(), chain.end());

    PlacedCell placed;
    placed.cell = cell_id;
    placed.role = role;
    placed.host_side = host_side;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        if (i != sv1 && i != sv2) placed.new_vertices[k++] = vid[i];
    }
    return placed;
}

double phi_value(const CellComplex& c, const PlacedCell& cell, const HorocycleSystem& hs,
                 double quad_tol) {
    const Cell& cc = c.cells.at(cell.cell);
    double alpha = 0.0, beta = 0.0;
    for (int sid : cc.s) {
        const Side& s = c.sides[sid];
        const double len = side_truncated_length(c, hs, sid, quad_tol);
        (s.kind_for(cell.cell) == SideKind::A ? alpha : beta) += len;
    }
    const double g = alpha - beta - 2.0 * c.H * quad_area(cc.params, quad_tol);
    return cell.role == CellRole::e_type ? -g : g;
}

namespace {

double horocycle_size_for_new_vertex(const CellComplex& c, const HorocycleSystem& hs,
                                     int vnew) {
    const BoundaryPoint& v = c.vertices[vnew];
    if (v.is_infinity()) {
        throw std::logic_error("horocycle sizing: new vertices are finite by construction");
    }
    double allowed = std::numeric_limits<double>::infinity();
    for (size_t w = 0; w < hs.size.size(); ++w) {
        const BoundaryPoint& b = c.vertices[w];
        if (b.is_infinity()) {
            allowed = std::min(allowed, hs.size[w] / 2.0);
        } else {
            const double dx = v.value() - b.value();
            allowed = std::min(allowed, dx * dx / (4.0 * hs.size[w]));
        }
    }
    if (!(allowed > 0.0) || !std::isfinite(allowed)) {
        throw std::domain_error("horocycle sizing: disjointness unachievable at the new vertex");
    }
    return allowed / 4.0;
}

void assign_new_horocycles(const CellComplex& c, HorocycleSystem& hs) {
    while (hs.size.size() < c.vertices.size()) {
        hs.size.push_back(
            horocycle_size_for_new_vertex(c, hs, static_cast<int>(hs.size.size())));
    }
}

// d3 solving phi(d3) = target for the requested role, by a bracketed search
// around the balance root.
double solve_perturbed_d3(double mu, double H, const RootResult& root, CellRole role,
                          double target, double quad_tol) {
    if (target == 0.0) return root.d3_star;
    // phi_E = -G, phi_E' = +G; pick the side of the root where phi grows
    const double want_g = role == CellRole::e_type ? -target : target;
    const bool go_down = (want_g < 0.0) == root.increasing;
    const double bound = connectivity_bound(mu, H);
    const auto g = [&](double d) { return balance_function(mu, d, H, quad_tol); };
    double step = std::max(1e-3 * (root.d3_star - bound), 1e-9 * root.d3_star);
    double far = root.d3_star;
    for (int i = 0; i < 60; ++i) {
        double candidate = go_down ? root.d3_star - step : root.d3_star + step;
        if (go_down && candidate <= bound * (1.0 + 1e-9)) candidate = bound * (1.0 + 1e-9);
        far = candidate;
        const double val = g(far) - want_g;
        const double at_root = g(root.d3_star) - want_g;
        if ((val > 0.0) != (at_root > 0.0)) break;
        if (go_down && far <= bound * (1.0 + 1e-9)) {
            throw std::domain_error("balance_pair: phi target too large for the bracket");
        }
        step *= 2.0;
    }
    const double lo = std::min(far, root.d3_star);
    const double hi = std::max(far, root.d3_star);
    RootOptions ropts;
    ropts.x_tol = 1e-13 * hi;
    return brent_root([&](double d) { return g(d) - want_g; }, lo, hi, ropts);
}

}  // namespace

ExtensionRecord balance_pair(CellComplex& c, HorocycleSystem& hs, int side_a, int side_b,
                             double phi_target, const Tolerances& tol) {
    const Side& sa = c.sides.at(side_a);
    const Side& sb = c.sides.at(side_b);
    if (!sa.is_boundary() || sa.ambient_kind() != SideKind::A) {
        throw std::invalid_argument("balance_pair: side_a must be a boundary A side");
    }
    if (!sb.is_boundary() || sb.ambient_kind() != SideKind::B) {
        throw std::invalid_argument("balance_pair: side_b must be a boundary B side");
    }
    const int ia = find_boundary_index(c, side_a);
    if (c.boundary[(ia + 1) % c.boundary.size()].side != side_b) {
        throw std::invalid_argument("balance_pair: sides must be consecutive on the boundary");
    }
    if (!(phi_target >= 0.0)) {
        throw std::invalid_argument("balance_pair: phi target must be nonnegative");
    }

    const RootResult root = solve_d3_star(1.0, c.H, tol.quad);
    ExtensionRecord rec;
    rec.side_a = side_a;
    rec.side_b = side_b;
    rec.d3_star = root.d3_star;
    rec.phi_target = phi_target;
    rec.d3_e = solve_perturbed_d3(1.0, c.H, root, CellRole::e_type, phi_target, tol.quad);
    rec.d3_ep = solve_perturbed_d3(1.0, c.H, root, CellRole::ep_type, phi_target, tol.quad);
    rec.tau_e = std::abs(root.d3_star - rec.d3_e);
    rec.tau_ep = std::abs(root.d3_star - rec.d3_ep);

    const PlacedCell pe = place_quadrilateral(c, side_a, 1.0, rec.d3_e, tol);
    assign_new_horocycles(c, hs);
    const PlacedCell pep = place_quadrilateral(c, side_b, 1.0, rec.d3_ep, tol);
    assign_new_horocycles(c, hs);

    rec.cell_e = pe.cell;
    rec.cell_ep = pep.cell;
    rec.phi_e = phi_value(c, pe, hs, tol.quad);
    rec.phi_ep = phi_value(c, pep, hs, tol.quad);
    if (std::abs(rec.phi_e - phi_target) > tol.balance ||
        std::abs(rec.phi_ep - phi_target) > tol.balance) {
        throw std::domain_error("balance_pair: measured phi deviates from the target");
    }
    return rec;
}

std::vector<std::pair<int, int>> boundary_side_pairs(const CellComplex& c) {
    const int n = static_cast<int>(c.boundary.size());
    if (n % 2 != 0) throw std::logic_error("boundary cycle must alternate A and B sides");
    // canonical start: lowest start vertex, infinity ordered last
    const auto key = [&](int i) {
        const BoundaryPoint v = c.boundary_start(c.boundary[i]);
        return v.is_infinity() ? std::pair<int, double>(1, 0.0)
                               : std::pair<int, double>(0, v.value());
    };
    int start = 0;
    for (int i = 1; i < n; ++i) {
        if (key(i) < key(start)) start = i;
    }
    const auto kind_at = [&](int i) {
        return c.sides[c.boundary[i % n].side].ambient_kind();
    };
    if (kind_at(start) == SideKind::B) start = (start + 1) % n;
    std::vector<std::pair<int, int>> pairs;
    for (int k = 0; k < n; k += 2) {
        const int i = (start + k) % n;
        const int j = (start + k + 1) % n;
        if (kind_at(i) != SideKind::A || kind_at(j) != SideKind::B) {
            throw std::logic_error("boundary cycle must alternate A and B sides");
        }
        pairs.emplace_back(c.boundary[i].side, c.boundary[j].side);
    }
    return pairs;
}

ExtendOutcome extend_domain(const CellComplex& host, const HorocycleSystem& hs,
                            const ExtendPolicy& policy) {
    ExtendOutcome out;
    out.complex = host;
    out.hs = hs;
    const auto pairs = boundary_side_pairs(out.complex);
    StepHistory step;
    step.host_cell_count = static_cast<int>(out.complex.cells.size());
    for (const auto& [a, b] : pairs) {
        const double len_a = side_truncated_length(out.complex, out.hs, a, policy.tol.quad);
        const double len_b = side_truncated_length(out.complex, out.hs, b, policy.tol.quad);
        const double shortest = std::min(len_a, len_b);
        double target = policy.phi_ratio * shortest;
        target = std::min(target, 2.0 * shortest - 10.0 * policy.tol.slack);
        ExtensionRecord rec = balance_pair(out.complex, out.hs, a, b, target, policy.tol);
        step.pairs.push_back(PairRecord{a, b, rec.cell_e, rec.cell_ep});
        out.records.push_back(rec);
    }
    out.complex.history.push_back(step);
    validate_disjoint(out.complex, out.hs);
    out.report = check_admissibility(out.complex, out.hs, policy.tol, policy.family);
    return out;
}

}  // namespace scherk
