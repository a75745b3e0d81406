#include "scherk/halfplane.hpp"

#include <cmath>
#include <stdexcept>

namespace scherk {

HPoint::HPoint(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x_) || !std::isfinite(y_) || !(y_ > 0.0)) {
        throw std::invalid_argument("HPoint: requires finite coordinates with y > 0");
    }
}

BoundaryPoint BoundaryPoint::finite(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("BoundaryPoint: non-finite value");
    BoundaryPoint b;
    b.p_ = v;
    b.q_ = 1.0;
    return b;
}

BoundaryPoint BoundaryPoint::infinity() {
    BoundaryPoint b;
    b.p_ = 1.0;
    b.q_ = 0.0;
    return b;
}

BoundaryPoint BoundaryPoint::homogeneous(double p, double q) {
    if (!std::isfinite(p) || !std::isfinite(q) || (p == 0.0 && q == 0.0)) {
        throw std::invalid_argument("BoundaryPoint: invalid homogeneous pair");
    }
    if (q == 0.0) return infinity();
    return finite(p / q);
}

double BoundaryPoint::value() const {
    if (is_infinity()) throw std::domain_error("BoundaryPoint: value() of infinity");
    return p_;
}

bool approx_equal(const BoundaryPoint& a, const BoundaryPoint& b, double tol) {
    if (a.is_infinity() || b.is_infinity()) return a.is_infinity() == b.is_infinity();
    const double scale = 1.0 + std::abs(a.value()) + std::abs(b.value());
    return std::abs(a.value() - b.value()) <= tol * scale;
}

Isometry::Isometry(const std::array<double, 4>& m, bool reflect)
    : m_(m), reflect_(reflect) {
    const double det = m_[0] * m_[3] - m_[1] * m_[2];
    if (!(std::abs(det) > 0.0) || !std::isfinite(det)) {
        throw std::invalid_argument("Isometry: singular matrix");
    }
    if (det < 0.0) {
        // fold the orientation reversal into the sigma factor
        m_[0] = -m_[0];
        m_[2] = -m_[2];
        reflect_ = !reflect_;
    }
    normalize();
}

void Isometry::normalize() {
    const double det = m_[0] * m_[3] - m_[1] * m_[2];
    const double s = std::sqrt(det);
    for (double& e : m_) e /= s;
    // matrix and its negative give the same map; fix the sign for determinism
    for (double e : m_) {
        if (e != 0.0) {
            if (e < 0.0) {
                for (double& f : m_) f = -f;
            }
            break;
        }
    }
}

Isometry Isometry::translation(double t) { return Isometry({1.0, t, 0.0, 1.0}, false); }

Isometry Isometry::scaling(double lambda) {
    if (!(lambda > 0.0)) throw std::invalid_argument("Isometry: scaling needs lambda > 0");
    const double s = std::sqrt(lambda);
    return Isometry({s, 0.0, 0.0, 1.0 / s}, false);
}

Isometry Isometry::rotation_about_i(double angle) {
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    return Isometry({c, -s, s, c}, false);
}

Isometry Isometry::operator*(const Isometry& rhs) const {
    // this(rhs(z)) = M1 sigma^{r1} M2 sigma^{r2} z = M1 (sigma^{r1} M2 sigma^{r1}) sigma^{r1^r2} z
    std::array<double, 4> m2 = rhs.m_;
    if (reflect_) {
        m2[1] = -m2[1];
        m2[2] = -m2[2];
    }
    const std::array<double, 4> m{
        m_[0] * m2[0] + m_[1] * m2[2], m_[0] * m2[1] + m_[1] * m2[3],
        m_[2] * m2[0] + m_[3] * m2[2], m_[2] * m2[1] + m_[3] * m2[3]};
    return Isometry(m, reflect_ != rhs.reflect_);
}

Isometry Isometry::inverse() const {
    std::array<double, 4> inv{m_[3], -m_[1], -m_[2], m_[0]};
    if (reflect_) {
        inv[1] = -inv[1];
        inv[2] = -inv[2];
    }
    return Isometry(inv, reflect_);
}

HPoint Isometry::operator()(const HPoint& z) const {
    const double x = reflect_ ? -z.x : z.x;
    const double y = z.y;
    const double a = m_[0], b = m_[1], c = m_[2], d = m_[3];
    const double den = (c * x + d) * (c * x + d) + c * c * y * y;
    return HPoint(((a * x + b) * (c * x + d) + a * c * y * y) / den, y / den);
}

BoundaryPoint Isometry::operator()(const BoundaryPoint& b) const {
    const double p = reflect_ ? -b.p() : b.p();
    const double q = b.q();
    return BoundaryPoint::homogeneous(m_[0] * p + m_[1] * q, m_[2] * p + m_[3] * q);
}

double dist(const HPoint& p, const HPoint& q) {
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    const double s = 0.5 * std::hypot(dx, dy) / std::sqrt(p.y * q.y);
    return 2.0 * std::asinh(s);
}

namespace {

// Matrix sending three pairwise-distinct boundary points to 0, 1, infinity.
std::array<double, 4> to_standard_triple(const BoundaryPoint& z1, const BoundaryPoint& z2,
                                         const BoundaryPoint& z3) {
    const auto cross = [](const BoundaryPoint& u, const BoundaryPoint& v) {
        return u.p() * v.q() - u.q() * v.p();
    };
    const double c12 = cross(z1, z2);
    const double c32 = cross(z3, z2);
    const double c13 = cross(z1, z3);
    const double scale = 1e-12 * (1.0 + std::abs(z1.p()) + std::abs(z2.p()) + std::abs(z3.p()));
    if (std::abs(c12) <= scale || std::abs(c32) <= scale || std::abs(c13) <= scale) {
        throw std::invalid_argument("map_from_boundary_triple: degenerate triple");
    }
    const double s = -c32;  // row scaling so z2 -> (1 : 1)
    const double t = -c12;
    return {s * z1.q(), -s * z1.p(), t * z3.q(), -t * z3.p()};
}

}  // namespace

Isometry map_from_boundary_triple(const std::array<BoundaryPoint, 3>& src,
                                  const std::array<BoundaryPoint, 3>& dst,
                                  bool reflect) {
    std::array<BoundaryPoint, 3> s = src;
    if (reflect) {
        for (auto& b : s) b = BoundaryPoint::homogeneous(-b.p(), b.q());
    }
    const auto ms = to_standard_triple(s[0], s[1], s[2]);
    const auto md = to_standard_triple(dst[0], dst[1], dst[2]);
    // inverse(md) * ms, via the adjugate
    const std::array<double, 4> mdi{md[3], -md[1], -md[2], md[0]};
    const std::array<double, 4> m{
        mdi[0] * ms[0] + mdi[1] * ms[2], mdi[0] * ms[1] + mdi[1] * ms[3],
        mdi[2] * ms[0] + mdi[3] * ms[2], mdi[2] * ms[1] + mdi[3] * ms[3]};
    const double det = m[0] * m[3] - m[1] * m[2];
    if (!(det > 0.0)) {
        throw std::invalid_argument(
            "map_from_boundary_triple: correspondence is not realizable in the "
            "requested orientation class");
    }
    return Isometry(m, reflect);
}

}  // namespace scherk
