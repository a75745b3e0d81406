#pragma once

#include <array>

// Upper half-plane model of the hyperbolic plane: interior points, ideal
// boundary points in homogeneous coordinates (so the point at infinity is a
// first-class value), and the isometry group including reflections.

namespace scherk {

struct HPoint {
    double x = 0.0;
    double y = 1.0;

    HPoint() = default;
    HPoint(double x_, double y_);
};

// Point of the ideal boundary, stored as a normalized homogeneous pair:
// (v, 1) for the finite point v, (1, 0) for the point at infinity.
class BoundaryPoint {
  public:
    BoundaryPoint() = default;  // finite 0
    static BoundaryPoint finite(double v);
    static BoundaryPoint infinity();
    static BoundaryPoint homogeneous(double p, double q);

    bool is_infinity() const { return q_ == 0.0; }
    double value() const;  // throws on the point at infinity
    double p() const { return p_; }
    double q() const { return q_; }

  private:
    double p_ = 0.0;
    double q_ = 1.0;
};

bool approx_equal(const BoundaryPoint& a, const BoundaryPoint& b, double tol = 1e-12);

// Isometry of the half-plane: z -> M(sigma^r z) with det(M) = +1 and
// sigma : (x, y) -> (-x, y). Matrices given with negative determinant are
// re-expressed through the sigma factor on construction.
class Isometry {
  public:
    Isometry() = default;  // identity
    Isometry(const std::array<double, 4>& m, bool reflect);

    static Isometry identity() { return {}; }
    static Isometry translation(double t);
    static Isometry scaling(double lambda);          // z -> lambda z, lambda > 0
    static Isometry rotation_about_i(double angle);  // elliptic fixing (0,1)

    Isometry operator*(const Isometry& rhs) const;  // composition: this after rhs
    Isometry inverse() const;

    HPoint operator()(const HPoint& z) const;
    BoundaryPoint operator()(const BoundaryPoint& b) const;

    bool reflect() const { return reflect_; }
    const std::array<double, 4>& matrix() const { return m_; }

  private:
    std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};  // row-major a b c d
    bool reflect_ = false;

    void normalize();
};

// Geodesic distance between interior points.
double dist(const HPoint& p, const HPoint& q);

// The unique isometry in the requested orientation class whose boundary
// action sends src[i] -> dst[i]. Throws if the points are degenerate or the
// requested class cannot realize the correspondence.
Isometry map_from_boundary_triple(const std::array<BoundaryPoint, 3>& src,
                                  const std::array<BoundaryPoint, 3>& dst,
                                  bool reflect);

}  // namespace scherk
