#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ccx {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Angle canonicalized to [0, 2*pi).
double wrap_angle(double theta);

// Interior point of the Poincare disk, stored in hyperbolic polar form:
// r is the curvature -1 distance from the origin, theta the direction.
// The euclidean coordinate is tanh(r/2) * e^{i theta}; keeping r explicit
// avoids the catastrophic cancellation in 1 - |z|^2 near the boundary.
struct DiskPoint {
  double r = 0.0;
  double theta = 0.0;

  static DiskPoint origin() { return {}; }
  static DiskPoint polar(double r, double theta);
  // From euclidean disk coordinates; norm must stay below 1 - 1e-12.
  static DiskPoint cartesian(double u, double v);

  std::complex<double> to_complex() const;
  double u() const { return std::tanh(r / 2) * std::cos(theta); }
  double v() const { return std::tanh(r / 2) * std::sin(theta); }
};

// Point at infinity of the disk, an angle on the circle.
struct DiskBoundary {
  double angle = 0.0;

  DiskBoundary() = default;
  explicit DiskBoundary(double a) : angle(wrap_angle(a)) {}
  std::complex<double> to_complex() const {
    return {std::cos(angle), std::sin(angle)};
  }
};

bool same_boundary(const DiskBoundary& a, const DiskBoundary& b,
                   double tol = 1e-12);

// Orientation-preserving isometry of the disk as an SU(1,1) element:
// z -> (a z + b) / (conj(b) z + conj(a)), |a|^2 - |b|^2 = 1.
class DiskIsometry {
 public:
  DiskIsometry() : a_(1.0, 0.0), b_(0.0, 0.0) {}
  DiskIsometry(std::complex<double> a, std::complex<double> b);

  static DiskIsometry identity() { return {}; }
  static DiskIsometry rotation(double phi);
  // Maps the origin to w, |w| < 1.
  static DiskIsometry translation_to(std::complex<double> w);
  static DiskIsometry translation_to(const DiskPoint& p);

  DiskIsometry inverse() const;
  DiskIsometry compose(const DiskIsometry& rhs) const;  // this after rhs

  std::complex<double> apply(std::complex<double> z) const;
  DiskPoint apply(const DiskPoint& p) const;
  DiskBoundary apply(const DiskBoundary& xi) const;

  std::complex<double> a() const { return a_; }
  std::complex<double> b() const { return b_; }

 private:
  std::complex<double> a_, b_;
};

class DiskSpace;

// Bi-infinite geodesic: ideal endpoints plus the time-zero foot point.
struct DiskGeodesic {
  DiskBoundary neg;  // gamma(-infinity)
  DiskBoundary pos;  // gamma(+infinity)
  DiskPoint foot;    // gamma(0)
};

// The hyperbolic disk of constant curvature -k^2, k >= 1. All distances,
// Busemann values and Gromov products are in the scaled metric; internally
// everything reduces to the curvature -1 disk by the factor k.
class DiskSpace {
 public:
  using Point = DiskPoint;
  using Boundary = DiskBoundary;
  using Geodesic = DiskGeodesic;

  explicit DiskSpace(double curvature_scale = 1.0);

  double curvature_scale() const { return k_; }
  Point basepoint() const { return DiskPoint::origin(); }

  double distance(const Point& x, const Point& y) const;

  // B(x, y, xi) = lim_{a -> xi} d(x,a) - d(y,a).
  double busemann(const Point& x, const Point& y, const Boundary& xi) const;

  // (xi | eta)_x; throws if the two boundary points coincide.
  double gromov_product(const Point& x, const Boundary& xi,
                        const Boundary& eta) const;

  // Point at distance t >= 0 from x on the ray [x, xi).
  Point ray_point(const Point& x, const Boundary& xi, double t) const;

  // Ideal endpoint of the ray leaving x through the direction that the
  // isometry taking the origin to x assigns to frame angle phi.
  Boundary direction_at(const Point& x, double phi) const;

  // Geodesic through two distinct ideal points, foot = point nearest the
  // origin. The explicit-foot overload checks the foot lies on the line.
  Geodesic line_through(const Boundary& neg, const Boundary& pos) const;
  Geodesic line_through(const Boundary& neg, const Boundary& pos,
                        const Point& foot) const;

  Point geodesic_point(const Geodesic& g, double t) const;

  // n >= 4 geodesics with foot x, forward endpoints equidistributed in the
  // visual metric at x (the fan at the origin moved by an isometry).
  std::vector<Geodesic> direction_fan(const Point& x, int n) const;

  // Signed distance from g.foot to the projection of y onto the line of g
  // (positive toward g.pos); used to test foot membership.
  double line_parameter(const Geodesic& g, const Point& y) const;

 private:
  double k_;
};

}  // namespace ccx
