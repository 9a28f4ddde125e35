#include "ccx/disk.hpp"

#include <cmath>

namespace ccx {

double wrap_angle(double theta) {
  double w = std::fmod(theta, 2 * kPi);
  if (w < 0) w += 2 * kPi;
  // fmod can land exactly on 2*pi after the correction
  if (w >= 2 * kPi) w = 0.0;
  return w;
}

namespace {

// Smallest angular gap between two directions, in [0, pi].
double angular_gap(double a, double b) {
  double d = std::fabs(wrap_angle(a) - wrap_angle(b));
  return d > kPi ? 2 * kPi - d : d;
}

// Signed gap b - a wrapped to (-pi, pi].
double signed_gap(double a, double b) {
  double d = wrap_angle(b - a);
  return d > kPi ? d - 2 * kPi : d;
}

// Curvature -1 distance, hyperbolic haversine form:
// sinh^2(d/2) = sinh^2((r1-r2)/2) + sinh r1 sinh r2 sin^2(dtheta/2).
double dist1(const DiskPoint& x, const DiskPoint& y) {
  double s = std::sin(angular_gap(x.theta, y.theta) / 2);
  double h = std::sinh((x.r - y.r) / 2);
  double q = h * h + std::sinh(x.r) * std::sinh(y.r) * s * s;
  return 2 * std::asinh(std::sqrt(q));
}

// exp(B(y, o, xi)) = e^{-r} + 2 sinh(r) sin^2(gap/2), with gap the angle
// at the origin between y and xi.
double exp_busemann_to_origin(const DiskPoint& y, const DiskBoundary& xi) {
  double s = std::sin(angular_gap(y.theta, xi.angle) / 2);
  return std::exp(-y.r) + 2 * std::sinh(y.r) * s * s;
}

double busemann_to_origin(const DiskPoint& y, const DiskBoundary& xi) {
  return std::log(exp_busemann_to_origin(y, xi));
}

// Curvature -1 Busemann cocycle through the origin.
double busemann1(const DiskPoint& x, const DiskPoint& y,
                 const DiskBoundary& xi) {
  return busemann_to_origin(x, xi) - busemann_to_origin(y, xi);
}

double gromov1(const DiskPoint& x, const DiskBoundary& xi,
               const DiskBoundary& eta) {
  double gap = angular_gap(xi.angle, eta.angle);
  double g = -std::log(std::sin(gap / 2)) +
             0.5 * (busemann_to_origin(x, xi) + busemann_to_origin(x, eta));
  return std::max(0.0, g);
}

// Point at curvature -1 distance t from x on the ray [x, xi).
DiskPoint ray1(const DiskPoint& x, const DiskBoundary& xi, double t) {
  if (t == 0.0) return x;
  if (x.r < 1e-300) return DiskPoint::polar(t, xi.angle);

  double delta = signed_gap(x.theta, xi.angle);
  double shalf = std::sin(delta / 2);
  double chalf = std::cos(delta / 2);
  double denom = std::exp(-x.r) + 2 * std::sinh(x.r) * shalf * shalf;
  // sin^2 of half the angle at x between the origin and xi
  double s2 = std::exp(-x.r) * chalf * chalf / denom;

  double h = std::sinh((x.r - t) / 2);
  double q = h * h + std::sinh(x.r) * std::sinh(t) * s2;
  double ry = 2 * std::asinh(std::sqrt(q));

  double sin_psi = 2 * std::sqrt(std::max(0.0, s2 * (1 - s2)));
  double phi = std::atan2(
      std::sinh(t) * sin_psi,
      (std::cosh(x.r) * std::cosh(ry) - std::cosh(t)) / std::sinh(x.r));
  double sgn = delta >= 0 ? 1.0 : -1.0;
  return DiskPoint::polar(ry, x.theta + sgn * phi);
}

}  // namespace

DiskPoint DiskPoint::polar(double r, double theta) {
  if (!(r >= 0) || !std::isfinite(r))
    throw std::domain_error("DiskPoint: radius must be finite and >= 0");
  return {r, wrap_angle(theta)};
}

DiskPoint DiskPoint::cartesian(double u, double v) {
  double n = std::hypot(u, v);
  if (!(n < 1.0 - 1e-12))
    throw std::domain_error("DiskPoint: coordinate norm must be < 1 - 1e-12");
  if (n == 0.0) return {};
  return {2 * std::atanh(n), wrap_angle(std::atan2(v, u))};
}

std::complex<double> DiskPoint::to_complex() const {
  return std::polar(std::tanh(r / 2), theta);
}

bool same_boundary(const DiskBoundary& a, const DiskBoundary& b, double tol) {
  return angular_gap(a.angle, b.angle) <= tol;
}

DiskIsometry::DiskIsometry(std::complex<double> a, std::complex<double> b) {
  double n2 = std::norm(a) - std::norm(b);
  if (!(n2 > 0))
    throw std::invalid_argument("DiskIsometry: |a|^2 - |b|^2 must be > 0");
  double n = std::sqrt(n2);
  a_ = a / n;
  b_ = b / n;
}

DiskIsometry DiskIsometry::rotation(double phi) {
  return DiskIsometry(std::polar(1.0, phi / 2), 0.0);
}

DiskIsometry DiskIsometry::translation_to(std::complex<double> w) {
  if (!(std::abs(w) < 1.0))
    throw std::invalid_argument("DiskIsometry: |w| must be < 1");
  double s = 1.0 / std::sqrt(1.0 - std::norm(w));
  return DiskIsometry(s, s * w);
}

DiskIsometry DiskIsometry::translation_to(const DiskPoint& p) {
  return translation_to(p.to_complex());
}

DiskIsometry DiskIsometry::inverse() const {
  return DiskIsometry(std::conj(a_), -b_);
}

DiskIsometry DiskIsometry::compose(const DiskIsometry& rhs) const {
  return DiskIsometry(a_ * rhs.a_ + b_ * std::conj(rhs.b_),
                      a_ * rhs.b_ + b_ * std::conj(rhs.a_));
}

std::complex<double> DiskIsometry::apply(std::complex<double> z) const {
  return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
}

DiskPoint DiskIsometry::apply(const DiskPoint& p) const {
  // The radius of the image is recovered as a distance so that precision
  // does not hinge on 1 - |w|^2; the angle comes from the complex image.
  DiskPoint pre;  // preimage of the origin
  std::complex<double> c = -b_ / a_;
  double n = std::abs(c);
  pre = n > 0 ? DiskPoint{2 * std::atanh(n), wrap_angle(std::arg(c))}
              : DiskPoint{};
  double ry = dist1(p, pre);
  if (ry == 0.0) return DiskPoint::origin();
  return DiskPoint::polar(ry, std::arg(apply(p.to_complex())));
}

DiskBoundary DiskIsometry::apply(const DiskBoundary& xi) const {
  std::complex<double> e = xi.to_complex();
  std::complex<double> num = a_ * e + b_;
  std::complex<double> den = std::conj(b_) * e + std::conj(a_);
  return DiskBoundary(std::arg(num) - std::arg(den));
}

DiskSpace::DiskSpace(double curvature_scale) : k_(curvature_scale) {
  if (!(k_ >= 1.0))
    throw std::invalid_argument("DiskSpace: curvature scale must be >= 1");
}

double DiskSpace::distance(const Point& x, const Point& y) const {
  return dist1(x, y) / k_;
}

double DiskSpace::busemann(const Point& x, const Point& y,
                           const Boundary& xi) const {
  return busemann1(x, y, xi) / k_;
}

double DiskSpace::gromov_product(const Point& x, const Boundary& xi,
                                 const Boundary& eta) const {
  if (same_boundary(xi, eta, 1e-15))
    throw std::invalid_argument("gromov_product: boundary points coincide");
  return gromov1(x, xi, eta) / k_;
}

DiskPoint DiskSpace::ray_point(const Point& x, const Boundary& xi,
                               double t) const {
  if (t < 0) throw std::invalid_argument("ray_point: t must be >= 0");
  return ray1(x, xi, t * k_);
}

DiskBoundary DiskSpace::direction_at(const Point& x, double phi) const {
  if (x.r == 0.0) return DiskBoundary(phi);
  return DiskIsometry::translation_to(x).apply(DiskBoundary(phi));
}

DiskGeodesic DiskSpace::line_through(const Boundary& neg,
                                     const Boundary& pos) const {
  if (same_boundary(neg, pos, 1e-15))
    throw std::invalid_argument("line_through: endpoints coincide");
  double det = std::sin(pos.angle - neg.angle);
  if (std::fabs(det) < 1e-14) {
    // antipodal pair: the line is a diameter
    return {neg, pos, DiskPoint::origin()};
  }
  std::complex<double> p = neg.to_complex(), q = pos.to_complex();
  double cx = (q.imag() - p.imag()) / det;
  double cy = (p.real() - q.real()) / det;
  double cn = std::hypot(cx, cy);
  double rad = std::sqrt(std::max(0.0, cn * cn - 1.0));
  double u = 1.0 / (cn + rad);  // euclidean norm of the nearest point
  return {neg, pos,
          DiskPoint::polar(2 * std::atanh(u), std::atan2(cy, cx))};
}

DiskGeodesic DiskSpace::line_through(const Boundary& neg, const Boundary& pos,
                                     const Point& foot) const {
  Geodesic base = line_through(neg, pos);
  double t = line_parameter(base, foot);
  if (distance(geodesic_point(base, t), foot) > 1e-10)
    throw std::domain_error("line_through: foot point not on the geodesic");
  return {neg, pos, foot};
}

DiskPoint DiskSpace::geodesic_point(const Geodesic& g, double t) const {
  return t >= 0 ? ray_point(g.foot, g.pos, t) : ray_point(g.foot, g.neg, -t);
}

std::vector<DiskGeodesic> DiskSpace::direction_fan(const Point& x,
                                                   int n) const {
  if (n < 4) throw std::invalid_argument("direction_fan: need n >= 4");
  std::vector<Geodesic> fan;
  fan.reserve(n);
  if (x.r == 0.0) {
    for (int j = 0; j < n; ++j) {
      double phi = 2 * kPi * j / n;
      fan.push_back({DiskBoundary(phi + kPi), DiskBoundary(phi), x});
    }
    return fan;
  }
  DiskIsometry move = DiskIsometry::translation_to(x);
  for (int j = 0; j < n; ++j) {
    double phi = 2 * kPi * j / n;
    fan.push_back({move.apply(DiskBoundary(phi + kPi)),
                   move.apply(DiskBoundary(phi)), x});
  }
  return fan;
}

double DiskSpace::line_parameter(const Geodesic& g, const Point& y) const {
  // Projection parameter: half the difference of the two horofunction
  // coordinates of y relative to the foot.
  return 0.5 * (busemann(y, g.foot, g.neg) - busemann(y, g.foot, g.pos));
}

}  // namespace ccx
