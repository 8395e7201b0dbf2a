#include "spherespan/body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

namespace spherespan {

namespace {

constexpr double kPi = 3.14159265358979323846;

double coordinate_scale(const std::vector<Vec>& points) {
  double s = 0.0;
  for (const auto& p : points)
    for (int i = 0; i < p.dim; ++i) s = std::fmax(s, std::fabs(p[i]));
  return s > 0.0 ? s : 1.0;
}

// Monotone chain; emits hull vertices in counter-clockwise order, dropping
// collinear points.
std::vector<Vec> hull_2d(std::vector<Vec> pts, double eps) {
  std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
    return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [eps](const Vec& a, const Vec& b) {
                          return std::fabs(a[0] - b[0]) <= eps && std::fabs(a[1] - b[1]) <= eps;
                        }),
            pts.end());
  const size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<Vec> h(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= eps) --k;
    h[k++] = pts[i];
  }
  for (size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= eps) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

struct HullFace {
  int a, b, c;
  Vec normal;
  double offset;
  bool alive = true;
};

Vec face_normal(const Vec& a, const Vec& b, const Vec& c) { return cross3(b - a, c - a); }

// Incremental 3D hull. Inputs are expected in general position up to the
// tolerance (Fibonacci boundary samples, user vertex lists at desk scale).
std::vector<HullFace> hull_3d(const std::vector<Vec>& pts, std::vector<char>* used) {
  const int n = static_cast<int>(pts.size());
  const double scale = coordinate_scale(pts);
  const double eps = 1e-10 * scale;
  if (n < 4) fail(Err::TooFewVertices, "3D hull needs at least 4 points");

  // Seed tetrahedron: spread-out quadruple.
  int i0 = 0, i1 = -1, i2 = -1, i3 = -1;
  double best = -1.0;
  for (int i = 1; i < n; ++i) {
    const double d = distance(pts[i], pts[i0]);
    if (d > best) best = d, i1 = i;
  }
  if (best <= eps) fail(Err::MalformedInput, "all points coincide");
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double d = norm(cross3(pts[i1] - pts[i0], pts[i] - pts[i0]));
    if (d > best) best = d, i2 = i;
  }
  if (best <= eps * eps) fail(Err::MalformedInput, "points are collinear");
  best = -1.0;
  for (int i = 0; i < n; ++i) {
    const double d = std::fabs(dot(face_normal(pts[i0], pts[i1], pts[i2]), pts[i] - pts[i0]));
    if (d > best) best = d, i3 = i;
  }
  if (best <= eps * eps * eps) fail(Err::MalformedInput, "points are coplanar");

  const Vec interior = 0.25 * (pts[i0] + pts[i1] + pts[i2] + pts[i3]);
  std::vector<HullFace> faces;
  auto add_face = [&](int a, int b, int c) {
    HullFace f{a, b, c, Vec{}, 0.0, true};
    f.normal = face_normal(pts[a], pts[b], pts[c]);
    f.offset = dot(f.normal, pts[a]);
    if (dot(f.normal, interior) > f.offset) {
      std::swap(f.b, f.c);
      f.normal = -f.normal;
      f.offset = -f.offset;
    }
    faces.push_back(f);
  };
  add_face(i0, i1, i2);
  add_face(i0, i1, i3);
  add_face(i0, i2, i3);
  add_face(i1, i2, i3);

  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
      if (!faces[f].alive) continue;
      if (dot(faces[f].normal, pts[p]) - faces[f].offset > eps * norm(faces[f].normal)) {
        visible.push_back(f);
      }
    }
    if (visible.empty()) continue;  // interior or on the hull surface

    // Horizon: directed edges of visible faces whose twin face is hidden.
    std::map<std::pair<int, int>, int> edge_count;
    for (int f : visible) {
      const int v[3] = {faces[f].a, faces[f].b, faces[f].c};
      for (int e = 0; e < 3; ++e) {
        const int u = v[e], w = v[(e + 1) % 3];
        edge_count[{std::min(u, w), std::max(u, w)}] += 1;
      }
    }
    std::vector<std::pair<int, int>> horizon;
    for (int f : visible) {
      const int v[3] = {faces[f].a, faces[f].b, faces[f].c};
      for (int e = 0; e < 3; ++e) {
        const int u = v[e], w = v[(e + 1) % 3];
        if (edge_count[{std::min(u, w), std::max(u, w)}] == 1) horizon.push_back({u, w});
      }
      faces[f].alive = false;
    }
    for (const auto& [u, w] : horizon) add_face(u, w, p);
  }

  std::vector<HullFace> out;
  std::vector<char> mark(static_cast<size_t>(n), 0);
  for (const auto& f : faces) {
    if (!f.alive) continue;
    out.push_back(f);
    mark[static_cast<size_t>(f.a)] = mark[static_cast<size_t>(f.b)] =
        mark[static_cast<size_t>(f.c)] = 1;
  }
  if (used) *used = mark;
  return out;
}

double golden_max(const std::function<double(double)>& f, double lo, double hi, int iters,
                  double* arg = nullptr) {
  const double gr = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  const double x = 0.5 * (a + b);
  if (arg) *arg = x;
  return f(x);
}

double sign_or_one(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

Polytope Polytope::from_vertices(const std::vector<Vec>& points, bool drop_interior) {
  if (points.empty()) fail(Err::TooFewVertices, "empty vertex list");
  const int dim = points[0].dim;
  for (const auto& p : points) {
    if (p.dim != dim) fail(Err::DimensionMismatch, "mixed vertex dimensions");
    if (!all_finite(p)) fail(Err::NonFiniteInput, "non-finite vertex");
  }
  const double scale = coordinate_scale(points);
  Polytope poly;
  poly.dim = dim;

  if (dim == 2) {
    if (points.size() < 3) fail(Err::TooFewVertices, "2D polytope needs at least 3 vertices");
    const auto hull = hull_2d(points, 1e-12 * scale * scale);
    if (hull.size() < 3) fail(Err::MalformedInput, "vertices are collinear");
    if (!drop_interior && hull.size() != points.size()) {
      fail(Err::MalformedInput, "a listed vertex is not extreme");
    }
    if (drop_interior) {
      poly.vertices = hull;
      for (int i = 0; i < static_cast<int>(hull.size()); ++i) poly.ring.push_back(i);
    } else {
      poly.vertices = points;
      for (const Vec& h : hull) {
        int id = -1;
        for (size_t i = 0; i < points.size(); ++i) {
          if (points[i] == h) {
            id = static_cast<int>(i);
            break;
          }
        }
        if (id < 0) fail(Err::MalformedInput, "a listed vertex is not extreme");
        poly.ring.push_back(id);
      }
    }
    const int n = static_cast<int>(poly.ring.size());
    for (int i = 0; i < n; ++i) {
      const int ia = poly.ring[static_cast<size_t>(i)];
      const int ib = poly.ring[static_cast<size_t>((i + 1) % n)];
      const Vec a = poly.vertices[static_cast<size_t>(ia)];
      const Vec b = poly.vertices[static_cast<size_t>(ib)];
      const Vec e = b - a;
      Vec nrm = Vec::of(e[1], -e[0]);
      nrm = nrm / norm(nrm);
      poly.facets.push_back({nrm, dot(nrm, a), {ia, ib}});
    }
    return poly;
  }

  std::vector<char> used;
  const auto faces = hull_3d(points, &used);
  if (!drop_interior) {
    for (char u : used)
      if (!u) fail(Err::MalformedInput, "a listed vertex is not extreme");
  }
  std::vector<int> remap(points.size(), -1);
  for (size_t i = 0; i < points.size(); ++i) {
    if (used[i]) {
      remap[i] = static_cast<int>(poly.vertices.size());
      poly.vertices.push_back(points[i]);
    }
  }
  for (const auto& f : faces) {
    Vec nrm = f.normal / norm(f.normal);
    poly.facets.push_back({nrm, dot(nrm, points[static_cast<size_t>(f.a)]),
                           {remap[static_cast<size_t>(f.a)], remap[static_cast<size_t>(f.b)],
                            remap[static_cast<size_t>(f.c)]}});
  }
  return poly;
}

void Body::finish_construction() {
  const int samples = dim_ == 2 ? 512 : 1024;
  double out = 0.0, in = std::numeric_limits<double>::infinity();
  if (dim_ == 2) {
    for (int k = 0; k < samples; ++k) {
      const double t = 2.0 * kPi * k / samples;
      const Vec u = Vec::of(std::cos(t), std::sin(t));
      const double r = 1.0 / gauge_unchecked(u);
      out = std::fmax(out, r);
      in = std::fmin(in, r);
    }
  } else {
    for (const Vec& u : fibonacci_directions(samples)) {
      const double r = 1.0 / gauge_unchecked(u);
      out = std::fmax(out, r);
      in = std::fmin(in, r);
    }
  }
  if (!(in > 0.0) || !std::isfinite(out)) {
    fail(Err::MalformedInput, "origin is not interior to the body");
  }
  outradius_ = out;
  inradius_ = in;
}

double Body::gauge(const Vec& v) const {
  if (v.dim != dim_) fail(Err::DimensionMismatch, "gauge: wrong dimension");
  if (!all_finite(v)) fail(Err::NonFiniteInput, "gauge: non-finite input");
  return gauge_unchecked(v);
}

double Body::gauge_unchecked(const Vec& v) const {
  switch (kind_) {
    case BodyKind::Lp: {
      double m = 0.0;
      for (int i = 0; i < dim_; ++i) m = std::fmax(m, std::fabs(v[i]) / radii_[static_cast<size_t>(i)]);
      if (m == 0.0) return 0.0;
      if (std::isinf(p_)) return m;
      if (p_ == 1.0) {
        double s = 0.0;
        for (int i = 0; i < dim_; ++i) s += std::fabs(v[i]) / radii_[static_cast<size_t>(i)];
        return s;
      }
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        s += std::pow(std::fabs(v[i]) / radii_[static_cast<size_t>(i)] / m, p_);
      }
      return m * std::pow(s, 1.0 / p_);
    }
    case BodyKind::Ellipsoid: {
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double t = v[i] / axes_[static_cast<size_t>(i)];
        s += t * t;
      }
      return std::sqrt(s);
    }
    case BodyKind::Polytope: {
      double g = 0.0;
      for (const auto& f : poly_.facets) g = std::fmax(g, dot(f.normal, v) / f.offset);
      return g;
    }
    case BodyKind::Custom: {
      if (gauge_fn_) return gauge_fn_(v);
      double nv = norm(v);
      if (nv == 0.0) return 0.0;
      // Smallest t with v/t in the body, by doubling then bisection.
      double hi = nv;
      int guard = 0;
      while (!member_fn_(v / hi)) {
        hi *= 2.0;
        if (++guard > 80) fail(Err::OracleInconsistent, "membership never satisfied along ray");
      }
      double lo = 0.0;
      while (hi - lo > tol_) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (member_fn_(v / mid) ? hi : lo) = mid;
      }
      const double g = 0.5 * (lo + hi);
      if (!member_fn_(v / (g * (1.0 + 1e-6) + tol_))) {
        fail(Err::OracleInconsistent, "membership oracle non-monotone along ray");
      }
      return g;
    }
  }
  return 0.0;
}

Vec Body::boundary_point(const Vec& u) const {
  const double g = gauge(u);
  if (g == 0.0) fail(Err::ZeroVector, "boundary_point of the zero vector");
  return u / g;
}

SupportPoint Body::support(const Vec& u) const {
  if (u.dim != dim_) fail(Err::DimensionMismatch, "support: wrong dimension");
  if (!all_finite(u)) fail(Err::NonFiniteInput, "support: non-finite input");
  if (norm(u) == 0.0) fail(Err::ZeroVector, "support of the zero functional");

  switch (kind_) {
    case BodyKind::Lp: {
      if (std::isinf(p_)) {
        Vec x = Vec::zero(dim_);
        double val = 0.0;
        for (int i = 0; i < dim_; ++i) {
          x[i] = sign_or_one(u[i]) * radii_[static_cast<size_t>(i)];
          val += std::fabs(u[i]) * radii_[static_cast<size_t>(i)];
        }
        return {val, x};
      }
      if (p_ == 1.0) {
        int j = 0;
        double best = -1.0;
        for (int i = 0; i < dim_; ++i) {
          const double cand = std::fabs(u[i]) * radii_[static_cast<size_t>(i)];
          if (cand > best + 1e-15 * std::fabs(best)) best = cand, j = i;
        }
        Vec x = Vec::zero(dim_);
        x[j] = sign_or_one(u[j]) * radii_[static_cast<size_t>(j)];
        return {best, x};
      }
      const double q = p_ / (p_ - 1.0);
      double m = 0.0;
      for (int i = 0; i < dim_; ++i) m = std::fmax(m, std::fabs(radii_[static_cast<size_t>(i)] * u[i]));
      double s = 0.0;
      for (int i = 0; i < dim_; ++i) {
        s += std::pow(std::fabs(radii_[static_cast<size_t>(i)] * u[i]) / m, q);
      }
      const double h = m * std::pow(s, 1.0 / q);
      Vec x = Vec::zero(dim_);
      for (int i = 0; i < dim_; ++i) {
        const double r = radii_[static_cast<size_t>(i)];
        x[i] = r * sign_or_one(u[i]) * std::pow(std::fabs(r * u[i]) / h, q - 1.0);
      }
      return {h, x};
    }
    case BodyKind::Ellipsoid: {
      double h = 0.0;
      for (int i = 0; i < dim_; ++i) {
        const double t = axes_[static_cast<size_t>(i)] * u[i];
        h += t * t;
      }
      h = std::sqrt(h);
      Vec x = Vec::zero(dim_);
      for (int i = 0; i < dim_; ++i) {
        const double a = axes_[static_cast<size_t>(i)];
        x[i] = a * a * u[i] / h;
      }
      return {h, x};
    }
    case BodyKind::Polytope: {
      int best = 0;
      double val = dot(u, poly_.vertices[0]);
      const double tie = 1e-12 * norm(u) * outradius_;
      for (int i = 1; i < static_cast<int>(poly_.vertices.size()); ++i) {
        const double cand = dot(u, poly_.vertices[static_cast<size_t>(i)]);
        if (cand > val + tie) val = cand, best = i;
      }
      return {val, poly_.vertices[static_cast<size_t>(best)]};
    }
    case BodyKind::Custom: {
      if (dim_ == 2) {
        const int scan = 2048;
        double best_t = 0.0, best_v = -std::numeric_limits<double>::infinity();
        for (int k = 0; k < scan; ++k) {
          const double t = 2.0 * kPi * k / scan;
          const double v = dot(u, boundary_at_angle(*this, t));
          if (v > best_v) best_v = v, best_t = t;
        }
        double arg = best_t;
        golden_max([&](double t) { return dot(u, boundary_at_angle(*this, t)); },
                   best_t - 2.0 * kPi / scan, best_t + 2.0 * kPi / scan, 80, &arg);
        const Vec x = boundary_at_angle(*this, arg);
        return {dot(u, x), x};
      }
      const auto dirs = fibonacci_directions(8192);
      Vec bd = dirs[0];
      double best_v = -std::numeric_limits<double>::infinity();
      for (const Vec& d : dirs) {
        const double v = dot(u, boundary_point(d));
        if (v > best_v) best_v = v, bd = d;
      }
      // Local refinement over two tangent angles.
      Vec t1 = cross3(bd, std::fabs(bd[0]) < 0.9 ? Vec::of(1, 0, 0) : Vec::of(0, 1, 0));
      t1 = t1 / norm(t1);
      Vec t2 = cross3(bd, t1);
      const double w = 0.05;
      double a = 0.0, b = 0.0;
      for (int round = 0; round < 4; ++round) {
        golden_max(
            [&](double s) { return dot(u, boundary_point(bd + (a + s) * t1 + b * t2)); },
            -w, w, 50, &a);
        golden_max(
            [&](double s) { return dot(u, boundary_point(bd + a * t1 + (b + s) * t2)); },
            -w, w, 50, &b);
      }
      const Vec x = boundary_point(bd + a * t1 + b * t2);
      return {dot(u, x), x};
    }
  }
  return {};
}

ExposedPoint Body::exposed_point(const Vec& phi, int certificate_samples) const {
  if (phi.dim != dim_) fail(Err::DimensionMismatch, "exposed_point: wrong dimension");
  if (norm(phi) == 0.0) fail(Err::ZeroVector, "exposed_point of the zero functional");

  // Face detection for the polyhedral kinds.
  if (kind_ == BodyKind::Polytope) {
    const SupportPoint sp = support(-phi);
    const double tie = 1e-9 * norm(phi) * outradius_;
    int count = 0;
    for (const auto& v : poly_.vertices)
      if (dot(-phi, v) >= sp.value - tie) ++count;
    if (count > 1) fail(Err::NonExposedDirection, "minimum attained along a face");
  } else if (kind_ == BodyKind::Lp && p_ == 1.0) {
    double best = 0.0, second = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double c = std::fabs(phi[i]) * radii_[static_cast<size_t>(i)];
      if (c > best) second = best, best = c;
      else if (c > second) second = c;
    }
    if (best - second <= 1e-9 * norm(phi) * outradius_) {
      fail(Err::NonExposedDirection, "minimum attained along a face");
    }
  } else if (kind_ == BodyKind::Lp && std::isinf(p_)) {
    for (int i = 0; i < dim_; ++i) {
      if (std::fabs(phi[i]) <= 1e-9 * norm(phi)) {
        fail(Err::NonExposedDirection, "minimum attained along a face");
      }
    }
  }

  const SupportPoint sp = support(-phi);
  const Vec q = sp.point;
  const double m = -sp.value;

  // Sampled uniqueness certificate: away from q the functional must exceed
  // the minimum by a definite gap.
  const double delta = 0.02 * outradius_;
  const double threshold = 1e-7 * norm(phi) * outradius_;
  double gap = std::numeric_limits<double>::infinity();
  auto consider = [&](const Vec& x) {
    if (distance(x, q) <= delta) return;
    gap = std::fmin(gap, dot(phi, x) - m);
  };
  if (dim_ == 2) {
    for (int k = 0; k < certificate_samples; ++k) {
      consider(boundary_at_angle(*this, 2.0 * kPi * k / certificate_samples));
    }
  } else {
    for (const Vec& d : fibonacci_directions(2 * certificate_samples)) consider(boundary_point(d));
  }
  if (!(gap > threshold)) {
    fail(Err::NonExposedDirection, "sampled gap certificate failed");
  }
  return {q, m, gap};
}

const Polytope& Body::polytope_data() const {
  if (kind_ != BodyKind::Polytope) fail(Err::MalformedInput, "not a polytope body");
  return poly_;
}

Body Body::lp_ball(int dim, double p, std::vector<double> radii) {
  if (dim != 2 && dim != 3) fail(Err::MalformedInput, "dimension must be 2 or 3");
  if (!(p >= 1.0)) fail(Err::MalformedInput, "lp exponent must be >= 1");
  if (radii.empty()) radii.assign(static_cast<size_t>(dim), 1.0);
  if (static_cast<int>(radii.size()) != dim) fail(Err::MalformedInput, "radii size must match dim");
  for (double r : radii)
    if (!(r > 0.0)) fail(Err::MalformedInput, "radii must be positive");
  Body b;
  b.dim_ = dim;
  b.kind_ = BodyKind::Lp;
  b.p_ = p;
  b.radii_ = std::move(radii);
  b.strictly_convex_ = p > 1.0 && !std::isinf(p);
  b.finish_construction();
  return b;
}

Body Body::ellipsoid(std::vector<double> axes) {
  const int dim = static_cast<int>(axes.size());
  if (dim != 2 && dim != 3) fail(Err::MalformedInput, "axes must have length 2 or 3");
  for (double a : axes)
    if (!(a > 0.0)) fail(Err::MalformedInput, "axes must be positive");
  Body b;
  b.dim_ = dim;
  b.kind_ = BodyKind::Ellipsoid;
  b.axes_ = std::move(axes);
  b.strictly_convex_ = true;
  b.finish_construction();
  return b;
}

Body Body::polytope(const std::vector<Vec>& vertices) {
  return from_polytope(Polytope::from_vertices(vertices, false));
}

Body Body::from_polytope(Polytope poly) {
  // Norm-ball usage: the vertex set must be symmetric and surround the origin.
  const double scale = coordinate_scale(poly.vertices);
  for (const auto& v : poly.vertices) {
    bool found = false;
    for (const auto& w : poly.vertices) {
      if (distance(v, -w) <= 1e-9 * scale) {
        found = true;
        break;
      }
    }
    if (!found) fail(Err::MalformedInput, "vertex set is not symmetric under negation");
  }
  for (const auto& f : poly.facets) {
    if (!(f.offset > 1e-12 * scale)) fail(Err::MalformedInput, "origin is not interior");
  }
  Body b;
  b.dim_ = poly.dim;
  b.kind_ = BodyKind::Polytope;
  b.poly_ = std::move(poly);
  b.strictly_convex_ = false;
  b.finish_construction();
  return b;
}

Body Body::custom_gauge(int dim, std::function<double(const Vec&)> gauge_fn, bool strictly_convex,
                        double tol) {
  if (dim != 2 && dim != 3) fail(Err::MalformedInput, "dimension must be 2 or 3");
  Body b;
  b.dim_ = dim;
  b.kind_ = BodyKind::Custom;
  b.gauge_fn_ = std::move(gauge_fn);
  b.strictly_convex_ = strictly_convex;
  b.tol_ = tol;
  b.finish_construction();
  return b;
}

Body Body::custom_membership(int dim, std::function<bool(const Vec&)> member_fn,
                             bool strictly_convex, double tol) {
  if (dim != 2 && dim != 3) fail(Err::MalformedInput, "dimension must be 2 or 3");
  Body b;
  b.dim_ = dim;
  b.kind_ = BodyKind::Custom;
  b.member_fn_ = std::move(member_fn);
  b.strictly_convex_ = strictly_convex;
  b.tol_ = tol;
  b.finish_construction();
  return b;
}

Vec boundary_at_angle(const Body& body, double t) {
  if (body.dim() != 2) fail(Err::DimensionMismatch, "boundary_at_angle is 2D only");
  return body.boundary_point(Vec::of(std::cos(t), std::sin(t)));
}

std::vector<Vec> fibonacci_directions(int count) {
  std::vector<Vec> dirs;
  dirs.reserve(static_cast<size_t>(count));
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    const double z = 1.0 - 2.0 * (k + 0.5) / count;
    const double r = std::sqrt(std::fmax(0.0, 1.0 - z * z));
    const double t = golden * k;
    dirs.push_back(Vec::of(r * std::cos(t), r * std::sin(t), z));
  }
  return dirs;
}

Polytope approximate_polytope(const Body& body, int vertex_count) {
  if (vertex_count < body.dim() + 1) fail(Err::TooFewVertices, "need at least dim+1 vertices");
  std::vector<Vec> pts;
  pts.reserve(static_cast<size_t>(vertex_count));
  if (body.dim() == 2) {
    for (int k = 0; k < vertex_count; ++k) {
      pts.push_back(boundary_at_angle(body, 2.0 * kPi * k / vertex_count));
    }
  } else {
    for (const Vec& d : fibonacci_directions(vertex_count)) pts.push_back(body.boundary_point(d));
  }
  return Polytope::from_vertices(pts, true);
}

double point_polytope_distance(const Vec& x, const Polytope& poly) {
  bool inside = true;
  for (const auto& f : poly.facets) {
    if (dot(f.normal, x) > f.offset) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;

  double best = std::numeric_limits<double>::infinity();
  if (poly.dim == 2) {
    const int n = static_cast<int>(poly.ring.size());
    for (int i = 0; i < n; ++i) {
      const Vec a = poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>(i)])];
      const Vec b = poly.vertices[static_cast<size_t>(poly.ring[static_cast<size_t>((i + 1) % n)])];
      best = std::fmin(best, segment_distance(x, a, b));
    }
    return best;
  }
  // 3D: min distance over (triangular) facets, via closest point on triangle.
  for (const auto& f : poly.facets) {
    const Vec a = poly.vertices[static_cast<size_t>(f.vertex_ids[0])];
    const Vec b = poly.vertices[static_cast<size_t>(f.vertex_ids[1])];
    const Vec c = poly.vertices[static_cast<size_t>(f.vertex_ids[2])];
    const Vec ab = b - a, ac = c - a, ap = x - a;
    const double d1 = dot(ab, ap), d2 = dot(ac, ap);
    double dist;
    if (d1 <= 0.0 && d2 <= 0.0) {
      dist = norm(ap);
    } else {
      const Vec bp = x - b;
      const double d3 = dot(ab, bp), d4 = dot(ac, bp);
      const Vec cp = x - c;
      const double d5 = dot(ab, cp), d6 = dot(ac, cp);
      if (d3 >= 0.0 && d4 <= d3) {
        dist = norm(bp);
      } else if (d6 >= 0.0 && d5 <= d6) {
        dist = norm(cp);
      } else if (d1 >= 0.0 && d3 <= 0.0 && d1 * d4 - d3 * d2 <= 0.0) {
        dist = norm(ap - (d1 / (d1 - d3)) * ab);
      } else if (d2 >= 0.0 && d6 <= 0.0 && d5 * d2 - d1 * d6 <= 0.0) {
        dist = norm(ap - (d2 / (d2 - d6)) * ac);
      } else if ((d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 &&
                 d3 * d6 - d5 * d4 <= 0.0) {
        const double w = (d4 - d3) / ((d4 - d3) + (d5 - d6));
        dist = norm(x - (b + w * (c - b)));
      } else {
        const Vec nrm = cross3(ab, ac);
        dist = std::fabs(dot(x - a, nrm)) / norm(nrm);
      }
    }
    best = std::fmin(best, dist);
  }
  return best;
}

double hausdorff_distance(const Polytope& a, const Polytope& b) {
  if (a.dim != b.dim) fail(Err::DimensionMismatch, "hausdorff: mixed dimensions");
  double d = 0.0;
  for (const auto& v : a.vertices) d = std::fmax(d, point_polytope_distance(v, b));
  for (const auto& v : b.vertices) d = std::fmax(d, point_polytope_distance(v, a));
  return d;
}

namespace {

double polytope_support_value(const Polytope& poly, const Vec& u) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& v : poly.vertices) best = std::fmax(best, dot(u, v));
  return best;
}

// Hausdorff distance between convex bodies equals the sup-norm distance of
// their support functions over Euclidean-unit directions.
double support_gap_scan(const std::function<double(const Vec&)>& ha,
                        const std::function<double(const Vec&)>& hb, int dim, int resolution) {
  if (dim == 2) {
    auto g = [&](double t) {
      const Vec u = Vec::of(std::cos(t), std::sin(t));
      return std::fabs(ha(u) - hb(u));
    };
    std::vector<double> vals(static_cast<size_t>(resolution));
    for (int k = 0; k < resolution; ++k) vals[static_cast<size_t>(k)] = g(2.0 * kPi * k / resolution);
    // Refine every local maximum of the coarse scan.
    double best = 0.0;
    const double step = 2.0 * kPi / resolution;
    for (int k = 0; k < resolution; ++k) {
      const double prev = vals[static_cast<size_t>((k + resolution - 1) % resolution)];
      const double next = vals[static_cast<size_t>((k + 1) % resolution)];
      const double cur = vals[static_cast<size_t>(k)];
      if (cur >= prev && cur >= next) {
        const double t0 = 2.0 * kPi * k / resolution;
        best = std::fmax(best, golden_max(g, t0 - step, t0 + step, 90));
      }
      best = std::fmax(best, cur);
    }
    return best;
  }
  double best = 0.0;
  Vec arg = Vec::of(0, 0, 1);
  for (const Vec& u : fibonacci_directions(resolution)) {
    const double v = std::fabs(ha(u) - hb(u));
    if (v > best) best = v, arg = u;
  }
  Vec t1 = cross3(arg, std::fabs(arg[0]) < 0.9 ? Vec::of(1, 0, 0) : Vec::of(0, 1, 0));
  t1 = t1 / norm(t1);
  Vec t2 = cross3(arg, t1);
  auto g2 = [&](double s, double w) {
    Vec u = arg + s * t1 + w * t2;
    u = u / norm(u);
    return std::fabs(ha(u) - hb(u));
  };
  const double w = 2.5 / std::sqrt(static_cast<double>(resolution));
  double sa = 0.0, sb = 0.0;
  for (int round = 0; round < 4; ++round) {
    golden_max([&](double s) { return g2(s, sb); }, sa - w, sa + w, 60, &sa);
    golden_max([&](double s) { return g2(sa, s); }, sb - w, sb + w, 60, &sb);
  }
  return std::fmax(best, g2(sa, sb));
}

}  // namespace

double hausdorff_distance(const Polytope& a, const Body& b, int resolution) {
  if (a.dim != b.dim()) fail(Err::DimensionMismatch, "hausdorff: mixed dimensions");
  return support_gap_scan([&](const Vec& u) { return polytope_support_value(a, u); },
                          [&](const Vec& u) { return b.support(u).value; }, a.dim, resolution);
}

double hausdorff_distance(const Body& a, const Body& b, int resolution) {
  if (a.dim() != b.dim()) fail(Err::DimensionMismatch, "hausdorff: mixed dimensions");
  return support_gap_scan([&](const Vec& u) { return a.support(u).value; },
                          [&](const Vec& u) { return b.support(u).value; }, a.dim(), resolution);
}

}  // namespace spherespan
