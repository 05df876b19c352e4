#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the Hermite-form machinery it is used to check.

#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "rieszkit/numeric.hpp"
#include "rieszkit/trig_poly.hpp"

namespace rieszkit::oracle {

using Point = std::vector<std::int64_t>;

inline void for_each_in_box(std::size_t dim, std::int64_t radius,
                            const std::function<void(const Point&)>& f) {
  Point p(dim, -radius);
  while (true) {
    f(p);
    std::size_t i = dim;
    while (i > 0) {
      --i;
      if (++p[i] <= radius) break;
      p[i] = -radius;
      if (i == 0) return;
    }
    if (dim == 0) return;
  }
}

// All integer combinations of `gens` reachable from 0 by +-generator steps
// without leaving [-box, box]^d.
inline std::set<Point> lattice_points(std::size_t dim, const std::vector<Point>& gens,
                                      std::int64_t box) {
  std::set<Point> seen{Point(dim, 0)};
  std::vector<Point> frontier{Point(dim, 0)};
  while (!frontier.empty()) {
    std::vector<Point> next;
    for (const auto& p : frontier) {
      for (const auto& g : gens) {
        for (int s : {-1, 1}) {
          Point q = p;
          bool inside = true;
          for (std::size_t i = 0; i < dim; ++i) {
            q[i] += s * g[i];
            inside = inside && std::llabs(q[i]) <= box;
          }
          if (inside && seen.insert(q).second) next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// Riemann sum of g over T^1 on n midpoints.
inline double midpoint_mean(const std::function<double(double)>& g, std::size_t n) {
  double s = 0.0;
  for (std::size_t k = 0; k < n; ++k) s += g((static_cast<double>(k) + 0.5) / static_cast<double>(n));
  return s / static_cast<double>(n);
}

// Direct evaluation of a trigonometric polynomial, independent of TrigPoly::operator().
inline Complex eval(const TrigPoly& f, const std::vector<double>& x) {
  Complex s = 0.0;
  for (const auto& [chi, c] : f.coeffs()) {
    double t = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) t += static_cast<double>(chi[i]) * x[i];
    s += c * Complex(std::cos(kTwoPi * t), std::sin(kTwoPi * t));
  }
  return s;
}

}  // namespace rieszkit::oracle
