#pragma once
// Independent polygon point counting: convex hull by monotone chain, membership by
// cross products, scan over the bounding box.

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

namespace oracle {

using Pt = std::pair<long, long>;

inline long cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
}

inline std::vector<Pt> hull(std::vector<Pt> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Pt> h(2 * p.size());
  size_t k = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

// points of m * conv(p) in Z^2 (polygon with nonzero area)
inline long count_polygon(const std::vector<Pt>& p, long m) {
  std::vector<Pt> q;
  for (auto [x, y] : p) q.emplace_back(x * m, y * m);
  auto h = hull(q);
  long x0 = h[0].first, x1 = x0, y0 = h[0].second, y1 = y0;
  for (auto [x, y] : h) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  long c = 0;
  for (long x = x0; x <= x1; ++x)
    for (long y = y0; y <= y1; ++y) {
      bool in = true;
      for (size_t i = 0; i < h.size() && in; ++i)
        if (cross(h[i], h[(i + 1) % h.size()], {x, y}) < 0) in = false;
      c += in;
    }
  return c;
}

// twice the area and the number of boundary points (Pick)
inline std::pair<long, long> area2_boundary(const std::vector<Pt>& p) {
  auto h = hull(p);
  long a2 = 0, b = 0;
  for (size_t i = 0; i < h.size(); ++i) {
    const Pt& u = h[i];
    const Pt& v = h[(i + 1) % h.size()];
    a2 += u.first * v.second - v.first * u.second;
    b += std::gcd(std::labs(v.first - u.first), std::labs(v.second - u.second));
  }
  return {std::labs(a2), b};
}

}  // namespace oracle
