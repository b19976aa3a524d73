#include "mvpoly/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace mvpoly {

namespace {

struct Pt {
  double x, y;
};

// Basis images of two simple coroots with Cartan block [[2,p],[q,2]], drawn
// with their true angle (120 or 135 degrees, or 90 for a rectangle).
std::pair<Pt, Pt> coroot_basis(int p, int q) {
  double d1 = q ? -q : 1, d2 = p ? -p : 1;
  double b11 = 2 / d1, b22 = 2 / d2, b12 = p ? p / d2 : 0;
  double s = std::sqrt(b11);
  return {Pt{s, 0}, Pt{b12 / s, std::sqrt(b22 - b12 * b12 / b11)}};
}

std::string render(std::vector<std::pair<Pt, std::string>> pts, const SvgOptions& o, const std::string& title) {
  // merge coincident vertices
  std::vector<std::pair<Pt, std::string>> uniq;
  for (auto& [p, l] : pts) {
    auto it = std::find_if(uniq.begin(), uniq.end(), [&](auto& u) {
      return std::abs(u.first.x - p.x) < 1e-9 && std::abs(u.first.y - p.y) < 1e-9;
    });
    if (it == uniq.end())
      uniq.push_back({p, l});
    else
      it->second += " " + l;
  }
  double cx = 0, cy = 0;
  for (auto& u : uniq) cx += u.first.x, cy += u.first.y;
  cx /= uniq.size();
  cy /= uniq.size();
  std::sort(uniq.begin(), uniq.end(), [&](auto& a, auto& b) {
    return std::atan2(a.first.y - cy, a.first.x - cx) < std::atan2(b.first.y - cy, b.first.x - cx);
  });
  double minx = 1e18, maxx = -1e18, miny = 1e18, maxy = -1e18;
  for (auto& u : uniq) {
    minx = std::min(minx, u.first.x);
    maxx = std::max(maxx, u.first.x);
    miny = std::min(miny, u.first.y);
    maxy = std::max(maxy, u.first.y);
  }
  const double pad = 60;
  double W = (maxx - minx) * o.unit + 2 * pad, H = (maxy - miny) * o.unit + 2 * pad;
  auto X = [&](double x) { return pad + (x - minx) * o.unit; };
  auto Y = [&](double y) { return pad + (maxy - y) * o.unit; };
  std::ostringstream s;
  char buf[128];
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << static_cast<int>(std::ceil(W)) << "\" height=\""
    << static_cast<int>(std::ceil(H)) << "\">\n";
  s << "<title>" << title << "</title>\n";
  if (uniq.size() == 1) {
    std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"4\" fill=\"black\"/>\n", X(uniq[0].first.x),
                  Y(uniq[0].first.y));
    s << buf;
  } else {
    s << "<polygon fill=\"#e8eef7\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    for (auto& u : uniq) {
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", X(u.first.x), Y(u.first.y));
      s << buf;
    }
    s << "\"/>\n";
  }
  if (o.labels)
    for (auto& u : uniq) {
      std::snprintf(buf, sizeof buf, "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" font-family=\"sans-serif\">",
                    X(u.first.x) + 5, Y(u.first.y) - 5);
      s << buf << u.second << "</text>\n";
    }
  s << "</svg>\n";
  return s.str();
}

std::string elem_label(const RootSystem& rs, ElemId w) {
  const Word& wd = rs.element(w).word;
  if (wd.empty()) return "e";
  std::string l;
  for (int i : wd) l += std::to_string(i);
  return l;
}

}  // namespace

std::string draw_polytope(const BZDatum& M, const SvgOptions& opts) {
  const RootSystem& rs = *M.rs;
  if (rs.rank() != 2) throw InvalidInput("whole-polytope drawing needs rank 2; use a face for higher rank");
  auto mu = vertices(M);
  auto [e1, e2] = coroot_basis(rs.a(1, 2), rs.a(2, 1));
  std::vector<std::pair<Pt, std::string>> pts;
  for (ElemId w = 0; w < static_cast<ElemId>(rs.order()); ++w) {
    double a = static_cast<double>(mu[w].coords[0]), b = static_cast<double>(mu[w].coords[1]);
    pts.push_back({Pt{a * e1.x + b * e2.x, a * e1.y + b * e2.y}, elem_label(rs, w)});
  }
  return render(pts, opts, rs.cartan().label() + " MV polytope");
}

std::string draw_face(const BZDatum& M, ElemId w, int i, int j, const SvgOptions& opts) {
  const RootSystem& rs = *M.rs;
  if (i == j || i < 1 || j < 1 || i > rs.rank() || j > rs.rank()) throw InvalidInput("bad face indices");
  auto mu = vertices(M);
  ElemId winv = rs.inverse(w);
  // the face is w<s_i,s_j>; walk it from w
  std::vector<ElemId> face{w};
  for (std::size_t q = 0; q < face.size(); ++q)
    for (int k : {i, j}) {
      ElemId v = rs.right_mult(face[q], k);
      if (std::find(face.begin(), face.end(), v) == face.end()) face.push_back(v);
    }
  auto [e1, e2] = coroot_basis(rs.a(i, j), rs.a(j, i));
  std::vector<std::pair<Pt, std::string>> pts;
  for (ElemId v : face) {
    Coweight d = rs.act(winv, mu[v] - mu[w]);
    double a = static_cast<double>(d.coords[i - 1]), b = static_cast<double>(d.coords[j - 1]);
    pts.push_back({Pt{a * e1.x + b * e2.x, a * e1.y + b * e2.y}, elem_label(rs, v)});
  }
  return render(pts, opts,
                rs.cartan().label() + " face at " + elem_label(rs, w) + " (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
}

}  // namespace mvpoly
