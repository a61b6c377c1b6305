#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "eqehr/errors.hpp"
#include "eqehr/polytope.hpp"
#include "polytope_data.hpp"

namespace eqehr {

const RationalPolytope::Data& LatticePointAccess::data(const RationalPolytope& p) {
  if (!p.data_) throw std::logic_error("use of an empty polytope");
  return *p.data_;
}

namespace {

const RationalPolytope::Data& data_of(const RationalPolytope& p) { return LatticePointAccess::data(p); }

RatVector minus(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

struct FrameFacet {
  RatVector normal;
  BigRational rhs;
  std::vector<std::size_t> tight;
};

// Facets of the hull of full-dimensional points in Q^dim.
std::vector<FrameFacet> full_dimensional_facets(const std::vector<RatVector>& y, std::size_t dim) {
  std::vector<FrameFacet> out;
  if (dim == 0) return out;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> chosen;
  RatMatrix diffs;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == dim) {
      RatMatrix ns = nullspace(diffs, dim);
      if (ns.size() != 1) return;
      RatVector c = ns[0];
      std::vector<BigRational> s(y.size());
      bool below = true, above = true;
      const BigRational s0 = dot(c, y[chosen[0]]);
      for (std::size_t i = 0; i < y.size(); ++i) {
        s[i] = dot(c, y[i]);
        if (s[i] > s0) below = false;
        if (s[i] < s0) above = false;
      }
      if (!below && !above) return;
      BigRational rhs = s0;
      if (!below) {
        for (auto& x : c) x = -x;
        rhs = -rhs;
      }
      std::vector<std::size_t> tight;
      for (std::size_t i = 0; i < y.size(); ++i)
        if (s[i] == s0) tight.push_back(i);
      if (seen.insert(tight).second) out.push_back({std::move(c), rhs, std::move(tight)});
      return;
    }
    for (std::size_t i = start; i < y.size(); ++i) {
      if (chosen.empty()) {
        chosen.push_back(i);
        extend(i + 1);
        chosen.pop_back();
        continue;
      }
      diffs.push_back(minus(y[i], y[chosen[0]]));
      if (rank(diffs, dim) == diffs.size()) {
        chosen.push_back(i);
        extend(i + 1);
        chosen.pop_back();
      }
      diffs.pop_back();
    }
  };
  extend(0);
  return out;
}

LinearConstraint scaled_constraint(const RatVector& normal, const BigRational& rhs) {
  BigIntVector prim = primitive_integer_vector(normal);
  std::size_t k = 0;
  while (k < normal.size() && normal[k] == 0) ++k;
  if (k == normal.size()) throw std::logic_error("zero constraint normal");
  BigRational scale = BigRational(prim[k]) / normal[k];
  return {std::move(prim), rhs * scale};
}

int affine_rank(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx, std::size_t ambient) {
  if (idx.empty()) return -1;
  RatMatrix diffs;
  for (std::size_t i = 1; i < idx.size(); ++i) diffs.push_back(minus(pts[idx[i]], pts[idx[0]]));
  return static_cast<int>(rank(diffs, ambient));
}

}  // namespace

RationalPolytope RationalPolytope::hull(std::size_t ambient_dim, std::vector<RatVector> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of no points");
  for (const auto& p : points)
    if (p.size() != ambient_dim) throw DimensionMismatch("point dimension differs from ambient dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const RatVector& v0 = points[0];
  RatMatrix frame;
  for (std::size_t i = 1; i < points.size(); ++i) {
    frame.push_back(minus(points[i], v0));
    if (rank(frame, ambient_dim) < frame.size()) frame.pop_back();
  }
  const std::size_t dim = frame.size();
  RowEchelon ech = row_echelon(frame, ambient_dim);
  const auto& pivots = ech.pivots;
  RatMatrix s_t(dim, RatVector(dim));  // transpose of frame restricted to pivot coordinates
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) s_t[i][j] = frame[j][pivots[i]];
  RatMatrix to_frame = dim ? *inverse(s_t) : RatMatrix{};
  std::vector<RatVector> y;
  for (const auto& p : points) {
    RatVector local(dim);
    for (std::size_t i = 0; i < dim; ++i) local[i] = p[pivots[i]] - v0[pivots[i]];
    y.push_back(multiply(to_frame, local));
  }
  auto facets = full_dimensional_facets(y, dim);

  std::vector<std::size_t> vertex_ids;
  if (dim == 0) {
    vertex_ids.push_back(0);
  } else {
    for (std::size_t i = 0; i < points.size(); ++i) {
      std::vector<bool> common(points.size(), true);
      bool any = false;
      for (const auto& f : facets) {
        if (!std::binary_search(f.tight.begin(), f.tight.end(), i)) continue;
        any = true;
        std::vector<bool> in(points.size(), false);
        for (auto t : f.tight) in[t] = true;
        for (std::size_t j = 0; j < points.size(); ++j) common[j] = common[j] && in[j];
      }
      if (!any) continue;
      if (std::count(common.begin(), common.end(), true) == 1) vertex_ids.push_back(i);
    }
  }
  std::vector<long> remap(points.size(), -1);
  auto data = std::make_shared<Data>();
  data->ambient = ambient_dim;
  data->dim = static_cast<int>(dim);
  for (auto i : vertex_ids) {
    remap[i] = static_cast<long>(data->vertices.size());
    data->vertices.push_back(points[i]);
  }
  data->origin = v0;

  for (const auto& n : nullspace(frame, ambient_dim)) {
    BigIntVector prim = primitive_integer_vector(n);
    BigRational rhs = dot(prim, v0);
    data->h.equations.push_back({std::move(prim), rhs});
  }
  for (const auto& f : facets) {
    RatVector normal(ambient_dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) normal[pivots[i]] += to_frame[j][i] * f.normal[j];
    BigRational rhs = f.rhs + dot(normal, v0);
    data->h.facets.push_back(scaled_constraint(normal, rhs));
    std::vector<std::size_t> tight;
    for (auto t : f.tight)
      if (remap[t] >= 0) tight.push_back(static_cast<std::size_t>(remap[t]));
    data->h.facet_vertices.push_back(std::move(tight));
  }
  RationalPolytope p;
  p.data_ = std::move(data);
  return p;
}

RationalPolytope RationalPolytope::hull_of_lattice_points(std::size_t ambient_dim, const std::vector<IntVector>& points) {
  std::vector<RatVector> pts;
  for (const auto& p : points) {
    RatVector r;
    for (auto x : p) r.emplace_back(static_cast<long>(x));
    pts.push_back(std::move(r));
  }
  return hull(ambient_dim, std::move(pts));
}

std::size_t RationalPolytope::ambient_dim() const { return data_of(*this).ambient; }
int RationalPolytope::dim() const { return data_of(*this).dim; }
const std::vector<RatVector>& RationalPolytope::vertices() const { return data_of(*this).vertices; }
const HDescription& RationalPolytope::h_description() const { return data_of(*this).h; }

const std::vector<Face>& RationalPolytope::faces() const {
  const Data& d = data_of(*this);
  std::call_once(d.faces_once, [&d] {
    std::set<std::vector<std::size_t>> found;
    std::vector<std::vector<std::size_t>> queue;
    for (const auto& f : d.h.facet_vertices)
      if (found.insert(f).second) queue.push_back(f);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (const auto& f : d.h.facet_vertices) {
        std::vector<std::size_t> meet;
        std::set_intersection(queue[q].begin(), queue[q].end(), f.begin(), f.end(), std::back_inserter(meet));
        if (!meet.empty() && found.insert(meet).second) queue.push_back(std::move(meet));
      }
    }
    std::vector<std::size_t> all(d.vertices.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    found.insert(all);
    std::vector<Face> faces;
    for (const auto& s : found) faces.push_back({s, affine_rank(d.vertices, s, d.ambient)});
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
      if (a.dim != b.dim) return a.dim < b.dim;
      return a.vertices < b.vertices;
    });
    d.faces = std::move(faces);
  });
  return d.faces;
}

bool RationalPolytope::contains(const RatVector& x) const {
  const auto& h = h_description();
  for (const auto& e : h.equations)
    if (dot(e.normal, x) != e.rhs) return false;
  for (const auto& f : h.facets)
    if (dot(f.normal, x) > f.rhs) return false;
  return true;
}

bool RationalPolytope::contains_in_relative_interior(const RatVector& x) const {
  const auto& h = h_description();
  for (const auto& e : h.equations)
    if (dot(e.normal, x) != e.rhs) return false;
  for (const auto& f : h.facets)
    if (dot(f.normal, x) >= f.rhs) return false;
  return true;
}

bool RationalPolytope::is_lattice() const { return denominator() == 1; }

std::vector<IntVector> RationalPolytope::lattice_vertices() const {
  std::vector<IntVector> out;
  for (const auto& v : vertices()) {
    IntVector iv;
    for (const auto& x : v) {
      if (!is_integral(x)) throw NotLattice("polytope has a non-integral vertex");
      iv.push_back(to_int64(x));
    }
    out.push_back(std::move(iv));
  }
  return out;
}

BigInt RationalPolytope::denominator() const {
  BigInt r = 1;
  for (const auto& v : vertices())
    for (const auto& x : v) r = lcm_of(r, x.get_den());
  return r;
}

BigInt RationalPolytope::index() const {
  const Data& d = data_of(*this);
  if (d.h.equations.empty()) return 1;
  BigIntMatrix e;
  RatVector target;
  for (const auto& eq : d.h.equations) {
    e.push_back(eq.normal);
    target.push_back(eq.rhs);
  }
  const BigInt r = denominator();
  for (BigInt m = 1; m <= r; ++m) {
    RatVector scaled = target;
    for (auto& t : scaled) t *= m;
    if (solve_integer(e, scaled, d.ambient)) return m;
  }
  throw std::logic_error("index exceeds denominator");
}

const BigIntMatrix& RationalPolytope::direction_lattice() const {
  const Data& d = data_of(*this);
  std::call_once(d.lattice_once, [&d] {
    if (d.h.equations.empty()) {
      d.lattice.assign(d.ambient, BigIntVector(d.ambient));
      for (std::size_t i = 0; i < d.ambient; ++i) d.lattice[i][i] = 1;
      return;
    }
    BigIntMatrix e;
    for (const auto& eq : d.h.equations) e.push_back(eq.normal);
    d.lattice = integer_kernel(e, d.ambient);
  });
  return d.lattice;
}

bool operator==(const RationalPolytope& a, const RationalPolytope& b) {
  return a.ambient_dim() == b.ambient_dim() && a.vertices() == b.vertices();
}

HDescription facet_description(const RationalPolytope& p) { return p.h_description(); }
const std::vector<Face>& face_poset(const RationalPolytope& p) { return p.faces(); }
BigInt denominator(const RationalPolytope& p) { return p.denominator(); }
BigInt polytope_index(const RationalPolytope& p) { return p.index(); }

std::vector<std::vector<std::size_t>> triangulation(const RationalPolytope& p) {
  const auto& faces = p.faces();
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> tri =
      [&](std::size_t fi) -> const std::vector<std::vector<std::size_t>>& {
    if (auto it = memo.find(fi); it != memo.end()) return it->second;
    const Face& f = faces[fi];
    std::vector<std::vector<std::size_t>> out;
    if (f.dim <= 0) {
      out.push_back({f.vertices.front()});
    } else {
      const std::size_t apex = f.vertices.front();
      for (std::size_t gi = 0; gi < faces.size(); ++gi) {
        const Face& g = faces[gi];
        if (g.dim != f.dim - 1) continue;
        if (std::binary_search(g.vertices.begin(), g.vertices.end(), apex)) continue;
        if (!std::includes(f.vertices.begin(), f.vertices.end(), g.vertices.begin(), g.vertices.end())) continue;
        for (auto s : tri(gi)) {
          s.push_back(apex);
          std::sort(s.begin(), s.end());
          out.push_back(std::move(s));
        }
      }
    }
    return memo.emplace(fi, std::move(out)).first->second;
  };
  return tri(faces.size() - 1);
}

BigRational normalized_volume(const RationalPolytope& p) {
  const int dim = p.dim();
  if (dim == 0) return 1;
  const auto& basis = p.direction_lattice();
  const std::size_t n = p.ambient_dim();
  RatMatrix k;
  for (const auto& row : basis) {
    RatVector r;
    for (const auto& x : row) r.emplace_back(x);
    k.push_back(std::move(r));
  }
  RowEchelon ech = row_echelon(k, n);
  RatMatrix s_t(dim, RatVector(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) s_t[i][j] = k[j][ech.pivots[i]];
  RatMatrix to_lattice = *inverse(s_t);
  const auto& verts = p.vertices();
  std::vector<RatVector> coords;
  for (const auto& v : verts) {
    RatVector local(dim);
    for (int i = 0; i < dim; ++i) local[i] = v[ech.pivots[i]] - verts[0][ech.pivots[i]];
    coords.push_back(multiply(to_lattice, local));
  }
  BigRational total = 0;
  for (const auto& simplex : triangulation(p)) {
    RatMatrix m;
    for (std::size_t i = 1; i < simplex.size(); ++i) m.push_back(minus(coords[simplex[i]], coords[simplex[0]]));
    BigRational det = determinant(m);
    total += det < 0 ? BigRational(-det) : det;
  }
  return total / BigRational(factorial(static_cast<unsigned long>(dim)));
}

BigRational boundary_volume(const RationalPolytope& p) {
  BigRational total = 0;
  for (const auto& f : p.h_description().facet_vertices) {
    std::vector<RatVector> pts;
    for (auto i : f) pts.push_back(p.vertices()[i]);
    total += normalized_volume(RationalPolytope::hull(p.ambient_dim(), std::move(pts)));
  }
  return total;
}

bool is_reflexive(const RationalPolytope& p) {
  if (!p.is_full_dimensional() || !p.is_lattice()) return false;
  for (const auto& f : p.h_description().facets)
    if (f.rhs != 1) return false;
  auto interior = interior_lattice_points(p, 1);
  return interior.size() == 1 && std::all_of(interior[0].begin(), interior[0].end(), [](auto x) { return x == 0; });
}

bool is_reflexive_translate(const RationalPolytope& p) {
  if (!p.is_full_dimensional() || !p.is_lattice()) return false;
  auto interior = interior_lattice_points(p, 1);
  if (interior.size() != 1) return false;
  RatVector shift;
  for (auto x : interior[0]) shift.emplace_back(static_cast<long>(-x));
  return is_reflexive(translate(p, shift));
}

RationalPolytope dilate(const RationalPolytope& p, const BigRational& factor) {
  if (factor < 0) throw std::invalid_argument("negative dilation factor");
  std::vector<RatVector> pts;
  for (auto v : p.vertices()) {
    for (auto& x : v) x *= factor;
    pts.push_back(std::move(v));
  }
  return RationalPolytope::hull(p.ambient_dim(), std::move(pts));
}

RationalPolytope translate(const RationalPolytope& p, const RatVector& shift) {
  if (shift.size() != p.ambient_dim()) throw DimensionMismatch("translation vector has the wrong length");
  std::vector<RatVector> pts;
  for (auto v : p.vertices()) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift[i];
    pts.push_back(std::move(v));
  }
  return RationalPolytope::hull(p.ambient_dim(), std::move(pts));
}

RationalPolytope product(const RationalPolytope& p, const RationalPolytope& q) {
  std::vector<RatVector> pts;
  for (const auto& a : p.vertices())
    for (const auto& b : q.vertices()) {
      RatVector v = a;
      v.insert(v.end(), b.begin(), b.end());
      pts.push_back(std::move(v));
    }
  return RationalPolytope::hull(p.ambient_dim() + q.ambient_dim(), std::move(pts));
}

RationalPolytope free_sum(const RationalPolytope& p, const RationalPolytope& q) {
  if (!p.contains(RatVector(p.ambient_dim())) || !q.contains(RatVector(q.ambient_dim())))
    throw std::invalid_argument("free sum requires both polytopes to contain the origin");
  const std::size_t n = p.ambient_dim() + q.ambient_dim();
  std::vector<RatVector> pts;
  for (const auto& a : p.vertices()) {
    RatVector v = a;
    v.resize(n);
    pts.push_back(std::move(v));
  }
  for (const auto& b : q.vertices()) {
    RatVector v(p.ambient_dim());
    v.insert(v.end(), b.begin(), b.end());
    pts.push_back(std::move(v));
  }
  return RationalPolytope::hull(n, std::move(pts));
}

RationalPolytope pyramid(const RationalPolytope& p) {
  std::vector<RatVector> pts;
  for (auto v : p.vertices()) {
    v.emplace_back(1);
    pts.push_back(std::move(v));
  }
  pts.emplace_back(p.ambient_dim() + 1);
  return RationalPolytope::hull(p.ambient_dim() + 1, std::move(pts));
}

RationalPolytope project_prefix(const RationalPolytope& p, std::size_t k) {
  std::vector<RatVector> pts;
  for (const auto& v : p.vertices()) pts.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k));
  return RationalPolytope::hull(k, std::move(pts));
}

}  // namespace eqehr
