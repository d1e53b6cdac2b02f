#include "bigraded/bicomplex.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bigraded {

namespace {
std::atomic<bool> g_validation_enabled{true};
std::atomic<long> g_validation_count{0};

int sign_pow(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }
}  // namespace

void set_validation_enabled(bool enabled) { g_validation_enabled = enabled; }
bool validation_enabled() { return g_validation_enabled; }
long validation_count() { return g_validation_count; }

ExactMatrix Bicomplex::component(const std::map<BiDegree, ExactMatrix>& table, BiDegree d,
                                 BiDegree shift) const {
  auto it = table.find(d);
  if (it != table.end()) return it->second;
  return exact_zero(dim(d + shift), dim(d));
}

ExactMatrix Bicomplex::real_structure(BiDegree d) const {
  if (!real_) throw std::logic_error("bicomplex has no real structure");
  auto it = real_->find(d);
  if (it != real_->end()) return it->second;
  return exact_zero(dim(d.swapped()), dim(d));
}

void Bicomplex::set_space(BiDegree d, Index n) {
  if (n < 0) throw std::invalid_argument("negative dimension at " + to_string(d));
  if (n == 0)
    dims_.erase(d);
  else
    dims_[d] = n;
}

void Bicomplex::set_del(BiDegree d, ExactMatrix m) {
  if (m.rows() != dim(d + BiDegree{1, 0}) || m.cols() != dim(d))
    throw std::invalid_argument("del shape mismatch at " + to_string(d));
  if (is_zero_matrix(m))
    del_.erase(d);
  else
    del_[d] = std::move(m);
}

void Bicomplex::set_dbar(BiDegree d, ExactMatrix m) {
  if (m.rows() != dim(d + BiDegree{0, 1}) || m.cols() != dim(d))
    throw std::invalid_argument("dbar shape mismatch at " + to_string(d));
  if (is_zero_matrix(m))
    dbar_.erase(d);
  else
    dbar_[d] = std::move(m);
}

void Bicomplex::set_real_structure(BiDegree d, ExactMatrix m) {
  if (m.rows() != dim(d.swapped()) || m.cols() != dim(d))
    throw std::invalid_argument("real structure shape mismatch at " + to_string(d));
  if (!real_) real_.emplace();
  (*real_)[d] = std::move(m);
}

std::vector<BiDegree> Bicomplex::bidegrees() const {
  std::vector<BiDegree> out;
  out.reserve(dims_.size());
  for (const auto& [d, n] : dims_) out.push_back(d);
  return out;
}

Index Bicomplex::total_dimension() const {
  Index n = 0;
  for (const auto& [d, k] : dims_) n += k;
  return n;
}

int Bicomplex::min_total_degree() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& [d, n] : dims_) m = std::min(m, d.total());
  return dims_.empty() ? 0 : m;
}

int Bicomplex::max_total_degree() const {
  int m = std::numeric_limits<int>::min();
  for (const auto& [d, n] : dims_) m = std::max(m, d.total());
  return dims_.empty() ? 0 : m;
}

std::vector<std::string> Bicomplex::validate() const {
  ++g_validation_count;
  std::vector<std::string> bad;
  auto check_zero = [&bad](const ExactMatrix& m, const std::string& what, BiDegree d) {
    if (!is_zero_matrix(m)) bad.push_back(what + " violated at " + to_string(d));
  };
  for (const auto& [d, m] : del_) {
    if (m.rows() != dim(d + BiDegree{1, 0}) || m.cols() != dim(d))
      bad.push_back("del shape mismatch at " + to_string(d));
  }
  for (const auto& [d, m] : dbar_) {
    if (m.rows() != dim(d + BiDegree{0, 1}) || m.cols() != dim(d))
      bad.push_back("dbar shape mismatch at " + to_string(d));
  }
  if (!bad.empty()) return bad;
  for (const auto& [d, n] : dims_) {
    check_zero(del({d.p + 1, d.q}) * del(d), "del∘del = 0", d);
    check_zero(dbar({d.p, d.q + 1}) * dbar(d), "dbar∘dbar = 0", d);
    ExactMatrix anti = del({d.p, d.q + 1}) * dbar(d) + dbar({d.p + 1, d.q}) * del(d);
    check_zero(anti, "del∘dbar + dbar∘del = 0", d);
  }
  if (real_) {
    for (const auto& [d, n] : dims_) {
      ExactMatrix s = real_structure(d);
      if (s.rows() != dim(d.swapped()) || s.cols() != n) {
        bad.push_back("real structure shape mismatch at " + to_string(d));
        continue;
      }
      ExactMatrix invol = real_structure(d.swapped()) * conj(s) - exact_identity(n);
      check_zero(invol, "sigma involution", d);
      ExactMatrix inter =
          real_structure({d.p + 1, d.q}) * conj(del(d)) - dbar(d.swapped()) * s;
      check_zero(inter, "sigma del sigma = dbar", d);
    }
  }
  return bad;
}

void Bicomplex::assert_valid(const std::string& context) const {
  auto bad = validate();
  if (bad.empty()) return;
  std::ostringstream os;
  os << "invalid bicomplex";
  if (!context.empty()) os << " (" << context << ")";
  for (const auto& s : bad) os << "; " << s;
  throw std::logic_error(os.str());
}

bool operator==(const Bicomplex& a, const Bicomplex& b) {
  if (a.dims_ != b.dims_) return false;
  for (const auto& [d, n] : a.dims_) {
    if (a.del(d) != b.del(d) || a.dbar(d) != b.dbar(d)) return false;
  }
  if (a.real_.has_value() != b.real_.has_value()) return false;
  if (a.real_) {
    for (const auto& [d, n] : a.dims_)
      if (a.real_structure(d) != b.real_structure(d)) return false;
  }
  return true;
}

namespace {
void maybe_validate(const Bicomplex& b, const char* context) {
  if (validation_enabled()) b.assert_valid(context);
}
}  // namespace

// ---------------------------------------------------------------------------
// IndecompSpec

IndecompSpec IndecompSpec::square(BiDegree anchor) {
  IndecompSpec s;
  s.kind = Kind::Square;
  s.anchor = anchor;
  return s;
}

IndecompSpec IndecompSpec::dot(BiDegree at) { return zigzag({at}, {}); }

IndecompSpec IndecompSpec::line(BiDegree at, bool horizontal) {
  BiDegree to = horizontal ? BiDegree{at.p + 1, at.q} : BiDegree{at.p, at.q + 1};
  return zigzag({at, to}, {{at, to}});
}

IndecompSpec IndecompSpec::l_corner(BiDegree c) {
  BiDegree r{c.p + 1, c.q}, u{c.p, c.q + 1};
  return zigzag({c, r, u}, {{c, r}, {c, u}});
}

IndecompSpec IndecompSpec::reverse_l_corner(BiDegree c) {
  BiDegree l{c.p - 1, c.q}, d{c.p, c.q - 1};
  return zigzag({l, d, c}, {{l, c}, {d, c}});
}

IndecompSpec IndecompSpec::zigzag(std::vector<BiDegree> vertices,
                                  std::vector<std::pair<BiDegree, BiDegree>> edges) {
  IndecompSpec s;
  s.kind = Kind::Zigzag;
  s.vertices = std::move(vertices);
  s.edges = std::move(edges);
  s.canonicalize();
  auto bad = s.validate();
  if (!bad.empty()) throw std::invalid_argument("malformed zigzag spec: " + bad.front());
  return s;
}

IndecompSpec IndecompSpec::l_power_zigzag(int n) {
  if (n == 0) return dot({0, 0});
  std::vector<BiDegree> verts;
  std::vector<std::pair<BiDegree, BiDegree>> edges;
  int m = n > 0 ? n : -n;
  if (n > 0) {
    // Sources at total degree -(m+1), sinks at -m, running from (0,-m) to (-m,0).
    for (int j = 0; j <= m; ++j) verts.push_back({-j, -m + j});
    for (int j = 0; j < m; ++j) {
      BiDegree src{-j - 1, -m + j};
      verts.push_back(src);
      edges.push_back({src, BiDegree{-j, -m + j}});
      edges.push_back({src, BiDegree{-j - 1, -m + j + 1}});
    }
  } else {
    // Sources at total degree m, sinks at m+1, running from (0,m) to (m,0).
    for (int j = 0; j <= m; ++j) verts.push_back({j, m - j});
    for (int j = 0; j < m; ++j) {
      BiDegree sink{j + 1, m - j};
      verts.push_back(sink);
      edges.push_back({BiDegree{j, m - j}, sink});
      edges.push_back({BiDegree{j + 1, m - j - 1}, sink});
    }
  }
  return zigzag(std::move(verts), std::move(edges));
}

void IndecompSpec::canonicalize() {
  if (kind == Kind::Square) {
    vertices.clear();
    edges.clear();
    return;
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<std::string> IndecompSpec::validate() const {
  std::vector<std::string> bad;
  if (kind == Kind::Square) return bad;
  if (vertices.empty()) {
    bad.push_back("zigzag with no vertices");
    return bad;
  }
  std::set<BiDegree> vset(vertices.begin(), vertices.end());
  std::set<int> totals;
  for (BiDegree v : vertices) totals.insert(v.total());
  if (totals.size() > 2) bad.push_back("zigzag spans more than two total degrees");
  std::map<BiDegree, int> degree;
  for (const auto& [from, to] : edges) {
    BiDegree step = to - from;
    if (!(step == BiDegree{1, 0} || step == BiDegree{0, 1}))
      bad.push_back("edge is not a unit differential step at " + to_string(from));
    if (!vset.count(from) || !vset.count(to)) bad.push_back("edge endpoint not a vertex");
    ++degree[from];
    ++degree[to];
  }
  if (!bad.empty()) return bad;
  if (edges.size() + 1 != vertices.size()) {
    bad.push_back("support graph is not a path (wrong edge count)");
    return bad;
  }
  int endpoints = 0;
  for (BiDegree v : vertices) {
    int d = degree.count(v) ? degree[v] : 0;
    if (vertices.size() > 1 && d == 0) bad.push_back("isolated vertex " + to_string(v));
    if (d > 2) bad.push_back("vertex of degree > 2 at " + to_string(v));
    if (d == 1) ++endpoints;
  }
  if (vertices.size() > 1 && endpoints != 2) bad.push_back("support graph is not a path");
  // Connectivity: walk from an endpoint.
  if (bad.empty() && vertices.size() > 1) {
    std::map<BiDegree, std::vector<BiDegree>> adj;
    for (const auto& [f, t] : edges) {
      adj[f].push_back(t);
      adj[t].push_back(f);
    }
    std::set<BiDegree> seen;
    std::vector<BiDegree> stack{vertices.front()};
    while (!stack.empty()) {
      BiDegree v = stack.back();
      stack.pop_back();
      if (!seen.insert(v).second) continue;
      for (BiDegree w : adj[v]) stack.push_back(w);
    }
    if (seen.size() != vertices.size()) bad.push_back("support graph is disconnected");
  }
  return bad;
}

std::string IndecompSpec::describe() const {
  if (kind == Kind::Square) return "square" + to_string(anchor);
  if (vertices.size() == 1) return "dot" + to_string(vertices.front());
  std::string s = "zigzag[";
  for (size_t i = 0; i < vertices.size(); ++i) {
    if (i) s += ",";
    s += to_string(vertices[i]);
  }
  return s + "]";
}

Bicomplex build_indecomposable(const IndecompSpec& spec) {
  auto bad = spec.validate();
  if (!bad.empty()) throw std::invalid_argument("malformed spec: " + bad.front());
  Bicomplex b;
  if (spec.kind == IndecompSpec::Kind::Square) {
    BiDegree a = spec.anchor;
    for (BiDegree d : {a, a + BiDegree{1, 0}, a + BiDegree{0, 1}, a + BiDegree{1, 1}})
      b.set_space(d, 1);
    ExactMatrix one = exact_identity(1);
    b.set_del(a, one);
    b.set_del(a + BiDegree{0, 1}, one);
    b.set_dbar(a, one);
    b.set_dbar(a + BiDegree{1, 0}, ExactMatrix(-one));
  } else {
    for (BiDegree v : spec.vertices) b.set_space(v, 1);
    for (const auto& [from, to] : spec.edges) {
      if (to - from == BiDegree{1, 0})
        b.set_del(from, exact_identity(1));
      else
        b.set_dbar(from, exact_identity(1));
    }
  }
  maybe_validate(b, "build_indecomposable");
  return b;
}

Bicomplex standard_l() { return build_indecomposable(IndecompSpec::l_corner({-1, -1})); }
Bicomplex standard_reverse_l() {
  return build_indecomposable(IndecompSpec::reverse_l_corner({1, 1}));
}
Bicomplex dot_complex(BiDegree at) { return build_indecomposable(IndecompSpec::dot(at)); }
Bicomplex square_complex(BiDegree anchor) {
  return build_indecomposable(IndecompSpec::square(anchor));
}

// ---------------------------------------------------------------------------
// Functorial operations

Bicomplex shift(const Bicomplex& a, int r, int s) {
  Bicomplex b;
  GaussianRational sign(sign_pow(r + s));
  for (BiDegree d : a.bidegrees()) b.set_space(d + BiDegree{r, s}, a.dim(d));
  for (BiDegree d : a.bidegrees()) {
    b.set_del(d + BiDegree{r, s}, ExactMatrix(sign * a.del(d)));
    b.set_dbar(d + BiDegree{r, s}, ExactMatrix(sign * a.dbar(d)));
  }
  if (a.has_real_structure() && r == s) {
    for (BiDegree d : a.bidegrees())
      b.set_real_structure(d + BiDegree{r, s}, a.real_structure(d));
  }
  maybe_validate(b, "shift");
  return b;
}

Bicomplex dual(const Bicomplex& a) {
  Bicomplex b;
  for (BiDegree d : a.bidegrees()) b.set_space({-d.p, -d.q}, a.dim(d));
  for (BiDegree d : a.bidegrees()) {
    BiDegree dd{-d.p, -d.q};
    // (d phi)(x) = -(-1)^{|phi|} phi(dx): the component of del at dd is the
    // signed transpose of del into position -dd.
    GaussianRational sign(-sign_pow(dd.total()));
    ExactMatrix del_in = a.del({d.p - 1, d.q});  // A^{-p-1,-q} -> A^{-p,-q}
    if (del_in.size() > 0 && a.dim({d.p - 1, d.q}) > 0)
      b.set_del(dd, ExactMatrix(sign * del_in.transpose()));
    ExactMatrix dbar_in = a.dbar({d.p, d.q - 1});
    if (dbar_in.size() > 0 && a.dim({d.p, d.q - 1}) > 0)
      b.set_dbar(dd, ExactMatrix(sign * dbar_in.transpose()));
  }
  maybe_validate(b, "dual");
  return b;
}

Bicomplex conjugate(const Bicomplex& a) {
  Bicomplex b;
  for (BiDegree d : a.bidegrees()) b.set_space(d.swapped(), a.dim(d));
  for (BiDegree d : a.bidegrees()) {
    b.set_del(d.swapped(), conj(a.dbar(d)));
    b.set_dbar(d.swapped(), conj(a.del(d)));
  }
  if (a.has_real_structure()) {
    for (BiDegree d : a.bidegrees()) b.set_real_structure(d.swapped(), a.real_structure(d));
  }
  maybe_validate(b, "conjugate");
  return b;
}

std::vector<std::string> check_real_structure(const Bicomplex& a) {
  if (!a.has_real_structure()) return {"no real structure present"};
  std::vector<std::string> bad;
  for (BiDegree d : a.bidegrees()) {
    ExactMatrix s = a.real_structure(d);
    if (s.rows() != a.dim(d.swapped()) || s.cols() != a.dim(d)) {
      bad.push_back("shape mismatch at " + to_string(d));
      continue;
    }
    if (!is_zero_matrix(ExactMatrix(a.real_structure(d.swapped()) * conj(s) -
                                    exact_identity(a.dim(d)))))
      bad.push_back("involution identity fails at " + to_string(d));
    if (!is_zero_matrix(ExactMatrix(a.real_structure({d.p + 1, d.q}) * conj(a.del(d)) -
                                    a.dbar(d.swapped()) * s)))
      bad.push_back("sigma del sigma = dbar fails at " + to_string(d));
  }
  return bad;
}

Bicomplex direct_sum(const Bicomplex& a, const Bicomplex& b) {
  Bicomplex c;
  std::set<BiDegree> degs;
  for (BiDegree d : a.bidegrees()) degs.insert(d);
  for (BiDegree d : b.bidegrees()) degs.insert(d);
  for (BiDegree d : degs) c.set_space(d, a.dim(d) + b.dim(d));
  auto block = [&](const ExactMatrix& ma, const ExactMatrix& mb) {
    ExactMatrix m = exact_zero(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    if (ma.size() > 0) m.topLeftCorner(ma.rows(), ma.cols()) = ma;
    if (mb.size() > 0) m.bottomRightCorner(mb.rows(), mb.cols()) = mb;
    return m;
  };
  for (BiDegree d : degs) {
    c.set_del(d, block(a.del(d), b.del(d)));
    c.set_dbar(d, block(a.dbar(d), b.dbar(d)));
  }
  if (a.has_real_structure() && b.has_real_structure()) {
    for (BiDegree d : degs) c.set_real_structure(d, block(a.real_structure(d), b.real_structure(d)));
  }
  maybe_validate(c, "direct_sum");
  return c;
}

Index TensorLayout::offset_of(BiDegree product_deg, BiDegree left_deg) const {
  auto it = blocks.find(product_deg);
  if (it == blocks.end()) throw std::logic_error("tensor layout: missing bidegree");
  for (const auto& blk : it->second)
    if (blk.left == left_deg) return blk.offset;
  throw std::logic_error("tensor layout: missing block");
}

TensorLayout tensor_layout(const Bicomplex& a, const Bicomplex& b) {
  TensorLayout layout;
  for (BiDegree da : a.bidegrees()) {
    for (BiDegree db : b.bidegrees()) {
      BiDegree d = da + db;
      auto& vec = layout.blocks[d];
      vec.push_back({da, db, 0, a.dim(da), b.dim(db)});
    }
  }
  for (auto& [d, vec] : layout.blocks) {
    std::sort(vec.begin(), vec.end(),
              [](const auto& x, const auto& y) { return x.left < y.left; });
    Index off = 0;
    for (auto& blk : vec) {
      blk.offset = off;
      off += blk.left_dim * blk.right_dim;
    }
    layout.dims[d] = off;
  }
  return layout;
}

Bicomplex tensor(const Bicomplex& a, const Bicomplex& b) {
  TensorLayout layout = tensor_layout(a, b);
  Bicomplex c;
  for (const auto& [d, n] : layout.dims) c.set_space(d, n);

  // One differential direction at a time; step is (1,0) for del, (0,1) for dbar.
  auto assemble = [&](bool is_del) {
    BiDegree step = is_del ? BiDegree{1, 0} : BiDegree{0, 1};
    for (const auto& [d, src_blocks] : layout.blocks) {
      BiDegree td = d + step;
      auto tit = layout.blocks.find(td);
      if (tit == layout.blocks.end()) continue;
      ExactMatrix m = exact_zero(layout.dims.at(td), layout.dims.at(d));
      bool nonzero = false;
      for (const auto& sb : src_blocks) {
        // d_A ⊗ id_B : block (r,s) -> block (r,s)+step.
        ExactMatrix da = is_del ? a.del(sb.left) : a.dbar(sb.left);
        if (da.size() > 0 && a.dim(sb.left + step) > 0 && !is_zero_matrix(da)) {
          Index toff = layout.offset_of(td, sb.left + step);
          for (Index i = 0; i < da.rows(); ++i)
            for (Index k = 0; k < da.cols(); ++k) {
              if (da(i, k).is_zero()) continue;
              for (Index j = 0; j < sb.right_dim; ++j)
                m(toff + i * sb.right_dim + j, sb.offset + k * sb.right_dim + j) += da(i, k);
              nonzero = true;
            }
        }
        // (-1)^{|a|} id_A ⊗ d_B : block unchanged on the left.
        ExactMatrix db = is_del ? b.del(sb.right) : b.dbar(sb.right);
        if (db.size() > 0 && b.dim(sb.right + step) > 0 && !is_zero_matrix(db)) {
          GaussianRational sign(sign_pow(sb.left.total()));
          Index toff = layout.offset_of(td, sb.left);
          Index tr = b.dim(sb.right + step);
          for (Index i = 0; i < sb.left_dim; ++i)
            for (Index j = 0; j < db.rows(); ++j)
              for (Index k = 0; k < db.cols(); ++k) {
                if (db(j, k).is_zero()) continue;
                m(toff + i * tr + j, sb.offset + i * sb.right_dim + k) += sign * db(j, k);
                nonzero = true;
              }
        }
      }
      if (!nonzero) continue;
      if (is_del)
        c.set_del(d, std::move(m));
      else
        c.set_dbar(d, std::move(m));
    }
  };
  assemble(true);
  assemble(false);
  maybe_validate(c, "tensor");
  return c;
}

Index HomLayout::offset_of(BiDegree hom_deg, BiDegree source_deg) const {
  auto it = blocks.find(hom_deg);
  if (it == blocks.end()) throw std::logic_error("hom layout: missing bidegree");
  for (const auto& blk : it->second)
    if (blk.source_deg == source_deg) return blk.offset;
  throw std::logic_error("hom layout: missing block");
}

HomLayout hom_layout(const Bicomplex& a, const Bicomplex& b) {
  HomLayout layout;
  for (BiDegree da : a.bidegrees()) {
    for (BiDegree db : b.bidegrees()) {
      BiDegree d = db - da;
      layout.blocks[d].push_back({da, db, 0, a.dim(da), b.dim(db)});
    }
  }
  for (auto& [d, vec] : layout.blocks) {
    std::sort(vec.begin(), vec.end(),
              [](const auto& x, const auto& y) { return x.source_deg < y.source_deg; });
    Index off = 0;
    for (auto& blk : vec) {
      blk.offset = off;
      off += blk.source_dim * blk.target_dim;
    }
    layout.dims[d] = off;
  }
  return layout;
}

Bicomplex hom_complex(const Bicomplex& a, const Bicomplex& b) {
  HomLayout layout = hom_layout(a, b);
  Bicomplex c;
  for (const auto& [d, n] : layout.dims) c.set_space(d, n);

  // Column-major vectorization: phi block M (target_dim x source_dim) has
  // vec index l*target_dim + k for entry (k, l).
  auto assemble = [&](bool is_del) {
    BiDegree step = is_del ? BiDegree{1, 0} : BiDegree{0, 1};
    for (const auto& [d, src_blocks] : layout.blocks) {
      BiDegree td = d + step;
      auto tit = layout.blocks.find(td);
      if (tit == layout.blocks.end()) continue;
      ExactMatrix m = exact_zero(layout.dims.at(td), layout.dims.at(d));
      bool nonzero = false;
      GaussianRational sign(-sign_pow(d.total()));  // -(-1)^{|phi|}
      for (const auto& sb : src_blocks) {
        // d_B ∘ phi : block (r,s) -> same (r,s), target degree shifted.
        ExactMatrix dbm = is_del ? b.del(sb.target_deg) : b.dbar(sb.target_deg);
        if (dbm.size() > 0 && b.dim(sb.target_deg + step) > 0 && !is_zero_matrix(dbm)) {
          Index toff = layout.offset_of(td, sb.source_deg);
          Index tr = b.dim(sb.target_deg + step);
          for (Index l = 0; l < sb.source_dim; ++l)
            for (Index j = 0; j < dbm.rows(); ++j)
              for (Index k = 0; k < dbm.cols(); ++k) {
                if (dbm(j, k).is_zero()) continue;
                m(toff + l * tr + j, sb.offset + l * sb.target_dim + k) += dbm(j, k);
                nonzero = true;
              }
        }
        // -(-1)^{|phi|} phi ∘ d_A : block (r,s) -> block (r,s)-step.
        BiDegree lower = sb.source_deg - step;
        ExactMatrix dam = is_del ? a.del(lower) : a.dbar(lower);
        if (a.dim(lower) > 0 && dam.size() > 0 && !is_zero_matrix(dam)) {
          Index toff = layout.offset_of(td, lower);
          for (Index k = 0; k < sb.target_dim; ++k)
            for (Index l = 0; l < dam.rows(); ++l)       // source column of phi
              for (Index l2 = 0; l2 < dam.cols(); ++l2)  // column in A^{lower}
              {
                if (dam(l, l2).is_zero()) continue;
                m(toff + l2 * sb.target_dim + k, sb.offset + l * sb.target_dim + k) +=
                    sign * dam(l, l2);
                nonzero = true;
              }
        }
      }
      if (!nonzero) continue;
      if (is_del)
        c.set_del(d, std::move(m));
      else
        c.set_dbar(d, std::move(m));
    }
  };
  assemble(true);
  assemble(false);
  maybe_validate(c, "hom_complex");
  return c;
}

Truncation truncate(const Bicomplex& a, int k) {
  Truncation t;
  for (BiDegree d : a.bidegrees()) {
    int j = d.total();
    ExactMatrix incl;
    if (j > k + 1) {
      continue;
    } else if (j == k + 1) {
      incl = intersect_subspaces(kernel_basis(a.del(d)), kernel_basis(a.dbar(d)));
    } else if (j == k) {
      incl = kernel_basis(a.deldbar(d));
    } else {
      incl = exact_identity(a.dim(d));
    }
    if (incl.cols() == 0) continue;
    t.complex.set_space(d, incl.cols());
    t.inclusion[d] = incl;
  }
  for (const auto& [d, incl] : t.inclusion) {
    auto restrict_map = [&](const ExactMatrix& full, BiDegree target) {
      auto it = t.inclusion.find(target);
      if (it == t.inclusion.end()) {
        if (!is_zero_matrix(ExactMatrix(full * incl)))
          throw std::logic_error("truncate: image escapes the subcomplex at " + to_string(d));
        return exact_zero(0, incl.cols());
      }
      auto coords = solve(it->second, ExactMatrix(full * incl));
      if (!coords) throw std::logic_error("truncate: not a subcomplex at " + to_string(d));
      return *coords;
    };
    t.complex.set_del(d, restrict_map(a.del(d), d + BiDegree{1, 0}));
    t.complex.set_dbar(d, restrict_map(a.dbar(d), d + BiDegree{0, 1}));
  }
  maybe_validate(t.complex, "truncate");
  return t;
}

std::ostream& operator<<(std::ostream& os, BiDegree d) { return os << to_string(d); }

}  // namespace bigraded
