#include "bigraded/morphism.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace bigraded {

namespace {
int sign_pow(long e) { return (e % 2 + 2) % 2 == 0 ? 1 : -1; }
}  // namespace

ExactMatrix BicomplexMorphism::component(BiDegree d) const {
  auto it = components.find(d);
  if (it != components.end()) return it->second;
  return exact_zero(target.dim(d), source.dim(d));
}

void BicomplexMorphism::set_component(BiDegree d, ExactMatrix m) {
  if (m.rows() != target.dim(d) || m.cols() != source.dim(d))
    throw std::invalid_argument("morphism component shape mismatch at " + to_string(d));
  if (is_zero_matrix(m))
    components.erase(d);
  else
    components[d] = std::move(m);
}

std::vector<std::string> BicomplexMorphism::validate() const {
  std::vector<std::string> bad;
  for (const auto& [d, m] : components) {
    if (m.rows() != target.dim(d) || m.cols() != source.dim(d))
      bad.push_back("component shape mismatch at " + to_string(d));
  }
  if (!bad.empty()) return bad;
  std::set<BiDegree> degs;
  for (BiDegree d : source.bidegrees()) degs.insert(d);
  for (BiDegree d : degs) {
    BiDegree up{d.p, d.q + 1}, right{d.p + 1, d.q};
    if (!is_zero_matrix(
            ExactMatrix(component(right) * source.del(d) - target.del(d) * component(d))))
      bad.push_back("f del != del f at " + to_string(d));
    if (!is_zero_matrix(
            ExactMatrix(component(up) * source.dbar(d) - target.dbar(d) * component(d))))
      bad.push_back("f dbar != dbar f at " + to_string(d));
  }
  return bad;
}

void BicomplexMorphism::assert_valid(const std::string& context) const {
  auto bad = validate();
  if (bad.empty()) return;
  std::ostringstream os;
  os << "invalid morphism";
  if (!context.empty()) os << " (" << context << ")";
  for (const auto& s : bad) os << "; " << s;
  throw std::logic_error(os.str());
}

std::vector<std::string> BicomplexMorphism::validate_real() const {
  std::vector<std::string> bad;
  if (!source.has_real_structure() || !target.has_real_structure()) {
    bad.push_back("real check requires real structures on both sides");
    return bad;
  }
  for (BiDegree d : source.bidegrees()) {
    ExactMatrix lhs = component(d.swapped()) * source.real_structure(d);
    ExactMatrix rhs = target.real_structure(d) * conj(component(d));
    if (!is_zero_matrix(ExactMatrix(lhs - rhs)))
      bad.push_back("f sigma != sigma f at " + to_string(d));
  }
  return bad;
}

bool BicomplexMorphism::is_zero() const {
  for (const auto& [d, m] : components)
    if (!is_zero_matrix(m)) return false;
  return true;
}

BicomplexMorphism identity_morphism(const Bicomplex& a) {
  BicomplexMorphism f{a, a, {}};
  for (BiDegree d : a.bidegrees()) f.set_component(d, exact_identity(a.dim(d)));
  return f;
}

BicomplexMorphism zero_morphism(const Bicomplex& a, const Bicomplex& b) {
  return BicomplexMorphism{a, b, {}};
}

BicomplexMorphism compose(const BicomplexMorphism& g, const BicomplexMorphism& f) {
  BicomplexMorphism h{f.source, g.target, {}};
  for (BiDegree d : f.source.bidegrees())
    h.set_component(d, ExactMatrix(g.component(d) * f.component(d)));
  return h;
}

BicomplexMorphism add(const BicomplexMorphism& f, const BicomplexMorphism& g) {
  BicomplexMorphism h{f.source, f.target, {}};
  std::set<BiDegree> degs;
  for (const auto& [d, m] : f.components) degs.insert(d);
  for (const auto& [d, m] : g.components) degs.insert(d);
  for (BiDegree d : degs) h.set_component(d, ExactMatrix(f.component(d) + g.component(d)));
  return h;
}

BicomplexMorphism scale(const GaussianRational& c, const BicomplexMorphism& f) {
  BicomplexMorphism h{f.source, f.target, {}};
  for (const auto& [d, m] : f.components) h.set_component(d, ExactMatrix(c * m));
  return h;
}

BicomplexMorphism direct_sum(const BicomplexMorphism& f, const BicomplexMorphism& g) {
  BicomplexMorphism h{direct_sum(f.source, g.source), direct_sum(f.target, g.target), {}};
  for (BiDegree d : h.source.bidegrees()) {
    ExactMatrix m = exact_zero(h.target.dim(d), h.source.dim(d));
    ExactMatrix mf = f.component(d), mg = g.component(d);
    if (mf.size() > 0) m.topLeftCorner(mf.rows(), mf.cols()) = mf;
    if (mg.size() > 0) m.bottomRightCorner(mg.rows(), mg.cols()) = mg;
    h.set_component(d, std::move(m));
  }
  return h;
}

BicomplexMorphism tensor(const BicomplexMorphism& f, const BicomplexMorphism& g) {
  BicomplexMorphism h{tensor(f.source, g.source), tensor(f.target, g.target), {}};
  TensorLayout src = tensor_layout(f.source, g.source);
  TensorLayout tgt = tensor_layout(f.target, g.target);
  for (const auto& [d, blocks] : src.blocks) {
    if (!tgt.dims.count(d)) continue;
    ExactMatrix m = exact_zero(tgt.dims.at(d), src.dims.at(d));
    bool nonzero = false;
    for (const auto& sb : blocks) {
      ExactMatrix mf = f.component(sb.left);
      ExactMatrix mg = g.component(sb.right);
      if (mf.size() == 0 || mg.size() == 0) continue;
      if (f.target.dim(sb.left) == 0 || g.target.dim(sb.right) == 0) continue;
      Index toff = tgt.offset_of(d, sb.left);
      Index tr = g.target.dim(sb.right);
      for (Index i = 0; i < mf.rows(); ++i)
        for (Index k = 0; k < mf.cols(); ++k) {
          if (mf(i, k).is_zero()) continue;
          for (Index j = 0; j < mg.rows(); ++j)
            for (Index l = 0; l < mg.cols(); ++l) {
              if (mg(j, l).is_zero()) continue;
              m(toff + i * tr + j, sb.offset + k * sb.right_dim + l) += mf(i, k) * mg(j, l);
              nonzero = true;
            }
        }
    }
    if (nonzero) h.set_component(d, std::move(m));
  }
  return h;
}

BicomplexMorphism double_dual_iso(const Bicomplex& a) {
  BicomplexMorphism f{a, dual(dual(a)), {}};
  for (BiDegree d : a.bidegrees())
    f.set_component(d, ExactMatrix(GaussianRational(sign_pow(d.total())) *
                                   exact_identity(a.dim(d))));
  return f;
}

BicomplexMorphism eval_left(const Bicomplex& b, const Bicomplex& a) {
  Bicomplex db = dual(b);
  Bicomplex ba = tensor(b, a);
  Bicomplex src = tensor(db, ba);
  BicomplexMorphism f{src, a, {}};
  TensorLayout outer = tensor_layout(db, ba);
  TensorLayout inner = tensor_layout(b, a);
  for (const auto& [d, blocks] : outer.blocks) {
    if (a.dim(d) == 0) continue;
    ExactMatrix m = exact_zero(a.dim(d), outer.dims.at(d));
    bool nonzero = false;
    for (const auto& ob : blocks) {
      // ob.left = degree (-r,-s) in dual(b); pairs with the (r,s) block of b⊗a.
      BiDegree r{-ob.left.p, -ob.left.q};
      if (b.dim(r) == 0) continue;
      auto iit = inner.blocks.find(ob.right);
      if (iit == inner.blocks.end()) continue;
      Index ioff = inner.offset_of(ob.right, r);
      Index nb = b.dim(r);
      Index na = a.dim(d);
      // Basis phi_i ⊗ (x_j ⊗ v_l) maps to delta_{ij} v_l.
      for (Index i = 0; i < nb; ++i)
        for (Index l = 0; l < na; ++l) {
          m(l, ob.offset + i * inner.dims.at(ob.right) + (ioff + i * na + l)) +=
              GaussianRational(1);
          nonzero = true;
        }
    }
    if (nonzero) f.set_component(d, std::move(m));
  }
  return f;
}

bool is_isomorphism(const BicomplexMorphism& f) {
  std::set<BiDegree> degs;
  for (BiDegree d : f.source.bidegrees()) degs.insert(d);
  for (BiDegree d : f.target.bidegrees()) degs.insert(d);
  for (BiDegree d : degs) {
    if (f.source.dim(d) != f.target.dim(d)) return false;
    ExactMatrix m = f.component(d);
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

}  // namespace bigraded
