#pragma once

#include "module.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gendobocs {

// ====== Bimodules ======
//
// Row-vector conventions throughout: rightAct[j] is the matrix of w -> w * b_j,
// so rightAct is multiplicative; leftAct[i] is the matrix of w -> b_i * w, so
// matrix composition reverses the algebra product (leftAct[i] * leftAct[j]
// realizes w -> b_j * b_i * w), exactly as Algebra::leftMul does.

struct Bimodule {
  Algebra left;
  Algebra right;
  std::size_t dim = 0;
  std::vector<Mat> leftAct;
  std::vector<Mat> rightAct;
  std::string name;

  [[nodiscard]] Mat leftActionOf(const Vec& a) const {
    Mat m(dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) m = m + leftAct[i].scaled(a[i]);
    return m;
  }
  [[nodiscard]] Mat rightActionOf(const Vec& a) const {
    Mat m(dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) m = m + rightAct[i].scaled(a[i]);
    return m;
  }
  [[nodiscard]] bool zero() const { return dim == 0; }
};

[[nodiscard]] inline Bimodule makeBimodule(Algebra left, Algebra right, std::vector<Mat> leftAct,
                                           std::vector<Mat> rightAct, std::string name = "") {
  Bimodule w;
  w.left = std::move(left);
  w.right = std::move(right);
  w.leftAct = std::move(leftAct);
  w.rightAct = std::move(rightAct);
  w.name = std::move(name);
  if (w.leftAct.size() != w.left.dim() || w.rightAct.size() != w.right.dim())
    throw std::invalid_argument("makeBimodule: one action matrix per basis vector required");
  w.dim = w.leftAct.empty() ? (w.rightAct.empty() ? 0 : w.rightAct.front().rows())
                            : w.leftAct.front().rows();
  for (const Mat& x : w.leftAct)
    if (x.rows() != w.dim || x.cols() != w.dim)
      throw std::invalid_argument("makeBimodule: left action matrices must be square");
  for (const Mat& x : w.rightAct)
    if (x.rows() != w.dim || x.cols() != w.dim)
      throw std::invalid_argument("makeBimodule: right action matrices must be square");
  return w;
}

/// Verifies the bimodule axioms: units act as identity, the left action is
/// anti-multiplicative in matrix order, the right action is multiplicative,
/// and the two actions commute.
[[nodiscard]] inline PresentationReport checkBimodule(const Bimodule& w) {
  PresentationReport rep;
  if (!w.leftActionOf(w.left.unit()).isIdentity())
    detail::reportFailure(rep, "left unit does not act as the identity");
  if (!w.rightActionOf(w.right.unit()).isIdentity())
    detail::reportFailure(rep, "right unit does not act as the identity");
  const std::size_t nl = w.left.dim();
  const std::size_t nr = w.right.dim();
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j) {
      const Vec prod = w.left.mul(w.left.basisVec(i), w.left.basisVec(j));
      if (w.leftAct[j] * w.leftAct[i] != w.leftActionOf(prod))
        detail::reportFailure(rep, "left action fails on basis pair (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nr; ++j) {
      const Vec prod = w.right.mul(w.right.basisVec(i), w.right.basisVec(j));
      if (w.rightAct[i] * w.rightAct[j] != w.rightActionOf(prod))
        detail::reportFailure(rep, "right action fails on basis pair (" + std::to_string(i) +
                                       ", " + std::to_string(j) + ")");
    }
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nr; ++j)
      if (w.leftAct[i] * w.rightAct[j] != w.rightAct[j] * w.leftAct[i])
        detail::reportFailure(rep, "left and right actions fail to commute at (" +
                                       std::to_string(i) + ", " + std::to_string(j) + ")");
  return rep;
}

/// The algebra as a bimodule over itself.
[[nodiscard]] inline Bimodule regularBimodule(const Algebra& a) {
  std::vector<Mat> l, r;
  l.reserve(a.dim());
  r.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    l.push_back(a.leftMulBasis(i));
    r.push_back(a.rightMulBasis(i));
  }
  return makeBimodule(a, a, std::move(l), std::move(r), "A");
}

/// Linear dual with the sides swapped: an (L, R)-bimodule dualizes to an
/// (R, L)-bimodule via (r . f . l)(w) = f(l . w . r). The double dual is the
/// original bimodule on the nose (same matrices, same algebra handles).
[[nodiscard]] inline Bimodule dualBimodule(const Bimodule& w) {
  std::vector<Mat> l, r;
  l.reserve(w.rightAct.size());
  r.reserve(w.leftAct.size());
  for (const Mat& x : w.rightAct) l.push_back(x.transpose());
  for (const Mat& x : w.leftAct) r.push_back(x.transpose());
  std::string name;
  if (w.name.size() > 3 && w.name.starts_with("D(") && w.name.back() == ')')
    name = w.name.substr(2, w.name.size() - 3);
  else if (!w.name.empty())
    name = "D(" + w.name + ")";
  return makeBimodule(w.right, w.left, std::move(l), std::move(r), std::move(name));
}

/// Forgets the left action.
[[nodiscard]] inline RightModule asRightModule(const Bimodule& w) {
  return makeModule(w.right, w.rightAct, w.name);
}

/// The left action viewed as a right module over the opposite algebra.
[[nodiscard]] inline RightModule leftAsRightModule(const Bimodule& w) {
  return makeModule(w.left.opposite(), w.leftAct, w.name);
}

/// The bimodule as a right module over left^op (x) right, basis index
/// (i, j) -> i * dim(right) + j, matching tensorAlgebras. Callers comparing
/// several bimodules must pass one shared enveloping algebra handle.
[[nodiscard]] inline RightModule envelopingModule(const Bimodule& w, const Algebra& env) {
  if (env.dim() != w.left.dim() * w.right.dim())
    throw std::invalid_argument("envelopingModule: enveloping algebra dimension mismatch");
  std::vector<Mat> act;
  act.reserve(env.dim());
  for (std::size_t i = 0; i < w.left.dim(); ++i)
    for (std::size_t j = 0; j < w.right.dim(); ++j) act.push_back(w.leftAct[i] * w.rightAct[j]);
  return makeModule(env, std::move(act), w.name);
}

[[nodiscard]] inline RightModule envelopingModule(const Bimodule& w) {
  return envelopingModule(w, tensorAlgebras(w.left.opposite(), w.right));
}

// ====== Bimodule homomorphisms ======

/// Canonical basis of the space of maps f with f(l . w . r) = l . f(w) . r.
/// Intertwining generators of both algebras suffices: the constraint set is
/// closed under products and linear combinations.
[[nodiscard]] inline std::vector<Mat> bimoduleHomSpace(const Bimodule& x, const Bimodule& y) {
  if (!x.left.sameAs(y.left) || !x.right.sameAs(y.right))
    throw std::invalid_argument("bimoduleHomSpace: algebra mismatch");
  const std::size_t w = x.dim * y.dim;
  if (w == 0) return {};
  std::vector<std::pair<Mat, Mat>> pairs;
  for (std::size_t g : x.left.generatorIndices()) pairs.emplace_back(x.leftAct[g], y.leftAct[g]);
  for (std::size_t g : x.right.generatorIndices())
    pairs.emplace_back(x.rightAct[g], y.rightAct[g]);
  Mat constraint(w, pairs.size() * w);
  for (std::size_t r = 0; r < x.dim; ++r)
    for (std::size_t c = 0; c < y.dim; ++c) {
      const std::size_t k = r * y.dim + c;
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        const Mat& gx = pairs[p].first;
        const Mat& gy = pairs[p].second;
        // Residual of gx * E_{rc} - E_{rc} * gy, stacked per constraint pair.
        for (std::size_t i = 0; i < x.dim; ++i)
          constraint.at(k, p * w + i * y.dim + c) += gx.at(i, r);
        for (std::size_t j = 0; j < y.dim; ++j)
          constraint.at(k, p * w + r * y.dim + j) -= gy.at(c, j);
      }
    }
  std::vector<Mat> out;
  const Mat kernel = kernelBasis(constraint);
  for (std::size_t r = 0; r < kernel.rows(); ++r)
    out.push_back(Mat::reshape(kernel.row(r), x.dim, y.dim));
  return out;
}

/// Decides bimodule isomorphism with the same search used for modules: basis
/// elements, seeded random combinations, then an exhaustive integer grid when
/// affordable (a proof either way, by the same determinant-degree argument).
[[nodiscard]] inline IsoResult isoBimodules(const Bimodule& x, const Bimodule& y,
                                            std::uint64_t seed = 20240823,
                                            std::size_t randomTries = 32) {
  IsoResult out;
  if (x.dim != y.dim) {
    out.verdict = IsoResult::Verdict::NotIsomorphic;
    out.note = "dimension mismatch";
    return out;
  }
  if (x.dim == 0) {
    out.verdict = IsoResult::Verdict::Isomorphic;
    out.witness = Mat(0, 0);
    out.witnessInverse = Mat(0, 0);
    return out;
  }
  const std::vector<Mat> h = bimoduleHomSpace(x, y);
  if (h.empty()) {
    out.verdict = IsoResult::Verdict::NotIsomorphic;
    out.note = "no nonzero bimodule homomorphisms";
    return out;
  }
  auto accept = [&](const Mat& f) -> bool {
    auto inv = invert(f);
    if (!inv) return false;
    out.verdict = IsoResult::Verdict::Isomorphic;
    out.witness = f;
    out.witnessInverse = std::move(*inv);
    return true;
  };
  for (const Mat& f : h)
    if (accept(f)) return out;
  Rng rng(seed);
  for (std::size_t t = 0; t < randomTries; ++t) {
    Mat f(x.dim, y.dim);
    for (const Mat& b : h) f = f + b.scaled(rng.coeff(8));
    if (accept(f)) return out;
  }
  double gridSize = 1;
  for (std::size_t k = 0; k < h.size() && gridSize <= 200000; ++k)
    gridSize *= static_cast<double>(x.dim + 1);
  if (gridSize <= 200000) {
    std::vector<std::size_t> idx(h.size(), 0);
    for (;;) {
      Mat f(x.dim, y.dim);
      bool allZero = true;
      for (std::size_t k = 0; k < h.size(); ++k) {
        if (idx[k] == 0) continue;
        allZero = false;
        f = f + h[k].scaled(Rat(static_cast<int>(idx[k])));
      }
      if (!allZero && accept(f)) return out;
      std::size_t p = 0;
      while (p < idx.size() && idx[p] == x.dim) idx[p++] = 0;
      if (p == idx.size()) break;
      ++idx[p];
    }
    out.verdict = IsoResult::Verdict::NotIsomorphic;
    out.note = "no invertible bimodule homomorphism exists (exhaustive grid certificate)";
    return out;
  }
  out.verdict = IsoResult::Verdict::Undecided;
  out.note = "hom space too large for exhaustive certification";
  return out;
}

// ====== Corner bimodules Ae and eA ======

/// Bimodule structure induced on an invariant subspace of an ambient
/// coordinate space; basisRows hold the subspace basis as ambient rows.
[[nodiscard]] inline Bimodule bimoduleOnSubspace(const Algebra& left, const Algebra& right,
                                                const Mat& basisRows,
                                                const std::vector<Mat>& ambientLeft,
                                                const std::vector<Mat>& ambientRight,
                                                std::string name) {
  auto induce = [&](const Mat& ambient) -> Mat {
    auto sol = solveLinear(basisRows, basisRows * ambient);
    if (!sol) throw std::invalid_argument("bimoduleOnSubspace: subspace is not invariant");
    return std::move(*sol);
  };
  std::vector<Mat> l, r;
  l.reserve(ambientLeft.size());
  r.reserve(ambientRight.size());
  for (const Mat& m : ambientLeft) l.push_back(induce(m));
  for (const Mat& m : ambientRight) r.push_back(induce(m));
  return makeBimodule(left, right, std::move(l), std::move(r), std::move(name));
}

/// Ae as an (A, eAe)-bimodule and eA as an (eAe, A)-bimodule, with the corner
/// algebra and the coordinates of e inside each.
struct CornerBimodules {
  Subalgebra corner;  // eAe
  Bimodule ae;
  Mat aeRows;  // basis of Ae as rows in A
  Vec eInAe;
  Bimodule ea;
  Mat eaRows;  // basis of eA as rows in A
  Vec eInEa;
};

[[nodiscard]] inline CornerBimodules cornerBimodules(const Algebra& a, const Vec& e) {
  CornerBimodules out;
  out.corner = idempotentSubalgebra(a, e);
  const std::size_t n = a.dim();
  const std::size_t c = out.corner.sub.dim();
  out.aeRows = rowSpaceBasis(a.rightMul(e));
  out.eaRows = rowSpaceBasis(a.leftMul(e));
  std::vector<Mat> aLeft, aRight, cLeft, cRight;
  for (std::size_t i = 0; i < n; ++i) {
    aLeft.push_back(a.leftMulBasis(i));
    aRight.push_back(a.rightMulBasis(i));
  }
  for (std::size_t j = 0; j < c; ++j) {
    cLeft.push_back(a.leftMul(out.corner.inclusion.row(j)));
    cRight.push_back(a.rightMul(out.corner.inclusion.row(j)));
  }
  out.ae = bimoduleOnSubspace(a, out.corner.sub, out.aeRows, aLeft, cRight, "Ae");
  out.ea = bimoduleOnSubspace(out.corner.sub, a, out.eaRows, cLeft, aRight, "eA");
  auto coords = [&](const Mat& rows) -> Vec {
    auto sol = solveLinear(rows, Mat::fromRows({e}, n));
    if (!sol) throw std::logic_error("cornerBimodules: e escapes its own ideal");
    return sol->row(0);
  };
  out.eInAe = coords(out.aeRows);
  out.eInEa = coords(out.eaRows);
  return out;
}

// ====== Tensor products over the middle algebra ======

namespace detail {

[[nodiscard]] inline Vec kronRow(const Vec& u, const Vec& v) {
  Vec r(u.size() * v.size(), Rat(0));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) r[i * v.size() + j] = u[i] * v[j];
  }
  return r;
}

}  // namespace detail

/// X (x)_A Y realized as the quotient of the Kronecker coordinate space
/// (index (i, j) -> i * dim(Y) + j) by the balancing relations
/// x.a (x) y - x (x) a.y. Generators of the middle algebra suffice: the
/// relation for a product follows from r(x, y, ab) = r(xa, y, b) + r(x, by, a)
/// and the relation set ranges over all x, y.
struct TensorSpace {
  Bimodule product;  // the induced (x.left, y.right)-bimodule
  std::size_t leftFactorDim = 0;
  std::size_t rightFactorDim = 0;
  Mat relations;   // RREF basis of the balancing subspace
  Mat projection;  // ambient -> quotient coordinates
  Mat section;     // quotient -> ambient representatives; section * projection = 1
};

[[nodiscard]] inline TensorSpace tensorOverAlgebra(const Bimodule& x, const Bimodule& y) {
  if (!x.right.sameAs(y.left))
    throw std::invalid_argument("tensorOverAlgebra: middle algebra mismatch");
  TensorSpace ts;
  ts.leftFactorDim = x.dim;
  ts.rightFactorDim = y.dim;
  const std::size_t amb = x.dim * y.dim;
  RowReducer red(amb);
  for (std::size_t g : x.right.generatorIndices()) {
    for (std::size_t i = 0; i < x.dim; ++i) {
      const Vec rowX = x.rightAct[g].row(i);
      for (std::size_t j = 0; j < y.dim; ++j) {
        const Vec rowY = y.leftAct[g].row(j);
        Vec rel(amb, Rat(0));
        for (std::size_t k = 0; k < x.dim; ++k)
          if (rowX[k] != 0) rel[k * y.dim + j] += rowX[k];
        for (std::size_t l = 0; l < y.dim; ++l)
          if (rowY[l] != 0) rel[i * y.dim + l] -= rowY[l];
        red.addRow(std::move(rel));
      }
    }
  }
  ts.relations = red.basis();
  const QuotientSpace q = quotientByRowSpace(red);
  ts.projection = q.projection;
  ts.section = q.section;
  const std::size_t dim = ts.section.rows();
  auto induce = [&](const Mat& ambient, const char* what) -> Mat {
    if (!(ts.relations * ambient * ts.projection).isZero())
      throw std::logic_error(std::string("tensorOverAlgebra: ") + what +
                             " does not preserve the balancing relations");
    return ts.section * ambient * ts.projection;
  };
  ts.product.left = x.left;
  ts.product.right = y.right;
  ts.product.dim = dim;
  const Mat idX = Mat::identity(x.dim);
  const Mat idY = Mat::identity(y.dim);
  for (std::size_t i = 0; i < x.left.dim(); ++i)
    ts.product.leftAct.push_back(induce(kronecker(x.leftAct[i], idY), "outer left action"));
  for (std::size_t j = 0; j < y.right.dim(); ++j)
    ts.product.rightAct.push_back(induce(kronecker(idX, y.rightAct[j]), "outer right action"));
  ts.product.name = x.name + "(x)" + y.name;
  return ts;
}

/// Pushes a map of ambient Kronecker spaces down to the tensor quotients.
/// Throws when the map fails to preserve the balancing relations.
[[nodiscard]] inline Mat inducedOnQuotient(const TensorSpace& src, const Mat& ambientMap,
                                           const TensorSpace& tgt) {
  if (!(src.relations * ambientMap * tgt.projection).isZero())
    throw std::logic_error("inducedOnQuotient: map does not preserve the balancing relations");
  return src.section * ambientMap * tgt.projection;
}

/// f (x) g on tensor products: f maps the left factors, g the right factors.
[[nodiscard]] inline Mat tensorOfHoms(const TensorSpace& src, const Mat& f, const Mat& g,
                                      const TensorSpace& tgt) {
  if (f.rows() != src.leftFactorDim || g.rows() != src.rightFactorDim ||
      f.cols() != tgt.leftFactorDim || g.cols() != tgt.rightFactorDim)
    throw std::invalid_argument("tensorOfHoms: factor shape mismatch");
  return inducedOnQuotient(src, kronecker(f, g), tgt);
}

/// w -> class(w (x) 1) in W (x)_A A; invertible (the right unit law).
[[nodiscard]] inline Mat canonicalRightUnitMap(const Bimodule& w, const TensorSpace& wa) {
  Mat m(w.dim, wa.product.dim);
  for (std::size_t k = 0; k < w.dim; ++k)
    m.setRow(k, mulRowMat(detail::kronRow(unitVec(w.dim, k), w.right.unit()), wa.projection));
  return m;
}

/// w -> class(1 (x) w) in A (x)_A W; invertible (the left unit law).
[[nodiscard]] inline Mat canonicalLeftUnitMap(const Bimodule& w, const TensorSpace& aw) {
  Mat m(w.dim, aw.product.dim);
  for (std::size_t k = 0; k < w.dim; ++k)
    m.setRow(k, mulRowMat(detail::kronRow(w.left.unit(), unitVec(w.dim, k)), aw.projection));
  return m;
}

/// Canonical associator ((X (x) Y) (x) Z) -> (X (x) (Y (x) Z)). The flat
/// triple index is shared by both bracketings, so the map is lift, regroup,
/// project; it is invertible and natural.
[[nodiscard]] inline Mat associatorMap(const TensorSpace& xy, const TensorSpace& xy_z,
                                       const TensorSpace& yz, const TensorSpace& x_yz) {
  const std::size_t dz = xy_z.rightFactorDim;
  const std::size_t dx = x_yz.leftFactorDim;
  return xy_z.section * kronecker(xy.section, Mat::identity(dz)) *
         kronecker(Mat::identity(dx), yz.projection) * x_yz.projection;
}

// ====== Module (x) bimodule ======

struct ModuleTensorData {
  RightModule module;  // M (x)_A W as a right module over w.right
  Mat relations;
  Mat projection;
  Mat section;
};

[[nodiscard]] inline ModuleTensorData tensorModuleBimodule(const RightModule& m,
                                                           const Bimodule& w) {
  if (!m.algebra.sameAs(w.left))
    throw std::invalid_argument("tensorModuleBimodule: middle algebra mismatch");
  ModuleTensorData out;
  const std::size_t amb = m.dim * w.dim;
  RowReducer red(amb);
  for (std::size_t g : m.algebra.generatorIndices()) {
    for (std::size_t i = 0; i < m.dim; ++i) {
      const Vec rowM = m.action[g].row(i);
      for (std::size_t j = 0; j < w.dim; ++j) {
        const Vec rowW = w.leftAct[g].row(j);
        Vec rel(amb, Rat(0));
        for (std::size_t k = 0; k < m.dim; ++k)
          if (rowM[k] != 0) rel[k * w.dim + j] += rowM[k];
        for (std::size_t l = 0; l < w.dim; ++l)
          if (rowW[l] != 0) rel[i * w.dim + l] -= rowW[l];
        red.addRow(std::move(rel));
      }
    }
  }
  out.relations = red.basis();
  const QuotientSpace q = quotientByRowSpace(red);
  out.projection = q.projection;
  out.section = q.section;
  const Mat idM = Mat::identity(m.dim);
  std::vector<Mat> act;
  act.reserve(w.right.dim());
  for (std::size_t j = 0; j < w.right.dim(); ++j) {
    const Mat ambient = kronecker(idM, w.rightAct[j]);
    if (!(out.relations * ambient * out.projection).isZero())
      throw std::logic_error("tensorModuleBimodule: action does not preserve the relations");
    act.push_back(out.section * ambient * out.projection);
  }
  out.module = makeModule(w.right, std::move(act), m.name + "(x)" + w.name);
  return out;
}

// ====== Hom modules and the Nakayama functors ======

/// Hom_A(W, N) as a right module over w.left, acting by (f . a)(w) = f(a . w);
/// basis stores the underlying module-map matrices W -> N.
struct HomModuleData {
  RightModule module;
  std::vector<Mat> basis;
};

[[nodiscard]] inline HomModuleData homModule(const Bimodule& w, const RightModule& n) {
  if (!w.right.sameAs(n.algebra)) throw std::invalid_argument("homModule: algebra mismatch");
  HomModuleData out;
  out.basis = homSpace(asRightModule(w), n);
  const std::string name = "Hom(" + w.name + "," + n.name + ")";
  const std::size_t h = out.basis.size();
  std::vector<Mat> act;
  act.reserve(w.left.dim());
  for (std::size_t i = 0; i < w.left.dim(); ++i) {
    Mat m(h, h);
    for (std::size_t k = 0; k < h; ++k) {
      auto coords = homCoordinates(out.basis, w.leftAct[i] * out.basis[k]);
      if (!coords) throw std::logic_error("homModule: action left the hom space");
      m.setRow(k, *coords);
    }
    act.push_back(std::move(m));
  }
  out.module = makeModule(w.left, std::move(act), name);
  return out;
}

/// Evaluation of hom-space coordinates at a fixed element of W; for the
/// regular bimodule and w0 = 1 this is the inverse of the canonical
/// realization N ≅ Hom_A(A, N).
[[nodiscard]] inline Mat evaluationAt(const HomModuleData& h, const Vec& w0) {
  const std::size_t cols = h.basis.empty() ? 0 : h.basis.front().cols();
  Mat m(h.basis.size(), cols);
  for (std::size_t k = 0; k < h.basis.size(); ++k) m.setRow(k, mulRowMat(w0, h.basis[k]));
  return m;
}

[[nodiscard]] inline RightModule nakayama(const RightModule& m, const Bimodule& da) {
  RightModule out = tensorModuleBimodule(m, da).module;
  out.name = "nu(" + m.name + ")";
  return out;
}

[[nodiscard]] inline RightModule nakayama(const RightModule& m) {
  return nakayama(m, dualBimodule(regularBimodule(m.algebra)));
}

[[nodiscard]] inline HomModuleData nakayamaInverseData(const RightModule& m, const Bimodule& da) {
  HomModuleData out = homModule(da, m);
  out.module.name = "nuinv(" + m.name + ")";
  return out;
}

[[nodiscard]] inline HomModuleData nakayamaInverseData(const RightModule& m) {
  return nakayamaInverseData(m, dualBimodule(regularBimodule(m.algebra)));
}

[[nodiscard]] inline RightModule nakayamaInverse(const RightModule& m) {
  return nakayamaInverseData(m).module;
}

/// Hom_A(W, -) on a map f: M -> N, in the hom-space coordinates.
[[nodiscard]] inline Mat homModuleOnMap(const HomModuleData& hm, const HomModuleData& hn,
                                        const Mat& f) {
  Mat out(hm.basis.size(), hn.basis.size());
  for (std::size_t k = 0; k < hm.basis.size(); ++k) {
    auto coords = homCoordinates(hn.basis, hm.basis[k] * f);
    if (!coords) throw std::logic_error("homModuleOnMap: image left the hom space");
    out.setRow(k, *coords);
  }
  return out;
}

// ====== Hom-tensor duality ======

/// The canonical pairing Hom_A(Y, D(Z)) -> D(Y (x)_A Z), f -> (y (x) z ->
/// f(y)(z)), as an invertible matrix from hom coordinates to the dual of the
/// chosen tensor basis. Verified invertible and linear over both outer
/// actions; failure throws (it would contradict the adjunction).
struct DualityPairing {
  std::vector<Mat> homBasis;  // basis of Hom_A(Y, D(Z)) as right modules
  TensorSpace tensor;         // Y (x)_A Z
  Mat iso;
};

[[nodiscard]] inline DualityPairing homTensorDualityIso(const Bimodule& y, const Bimodule& z) {
  DualityPairing out;
  out.homBasis = homSpace(asRightModule(y), asRightModule(dualBimodule(z)));
  out.tensor = tensorOverAlgebra(y, z);
  const std::size_t t = out.tensor.product.dim;
  if (out.homBasis.size() != t)
    throw std::logic_error("homTensorDualityIso: hom and tensor dimensions differ");
  out.iso = Mat(out.homBasis.size(), t);
  for (std::size_t h = 0; h < out.homBasis.size(); ++h)
    for (std::size_t k = 0; k < t; ++k) {
      Rat v(0);
      for (std::size_t i = 0; i < y.dim; ++i)
        for (std::size_t j = 0; j < z.dim; ++j) {
          const Rat& s = out.tensor.section.at(k, i * z.dim + j);
          if (s != 0) v += s * out.homBasis[h].at(i, j);
        }
      out.iso.at(h, k) = v;
    }
  if (!invert(out.iso)) throw std::logic_error("homTensorDualityIso: pairing is singular");
  // Bimodule linearity: the left action (a.f)(y) = a.(f(y)) (indexed by
  // z.right) matches a.phi on the dual of the tensor space, and the right
  // action (f.a)(y) = f(a.y) (indexed by y.left) matches phi.a.
  for (std::size_t i = 0; i < z.right.dim(); ++i) {
    Mat u(out.homBasis.size(), out.homBasis.size());
    for (std::size_t h = 0; h < out.homBasis.size(); ++h) {
      auto l = homCoordinates(out.homBasis, out.homBasis[h] * z.rightAct[i].transpose());
      if (!l) throw std::logic_error("homTensorDualityIso: left action left the hom space");
      u.setRow(h, *l);
    }
    if (u * out.iso != out.iso * out.tensor.product.rightAct[i].transpose())
      throw std::logic_error("homTensorDualityIso: pairing is not left-linear");
  }
  for (std::size_t i = 0; i < y.left.dim(); ++i) {
    Mat u(out.homBasis.size(), out.homBasis.size());
    for (std::size_t h = 0; h < out.homBasis.size(); ++h) {
      auto r = homCoordinates(out.homBasis, y.leftAct[i] * out.homBasis[h]);
      if (!r) throw std::logic_error("homTensorDualityIso: right action left the hom space");
      u.setRow(h, *r);
    }
    if (u * out.iso != out.iso * out.tensor.product.leftAct[i].transpose())
      throw std::logic_error("homTensorDualityIso: pairing is not right-linear");
  }
  return out;
}

}  // namespace gendobocs
