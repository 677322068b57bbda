#pragma once

// Finite-dimensional right modules, given by one action matrix per algebra
// basis vector. A map of modules f: M -> N is a matrix F with M.dim rows and
// N.dim columns acting as v -> v*F; "f then g" composes as F*G.

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gendobocs/algebra.hpp"
#include "gendobocs/rng.hpp"

namespace gendobocs {

struct RightModule {
  Algebra algebra;
  std::size_t dim = 0;
  std::vector<Mat> action;  // action[i] = matrix of v -> v * basis_i
  std::string name;

  [[nodiscard]] Mat actionOf(const Vec& a) const {
    Mat m(dim, dim);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) m.at(r, c) += a[i] * action[i].at(r, c);
    }
    return m;
  }
  [[nodiscard]] bool zero() const { return dim == 0; }
};

[[nodiscard]] inline RightModule makeModule(Algebra a, std::vector<Mat> action,
                                            std::string name = "") {
  RightModule m;
  m.algebra = std::move(a);
  m.action = std::move(action);
  m.name = std::move(name);
  if (m.action.size() != m.algebra.dim())
    throw std::invalid_argument("makeModule: one action matrix per basis vector required");
  m.dim = m.action.empty() ? 0 : m.action.front().rows();
  for (const Mat& x : m.action)
    if (x.rows() != m.dim || x.cols() != m.dim)
      throw std::invalid_argument("makeModule: action matrices must be square of equal size");
  return m;
}

[[nodiscard]] inline RightModule zeroModule(const Algebra& a, std::string name = "0") {
  std::vector<Mat> act(a.dim(), Mat(0, 0));
  return makeModule(a, std::move(act), std::move(name));
}

/// Verifies the module axioms: the unit acts as the identity and the action
/// respects every basis product.
[[nodiscard]] inline PresentationReport checkModule(const RightModule& m) {
  PresentationReport rep;
  const std::size_t n = m.algebra.dim();
  if (!m.actionOf(m.algebra.unit()).isIdentity())
    detail::reportFailure(rep, "unit does not act as the identity");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = m.algebra.mul(m.algebra.basisVec(i), m.algebra.basisVec(j));
      if (m.action[i] * m.action[j] != m.actionOf(prod)) {
        std::ostringstream os;
        os << "action fails on basis pair (" << i << ", " << j << ")";
        detail::reportFailure(rep, os.str());
      }
    }
  return rep;
}

[[nodiscard]] inline RightModule regularModule(const Algebra& a) {
  std::vector<Mat> act;
  act.reserve(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.rightMulBasis(i));
  return makeModule(a, std::move(act), "regular");
}

/// Dual as a right module over the opposite algebra; the double dual is the
/// original module on the nose (same algebra handle, same matrices).
[[nodiscard]] inline RightModule dualModule(const RightModule& m) {
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (const Mat& x : m.action) act.push_back(x.transpose());
  std::string name;
  if (m.name.size() > 3 && m.name.starts_with("D(") && m.name.back() == ')')
    name = m.name.substr(2, m.name.size() - 3);
  else if (!m.name.empty())
    name = "D(" + m.name + ")";
  return makeModule(m.algebra.opposite(), std::move(act), std::move(name));
}

/// Matrix of the dual of a map: f: M -> N dualizes to D(N) -> D(M).
[[nodiscard]] inline Mat dualMapMatrix(const Mat& f) { return f.transpose(); }

// ====== Sums, submodules, quotients ======

struct DirectSumData {
  RightModule module;
  std::vector<std::size_t> offsets;  // block starts, size parts + 1
};

[[nodiscard]] inline DirectSumData directSum(const Algebra& a,
                                             const std::vector<RightModule>& parts,
                                             std::string name = "") {
  DirectSumData out;
  out.offsets.push_back(0);
  std::size_t total = 0;
  for (const RightModule& p : parts) {
    if (!p.algebra.sameAs(a)) throw std::invalid_argument("directSum: algebra mismatch");
    total += p.dim;
    out.offsets.push_back(total);
  }
  std::vector<Mat> act(a.dim(), Mat(total, total));
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t p = 0; p < parts.size(); ++p) {
      const Mat& b = parts[p].action[i];
      const std::size_t off = out.offsets[p];
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) act[i].at(off + r, off + c) = b.at(r, c);
    }
  out.module = makeModule(a, std::move(act), std::move(name));
  return out;
}

struct SubmoduleData {
  RightModule module;
  Mat inclusion;  // module.dim x parent.dim, canonical RREF rows
};

/// Submodule spanned by the given rows; throws when the span is not closed
/// under the action.
[[nodiscard]] inline SubmoduleData submoduleOnRows(const RightModule& m, const Mat& rows,
                                                   std::string name = "") {
  SubmoduleData out;
  out.inclusion = rowSpaceBasis(rows);
  const std::size_t s = out.inclusion.rows();
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (const Mat& x : m.action) {
    auto sol = solveLinear(out.inclusion, out.inclusion * x);
    if (!sol) throw std::invalid_argument("submoduleOnRows: rows not closed under the action");
    act.push_back(std::move(*sol));
  }
  out.module = makeModule(m.algebra, std::move(act), std::move(name));
  if (out.module.dim != s) throw std::logic_error("submoduleOnRows: dimension bookkeeping failed");
  return out;
}

struct QuotientModuleData {
  RightModule module;
  Mat projection;  // parent.dim x module.dim
  Mat section;     // module.dim x parent.dim
};

/// Quotient by the submodule spanned by the rows; throws when the span is not
/// closed under the action.
[[nodiscard]] inline QuotientModuleData quotientModuleByRows(const RightModule& m,
                                                             const Mat& rows,
                                                             std::string name = "") {
  RowReducer red(m.dim);
  for (std::size_t r = 0; r < rows.rows(); ++r) red.addRow(rows.row(r));
  const Mat sub = red.basis();
  const QuotientSpace qs = quotientByRowSpace(red);
  QuotientModuleData out;
  out.projection = qs.projection;
  out.section = qs.section;
  std::vector<Mat> act;
  act.reserve(m.action.size());
  for (const Mat& x : m.action) {
    if (!(sub * x * qs.projection).isZero())
      throw std::invalid_argument("quotientModuleByRows: rows not closed under the action");
    act.push_back(qs.section * x * qs.projection);
  }
  out.module = makeModule(m.algebra, std::move(act), std::move(name));
  return out;
}

// ====== Homomorphism spaces ======

/// Canonical basis of the space of module maps M -> N, found as the joint
/// kernel of the intertwining constraints over a generating set of the
/// algebra (sufficient: intertwining with generators propagates to products
/// and linear combinations).
[[nodiscard]] inline std::vector<Mat> homSpace(const RightModule& m, const RightModule& n) {
  if (!m.algebra.sameAs(n.algebra)) throw std::invalid_argument("homSpace: algebra mismatch");
  if (m.dim == 0 || n.dim == 0) return {};
  const auto& gens = m.algebra.generatorIndices();
  const std::size_t w = m.dim * n.dim;
  Mat constraints(w, gens.size() * w);
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const Mat& rm = m.action[gens[gi]];
    const Mat& rn = n.action[gens[gi]];
    const std::size_t base = gi * w;
    // residual(r, c) of F is (rm * F - F * rn)(r, c); columns hold its
    // coefficients as a linear functional of the flattened unknown F.
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < n.dim; ++c) {
        const std::size_t col = base + r * n.dim + c;
        for (std::size_t s = 0; s < m.dim; ++s)
          constraints.at(s * n.dim + c, col) += rm.at(r, s);
        for (std::size_t s = 0; s < n.dim; ++s)
          constraints.at(r * n.dim + s, col) -= rn.at(s, c);
      }
  }
  const Mat k = kernelBasis(constraints);
  std::vector<Mat> out;
  out.reserve(k.rows());
  for (std::size_t r = 0; r < k.rows(); ++r)
    out.push_back(Mat::reshape(k.row(r), m.dim, n.dim));
  return out;
}

[[nodiscard]] inline bool isModuleMap(const RightModule& m, const RightModule& n,
                                      const Mat& f) {
  if (!m.algebra.sameAs(n.algebra)) return false;
  if (f.rows() != m.dim || f.cols() != n.dim) return false;
  for (std::size_t g : m.algebra.generatorIndices())
    if (m.action[g] * f != f * n.action[g]) return false;
  return true;
}

/// Coordinates of a map in a hom-space basis; nullopt when outside the span.
[[nodiscard]] inline std::optional<Vec> homCoordinates(const std::vector<Mat>& basis,
                                                       const Mat& f) {
  if (basis.empty()) {
    if (f.isZero()) return Vec{};
    return std::nullopt;
  }
  RowReducer red(f.rows() * f.cols(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    red.addRow(basis[k].flatten(), unitVec(basis.size(), k));
  return red.coordinates(f.flatten());
}

// ====== Socle, radical, top ======

/// Rows spanning M * J(A), canonical RREF.
[[nodiscard]] inline Mat radicalRows(const RightModule& m) {
  const Mat& rad = m.algebra.radicalBasis();
  RowReducer red(m.dim);
  for (std::size_t j = 0; j < rad.rows(); ++j) {
    const Mat act = m.actionOf(rad.row(j));
    for (std::size_t r = 0; r < m.dim; ++r) red.addRow(act.row(r));
  }
  return red.basis();
}

/// Rows spanning the socle {v : v * J(A) = 0}, canonical RREF.
[[nodiscard]] inline Mat socleRows(const RightModule& m) {
  const Mat& rad = m.algebra.radicalBasis();
  if (rad.rows() == 0) return Mat::identity(m.dim);
  Mat wide(m.dim, rad.rows() * m.dim);
  for (std::size_t j = 0; j < rad.rows(); ++j) {
    const Mat act = m.actionOf(rad.row(j));
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) wide.at(r, j * m.dim + c) = act.at(r, c);
  }
  return kernelBasis(wide);
}

[[nodiscard]] inline SubmoduleData socle(const RightModule& m) {
  return submoduleOnRows(m, socleRows(m), "soc(" + m.name + ")");
}

[[nodiscard]] inline QuotientModuleData topOf(const RightModule& m) {
  return quotientModuleByRows(m, radicalRows(m), "top(" + m.name + ")");
}

// ====== Projectives, injectives, covers, hulls ======

/// The projective e_s A as a submodule of the regular module.
[[nodiscard]] inline SubmoduleData projectiveSummand(const Algebra& a, std::size_t s) {
  return submoduleOnRows(regularModule(a), a.leftMul(a.idempotents()[s]),
                         "P" + std::to_string(s));
}

[[nodiscard]] inline RightModule simpleModule(const Algebra& a, std::size_t s) {
  RightModule m = topOf(projectiveSummand(a, s).module).module;
  m.name = "S" + std::to_string(s);
  return m;
}

struct CoverData {
  RightModule cover;
  Mat map;  // cover.dim x target.dim, surjective with superfluous kernel
  std::vector<std::size_t> summandIdem;  // idempotent index per block
  std::vector<std::size_t> offsets;      // block row starts, size blocks + 1
};

/// Minimal projective cover, for basic presentations (each projective e_s A
/// has one-dimensional top). Blocks are indexed by the simple composition
/// factors of top(M): per factor a copy of e_s A mapping onto a lift.
[[nodiscard]] inline CoverData projectiveCover(const RightModule& m) {
  const Algebra& alg = m.algebra;
  std::vector<SubmoduleData> projs;
  projs.reserve(alg.idempotents().size());
  for (std::size_t s = 0; s < alg.idempotents().size(); ++s) {
    projs.push_back(projectiveSummand(alg, s));
    if (topOf(projs.back().module).module.dim != 1)
      throw std::logic_error(
          "projectiveCover: requires a basic presentation (one-dimensional tops)");
  }

  const QuotientModuleData top = topOf(m);
  CoverData out;
  out.offsets.push_back(0);
  std::vector<RightModule> parts;
  std::vector<Mat> blocks;
  for (std::size_t s = 0; s < alg.idempotents().size(); ++s) {
    const Vec& e = alg.idempotents()[s];
    const Mat weights = rowSpaceBasis(top.module.actionOf(e));
    for (std::size_t u = 0; u < weights.rows(); ++u) {
      // Lift the top vector and pull it into M * e_s; mapping e_s a -> lift * a
      // is then a module map from e_s A hitting this top vector.
      const Vec lift =
          mulRowMat(mulRowMat(weights.row(u), top.section), m.actionOf(e));
      Mat block(projs[s].module.dim, m.dim);
      for (std::size_t r = 0; r < block.rows(); ++r)
        block.setRow(r, mulRowMat(lift, m.actionOf(projs[s].inclusion.row(r))));
      parts.push_back(projs[s].module);
      blocks.push_back(std::move(block));
      out.summandIdem.push_back(s);
      out.offsets.push_back(out.offsets.back() + projs[s].module.dim);
    }
  }
  out.cover = directSum(alg, parts, "P(" + m.name + ")").module;
  out.map = Mat(out.offsets.back(), m.dim);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::size_t r = 0; r < blocks[b].rows(); ++r)
      out.map.setRow(out.offsets[b] + r, blocks[b].row(r));
  if (rank(out.map) != m.dim)
    throw std::logic_error("projectiveCover: constructed map is not surjective");
  return out;
}

struct HullData {
  RightModule hull;
  Mat map;  // target.dim x hull.dim, injective with essential image
  std::vector<std::size_t> summandIdem;
};

/// Minimal injective hull, obtained by dualizing the projective cover of the
/// dual module over the opposite algebra.
[[nodiscard]] inline HullData injectiveHull(const RightModule& m) {
  const CoverData cov = projectiveCover(dualModule(m));
  HullData out;
  out.hull = dualModule(cov.cover);
  if (!out.hull.algebra.sameAs(m.algebra))
    throw std::logic_error("injectiveHull: double dual changed the algebra handle");
  out.map = cov.map.transpose();
  out.summandIdem = cov.summandIdem;
  return out;
}

[[nodiscard]] inline bool isProjective(const RightModule& m) {
  return projectiveCover(m).cover.dim == m.dim;
}

[[nodiscard]] inline bool isInjective(const RightModule& m) {
  return injectiveHull(m).hull.dim == m.dim;
}

// ====== Minimal resolutions ======

struct ProjectiveResolution {
  std::vector<RightModule> terms;  // P_0, P_1, ...
  std::vector<std::vector<std::size_t>> summandIdem;
  Mat augmentation;                // terms[0] -> target
  std::vector<Mat> differentials;  // differentials[k]: terms[k+1] -> terms[k]
  bool complete = false;           // the next syzygy vanished
};

/// Minimal projective resolution with at most maxTerms+1 terms.
[[nodiscard]] inline ProjectiveResolution minimalProjectiveResolution(
    const RightModule& m, std::size_t maxTerms) {
  ProjectiveResolution res;
  RightModule current = m;
  Mat inclusion;  // syzygy rows inside the previous term
  for (std::size_t k = 0; k <= maxTerms; ++k) {
    if (current.dim == 0) {
      res.complete = true;
      break;
    }
    const CoverData cov = projectiveCover(current);
    res.terms.push_back(cov.cover);
    res.summandIdem.push_back(cov.summandIdem);
    if (k == 0)
      res.augmentation = cov.map;
    else
      res.differentials.push_back(cov.map * inclusion);
    const Mat ker = kernelBasis(cov.map);
    if (ker.rows() == 0) {
      res.complete = true;
      break;
    }
    SubmoduleData sub = submoduleOnRows(cov.cover, ker);
    inclusion = sub.inclusion;
    current = sub.module;
  }
  return res;
}

struct InjectiveResolution {
  std::vector<RightModule> terms;  // I^0, I^1, ...
  std::vector<std::vector<std::size_t>> summandIdem;
  Mat coaugmentation;              // target -> terms[0]
  std::vector<Mat> differentials;  // differentials[k]: terms[k] -> terms[k+1]
  bool complete = false;           // the next cosyzygy vanished
};

[[nodiscard]] inline InjectiveResolution minimalInjectiveResolution(
    const RightModule& m, std::size_t maxTerms) {
  InjectiveResolution res;
  RightModule current = m;
  Mat projPrev;  // previous term -> its cosyzygy
  for (std::size_t k = 0; k <= maxTerms; ++k) {
    if (current.dim == 0) {
      res.complete = true;
      break;
    }
    const HullData h = injectiveHull(current);
    res.terms.push_back(h.hull);
    res.summandIdem.push_back(h.summandIdem);
    if (k == 0)
      res.coaugmentation = h.map;
    else
      res.differentials.push_back(projPrev * h.map);
    const QuotientModuleData q = quotientModuleByRows(h.hull, rowSpaceBasis(h.map));
    if (q.module.dim == 0) {
      res.complete = true;
      break;
    }
    projPrev = q.projection;
    current = q.module;
  }
  return res;
}

// ====== Ext and dominant dimension ======

/// dim Ext^i(M, N), from the hom complex of a minimal projective resolution.
[[nodiscard]] inline std::size_t extDim(const RightModule& m, const RightModule& n,
                                        std::size_t i) {
  const ProjectiveResolution res = minimalProjectiveResolution(m, i + 1);
  if (i >= res.terms.size()) return 0;
  auto homAt = [&](std::size_t k) -> std::vector<Mat> {
    if (k >= res.terms.size()) return {};
    return homSpace(res.terms[k], n);
  };
  auto deltaRank = [&](std::size_t k, const std::vector<Mat>& src,
                       const std::vector<Mat>& dst) -> std::size_t {
    // delta_k: Hom(P_k, N) -> Hom(P_{k+1}, N), F -> d_{k+1} * F.
    if (src.empty() || dst.empty() || k >= res.differentials.size()) return 0;
    RowReducer red(dst.empty() ? 0 : dst.front().rows() * dst.front().cols());
    for (const Mat& f : src) red.addRow((res.differentials[k] * f).flatten());
    return red.rank();
  };
  const std::vector<Mat> hi = homAt(i);
  const std::vector<Mat> hnext = homAt(i + 1);
  const std::size_t rankOut = deltaRank(i, hi, hnext);
  std::size_t rankIn = 0;
  if (i > 0) {
    const std::vector<Mat> hprev = homAt(i - 1);
    rankIn = deltaRank(i - 1, hprev, hi);
  }
  return hi.size() - rankOut - rankIn;
}

struct DomDim {
  enum class Kind { Finite, AtLeast, Infinite };
  Kind kind = Kind::Finite;
  std::size_t value = 0;

  static DomDim finite(std::size_t v) { return {Kind::Finite, v}; }
  static DomDim atLeast(std::size_t v) { return {Kind::AtLeast, v}; }
  static DomDim infinite() { return {Kind::Infinite, 0}; }

  bool operator==(const DomDim&) const = default;

  [[nodiscard]] std::string str() const {
    switch (kind) {
      case Kind::Finite: return std::to_string(value);
      case Kind::AtLeast: return ">=" + std::to_string(value);
      default: return "infinity";
    }
  }
};

/// Number of leading projective terms of the minimal injective resolution;
/// Infinite when the resolution terminates with every term projective,
/// AtLeast(cap+1) when the cap is reached first.
[[nodiscard]] inline DomDim dominantDimension(const RightModule& m, std::size_t cap = 8) {
  if (m.dim == 0) return DomDim::infinite();
  // Over a self-injective algebra every injective is projective, so each term
  // of any injective resolution is projective and the dimension is infinite,
  // even when the resolution itself is periodic.
  if (isInjective(regularModule(m.algebra))) return DomDim::infinite();
  const InjectiveResolution res = minimalInjectiveResolution(m, cap);
  for (std::size_t k = 0; k < res.terms.size(); ++k)
    if (!isProjective(res.terms[k])) return DomDim::finite(k);
  if (res.complete) return DomDim::infinite();
  return DomDim::atLeast(res.terms.size());
}

[[nodiscard]] inline DomDim dominantDimension(const Algebra& a, std::size_t cap = 8) {
  return dominantDimension(regularModule(a), cap);
}

// ====== Isomorphism testing ======

struct IsoResult {
  enum class Verdict { Isomorphic, NotIsomorphic, Undecided };
  Verdict verdict = Verdict::Undecided;
  Mat witness;         // m.dim x n.dim invertible module map when Isomorphic
  Mat witnessInverse;
  std::string note;
};

/// Decides isomorphism where possible. An invertible element of the hom space
/// is searched for among basis vectors, seeded random combinations, and (when
/// the budget allows) an exhaustive integer grid; the grid outcome is a proof
/// either way, because the determinant of a combination is a polynomial of
/// degree at most dim in each coefficient, and vanishing on a grid with
/// dim + 1 values per coordinate forces it to vanish identically.
[[nodiscard]] inline IsoResult isoModules(const RightModule& m, const RightModule& n,
                                          std::uint64_t seed = 20240823,
                                          std::size_t randomTries = 32) {
  if (!m.algebra.sameAs(n.algebra)) throw std::invalid_argument("isoModules: algebra mismatch");
  IsoResult out;
  if (m.dim != n.dim) {
    out.verdict = IsoResult::Verdict::NotIsomorphic;
    out.note = "dimension mismatch";
    return out;
  }
  if (m.dim == 0) {
    out.verdict = IsoResult::Verdict::Isomorphic;
    out.witness = Mat(0, 0);
    out.witnessInverse = Mat(0, 0);
    return out;
  }
  for (std::size_t s = 0; s < m.algebra.idempotents().size(); ++s) {
    const Vec& e = m.algebra.idempotents()[s];
    if (rank(m.actionOf(e)) != rank(n.actionOf(e))) {
      out.verdict = IsoResult::Verdict::NotIsomorphic;
      out.note = "idempotent weight spaces differ at index " + std::to_string(s);
      return out;
    }
  }
  const std::vector<Mat> h = homSpace(m, n);
  if (h.empty()) {
    out.verdict = IsoResult::Verdict::NotIsomorphic;
    out.note = "no nonzero homomorphisms";
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
    Mat f(m.dim, n.dim);
    for (const Mat& b : h) f = f + b.scaled(rng.coeff(8));
    if (accept(f)) return out;
  }
  // Exhaustive grid over {0..dim}^h, complete when affordable.
  double gridSize = 1;
  for (std::size_t k = 0; k < h.size() && gridSize <= 200000; ++k)
    gridSize *= static_cast<double>(m.dim + 1);
  if (gridSize <= 200000) {
    std::vector<std::size_t> idx(h.size(), 0);
    for (;;) {
      Mat f(m.dim, n.dim);
      bool allZero = true;
      for (std::size_t k = 0; k < h.size(); ++k) {
        if (idx[k] == 0) continue;
        allZero = false;
        f = f + h[k].scaled(Rat(static_cast<int>(idx[k])));
      }
      if (!allZero && accept(f)) return out;
      std::size_t p = 0;
      while (p < idx.size() && idx[p] == m.dim) idx[p++] = 0;
      if (p == idx.size()) break;
      ++idx[p];
    }
    out.verdict = IsoResult::Verdict::NotIsomorphic;
    out.note = "no invertible homomorphism exists (exhaustive grid certificate)";
    return out;
  }
  out.verdict = IsoResult::Verdict::Undecided;
  out.note = "hom space too large for exhaustive certification";
  return out;
}

// ====== Decomposition into indecomposables ======

namespace detail {

// Polynomials as coefficient vectors, p[i] on t^i, no trailing zeros.
inline void polyTrim(std::vector<Rat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline std::pair<std::vector<Rat>, std::vector<Rat>> polyDivMod(std::vector<Rat> a,
                                                                const std::vector<Rat>& b) {
  polyTrim(a);
  if (b.empty()) throw std::invalid_argument("polyDivMod: division by zero");
  std::vector<Rat> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Rat c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    polyTrim(a);
  }
  polyTrim(q);
  return {std::move(q), std::move(a)};
}

inline std::vector<Rat> polyGcd(std::vector<Rat> a, std::vector<Rat> b) {
  polyTrim(a);
  polyTrim(b);
  while (!b.empty()) {
    auto [q, r] = polyDivMod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const Rat lead = a.back();
    for (Rat& c : a) c /= lead;
  }
  return a;
}

inline std::vector<Rat> polyDerivative(const std::vector<Rat>& p) {
  std::vector<Rat> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<int>(i)));
  polyTrim(d);
  return d;
}

inline Rat polyEval(const std::vector<Rat>& p, const Rat& x) {
  Rat acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline Mat polyEvalMat(const std::vector<Rat>& p, const Mat& f) {
  Mat acc(f.rows(), f.cols());
  for (std::size_t i = p.size(); i-- > 0;) {
    acc = acc * f;
    for (std::size_t r = 0; r < f.rows(); ++r) acc.at(r, r) += p[i];
  }
  return acc;
}

/// Monic minimal polynomial of a square matrix, via the first linear
/// dependence among its flattened powers.
inline std::vector<Rat> minimalPolynomial(const Mat& f) {
  const std::size_t d = f.rows();
  if (d == 0) return {Rat(1)};  // minimal polynomial of the empty matrix
  RowReducer red(d * d, d + 1);
  Mat p = Mat::identity(d);
  for (std::size_t k = 0; k <= d; ++k) {
    if (!red.addRow(p.flatten(), unitVec(d + 1, k))) {
      const auto c = red.coordinates(p.flatten());
      std::vector<Rat> out(k + 1, Rat(0));
      out[k] = 1;
      for (std::size_t j = 0; j < k; ++j) out[j] = -(*c)[j];
      return out;
    }
    p = p * f;
  }
  throw std::logic_error("minimalPolynomial: no dependence up to the dimension");
}

/// Rational roots of a polynomial, by trial division of the integerized
/// constant and leading coefficients. Divisor search is capped, so the list
/// can be incomplete for huge coefficients; callers treat it as a source of
/// splitting candidates, not a full factorization.
inline std::vector<Rat> rationalRoots(std::vector<Rat> p) {
  polyTrim(p);
  std::vector<Rat> roots;
  if (p.size() <= 1) return roots;
  while (p.size() > 1 && p.front() == 0) {
    roots.push_back(Rat(0));
    p.erase(p.begin());
    break;  // the square-free callers have simple roots
  }
  if (p.size() <= 1) return roots;
  Int denLcm = 1;
  for (const Rat& c : p) denLcm = lcm(denLcm, denominator(c));
  std::vector<Int> ip;
  ip.reserve(p.size());
  for (const Rat& c : p) ip.push_back(numerator(c) * (denLcm / denominator(c)));
  Int a0 = abs(ip.front()), an = abs(ip.back());
  auto divisorsOf = [](Int n) {
    std::vector<Int> d;
    if (n == 0) return d;
    for (Int i = 1; i * i <= n && i < 2000000; ++i)
      if (n % i == 0) {
        d.push_back(i);
        if (i != n / i) d.push_back(n / i);
      }
    return d;
  };
  for (const Int& num : divisorsOf(a0))
    for (const Int& den : divisorsOf(an))
      for (int sign : {1, -1}) {
        const Rat cand = Rat(num * sign) / Rat(den);
        if (polyEval(p, cand) == 0) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace detail

struct Summand {
  RightModule module;
  Mat inclusion;   // module.dim x root.dim rows inside the original module
  bool certifiedIndecomposable = false;
};

struct Decomposition {
  std::vector<Summand> summands;
  bool allCertified = true;
};

namespace detail {

inline Algebra endomorphismRing(const std::vector<Mat>& basis, std::size_t dim) {
  const std::size_t h = basis.size();
  RowReducer red(dim * dim, h);
  for (std::size_t k = 0; k < h; ++k) red.addRow(basis[k].flatten(), unitVec(h, k));
  auto coords = [&](const Mat& f) {
    auto c = red.coordinates(f.flatten());
    if (!c) throw std::logic_error("endomorphismRing: product left the span");
    return *c;
  };
  std::vector<SparseRow> prod(h * h);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const Vec c = coords(basis[i] * basis[j]);
      for (std::size_t k = 0; k < h; ++k)
        if (c[k] != 0) prod[i * h + j].push_back({k, c[k]});
    }
  std::vector<std::string> labels(h);
  for (std::size_t k = 0; k < h; ++k) labels[k] = "f" + std::to_string(k);
  return Algebra(h, std::move(labels), std::move(prod), coords(Mat::identity(dim)), {});
}

inline void decomposeInto(const RightModule& m, const Mat& inclusionToRoot,
                          std::vector<Summand>& out, Rng& rng) {
  if (m.dim == 0) return;
  const std::vector<Mat> ends = homSpace(m, m);
  const Algebra endRing = endomorphismRing(ends, m.dim);
  const bool local = endRing.dim() - endRing.radicalDim() == 1;
  if (local) {
    out.push_back({m, inclusionToRoot, true});
    return;
  }
  // End(M) is not local, so M is decomposable; look for an endomorphism whose
  // minimal polynomial has at least two coprime factors with rational content
  // and split along its generalized eigenspaces.
  std::vector<Mat> candidates = ends;
  for (std::size_t i = 0; i < ends.size() && candidates.size() < 160; ++i)
    for (std::size_t j = 0; j < ends.size() && candidates.size() < 160; ++j) {
      candidates.push_back(ends[i] * ends[j]);
      candidates.push_back(ends[i] + ends[j]);
      candidates.push_back(ends[i] - ends[j]);
    }
  for (std::size_t t = 0; t < 32; ++t) {
    Mat f(m.dim, m.dim);
    for (const Mat& b : ends) f = f + b.scaled(rng.coeff(5));
    candidates.push_back(std::move(f));
  }
  for (const Mat& f : candidates) {
    const std::vector<Rat> mu = minimalPolynomial(f);
    if (mu.size() <= 2) continue;  // degree <= 1 cannot split
    const std::vector<Rat> roots = rationalRoots(
        [&] {
          auto d = polyDerivative(mu);
          auto g = polyGcd(mu, d);
          return polyDivMod(mu, g).first;  // square-free part
        }());
    if (roots.empty()) continue;
    // Factor off each rational root at full multiplicity; the leftover factor
    // (if nonconstant) contributes one more block.
    std::vector<std::pair<Rat, std::size_t>> rootMult;
    std::vector<Rat> rest = mu;
    for (const Rat& a : roots) {
      std::size_t mult = 0;
      const std::vector<Rat> lin{-a, Rat(1)};
      for (;;) {
        auto [q, r] = polyDivMod(rest, lin);
        if (!r.empty()) break;
        rest = std::move(q);
        ++mult;
      }
      rootMult.push_back({a, mult});
    }
    const std::size_t blocks = rootMult.size() + (rest.size() > 1 ? 1 : 0);
    if (blocks < 2) continue;
    for (const auto& [a, mult] : rootMult) {
      Mat shifted = f;
      for (std::size_t r = 0; r < m.dim; ++r) shifted.at(r, r) -= a;
      Mat power = Mat::identity(m.dim);
      for (std::size_t k = 0; k < mult; ++k) power = power * shifted;
      const Mat rows = kernelBasis(power);
      const SubmoduleData sub = submoduleOnRows(m, rows);
      decomposeInto(sub.module, sub.inclusion * inclusionToRoot, out, rng);
    }
    if (rest.size() > 1) {
      const Mat rows = kernelBasis(polyEvalMat(rest, f));
      const SubmoduleData sub = submoduleOnRows(m, rows);
      decomposeInto(sub.module, sub.inclusion * inclusionToRoot, out, rng);
    }
    return;
  }
  out.push_back({m, inclusionToRoot, false});
}

}  // namespace detail

/// Splits M into indecomposable summands where a rational splitting can be
/// exhibited. Summands whose endomorphism ring is local are certified; when no
/// splitting endomorphism with rational spectrum is found for a decomposable
/// piece it is reported unsplit with certifiedIndecomposable = false.
[[nodiscard]] inline Decomposition decomposeModule(const RightModule& m,
                                                   std::uint64_t seed = 20240823) {
  Decomposition d;
  Rng rng(seed);
  detail::decomposeInto(m, Mat::identity(m.dim), d.summands, rng);
  for (const Summand& s : d.summands)
    if (!s.certifiedIndecomposable) d.allCertified = false;
  return d;
}

// ====== Corner restriction ======

struct CornerRestriction {
  RightModule module;  // M * e over the corner algebra eAe
  Mat rows;            // basis of M * e inside M, canonical RREF
};

[[nodiscard]] inline CornerRestriction restrictToCorner(const RightModule& m,
                                                        const Subalgebra& corner,
                                                        const Vec& e) {
  CornerRestriction out;
  out.rows = rowSpaceBasis(m.actionOf(e));
  std::vector<Mat> act;
  act.reserve(corner.sub.dim());
  for (std::size_t c = 0; c < corner.sub.dim(); ++c) {
    auto sol = solveLinear(out.rows, out.rows * m.actionOf(corner.inclusion.row(c)));
    if (!sol) throw std::logic_error("restrictToCorner: action left the corner space");
    act.push_back(std::move(*sol));
  }
  out.module = makeModule(corner.sub, std::move(act), m.name + "|corner");
  return out;
}

}  // namespace gendobocs
