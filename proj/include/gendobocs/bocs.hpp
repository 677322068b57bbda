#pragma once

// The bocs module category attached to a verified coring (A, W): hom spaces
// Hom_A(M, Hom_A(W, N)), the convolution-style composition through the
// comultiplication, identities, the comparison functor from plain module
// maps, canonical isomorphisms M -> Hom_A(W, M), and the dimension-level
// equivalence with modules over the corner algebra.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gendobocs/gendo.hpp>

namespace gendobocs {

/// Basis of Hom_B(M, N) = Hom_A(M, Hom_A(W, N)). A bocs hom M => N is an
/// M.dim x dim Hom_A(W, N) matrix against target.basis.
struct BocsHomSpaceData {
  HomModuleData target;    // Hom_A(W, N) with its basis
  std::vector<Mat> basis;  // module maps M -> target.module
};

[[nodiscard]] inline BocsHomSpaceData bocsHomSpace(const Coring& c, const RightModule& m,
                                                   const RightModule& n) {
  detail::requireVerified(c, "bocsHomSpace");
  if (!m.algebra.sameAs(c.algebra) || !n.algebra.sameAs(c.algebra))
    throw std::invalid_argument("bocsHomSpace: modules over a different algebra");
  BocsHomSpaceData out{homModule(c.carrier, n), {}};
  out.basis = homSpace(m, out.target.module);
  return out;
}

namespace detail {

/// Shared plumbing for composition into a fixed target P: the uncurrying
/// Hom_A(W, Hom_A(W, P)) -> Hom_A(W (x)_A W, P) followed by precomposition
/// with the comultiplication. Their product `collapse` is the matrix whose
/// invertibility realizes Hom_A(W, Hom_A(W, P)) ~ Hom_A(W, P).
struct CurryData {
  HomModuleData homP;              // Hom_A(W, P)
  HomModuleData homHomP;           // Hom_A(W, Hom_A(W, P))
  std::vector<Mat> homSquareP;     // Hom_A(W (x) W, P)
  Mat uncurry;                     // homHomP coords -> homSquareP coords
  Mat precomposeMu;                // homSquareP coords -> homP coords
  Mat collapse;                    // uncurry * precomposeMu
};

[[nodiscard]] inline CurryData curryData(const Coring& c, const RightModule& p) {
  CurryData out;
  out.homP = homModule(c.carrier, p);
  out.homHomP = homModule(c.carrier, out.homP.module);
  out.homSquareP = homSpace(asRightModule(c.square.product), p);
  const std::size_t dW = c.carrier.dim;

  out.uncurry = Mat(out.homHomP.basis.size(), out.homSquareP.size());
  for (std::size_t r = 0; r < out.homHomP.basis.size(); ++r) {
    const Mat& u = out.homHomP.basis[r];  // dW x dim homP
    Mat ambient(dW * dW, p.dim);
    for (std::size_t i = 0; i < dW; ++i)
      for (std::size_t j = 0; j < dW; ++j)
        for (std::size_t h = 0; h < out.homP.basis.size(); ++h) {
          if (u.at(i, h) == 0) continue;
          for (std::size_t cc = 0; cc < p.dim; ++cc)
            ambient.at(i * dW + j, cc) += u.at(i, h) * out.homP.basis[h].at(j, cc);
        }
    const auto co = homCoordinates(out.homSquareP, c.square.section * ambient);
    if (!co) throw std::logic_error("curryData: uncurried map left the hom space");
    for (std::size_t k = 0; k < co->size(); ++k) out.uncurry.at(r, k) = (*co)[k];
  }

  out.precomposeMu = Mat(out.homSquareP.size(), out.homP.basis.size());
  for (std::size_t v = 0; v < out.homSquareP.size(); ++v) {
    const auto co = homCoordinates(out.homP.basis, c.comul * out.homSquareP[v]);
    if (!co) throw std::logic_error("curryData: precomposition left the hom space");
    for (std::size_t k = 0; k < co->size(); ++k) out.precomposeMu.at(v, k) = (*co)[k];
  }
  out.collapse = out.uncurry * out.precomposeMu;
  return out;
}

}  // namespace detail

/// Composite of bocs homs f: M => N and g: N => P: apply f, push through
/// Hom(W, g), uncurry, precompose with the comultiplication.
[[nodiscard]] inline Mat bocsCompose(const Coring& c, const RightModule& m,
                                     const RightModule& n, const RightModule& p,
                                     const Mat& g, const Mat& f) {
  detail::requireVerified(c, "bocsCompose");
  const HomModuleData homN = homModule(c.carrier, n);
  const detail::CurryData cd = detail::curryData(c, p);
  if (!isModuleMap(m, homN.module, f))
    throw std::invalid_argument("bocsCompose: f is not a bocs hom from the source");
  if (!isModuleMap(n, cd.homP.module, g))
    throw std::invalid_argument("bocsCompose: g is not a bocs hom into the target");
  Mat wg(homN.basis.size(), cd.homHomP.basis.size());
  for (std::size_t h = 0; h < homN.basis.size(); ++h) {
    const auto co = homCoordinates(cd.homHomP.basis, homN.basis[h] * g);
    if (!co) throw std::logic_error("bocsCompose: pushforward left the hom space");
    for (std::size_t k = 0; k < co->size(); ++k) wg.at(h, k) = (*co)[k];
  }
  return f * wg * cd.collapse;
}

/// The unit of M in the bocs category: m -> (w -> m . eps(w)).
[[nodiscard]] inline Mat bocsIdentity(const Coring& c, const RightModule& m) {
  detail::requireVerified(c, "bocsIdentity");
  const HomModuleData hm = homModule(c.carrier, m);
  const std::size_t n = c.algebra.dim();
  Mat out(m.dim, hm.basis.size());
  for (std::size_t r = 0; r < m.dim; ++r) {
    Mat toM(n, m.dim);  // a -> m_r . a
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t cc = 0; cc < m.dim; ++cc) toM.at(i, cc) = m.action[i].at(r, cc);
    const auto co = homCoordinates(hm.basis, c.counit * toM);
    if (!co) throw std::logic_error("bocsIdentity: unit is not a module map");
    for (std::size_t k = 0; k < co->size(); ++k) out.at(r, k) = (*co)[k];
  }
  return out;
}

/// The canonical map M -> Hom_A(W, M) underlying the unit, with its rank
/// flags. Injectivity and bijectivity track the dominant dimension of M.
struct UnitMapData {
  HomModuleData hom;  // Hom_A(W, M)
  Mat matrix;
  bool injective = false;
  bool bijective = false;
};

[[nodiscard]] inline UnitMapData mapIM(const Coring& c, const RightModule& m) {
  UnitMapData out{homModule(c.carrier, m), bocsIdentity(c, m)};
  out.injective = rowSpaceBasis(out.matrix).rows() == m.dim;
  out.bijective =
      out.matrix.rows() == out.matrix.cols() && invert(out.matrix).has_value();
  return out;
}

/// The comparison functor on morphisms: a module map f: M -> N becomes the
/// bocs hom f followed by the unit of N. phi(id) = 1_M; phi(f.g) composes in
/// the bocs category.
[[nodiscard]] inline Mat phiFunctor(const Coring& c, const RightModule& m,
                                    const RightModule& n, const Mat& f) {
  if (!isModuleMap(m, n, f))
    throw std::invalid_argument("phiFunctor: not a module map");
  return f * bocsIdentity(c, n);
}

/// M is the zero object of the bocs category iff its unit vanishes iff the
/// two-sided ideal generated by e annihilates M; both routes are computed and
/// must agree.
[[nodiscard]] inline bool bocsIsZero(const Coring& c, const Vec& e, const RightModule& m) {
  const bool unitZero = bocsIdentity(c, m).isZero();
  const Mat ideal = idealClosure(c.algebra, {e});
  bool annihilated = true;
  for (std::size_t r = 0; r < ideal.rows() && annihilated; ++r)
    annihilated = m.actionOf(ideal.row(r)).isZero();
  if (unitZero != annihilated)
    throw std::logic_error("bocsIsZero: unit vanishing disagrees with ideal annihilation");
  return unitZero;
}

/// Explicit mutually inverse bocs homs between M and its inverse-functor
/// image Hom_A(W, M); the collapse matrix of curryData is invertible, which
/// is exactly the statement that the image has stabilized.
struct CanonicalBocsIso {
  RightModule inverseImage;  // Hom_A(W, M) as a module
  Mat to;                    // M => inverseImage
  Mat from;                  // inverseImage => M
};

[[nodiscard]] inline CanonicalBocsIso canonicalBocsIso(const Coring& c, const RightModule& m) {
  detail::requireVerified(c, "canonicalBocsIso");
  const detail::CurryData cd = detail::curryData(c, m);
  if (cd.collapse.rows() != cd.collapse.cols())
    throw std::logic_error("canonicalBocsIso: hom spaces of unequal dimension");
  const auto inv = invert(cd.collapse);
  if (!inv) throw std::logic_error("canonicalBocsIso: collapse matrix is singular");
  CanonicalBocsIso out;
  out.inverseImage = cd.homP.module;
  out.to = bocsIdentity(c, m) * *inv;
  out.from = Mat::identity(cd.homP.basis.size());
  if (!isModuleMap(m, cd.homHomP.module, out.to))
    throw std::logic_error("canonicalBocsIso: constructed map is not a bocs hom");
  if (bocsCompose(c, m, out.inverseImage, m, out.from, out.to) != bocsIdentity(c, m))
    throw std::logic_error("canonicalBocsIso: backward-forward composite is not the unit");
  if (bocsCompose(c, out.inverseImage, m, out.inverseImage, out.to, out.from) !=
      bocsIdentity(c, out.inverseImage))
    throw std::logic_error("canonicalBocsIso: forward-backward composite is not the unit");
  return out;
}

/// Decides isomorphism in the bocs category by reducing both objects to their
/// inverse-functor images and testing those as plain modules; witnesses are
/// composed back and re-verified under bocs composition.
struct BocsIsoResult {
  IsoResult::Verdict verdict = IsoResult::Verdict::Undecided;
  Mat forward;   // M => N
  Mat backward;  // N => M
  std::string note;
};

[[nodiscard]] inline BocsIsoResult bocsIsIsomorphic(const Coring& c, const RightModule& m,
                                                    const RightModule& n,
                                                    std::uint64_t seed = 20240823) {
  const CanonicalBocsIso cm = canonicalBocsIso(c, m);
  const CanonicalBocsIso cn = canonicalBocsIso(c, n);
  const IsoResult mid = isoModules(cm.inverseImage, cn.inverseImage, seed);
  BocsIsoResult out;
  out.note = mid.note;
  if (mid.verdict != IsoResult::Verdict::Isomorphic) {
    out.verdict = mid.verdict;
    return out;
  }
  const Mat stepF = phiFunctor(c, cm.inverseImage, cn.inverseImage, mid.witness);
  const Mat stepB = phiFunctor(c, cn.inverseImage, cm.inverseImage, mid.witnessInverse);
  out.forward = bocsCompose(
      c, m, cn.inverseImage, n, cn.from,
      bocsCompose(c, m, cm.inverseImage, cn.inverseImage, stepF, cm.to));
  out.backward = bocsCompose(
      c, n, cm.inverseImage, m, cm.from,
      bocsCompose(c, n, cn.inverseImage, cm.inverseImage, stepB, cn.to));
  if (bocsCompose(c, m, n, m, out.backward, out.forward) != bocsIdentity(c, m) ||
      bocsCompose(c, n, m, n, out.forward, out.backward) != bocsIdentity(c, n))
    throw std::logic_error("bocsIsIsomorphic: composed witnesses are not mutually inverse");
  out.verdict = IsoResult::Verdict::Isomorphic;
  return out;
}

/// Dimension-level comparison with the corner module category: for each pair
/// the bocs hom dimension against dim Hom_{eAe} between the corner
/// restrictions of the inverse-functor images.
struct CornerEquivalenceReport {
  Mat bocsDims;    // entry (i, j) = dim Hom_B(M_i, M_j)
  Mat cornerDims;  // entry (i, j) = dim Hom_{eAe}(Hom(W, M_i) e, Hom(W, M_j) e)
  bool match = false;
};

[[nodiscard]] inline CornerEquivalenceReport eAeEquivalenceCheck(
    const Coring& c, const Vec& e, const std::vector<RightModule>& mods) {
  detail::requireVerified(c, "eAeEquivalenceCheck");
  const Subalgebra corner = idempotentSubalgebra(c.algebra, e);
  const std::size_t k = mods.size();
  std::vector<HomModuleData> homs;
  std::vector<RightModule> restricted;
  homs.reserve(k);
  restricted.reserve(k);
  for (const RightModule& mod : mods) {
    homs.push_back(homModule(c.carrier, mod));
    restricted.push_back(restrictToCorner(homs.back().module, corner, e).module);
  }
  CornerEquivalenceReport out;
  out.bocsDims = Mat(k, k);
  out.cornerDims = Mat(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      out.bocsDims.at(i, j) = Rat(homSpace(mods[i], homs[j].module).size());
      out.cornerDims.at(i, j) = Rat(homSpace(restricted[i], restricted[j]).size());
    }
  out.match = out.bocsDims == out.cornerDims;
  return out;
}

/// For M of dominant dimension at least two, h -> h . 1_M identifies the
/// plain endomorphism ring with the bocs endomorphism ring.
struct EndRingIso {
  std::vector<Mat> endBasis;   // Hom_A(M, M)
  std::vector<Mat> bocsBasis;  // Hom_B(M, M)
  Mat coords;                  // endBasis coordinates -> bocsBasis coordinates
  bool bijective = false;
  bool multiplicative = false;
};

[[nodiscard]] inline EndRingIso endomorphismRingIso(const Coring& c, const RightModule& m) {
  if (!atLeastTwo(dominantDimension(m)))
    throw std::invalid_argument("endomorphismRingIso: dominant dimension below two");
  detail::requireVerified(c, "endomorphismRingIso");
  EndRingIso out;
  out.endBasis = homSpace(m, m);
  BocsHomSpaceData bh = bocsHomSpace(c, m, m);
  out.bocsBasis = std::move(bh.basis);
  const Mat unit = bocsIdentity(c, m);
  out.coords = Mat(out.endBasis.size(), out.bocsBasis.size());
  for (std::size_t r = 0; r < out.endBasis.size(); ++r) {
    const auto co = homCoordinates(out.bocsBasis, out.endBasis[r] * unit);
    if (!co) throw std::logic_error("endomorphismRingIso: image left the bocs hom space");
    for (std::size_t kk = 0; kk < co->size(); ++kk) out.coords.at(r, kk) = (*co)[kk];
  }
  out.bijective = out.coords.rows() == out.coords.cols() && invert(out.coords).has_value();
  out.multiplicative = true;
  for (std::size_t i = 0; i < out.endBasis.size() && out.multiplicative; ++i)
    for (std::size_t j = 0; j < out.endBasis.size(); ++j) {
      const Mat lhs = (out.endBasis[i] * out.endBasis[j]) * unit;
      const Mat rhs = bocsCompose(c, m, m, m, out.endBasis[j] * unit, out.endBasis[i] * unit);
      if (lhs != rhs) {
        out.multiplicative = false;
        break;
      }
    }
  return out;
}

/// Existence of a coring structure on (A, D(A)): constructive on success, a
/// dimension or exhaustive-search certificate on failure.
struct BocsExistence {
  Verdict exists = Verdict::Undecided;
  GendoReport report;
  std::optional<Coring> coring;  // verified, carried by D(A)
  std::string evidence;
};

[[nodiscard]] inline BocsExistence decideBocsExistence(const Algebra& a,
                                                       std::uint64_t seed = 20240823) {
  BocsExistence out;
  out.report = classify(a, seed);
  out.exists = out.report.isGendoSymmetric;
  if (out.exists == Verdict::Yes) {
    const DAIsoData dai = buildDAIso(a, *out.report.minimalFaithfulIdempotent, seed);
    out.coring = transportCoring(dai.base, dai.dual, dai.theta);
    out.evidence = "coring transported onto the dual bimodule and verified";
  } else if (out.exists == Verdict::No) {
    const Bimodule da = dualBimodule(regularBimodule(a));
    const TensorSpace square = tensorOverAlgebra(da, da);
    if (square.product.dim != da.dim)
      out.evidence = "dim D(A) (x)_A D(A) = " + std::to_string(square.product.dim) +
                     " differs from dim D(A) = " + std::to_string(da.dim);
    else
      out.evidence =
          "D(A) (x)_A D(A) certified not isomorphic to D(A): " + out.report.squareWitness.note;
  } else {
    out.evidence = out.report.note;
  }
  return out;
}

}  // namespace gendobocs
