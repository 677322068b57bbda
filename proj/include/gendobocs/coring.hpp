#pragma once

#include "bimodule.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gendobocs {

// ====== Corings ======
//
// A coring over A is a bimodule W with a comultiplication mu: W -> W (x)_A W
// and a counit eps: W -> A satisfying the counit laws and coassociativity.
// All structure maps are stored against the explicitly chosen tensor bases,
// so every axiom is a plain matrix identity.

enum class CoringVerified { Unverified, Verified, Failed };

struct Coring {
  Algebra algebra;
  Bimodule carrier;   // W
  TensorSpace square;  // W (x)_A W with its chosen basis
  Mat comul;          // carrier.dim x square.product.dim
  Mat counit;         // carrier.dim x algebra.dim
  CoringVerified verified = CoringVerified::Unverified;
  std::string failure;
};

struct CoringReport {
  bool ok = true;
  std::string firstFailure;
};

namespace detail {

inline void coringFail(CoringReport& rep, const std::string& what) {
  if (rep.ok) rep.firstFailure = what;
  rep.ok = false;
}

}  // namespace detail

/// Evaluates the bimodule-linearity of mu and eps, both counit laws and
/// coassociativity as exact matrix identities. Reports the first failure.
[[nodiscard]] inline CoringReport verifyCoringAxioms(const Coring& c) {
  CoringReport rep;
  const Algebra& a = c.algebra;
  const Bimodule& w = c.carrier;
  if (c.comul.rows() != w.dim || c.comul.cols() != c.square.product.dim ||
      c.counit.rows() != w.dim || c.counit.cols() != a.dim()) {
    detail::coringFail(rep, "structure map shapes do not match the carrier");
    return rep;
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (w.leftAct[i] * c.comul != c.comul * c.square.product.leftAct[i] ||
        w.rightAct[i] * c.comul != c.comul * c.square.product.rightAct[i]) {
      detail::coringFail(rep, "comultiplication is not a bimodule homomorphism");
      break;
    }
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (w.leftAct[i] * c.counit != c.counit * a.leftMulBasis(i) ||
        w.rightAct[i] * c.counit != c.counit * a.rightMulBasis(i)) {
      detail::coringFail(rep, "counit is not a bimodule homomorphism");
      break;
    }
  }
  // The remaining axioms push mu and eps through tensor functors, which is
  // only defined for bimodule homomorphisms; stop at the linearity failure.
  if (!rep.ok) return rep;
  const Bimodule reg = regularBimodule(a);
  const Mat idW = Mat::identity(w.dim);
  const TensorSpace wa = tensorOverAlgebra(w, reg);
  if (c.comul * tensorOfHoms(c.square, idW, c.counit, wa) != canonicalRightUnitMap(w, wa))
    detail::coringFail(rep, "left counit law (1 (x) eps) mu = c_l fails");
  const TensorSpace aw = tensorOverAlgebra(reg, w);
  if (c.comul * tensorOfHoms(c.square, c.counit, idW, aw) != canonicalLeftUnitMap(w, aw))
    detail::coringFail(rep, "right counit law (eps (x) 1) mu = c_r fails");
  const TensorSpace leftNested = tensorOverAlgebra(c.square.product, w);
  const TensorSpace rightNested = tensorOverAlgebra(w, c.square.product);
  const Mat assoc = associatorMap(c.square, leftNested, c.square, rightNested);
  const Mat lhs = c.comul * tensorOfHoms(c.square, c.comul, idW, leftNested) * assoc;
  const Mat rhs = c.comul * tensorOfHoms(c.square, idW, c.comul, rightNested);
  if (lhs != rhs) detail::coringFail(rep, "coassociativity fails");
  return rep;
}

/// Runs the axiom suite and stamps the tri-state verification field.
inline CoringReport stampVerification(Coring& c) {
  const CoringReport rep = verifyCoringAxioms(c);
  c.verified = rep.ok ? CoringVerified::Verified : CoringVerified::Failed;
  c.failure = rep.firstFailure;
  return rep;
}

namespace detail {

inline void requireVerified(Coring& c, const char* who) {
  if (!stampVerification(c).ok)
    throw std::logic_error(std::string(who) + ": construction failed its axiom suite: " +
                           c.failure);
}

/// Consumers holding a const coring: trust an existing Verified stamp,
/// otherwise verify a copy without mutating the argument.
inline void requireVerified(const Coring& c, const char* who) {
  if (c.verified == CoringVerified::Verified) return;
  if (c.verified == CoringVerified::Failed)
    throw std::logic_error(std::string(who) + ": coring failed its axiom suite: " + c.failure);
  Coring probe = c;
  requireVerified(probe, who);
}

}  // namespace detail

/// (A, A) with mu(a) = class(a (x) 1) and eps = identity.
[[nodiscard]] inline Coring trivialCoring(const Algebra& a) {
  Coring c;
  c.algebra = a;
  c.carrier = regularBimodule(a);
  c.square = tensorOverAlgebra(c.carrier, c.carrier);
  c.comul = Mat(a.dim(), c.square.product.dim);
  for (std::size_t k = 0; k < a.dim(); ++k)
    c.comul.setRow(k, mulRowMat(detail::kronRow(unitVec(a.dim(), k), a.unit()),
                                c.square.projection));
  c.counit = Mat::identity(a.dim());
  detail::requireVerified(c, "trivialCoring");
  return c;
}

/// The coring on W = Ae (x)_eAe eA: mu(ae (x) eb) = (ae (x) e) (x) (e (x) eb)
/// and eps(ae (x) eb) = aeb, assembled from the dual-basis data of eA.
[[nodiscard]] inline Coring coringFromIdempotent(const Algebra& a, const Vec& e) {
  const CornerBimodules cb = cornerBimodules(a, e);
  const TensorSpace w = tensorOverAlgebra(cb.ae, cb.ea);
  Coring c;
  c.algebra = a;
  c.carrier = w.product;
  c.square = tensorOverAlgebra(c.carrier, c.carrier);
  const std::size_t t = c.carrier.dim;
  // Classes of (ae_i (x) e) and (e (x) eb_j) inside W, precomputed per factor basis.
  std::vector<Vec> leftHalf(cb.ae.dim), rightHalf(cb.ea.dim);
  for (std::size_t i = 0; i < cb.ae.dim; ++i)
    leftHalf[i] = mulRowMat(detail::kronRow(unitVec(cb.ae.dim, i), cb.eInEa), w.projection);
  for (std::size_t j = 0; j < cb.ea.dim; ++j)
    rightHalf[j] = mulRowMat(detail::kronRow(cb.eInAe, unitVec(cb.ea.dim, j)), w.projection);
  c.comul = Mat(t, c.square.product.dim);
  c.counit = Mat(t, a.dim());
  for (std::size_t k = 0; k < t; ++k) {
    Vec comulRow(c.square.product.dim, Rat(0));
    Vec counitRow(a.dim(), Rat(0));
    for (std::size_t i = 0; i < cb.ae.dim; ++i)
      for (std::size_t j = 0; j < cb.ea.dim; ++j) {
        const Rat& coeff = w.section.at(k, i * cb.ea.dim + j);
        if (coeff == 0) continue;
        const Vec pure = mulRowMat(detail::kronRow(leftHalf[i], rightHalf[j]),
                                   c.square.projection);
        for (std::size_t p = 0; p < comulRow.size(); ++p) comulRow[p] += coeff * pure[p];
        const Vec prod = a.mul(cb.aeRows.row(i), cb.eaRows.row(j));
        for (std::size_t p = 0; p < counitRow.size(); ++p) counitRow[p] += coeff * prod[p];
      }
    c.comul.setRow(k, comulRow);
    c.counit.setRow(k, counitRow);
  }
  detail::requireVerified(c, "coringFromIdempotent");
  return c;
}

/// Conjugates a coring along a bimodule isomorphism theta: W -> W'. Throws
/// std::invalid_argument when theta is not an invertible bimodule map.
[[nodiscard]] inline Coring transportCoring(const Coring& c, const Bimodule& target,
                                            const Mat& theta) {
  if (!c.carrier.left.sameAs(target.left) || !c.carrier.right.sameAs(target.right))
    throw std::invalid_argument("transportCoring: algebra mismatch");
  if (theta.rows() != c.carrier.dim || theta.cols() != target.dim)
    throw std::invalid_argument("transportCoring: shape mismatch");
  for (std::size_t i = 0; i < c.algebra.dim(); ++i)
    if (c.carrier.leftAct[i] * theta != theta * target.leftAct[i] ||
        c.carrier.rightAct[i] * theta != theta * target.rightAct[i])
      throw std::invalid_argument("transportCoring: theta is not bimodule-linear");
  auto inv = invert(theta);
  if (!inv) throw std::invalid_argument("transportCoring: theta is not invertible");
  Coring out;
  out.algebra = c.algebra;
  out.carrier = target;
  out.square = tensorOverAlgebra(target, target);
  out.comul = *inv * c.comul * tensorOfHoms(c.square, theta, theta, out.square);
  out.counit = *inv * c.counit;
  detail::requireVerified(out, "transportCoring");
  return out;
}

namespace detail {

/// Permutation of Kronecker indices ((i, j), (k, l)) -> ((i, k), (j, l)):
/// rows over the (a*b)*(c*d) flat order, columns over (a*c)*(b*d).
[[nodiscard]] inline Mat middleSwapPermutation(std::size_t a, std::size_t b, std::size_t c,
                                               std::size_t d) {
  Mat m(a * b * c * d, a * b * c * d);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t l = 0; l < d; ++l)
          m.at((i * b + j) * (c * d) + k * d + l, (i * c + k) * (b * d) + j * d + l) = 1;
  return m;
}

}  // namespace detail

/// Componentwise tensor coring over tensorAlgebras(A1, A2): the carrier is
/// W1 (x)_K W2 with Kronecker actions, mu and eps are the Kronecker products
/// of the factors routed through the middle-swap identification.
[[nodiscard]] inline Coring tensorCorings(const Coring& c1, const Coring& c2) {
  Coring out;
  out.algebra = tensorAlgebras(c1.algebra, c2.algebra);
  const std::size_t d1 = c1.carrier.dim;
  const std::size_t d2 = c2.carrier.dim;
  out.carrier.left = out.algebra;
  out.carrier.right = out.algebra;
  out.carrier.dim = d1 * d2;
  out.carrier.name = c1.carrier.name + "(x)" + c2.carrier.name;
  for (std::size_t i = 0; i < c1.algebra.dim(); ++i)
    for (std::size_t j = 0; j < c2.algebra.dim(); ++j) {
      out.carrier.leftAct.push_back(kronecker(c1.carrier.leftAct[i], c2.carrier.leftAct[j]));
      out.carrier.rightAct.push_back(kronecker(c1.carrier.rightAct[i], c2.carrier.rightAct[j]));
    }
  out.square = tensorOverAlgebra(out.carrier, out.carrier);
  out.comul = kronecker(c1.comul * c1.square.section, c2.comul * c2.square.section) *
              detail::middleSwapPermutation(d1, d1, d2, d2) * out.square.projection;
  out.counit = kronecker(c1.counit, c2.counit);
  detail::requireVerified(out, "tensorCorings");
  return out;
}

}  // namespace gendobocs
