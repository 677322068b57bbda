#pragma once

// Finite-dimensional associative unital algebras over the rationals, presented
// by structure constants on a fixed basis together with a distinguished
// complete set of orthogonal primitive idempotents.
//
// Conventions used throughout the library:
//   * elements are coordinate ROW vectors; maps act by right multiplication;
//   * rightMul(a) is the matrix of x |-> x*a (a multiplicative assignment);
//   * leftMul(a) is the matrix of x |-> a*x (an anti-multiplicative one).

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gendobocs/matrix.hpp"
#include "gendobocs/rational.hpp"

namespace gendobocs {

/// One summand of a basis product: coefficient `c` on basis vector `k`.
struct SparseTerm {
  std::size_t k;
  Rat c;
};
using SparseRow = std::vector<SparseTerm>;  // sorted by k, coefficients nonzero

class Algebra {
 public:
  Algebra() = default;

  /// `products[i*dim + j]` lists the nonzero coefficients of basis_i * basis_j.
  Algebra(std::size_t dim, std::vector<std::string> labels,
          std::vector<SparseRow> products, Vec unit,
          std::vector<Vec> idempotents) {
    if (labels.size() != dim || products.size() != dim * dim ||
        unit.size() != dim)
      throw std::invalid_argument("Algebra: inconsistent presentation sizes");
    for (const auto& e : idempotents)
      if (e.size() != dim)
        throw std::invalid_argument("Algebra: idempotent of wrong length");
    for (auto& row : products) normalizeRow(row);
    d_ = std::make_shared<Data>();
    d_->dim = dim;
    d_->labels = std::move(labels);
    d_->prod = std::move(products);
    d_->unit = std::move(unit);
    d_->idempotents = std::move(idempotents);
  }

  /// Convenience: build the product table from a dense callback.
  static Algebra fromProducts(std::size_t dim, std::vector<std::string> labels,
                              const std::function<Vec(std::size_t, std::size_t)>& mul,
                              Vec unit, std::vector<Vec> idempotents) {
    std::vector<SparseRow> prod(dim * dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Vec p = mul(i, j);
        if (p.size() != dim)
          throw std::invalid_argument("fromProducts: product of wrong length");
        for (std::size_t k = 0; k < dim; ++k)
          if (p[k] != 0) prod[i * dim + j].push_back({k, p[k]});
      }
    return Algebra(dim, std::move(labels), std::move(prod), std::move(unit),
                   std::move(idempotents));
  }

  [[nodiscard]] bool valid() const { return static_cast<bool>(d_); }
  [[nodiscard]] std::size_t dim() const { return d_->dim; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return d_->labels; }
  [[nodiscard]] const Vec& unit() const { return d_->unit; }
  [[nodiscard]] const std::vector<Vec>& idempotents() const { return d_->idempotents; }
  [[nodiscard]] const SparseRow& productRow(std::size_t i, std::size_t j) const {
    return d_->prod[i * d_->dim + j];
  }

  /// Two handles denote the same algebra object (pointer identity).
  [[nodiscard]] bool sameAs(const Algebra& o) const { return d_ == o.d_; }

  [[nodiscard]] Vec mul(const Vec& a, const Vec& b) const {
    const std::size_t n = d_->dim;
    Vec r(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (b[j] == 0) continue;
        const Rat ab = a[i] * b[j];
        for (const auto& t : d_->prod[i * n + j]) r[t.k] += ab * t.c;
      }
    }
    return r;
  }

  [[nodiscard]] Vec basisVec(std::size_t i) const { return unitVec(d_->dim, i); }

  /// Matrix of x |-> x*a in the basis (rows = images of basis vectors).
  [[nodiscard]] Mat rightMul(const Vec& a) const {
    const std::size_t n = d_->dim;
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t j = 0; j < n; ++j) {
        if (a[j] == 0) continue;
        for (const auto& t : d_->prod[r * n + j]) m.at(r, t.k) += a[j] * t.c;
      }
    return m;
  }

  /// Matrix of x |-> a*x in the basis.
  [[nodiscard]] Mat leftMul(const Vec& a) const {
    const std::size_t n = d_->dim;
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (const auto& t : d_->prod[i * n + r]) m.at(r, t.k) += a[i] * t.c;
      }
    return m;
  }

  [[nodiscard]] Mat rightMulBasis(std::size_t j) const { return rightMul(basisVec(j)); }
  [[nodiscard]] Mat leftMulBasis(std::size_t i) const { return leftMul(basisVec(i)); }

  /// Jacobson radical as canonical RREF rows. Over a characteristic-zero
  /// field the radical is exactly the kernel of the trace form
  /// (x, y) |-> trace of right multiplication by x*y.
  [[nodiscard]] const Mat& radicalBasis() const {
    if (!d_->radicalReady) {
      const std::size_t n = d_->dim;
      Vec tr(n, Rat(0));
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t r = 0; r < n; ++r)
          for (const auto& t : d_->prod[r * n + k])
            if (t.k == r) tr[k] += t.c;
      Mat gram(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          for (const auto& t : d_->prod[i * n + j])
            gram.at(i, j) += t.c * tr[t.k];
      d_->radicalRref = kernelBasis(gram);
      d_->radicalReady = true;
    }
    return d_->radicalRref;
  }

  [[nodiscard]] std::size_t radicalDim() const { return radicalBasis().rows(); }

  /// Indices of a generating set: basis vectors added greedily until the span
  /// of all products of the unit and the chosen vectors is the whole algebra.
  [[nodiscard]] const std::vector<std::size_t>& generatorIndices() const {
    if (!d_->gensReady) {
      const std::size_t n = d_->dim;
      std::vector<std::size_t> gens;
      RowReducer red(n);
      red.addRow(d_->unit);
      auto close = [&] {
        for (;;) {
          const std::size_t before = red.rank();
          const Mat snapshot = red.basis();
          for (std::size_t r = 0; r < snapshot.rows(); ++r)
            for (std::size_t g : gens) {
              red.addRow(mul(snapshot.row(r), basisVec(g)));
              red.addRow(mul(basisVec(g), snapshot.row(r)));
            }
          if (red.rank() == before) return;
        }
      };
      for (std::size_t i = 0; i < n && red.rank() < n; ++i) {
        if (red.contains(basisVec(i))) continue;
        gens.push_back(i);
        red.addRow(basisVec(i));
        close();
      }
      d_->gens = std::move(gens);
      d_->gensReady = true;
    }
    return d_->gens;
  }

  /// Opposite algebra on the same basis; taking it twice returns the original
  /// handle (the two caches point at each other).
  [[nodiscard]] Algebra opposite() const {
    if (auto sp = d_->opposite.lock()) return Algebra(sp);
    const std::size_t n = d_->dim;
    std::vector<SparseRow> prod(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) prod[i * n + j] = d_->prod[j * n + i];
    Algebra op(n, d_->labels, std::move(prod), d_->unit, d_->idempotents);
    d_->opposite = op.d_;
    op.d_->opposite = d_;
    d_->oppositeHold = op.d_;
    return op;
  }

 private:
  struct Data {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::vector<SparseRow> prod;
    Vec unit;
    std::vector<Vec> idempotents;

    bool radicalReady = false;
    Mat radicalRref;
    bool gensReady = false;
    std::vector<std::size_t> gens;
    std::weak_ptr<Data> opposite;
    std::shared_ptr<Data> oppositeHold;  // keeps the partner alive
  };

  explicit Algebra(std::shared_ptr<Data> d) : d_(std::move(d)) {}

  static void normalizeRow(SparseRow& row) {
    std::sort(row.begin(), row.end(),
              [](const SparseTerm& a, const SparseTerm& b) { return a.k < b.k; });
    SparseRow out;
    for (const auto& t : row) {
      if (t.c == 0) continue;
      if (!out.empty() && out.back().k == t.k)
        out.back().c += t.c;
      else
        out.push_back(t);
    }
    std::erase_if(out, [](const SparseTerm& t) { return t.c == 0; });
    row = std::move(out);
  }

  std::shared_ptr<Data> d_;
};

struct PresentationReport {
  bool ok = true;
  std::vector<std::string> failures;
};

namespace detail {

inline void reportFailure(PresentationReport& rep, std::string msg) {
  rep.ok = false;
  constexpr std::size_t kCap = 32;
  if (rep.failures.size() < kCap)
    rep.failures.push_back(std::move(msg));
  else if (rep.failures.size() == kCap)
    rep.failures.push_back("... further failures suppressed");
}

inline void checkIdempotentFamily(const Algebra& a, PresentationReport& rep) {
  const auto& es = a.idempotents();
  Vec sum(a.dim(), Rat(0));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = 0; j < es.size(); ++j) {
      const Vec p = a.mul(es[i], es[j]);
      const Vec want = (i == j) ? es[i] : Vec(a.dim(), Rat(0));
      if (p != want) {
        std::ostringstream os;
        os << "idempotent relation fails at pair (" << i << ", " << j << ")";
        reportFailure(rep, os.str());
      }
    }
    for (std::size_t k = 0; k < a.dim(); ++k) sum[k] += es[i][k];
  }
  if (sum != a.unit()) reportFailure(rep, "idempotents do not sum to the unit");

  // Primitivity: e is primitive iff e*(A/J)*e is one-dimensional, computed as
  // rank(eAe + J) - rank(J).
  const Mat& rad = a.radicalBasis();
  for (std::size_t i = 0; i < es.size(); ++i) {
    RowReducer red(a.dim());
    for (std::size_t r = 0; r < rad.rows(); ++r) red.addRow(rad.row(r));
    const std::size_t radRank = red.rank();
    const Mat le = a.leftMul(es[i]);
    const Mat re = a.rightMul(es[i]);
    for (std::size_t b = 0; b < a.dim(); ++b)
      red.addRow(mulRowMat(mulRowMat(a.basisVec(b), le), re));
    if (red.rank() - radRank != 1) {
      std::ostringstream os;
      os << "idempotent " << i << " is not primitive";
      reportFailure(rep, os.str());
    }
  }
}

}  // namespace detail

/// Verifies every presentation invariant: associativity and two-sided unit on
/// all basis triples/vectors, plus the idempotent family axioms.
[[nodiscard]] inline PresentationReport checkPresentation(const Algebra& a) {
  PresentationReport rep;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec bi = a.basisVec(i);
    if (a.mul(a.unit(), bi) != bi || a.mul(bi, a.unit()) != bi) {
      std::ostringstream os;
      os << "unit fails on basis vector " << i << " (" << a.labels()[i] << ")";
      detail::reportFailure(rep, os.str());
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = a.mul(a.basisVec(i), a.basisVec(j));
      for (std::size_t k = 0; k < n; ++k) {
        const Vec lhs = a.mul(ij, a.basisVec(k));
        const Vec rhs = a.mul(a.basisVec(i), a.mul(a.basisVec(j), a.basisVec(k)));
        if (lhs != rhs) {
          std::ostringstream os;
          os << "associativity fails at triple (" << i << ", " << j << ", " << k
             << ")";
          detail::reportFailure(rep, os.str());
        }
      }
    }
  detail::checkIdempotentFamily(a, rep);
  return rep;
}

/// Checks only the idempotent family: orthogonal, idempotent, summing to the
/// unit, and each primitive.
[[nodiscard]] inline PresentationReport validateIdempotents(const Algebra& a) {
  PresentationReport rep;
  detail::checkIdempotentFamily(a, rep);
  return rep;
}

[[nodiscard]] inline Algebra oppositeAlgebra(const Algebra& a) { return a.opposite(); }

[[nodiscard]] inline Mat radical(const Algebra& a) { return a.radicalBasis(); }

/// Center as canonical RREF rows: the joint kernel of all rightMul - leftMul.
[[nodiscard]] inline Mat center(const Algebra& a) {
  const std::size_t n = a.dim();
  Mat wide(n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat diff = a.rightMulBasis(i) - a.leftMulBasis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) wide.at(r, i * n + c) = diff.at(r, c);
  }
  return kernelBasis(wide);
}

/// Tensor product of algebras on the Kronecker basis (i, j) -> i*dimB + j.
/// Idempotents are all pairwise products of the factors' idempotents.
[[nodiscard]] inline Algebra tensorAlgebras(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      labels[i * nb + j] = a.labels()[i] + "*" + b.labels()[j];
  std::vector<SparseRow> prod(n * n);
  for (std::size_t i1 = 0; i1 < na; ++i1)
    for (std::size_t j1 = 0; j1 < nb; ++j1)
      for (std::size_t i2 = 0; i2 < na; ++i2)
        for (std::size_t j2 = 0; j2 < nb; ++j2) {
          SparseRow& row = prod[(i1 * nb + j1) * n + (i2 * nb + j2)];
          for (const auto& ta : a.productRow(i1, i2))
            for (const auto& tb : b.productRow(j1, j2))
              row.push_back({ta.k * nb + tb.k, ta.c * tb.c});
        }
  Vec unit(n, Rat(0));
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) unit[i * nb + j] = a.unit()[i] * b.unit()[j];
  std::vector<Vec> idem;
  for (const auto& ea : a.idempotents())
    for (const auto& eb : b.idempotents()) {
      Vec e(n, Rat(0));
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) e[i * nb + j] = ea[i] * eb[j];
      idem.push_back(std::move(e));
    }
  return Algebra(n, std::move(labels), std::move(prod), std::move(unit),
                 std::move(idem));
}

/// Enveloping algebra: opposite tensor the algebra itself, so that bimodules
/// become right modules over it.
[[nodiscard]] inline Algebra envelopingAlgebra(const Algebra& a) {
  return tensorAlgebras(a.opposite(), a);
}

/// Corner algebra eAe for an idempotent e, with the inclusion into A.
struct Subalgebra {
  Algebra sub;
  Mat inclusion;  // sub.dim() x parent.dim(): basis of the corner inside A

  [[nodiscard]] Vec toParent(const Vec& v) const { return mulRowMat(v, inclusion); }
  [[nodiscard]] std::optional<Vec> toSub(const Vec& parentVec) const {
    auto sol = solveLinear(inclusion, Mat::fromRows({parentVec}, inclusion.cols()));
    if (!sol) return std::nullopt;
    return sol->row(0);
  }
};

/// eAe on the canonical basis of the subspace eAe of A. Its idempotent family
/// is the set of nonzero products e_i*e with e_i running over the parent's
/// distinguished idempotents that land inside the corner; when that family is
/// not a complete orthogonal primitive family of the corner the presentation
/// report of the result will say so.
[[nodiscard]] inline Subalgebra idempotentSubalgebra(const Algebra& a, const Vec& e) {
  if (a.mul(e, e) != e)
    throw std::invalid_argument("idempotentSubalgebra: element is not idempotent");
  const std::size_t n = a.dim();
  const Mat le = a.leftMul(e);
  const Mat re = a.rightMul(e);
  RowReducer red(n);
  for (std::size_t b = 0; b < n; ++b)
    red.addRow(mulRowMat(mulRowMat(a.basisVec(b), le), re));
  const Mat incl = red.basis();
  const std::size_t m = incl.rows();

  auto coords = [&](const Vec& v) {
    auto sol = solveLinear(incl, Mat::fromRows({v}, n));
    if (!sol) throw std::logic_error("idempotentSubalgebra: product left the corner");
    return sol->row(0);
  };
  std::vector<SparseRow> prod(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec p = coords(a.mul(incl.row(i), incl.row(j)));
      for (std::size_t k = 0; k < m; ++k)
        if (p[k] != 0) prod[i * m + j].push_back({k, p[k]});
    }
  const Vec unit = coords(e);
  std::vector<Vec> idem;
  for (const auto& ei : a.idempotents()) {
    const Vec p = a.mul(a.mul(e, ei), e);
    if (isZeroVec(p)) continue;
    if (a.mul(p, p) == p && a.mul(e, ei) == p && a.mul(ei, e) == p)
      idem.push_back(coords(p));
  }
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = "c" + std::to_string(i);
  Subalgebra out;
  out.sub = Algebra(m, std::move(labels), std::move(prod), unit, std::move(idem));
  out.inclusion = incl;
  return out;
}

/// Two-sided ideal generated by the given elements, as canonical RREF rows.
[[nodiscard]] inline Mat idealClosure(const Algebra& a, const std::vector<Vec>& gens) {
  RowReducer red(a.dim());
  for (const auto& g : gens) red.addRow(g);
  for (;;) {
    const std::size_t before = red.rank();
    const Mat snapshot = red.basis();
    for (std::size_t r = 0; r < snapshot.rows(); ++r)
      for (std::size_t b = 0; b < a.dim(); ++b) {
        red.addRow(a.mul(snapshot.row(r), a.basisVec(b)));
        red.addRow(a.mul(a.basisVec(b), snapshot.row(r)));
      }
    if (red.rank() == before) return red.basis();
  }
}

/// A/I for the two-sided ideal generated by `gens`. `zeroRing` is set when the
/// ideal is all of A (the quotient then has no unit and `quotient` is empty).
struct QuotientAlgebra {
  bool zeroRing = false;
  Algebra quotient;
  Mat idealBasis;  // RREF rows inside the parent
  Mat projection;  // parent.dim() x quotient.dim()
  Mat section;     // quotient.dim() x parent.dim()
};

[[nodiscard]] inline QuotientAlgebra quotientByIdeal(const Algebra& a,
                                                    const std::vector<Vec>& gens) {
  QuotientAlgebra out;
  out.idealBasis = idealClosure(a, gens);
  RowReducer red(a.dim());
  for (std::size_t r = 0; r < out.idealBasis.rows(); ++r)
    red.addRow(out.idealBasis.row(r));
  if (red.rank() == a.dim()) {
    out.zeroRing = true;
    return out;
  }
  const QuotientSpace qs = quotientByRowSpace(red);
  out.projection = qs.projection;
  out.section = qs.section;
  const std::size_t m = qs.basisIdx.size();
  std::vector<std::string> labels(m);
  for (std::size_t i = 0; i < m; ++i) labels[i] = "q" + std::to_string(i);
  std::vector<SparseRow> prod(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vec p =
          mulRowMat(a.mul(qs.section.row(i), qs.section.row(j)), qs.projection);
      for (std::size_t k = 0; k < m; ++k)
        if (p[k] != 0) prod[i * m + j].push_back({k, p[k]});
    }
  const Vec unit = mulRowMat(a.unit(), qs.projection);
  // Images of the parent idempotents that survive: keep the nonzero ones; the
  // family stays orthogonal and complete, though primitivity can be rechecked
  // by the caller via validateIdempotents.
  std::vector<Vec> idem;
  for (const auto& e : a.idempotents()) {
    Vec img = mulRowMat(e, qs.projection);
    if (!isZeroVec(img)) idem.push_back(std::move(img));
  }
  out.quotient =
      Algebra(m, std::move(labels), std::move(prod), unit, std::move(idem));
  return out;
}

/// Element of a specific algebra; a thin pairing used at API boundaries.
struct AlgebraElement {
  Algebra algebra;
  Vec coeffs;
};

[[nodiscard]] inline AlgebraElement multiply(const AlgebraElement& x,
                                             const AlgebraElement& y) {
  if (!x.algebra.sameAs(y.algebra))
    throw std::invalid_argument("multiply: elements of different algebras");
  return {x.algebra, x.algebra.mul(x.coeffs, y.coeffs)};
}

}  // namespace gendobocs
