#include <catch2/catch_amalgamated.hpp>

#include "gendobocs/algebra.hpp"
#include "gendobocs/corpus.hpp"

using namespace gendobocs;

namespace {

Algebra fiveDim() { return corpusAlgebra("kupisch:[2,3]:cyclic").algebra; }

std::size_t labelIndex(const Algebra& a, const std::string& label) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.labels()[i] == label) return i;
  FAIL("missing label " + label);
  return 0;
}

}  // namespace

TEST_CASE("five-dimensional serial algebra multiplies paths by concatenation") {
  const Algebra a = fiveDim();
  REQUIRE(a.dim() == 5);
  const auto e0 = labelIndex(a, "e0");
  const auto e1 = labelIndex(a, "e1");
  const auto a01 = labelIndex(a, "p0.1");
  const auto a10 = labelIndex(a, "p1.1");
  const auto loop = labelIndex(a, "p1.2");

  // Arrow out of 1 followed by arrow out of 0 is the unique length-two path.
  CHECK(a.mul(a.basisVec(a10), a.basisVec(a01)) == a.basisVec(loop));
  // The other composition dies because e_0 A has radical square zero.
  CHECK(isZeroVec(a.mul(a.basisVec(a01), a.basisVec(a10))));
  // Idempotents absorb the paths that start or end at them.
  CHECK(a.mul(a.basisVec(e1), a.basisVec(a10)) == a.basisVec(a10));
  CHECK(a.mul(a.basisVec(a10), a.basisVec(e0)) == a.basisVec(a10));
  CHECK(isZeroVec(a.mul(a.basisVec(a10), a.basisVec(e1))));
  CHECK(isZeroVec(a.mul(a.basisVec(loop), a.basisVec(loop))));

  CHECK(checkPresentation(a).ok);
  CHECK(validateIdempotents(a).ok);
}

TEST_CASE("presentation checker flags broken tables") {
  // Valid three-dimensional local algebra: x*x = y, radical cube zero.
  const Algebra good = Algebra::fromProducts(
      3, {"u", "x", "y"},
      [](std::size_t i, std::size_t j) -> Vec {
        if (i == 0) return unitVec(3, j);
        if (j == 0) return unitVec(3, i);
        if (i == 1 && j == 1) return unitVec(3, 2);  // x*x = y
        return Vec(3, Rat(0));
      },
      unitVec(3, 0), {unitVec(3, 0)});
  CHECK(checkPresentation(good).ok);

  // Associativity broken: keep x*x = y but add y*x = x, so (x*x)*x = x while
  // x*(x*x) = x*y = 0.
  const Algebra nonassoc = Algebra::fromProducts(
      3, {"u", "x", "y"},
      [](std::size_t i, std::size_t j) -> Vec {
        if (i == 0) return unitVec(3, j);
        if (j == 0) return unitVec(3, i);
        if (i == 1 && j == 1) return unitVec(3, 2);
        if (i == 2 && j == 1) return unitVec(3, 1);  // y*x = x
        return Vec(3, Rat(0));
      },
      unitVec(3, 0), {unitVec(3, 0)});
  CHECK_FALSE(checkPresentation(nonassoc).ok);

  // Duplicated idempotent in the family: orthogonality and completeness fail.
  const Algebra dup = Algebra::fromProducts(
      2, {"u", "x"},
      [](std::size_t i, std::size_t j) -> Vec {
        if (i == 0) return unitVec(2, j);
        if (j == 0) return unitVec(2, 1);
        return Vec(2, Rat(0));  // x*x = 0
      },
      unitVec(2, 0), {unitVec(2, 0), unitVec(2, 0)});
  const auto rep = validateIdempotents(dup);
  CHECK_FALSE(rep.ok);
  CHECK_FALSE(rep.failures.empty());

  // A field extension is a valid ring but not a split presentation: the unit
  // is primitive yet u*(A/J)*u has dimension two, which the checker rejects.
  const Algebra ext = Algebra::fromProducts(
      2, {"u", "x"},
      [](std::size_t i, std::size_t j) -> Vec {
        if (i == 0) return unitVec(2, j);
        if (j == 0) return unitVec(2, 1);
        return {Rat(1), Rat(1)};  // x*x = u + x, the golden-ratio field
      },
      unitVec(2, 0), {unitVec(2, 0)});
  CHECK(ext.radicalDim() == 0);
  CHECK_FALSE(validateIdempotents(ext).ok);
}

TEST_CASE("radical and center have the expected dimensions") {
  const Algebra b = fiveDim();
  CHECK(b.radicalDim() == 3);
  CHECK(center(b).rows() == 2);

  const Algebra a2 = truncatedPoly(2);
  CHECK(a2.radicalDim() == 1);
  CHECK(center(a2).rows() == 2);  // commutative

  const Algebra a3 = truncatedPoly(3);
  CHECK(a3.dim() == 3);
  CHECK(a3.radicalDim() == 2);
  CHECK(center(a3).rows() == 3);

  // Radical elements are nilpotent: J^dim vanishes.
  const Mat j5 = radicalPowerRows(b, 5);
  CHECK(j5.rows() == 0);
}

TEST_CASE("center elements commute with every basis vector") {
  const Algebra b = fiveDim();
  const Mat z = center(b);
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t i = 0; i < b.dim(); ++i)
      CHECK(b.mul(z.row(r), b.basisVec(i)) == b.mul(b.basisVec(i), z.row(r)));
}

TEST_CASE("opposite algebra reverses products and is involutive on handles") {
  const Algebra b = fiveDim();
  const Algebra op = b.opposite();
  REQUIRE(op.dim() == b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      CHECK(op.mul(op.basisVec(i), op.basisVec(j)) ==
            b.mul(b.basisVec(j), b.basisVec(i)));
  CHECK(checkPresentation(op).ok);
  CHECK(op.opposite().sameAs(b));
  CHECK(b.opposite().sameAs(op));
}

TEST_CASE("tensor and enveloping constructions stay valid presentations") {
  const Algebra a2 = truncatedPoly(2);
  const Algebra t = tensorAlgebras(a2, a2);
  REQUIRE(t.dim() == 4);
  CHECK(t.radicalDim() == 3);
  CHECK(center(t).rows() == 4);  // commutative
  CHECK(checkPresentation(t).ok);

  const Algebra env = envelopingAlgebra(fiveDim());
  REQUIRE(env.dim() == 25);
  CHECK(checkPresentation(env).ok);
  CHECK(env.idempotents().size() == 4);
}

TEST_CASE("generator indices really generate") {
  for (const std::string& name :
       {"kupisch:[2,3]:cyclic", "kx:3", "tensor:kx:2:kx:2"}) {
    const Algebra a = corpusAlgebra(name).algebra;
    const auto& gens = a.generatorIndices();
    RowReducer red(a.dim());
    red.addRow(a.unit());
    for (;;) {
      const std::size_t before = red.rank();
      const Mat snap = red.basis();
      for (std::size_t r = 0; r < snap.rows(); ++r)
        for (std::size_t g : gens) {
          red.addRow(a.mul(snap.row(r), a.basisVec(g)));
          red.addRow(a.mul(a.basisVec(g), snap.row(r)));
        }
      if (red.rank() == before) break;
    }
    CHECK(red.rank() == a.dim());
    CHECK(gens.size() < a.dim());  // the unit pulls its weight
  }
}

TEST_CASE("corner algebra at the big vertex is the dual numbers") {
  const Algebra b = fiveDim();
  const Vec e1 = b.idempotents()[1];
  const Subalgebra corner = idempotentSubalgebra(b, e1);
  REQUIRE(corner.sub.dim() == 2);
  CHECK(checkPresentation(corner.sub).ok);
  CHECK(corner.sub.radicalDim() == 1);
  // The radical generator squares to zero: the corner is K[x]/(x^2).
  const Vec x = corner.sub.radicalBasis().row(0);
  CHECK(isZeroVec(corner.sub.mul(x, x)));
  // Inclusion is a ring map into the parent.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const Vec inParent =
          b.mul(corner.toParent(corner.sub.basisVec(i)),
                corner.toParent(corner.sub.basisVec(j)));
      const Vec inCorner = corner.sub.mul(corner.sub.basisVec(i), corner.sub.basisVec(j));
      CHECK(corner.toParent(inCorner) == inParent);
    }
  CHECK_THROWS_AS(idempotentSubalgebra(b, b.radicalBasis().row(0)),
                  std::invalid_argument);
}

TEST_CASE("ideal quotients: the big vertex annihilates almost everything") {
  const Algebra b = fiveDim();
  const QuotientAlgebra q = quotientByIdeal(b, {b.idempotents()[1]});
  REQUIRE_FALSE(q.zeroRing);
  CHECK(q.idealBasis.rows() == 4);
  REQUIRE(q.quotient.dim() == 1);
  CHECK(checkPresentation(q.quotient).ok);

  const QuotientAlgebra zero = quotientByIdeal(b, {b.unit()});
  CHECK(zero.zeroRing);

  const QuotientAlgebra semi = quotientByIdeal(b, {b.radicalBasis().row(0),
                                                   b.radicalBasis().row(1),
                                                   b.radicalBasis().row(2)});
  REQUIRE_FALSE(semi.zeroRing);
  CHECK(semi.quotient.dim() == 2);         // A / J is a product of two copies of Q
  CHECK(semi.quotient.radicalDim() == 0);  // semisimple
  CHECK(validateIdempotents(semi.quotient).ok);
}

TEST_CASE("projection and section of a quotient compose to the identity") {
  const Algebra b = fiveDim();
  const QuotientAlgebra q = quotientByIdeal(b, {b.idempotents()[0]});
  REQUIRE_FALSE(q.zeroRing);
  CHECK((q.section * q.projection).isIdentity());
  // The projection is a ring map: it kills the ideal and preserves products.
  for (std::size_t r = 0; r < q.idealBasis.rows(); ++r)
    CHECK(isZeroVec(mulRowMat(q.idealBasis.row(r), q.projection)));
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      const Vec lhs = mulRowMat(b.mul(b.basisVec(i), b.basisVec(j)), q.projection);
      const Vec rhs = q.quotient.mul(mulRowMat(b.basisVec(i), q.projection),
                                     mulRowMat(b.basisVec(j), q.projection));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("element wrapper refuses mixed algebras") {
  const Algebra b = fiveDim();
  const Algebra a2 = truncatedPoly(2);
  const AlgebraElement x{b, b.basisVec(0)};
  const AlgebraElement y{a2, a2.basisVec(0)};
  CHECK_THROWS_AS(multiply(x, y), std::invalid_argument);
  const AlgebraElement z = multiply(x, AlgebraElement{b, b.unit()});
  CHECK(z.coeffs == b.basisVec(0));
}
