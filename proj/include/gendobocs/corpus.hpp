#pragma once

// Named example algebras: serial algebras from Kupisch series, truncated
// polynomial algebras, endomorphism algebras of module lists, and tensor
// products of any of these. Names are colon-separated expressions, e.g.
//   kx:3   kupisch:[2,3]:cyclic   auslander:kx:2   tensor:kx:2:kx:2

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gendobocs/algebra.hpp"
#include "gendobocs/module.hpp"

namespace gendobocs {

// ====== Serial algebras from Kupisch series ======

/// Path algebra of a cyclic or linear quiver truncated by a Kupisch series:
/// basis = paths p(i,l) of length l < c_i starting at vertex i, arrows i -> i+1
/// (mod n when cyclic). Products concatenate paths and die at length c_i.
/// Admissibility: c_{i+1} >= c_i - 1 throughout; cyclic series need every
/// c_i >= 2 (except the one-vertex case); linear series end with c_{n-1} = 1
/// and fit inside the quiver, c_i <= n - i.
[[nodiscard]] inline Algebra nakayamaFromKupisch(const std::vector<std::size_t>& c,
                                                 bool cyclic) {
  const std::size_t n = c.size();
  if (n == 0) throw std::invalid_argument("nakayamaFromKupisch: empty series");
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] == 0) throw std::invalid_argument("nakayamaFromKupisch: zero entry");
    if (cyclic) {
      if (n > 1 && c[i] < 2)
        throw std::invalid_argument("nakayamaFromKupisch: cyclic series needs c_i >= 2");
      if (c[(i + 1) % n] + 1 < c[i])
        throw std::invalid_argument("nakayamaFromKupisch: series not admissible");
    } else {
      if (c[i] > n - i)
        throw std::invalid_argument("nakayamaFromKupisch: path leaves the linear quiver");
      if (i + 1 < n && c[i + 1] + 1 < c[i])
        throw std::invalid_argument("nakayamaFromKupisch: series not admissible");
      if (i == n - 1 && c[i] != 1)
        throw std::invalid_argument("nakayamaFromKupisch: linear series must end at 1");
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> paths;  // (vertex, length)
  std::vector<std::vector<std::size_t>> index(n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < c[i]; ++l) {
      index[i].push_back(paths.size());
      paths.push_back({i, l});
      labels.push_back(l == 0 ? "e" + std::to_string(i)
                              : "p" + std::to_string(i) + "." + std::to_string(l));
    }
  const std::size_t dim = paths.size();
  std::vector<SparseRow> prod(dim * dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      const auto [i, l] = paths[x];
      const auto [j, m] = paths[y];
      const std::size_t end = cyclic ? (i + l) % n : i + l;
      if (end != j || l + m >= c[i]) continue;
      prod[x * dim + y].push_back({index[i][l + m], Rat(1)});
    }
  Vec unit(dim, Rat(0));
  std::vector<Vec> idem;
  for (std::size_t i = 0; i < n; ++i) {
    unit[index[i][0]] = 1;
    idem.push_back(unitVec(dim, index[i][0]));
  }
  return Algebra(dim, std::move(labels), std::move(prod), std::move(unit),
                 std::move(idem));
}

/// The local serial algebra with one generator x and relation x^n = 0.
[[nodiscard]] inline Algebra truncatedPoly(std::size_t n) {
  return nakayamaFromKupisch({n}, true);
}

// ====== Endomorphism algebras ======

/// Endomorphism algebra of a direct sum, presented blockwise: the basis
/// concatenates canonical hom-space bases Hom(parts[i], parts[j]); the product
/// of f: i -> j and g: j -> k is the composite "f then g" with matrix F * G,
/// and zero for non-matching blocks. The distinguished idempotents are the
/// block identities, so the presentation is valid when the parts are
/// indecomposable (checkPresentation reports any violation).
struct EndAlgebraData {
  Algebra algebra;
  std::vector<std::size_t> fromPart, toPart;  // block of each basis vector
  std::vector<Mat> matrix;                    // the map itself
};

[[nodiscard]] inline EndAlgebraData endomorphismAlgebra(
    const std::vector<RightModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("endomorphismAlgebra: no parts");
  const std::size_t p = parts.size();
  EndAlgebraData out;
  std::vector<std::vector<std::vector<Mat>>> hom(p, std::vector<std::vector<Mat>>(p));
  std::vector<std::vector<std::size_t>> base(p, std::vector<std::size_t>(p, 0));
  std::size_t dim = 0;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      hom[i][j] = homSpace(parts[i], parts[j]);
      base[i][j] = dim;
      for (std::size_t k = 0; k < hom[i][j].size(); ++k) {
        out.fromPart.push_back(i);
        out.toPart.push_back(j);
        out.matrix.push_back(hom[i][j][k]);
        labels.push_back("f" + std::to_string(i) + "." + std::to_string(j) + "." +
                         std::to_string(k));
        ++dim;
      }
    }
  std::vector<SparseRow> prod(dim * dim);
  for (std::size_t x = 0; x < dim; ++x)
    for (std::size_t y = 0; y < dim; ++y) {
      if (out.toPart[x] != out.fromPart[y]) continue;
      const std::size_t i = out.fromPart[x], k = out.toPart[y];
      const auto coords = homCoordinates(hom[i][k], out.matrix[x] * out.matrix[y]);
      if (!coords) throw std::logic_error("endomorphismAlgebra: composite left the span");
      for (std::size_t t = 0; t < coords->size(); ++t)
        if ((*coords)[t] != 0) prod[x * dim + y].push_back({base[i][k] + t, (*coords)[t]});
    }
  Vec unit(dim, Rat(0));
  std::vector<Vec> idem;
  for (std::size_t i = 0; i < p; ++i) {
    const auto coords = homCoordinates(hom[i][i], Mat::identity(parts[i].dim));
    if (!coords) throw std::logic_error("endomorphismAlgebra: identity not in End");
    Vec e(dim, Rat(0));
    for (std::size_t t = 0; t < coords->size(); ++t) {
      unit[base[i][i] + t] += (*coords)[t];
      e[base[i][i] + t] = (*coords)[t];
    }
    idem.push_back(std::move(e));
  }
  out.algebra = Algebra(dim, std::move(labels), std::move(prod), std::move(unit),
                        std::move(idem));
  return out;
}

// ====== Radical powers ======

/// J(A)^k as canonical RREF rows.
[[nodiscard]] inline Mat radicalPowerRows(const Algebra& a, std::size_t k) {
  if (k == 0) return Mat::identity(a.dim());
  Mat rows = a.radicalBasis();
  const Mat& rad = a.radicalBasis();
  for (std::size_t step = 1; step < k; ++step) {
    RowReducer red(a.dim());
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t j = 0; j < rad.rows(); ++j)
        red.addRow(a.mul(rows.row(r), rad.row(j)));
    rows = red.basis();
  }
  return rows;
}

/// M * J(A)^k as canonical RREF rows.
[[nodiscard]] inline Mat moduleRadicalPowerRows(const RightModule& m, std::size_t k) {
  Mat rows = Mat::identity(m.dim);
  const Mat& rad = m.algebra.radicalBasis();
  for (std::size_t step = 0; step < k; ++step) {
    RowReducer red(m.dim);
    for (std::size_t r = 0; r < rows.rows(); ++r)
      for (std::size_t j = 0; j < rad.rows(); ++j)
        red.addRow(mulRowMat(rows.row(r), m.actionOf(rad.row(j))));
    rows = red.basis();
  }
  return rows;
}

// ====== Named corpus ======

struct CorpusAlgebra {
  std::string name;
  Algebra algebra;
  bool serial = false;  // catalog below is complete for serial presentations
  std::vector<std::size_t> kupisch;
  bool cyclic = false;
};

namespace detail {

inline std::vector<std::string> splitColons(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ':') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::size_t parseCount(const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("corpus name: expected a number");
  std::size_t v = 0;
  for (char ch : tok) {
    if (ch < '0' || ch > '9')
      throw std::invalid_argument("corpus name: bad number '" + tok + "'");
    v = v * 10 + static_cast<std::size_t>(ch - '0');
  }
  return v;
}

inline CorpusAlgebra parseCorpus(const std::vector<std::string>& toks, std::size_t& pos) {
  if (pos >= toks.size()) throw std::invalid_argument("corpus name: truncated expression");
  const std::string head = toks[pos++];
  if (head == "kx") {
    if (pos >= toks.size()) throw std::invalid_argument("corpus name: kx needs an exponent");
    const std::size_t n = parseCount(toks[pos++]);
    if (n == 0) throw std::invalid_argument("corpus name: kx:0 is not an algebra");
    CorpusAlgebra ca;
    ca.name = "kx:" + std::to_string(n);
    ca.algebra = truncatedPoly(n);
    ca.serial = true;
    ca.kupisch = {n};
    ca.cyclic = true;
    return ca;
  }
  if (head == "kupisch") {
    if (pos + 1 >= toks.size())
      throw std::invalid_argument("corpus name: kupisch needs a series and a mode");
    const std::string list = toks[pos++];
    const std::string mode = toks[pos++];
    if (list.size() < 2 || list.front() != '[' || list.back() != ']')
      throw std::invalid_argument("corpus name: kupisch series must look like [2,3]");
    std::vector<std::size_t> c;
    std::string cur;
    for (std::size_t i = 1; i + 1 < list.size(); ++i) {
      if (list[i] == ',') {
        c.push_back(parseCount(cur));
        cur.clear();
      } else {
        cur += list[i];
      }
    }
    c.push_back(parseCount(cur));
    bool cyclic;
    if (mode == "cyclic")
      cyclic = true;
    else if (mode == "linear")
      cyclic = false;
    else
      throw std::invalid_argument("corpus name: mode must be cyclic or linear");
    CorpusAlgebra ca;
    ca.name = "kupisch:" + list + ":" + mode;
    ca.algebra = nakayamaFromKupisch(c, cyclic);
    ca.serial = true;
    ca.kupisch = c;
    ca.cyclic = cyclic;
    return ca;
  }
  if (head == "auslander") {
    const CorpusAlgebra inner = parseCorpus(toks, pos);
    // Endomorphism algebra of the sum of all serial quotients A/J^k; for a
    // local serial base that sum is an additive generator of the module
    // category, which is the classical construction.
    const RightModule reg = regularModule(inner.algebra);
    std::vector<RightModule> parts;
    std::size_t loewy = 0;
    while (radicalPowerRows(inner.algebra, loewy).rows() > 0) ++loewy;
    for (std::size_t k = loewy; k >= 1; --k) {
      QuotientModuleData q =
          quotientModuleByRows(reg, radicalPowerRows(inner.algebra, k));
      q.module.name = "A/J^" + std::to_string(k);
      parts.push_back(q.module);
    }
    CorpusAlgebra ca;
    ca.name = "auslander:" + inner.name;
    ca.algebra = endomorphismAlgebra(parts).algebra;
    return ca;
  }
  if (head == "tensor") {
    const CorpusAlgebra a = parseCorpus(toks, pos);
    const CorpusAlgebra b = parseCorpus(toks, pos);
    CorpusAlgebra ca;
    ca.name = "tensor:" + a.name + ":" + b.name;
    ca.algebra = tensorAlgebras(a.algebra, b.algebra);
    return ca;
  }
  throw std::invalid_argument("corpus name: unknown head '" + head + "'");
}

}  // namespace detail

/// Parses a corpus name and builds the algebra. Throws std::invalid_argument
/// on malformed names.
[[nodiscard]] inline CorpusAlgebra corpusAlgebra(const std::string& name) {
  const auto toks = detail::splitColons(name);
  std::size_t pos = 0;
  CorpusAlgebra ca = detail::parseCorpus(toks, pos);
  if (pos != toks.size())
    throw std::invalid_argument("corpus name: trailing tokens in '" + name + "'");
  ca.name = name;  // keep the user's spelling
  return ca;
}

/// The curated list shown by the command line tool.
[[nodiscard]] inline std::vector<std::string> corpusList() {
  return {
      "kx:1",
      "kx:2",
      "kx:3",
      "kupisch:[2,3]:cyclic",
      "kupisch:[2,2]:cyclic",
      "kupisch:[2,1]:linear",
      "auslander:kx:2",
      "auslander:kx:3",
      "tensor:kx:2:kx:2",
  };
}

// ====== Module catalogs ======

struct NamedModule {
  std::string name;
  RightModule module;
};

struct ModuleCatalog {
  std::vector<NamedModule> modules;
  bool complete = false;
};

/// For serial presentations the catalog lists every indecomposable
/// P_i / P_i J^k and is complete. Otherwise it lists simples, projectives and
/// injectives (deduplicated up to isomorphism) and is flagged incomplete.
[[nodiscard]] inline ModuleCatalog moduleCatalog(const CorpusAlgebra& ca) {
  ModuleCatalog cat;
  const Algebra& a = ca.algebra;
  if (ca.serial) {
    cat.complete = true;
    const std::size_t n = ca.kupisch.size();
    for (std::size_t i = 0; i < n; ++i) {
      const SubmoduleData pi = projectiveSummand(a, i);
      for (std::size_t k = 1; k <= ca.kupisch[i]; ++k) {
        QuotientModuleData q =
            quotientModuleByRows(pi.module, moduleRadicalPowerRows(pi.module, k));
        std::string nm;
        if (k == ca.kupisch[i]) {
          nm = "P" + std::to_string(i);
        } else if (k == 1) {
          nm = "S" + std::to_string(i);
        } else if (isInjective(q.module)) {
          const std::size_t v = ca.cyclic ? (i + k - 1) % n : i + k - 1;
          nm = "D(Be" + std::to_string(v) + ")";
        } else {
          nm = "P" + std::to_string(i) + "/J^" + std::to_string(k);
        }
        q.module.name = nm;
        cat.modules.push_back({nm, q.module});
      }
    }
    return cat;
  }
  cat.complete = false;
  auto knownIso = [&](const RightModule& m) {
    for (const NamedModule& nm : cat.modules)
      if (isoModules(nm.module, m).verdict == IsoResult::Verdict::Isomorphic) return true;
    return false;
  };
  for (std::size_t s = 0; s < a.idempotents().size(); ++s) {
    RightModule p = projectiveSummand(a, s).module;
    p.name = "P" + std::to_string(s);
    cat.modules.push_back({p.name, p});
  }
  for (std::size_t s = 0; s < a.idempotents().size(); ++s) {
    RightModule m = simpleModule(a, s);
    if (knownIso(m)) continue;
    cat.modules.push_back({m.name, m});
  }
  const Algebra op = a.opposite();
  for (std::size_t s = 0; s < op.idempotents().size(); ++s) {
    RightModule inj = dualModule(projectiveSummand(op, s).module);
    inj.name = "I" + std::to_string(s);
    if (knownIso(inj)) continue;
    cat.modules.push_back({inj.name, inj});
  }
  return cat;
}

/// Catalog lookup by name; throws std::invalid_argument when missing.
[[nodiscard]] inline RightModule catalogModule(const CorpusAlgebra& ca,
                                               const std::string& moduleName) {
  const ModuleCatalog cat = moduleCatalog(ca);
  for (const NamedModule& nm : cat.modules)
    if (nm.name == moduleName) return nm.module;
  throw std::invalid_argument("no module named '" + moduleName + "' in the catalog of " +
                              ca.name);
}

}  // namespace gendobocs
