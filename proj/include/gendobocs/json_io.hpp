#pragma once

// JSON serialization for algebras, modules, corings and reports. Documents
// are versioned ("schema": 1), rationals render as canonical "num/den"
// strings, and emission order is fixed so identical inputs produce identical
// bytes. Parsers validate shape and report the offending field by name.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include <gendobocs/bocs.hpp>
#include <gendobocs/corpus.hpp>

namespace gendobocs {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Shape or content problem in an otherwise well-formed JSON document; the
/// message names the offending field.
class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ====== Scalars, vectors, matrices ======

namespace detail {

inline const Json& field(const Json& j, const char* key, const char* where) {
  if (!j.is_object())
    throw JsonFormatError(std::string(where) + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end())
    throw JsonFormatError(std::string(where) + ": missing field '" + key + "'");
  return *it;
}

inline std::size_t sizeField(const Json& j, const char* key, const char* where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer() || (v.is_number_integer() && !v.is_number_unsigned() &&
                                 v.get<long long>() < 0))
    throw JsonFormatError(std::string(where) + ": field '" + key +
                          "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

inline Rat ratField(const Json& v, const char* where) {
  if (!v.is_string())
    throw JsonFormatError(std::string(where) + ": expected a \"num/den\" string");
  try {
    return ratFromString(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw JsonFormatError(std::string(where) + ": " + e.what());
  }
}

inline void checkSchema(const Json& j, const char* where) {
  if (sizeField(j, "schema", where) != static_cast<std::size_t>(kSchemaVersion))
    throw JsonFormatError(std::string(where) + ": unsupported schema version");
}

}  // namespace detail

[[nodiscard]] inline Json vecJson(const Vec& v) {
  Json j = Json::array();
  for (const Rat& x : v) j.push_back(ratToString(x));
  return j;
}

[[nodiscard]] inline Vec vecFromJson(const Json& j, std::size_t expect, const char* where) {
  if (!j.is_array() || j.size() != expect)
    throw JsonFormatError(std::string(where) + ": expected an array of length " +
                          std::to_string(expect));
  Vec v;
  v.reserve(expect);
  for (const Json& e : j) v.push_back(detail::ratField(e, where));
  return v;
}

/// Self-contained matrix document; explicit shape keeps 0 x n and n x 0
/// matrices unambiguous.
[[nodiscard]] inline Json matJson(const Mat& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json data = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) data.push_back(ratToString(m.at(r, c)));
  j["data"] = data;
  return j;
}

[[nodiscard]] inline Mat matFromJson(const Json& j, const char* where) {
  const std::size_t rows = detail::sizeField(j, "rows", where);
  const std::size_t cols = detail::sizeField(j, "cols", where);
  const Json& data = detail::field(j, "data", where);
  if (!data.is_array() || data.size() != rows * cols)
    throw JsonFormatError(std::string(where) + ": field 'data' must hold rows*cols entries");
  Mat m(rows, cols);
  std::size_t i = 0;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = detail::ratField(data[i++], where);
  return m;
}

// ====== Algebra ======

/// Canonical form: structure constants as [i, j, k, "num/den"] quadruples
/// sorted by (i, j, k) with zero coefficients dropped; round trips bit-exact.
[[nodiscard]] inline Json algebraJson(const Algebra& a) {
  const std::size_t n = a.dim();
  Json j;
  j["schema"] = kSchemaVersion;
  j["dim"] = n;
  j["labels"] = a.labels();
  Json sc = Json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t jj = 0; jj < n; ++jj) {
      Vec p(n, Rat(0));
      for (const SparseTerm& t : a.productRow(i, jj)) p[t.k] += t.c;
      for (std::size_t k = 0; k < n; ++k)
        if (p[k] != 0) sc.push_back(Json::array({i, jj, k, ratToString(p[k])}));
    }
  j["structconsts"] = sc;
  j["unit"] = vecJson(a.unit());
  Json idem = Json::array();
  for (const Vec& e : a.idempotents()) idem.push_back(vecJson(e));
  j["idempotents"] = idem;
  return j;
}

[[nodiscard]] inline Algebra algebraFromJson(const Json& j) {
  constexpr const char* where = "algebra";
  detail::checkSchema(j, where);
  const std::size_t n = detail::sizeField(j, "dim", where);
  const Json& lab = detail::field(j, "labels", where);
  if (!lab.is_array() || lab.size() != n)
    throw JsonFormatError("algebra: field 'labels' must list one label per basis vector");
  std::vector<std::string> labels;
  for (const Json& l : lab) {
    if (!l.is_string()) throw JsonFormatError("algebra: labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  const Json& sc = detail::field(j, "structconsts", where);
  if (!sc.is_array())
    throw JsonFormatError("algebra: field 'structconsts' must be an array of quadruples");
  std::vector<Vec> table(n * n, Vec(n, Rat(0)));
  for (const Json& q : sc) {
    if (!q.is_array() || q.size() != 4)
      throw JsonFormatError("algebra: each structure constant must be [i, j, k, \"num/den\"]");
    std::size_t idx[3];
    for (int t = 0; t < 3; ++t) {
      if (!q[t].is_number_unsigned() || q[t].get<std::size_t>() >= n)
        throw JsonFormatError("algebra: structure constant index out of range");
      idx[t] = q[t].get<std::size_t>();
    }
    table[idx[0] * n + idx[1]][idx[2]] += detail::ratField(q[3], "algebra structconsts");
  }
  const Vec unit = vecFromJson(detail::field(j, "unit", where), n, "algebra unit");
  const Json& idemJ = detail::field(j, "idempotents", where);
  if (!idemJ.is_array())
    throw JsonFormatError("algebra: field 'idempotents' must be an array");
  std::vector<Vec> idem;
  for (const Json& e : idemJ) idem.push_back(vecFromJson(e, n, "algebra idempotent"));
  return Algebra::fromProducts(
      n, std::move(labels),
      [&table, n](std::size_t i, std::size_t jj) { return table[i * n + jj]; }, unit, idem);
}

// ====== Right modules ======

/// The algebra slot takes either an inline algebra document or a corpus name.
[[nodiscard]] inline Json moduleJson(const RightModule& m, Json algebraRef) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["algebra"] = std::move(algebraRef);
  j["name"] = m.name;
  j["dim"] = m.dim;
  Json act = Json::array();
  for (const Mat& x : m.action) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(ratToString(x.at(r, c)));
      rows.push_back(std::move(row));
    }
    act.push_back(std::move(rows));
  }
  j["action"] = act;
  return j;
}

[[nodiscard]] inline RightModule moduleFromJson(const Json& j) {
  constexpr const char* where = "module";
  detail::checkSchema(j, where);
  const Json& aj = detail::field(j, "algebra", where);
  const Algebra a = aj.is_string() ? corpusAlgebra(aj.get<std::string>()).algebra
                                   : algebraFromJson(aj);
  const std::size_t d = detail::sizeField(j, "dim", where);
  const Json& act = detail::field(j, "action", where);
  if (!act.is_array() || act.size() != a.dim())
    throw JsonFormatError("module: field 'action' must hold one matrix per basis vector");
  std::vector<Mat> action;
  for (const Json& mat : act) {
    if (!mat.is_array() || mat.size() != d)
      throw JsonFormatError("module: each action matrix must have 'dim' rows");
    Mat x(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const Json& row = mat[r];
      if (!row.is_array() || row.size() != d)
        throw JsonFormatError("module: each action row must have 'dim' entries");
      for (std::size_t c = 0; c < d; ++c) x.at(r, c) = detail::ratField(row[c], "module action");
    }
    action.push_back(std::move(x));
  }
  std::string name;
  if (j.contains("name") && j["name"].is_string()) name = j["name"].get<std::string>();
  return makeModule(a, std::move(action), std::move(name));
}

// ====== Witnesses and reports ======

[[nodiscard]] inline std::string verdictString(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undecided";
  }
}

[[nodiscard]] inline std::string isoVerdictString(IsoResult::Verdict v) {
  switch (v) {
    case IsoResult::Verdict::Isomorphic: return "isomorphic";
    case IsoResult::Verdict::NotIsomorphic: return "not-isomorphic";
    default: return "undecided";
  }
}

[[nodiscard]] inline Json isoJson(const IsoResult& r) {
  Json j;
  j["verdict"] = isoVerdictString(r.verdict);
  j["witness"] = matJson(r.witness);
  j["witnessInverse"] = matJson(r.witnessInverse);
  j["note"] = r.note;
  return j;
}

[[nodiscard]] inline Json domDimJson(const DomDim& d) { return Json(d.str()); }

[[nodiscard]] inline Json gendoReportJson(const GendoReport& rep) {
  Json j;
  j["gendoSymmetric"] = verdictString(rep.isGendoSymmetric);
  j["morita"] = verdictString(rep.isMorita);
  j["dominantDimension"] = domDimJson(rep.dominantDim);
  j["projectiveInjectiveClasses"] = rep.projectiveInjectiveClasses;
  j["minimalFaithfulIdempotent"] =
      rep.minimalFaithfulIdempotent ? vecJson(*rep.minimalFaithfulIdempotent) : Json(nullptr);
  j["seed"] = rep.seed;
  Json w;
  w["dualSquare"] = isoJson(rep.squareWitness);
  w["cornerBimodule"] = isoJson(rep.bimoduleWitness);
  w["moritaModule"] = isoJson(rep.moritaWitness);
  j["witnesses"] = w;
  j["note"] = rep.note;
  return j;
}

// ====== Corings ======

/// Carrier actions, both structure maps and the chosen tensor basis; enough
/// to rebuild the coring and replay the axiom verification offline.
[[nodiscard]] inline Json coringJson(const Coring& c) {
  Json j;
  j["carrierName"] = c.carrier.name;
  j["carrierDim"] = c.carrier.dim;
  Json la = Json::array();
  for (const Mat& m : c.carrier.leftAct) la.push_back(matJson(m));
  j["leftAction"] = la;
  Json ra = Json::array();
  for (const Mat& m : c.carrier.rightAct) ra.push_back(matJson(m));
  j["rightAction"] = ra;
  Json basisIdx = Json::array();
  for (std::size_t r = 0; r < c.square.section.rows(); ++r) {
    std::size_t pos = 0;
    for (std::size_t col = 0; col < c.square.section.cols(); ++col)
      if (c.square.section.at(r, col) != 0) {
        pos = col;
        break;
      }
    basisIdx.push_back(pos);
  }
  j["tensorBasisIndices"] = basisIdx;
  j["comultiplication"] = matJson(c.comul);
  j["counit"] = matJson(c.counit);
  j["verified"] = c.verified == CoringVerified::Verified
                      ? "verified"
                      : (c.verified == CoringVerified::Failed ? "failed" : "unverified");
  j["failure"] = c.failure;
  return j;
}

/// Rebuilds the coring over `a`; the tensor square is recomputed and checked
/// against the recorded basis indices. Returned unverified: run the axiom
/// suite to obtain a trusted stamp.
[[nodiscard]] inline Coring coringFromJson(const Json& j, const Algebra& a) {
  constexpr const char* where = "coring";
  const std::size_t d = detail::sizeField(j, "carrierDim", where);
  auto actions = [&](const char* key) {
    const Json& arr = detail::field(j, key, where);
    if (!arr.is_array() || arr.size() != a.dim())
      throw JsonFormatError(std::string("coring: field '") + key +
                            "' must hold one matrix per algebra basis vector");
    std::vector<Mat> out;
    for (const Json& m : arr) {
      Mat x = matFromJson(m, key);
      if (x.rows() != d || x.cols() != d)
        throw JsonFormatError(std::string("coring: '") + key + "' matrices must be " +
                              std::to_string(d) + " x " + std::to_string(d));
      out.push_back(std::move(x));
    }
    return out;
  };
  Bimodule carrier{a, a, d, actions("leftAction"), actions("rightAction"), "W"};
  if (j.contains("carrierName") && j["carrierName"].is_string())
    carrier.name = j["carrierName"].get<std::string>();
  const PresentationReport bi = checkBimodule(carrier);
  if (!bi.ok) throw JsonFormatError("coring: carrier is not a bimodule: " + bi.failures.front());
  Coring c{a, carrier, tensorOverAlgebra(carrier, carrier), Mat(), Mat(),
           CoringVerified::Unverified, ""};
  const Json& idx = detail::field(j, "tensorBasisIndices", where);
  if (!idx.is_array() || idx.size() != c.square.section.rows())
    throw JsonFormatError("coring: tensor basis does not match the recomputed square");
  for (std::size_t r = 0; r < c.square.section.rows(); ++r) {
    std::size_t pos = 0;
    for (std::size_t col = 0; col < c.square.section.cols(); ++col)
      if (c.square.section.at(r, col) != 0) {
        pos = col;
        break;
      }
    if (!idx[r].is_number_unsigned() || idx[r].get<std::size_t>() != pos)
      throw JsonFormatError("coring: tensor basis does not match the recomputed square");
  }
  c.comul = matFromJson(detail::field(j, "comultiplication", where), "coring comultiplication");
  c.counit = matFromJson(detail::field(j, "counit", where), "coring counit");
  if (c.comul.rows() != d || c.comul.cols() != c.square.product.dim)
    throw JsonFormatError("coring: comultiplication has the wrong shape");
  if (c.counit.rows() != d || c.counit.cols() != a.dim())
    throw JsonFormatError("coring: counit has the wrong shape");
  return c;
}

/// A bocs hom as shipped inside reports: endpoint names plus the matrix.
[[nodiscard]] inline Json bocsHomJson(const std::string& source, const std::string& target,
                                      const Mat& m) {
  Json j;
  j["source"] = source;
  j["target"] = target;
  j["matrix"] = matJson(m);
  return j;
}

}  // namespace gendobocs
