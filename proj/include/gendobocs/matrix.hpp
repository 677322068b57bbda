#pragma once

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>

namespace gendobocs {

// ====== Dense exact matrix ======

/// Dense row-major matrix over Rat. Row convention throughout the library:
/// vectors are rows and maps act by right multiplication, v -> v * M.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static Mat fromRows(const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Mat::fromRows: ragged input");
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }

  Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

  [[nodiscard]] Vec row(std::size_t r) const {
    return Vec(e_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
               e_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  void setRow(std::size_t r, const Vec& v) {
    for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
  }

  [[nodiscard]] bool isZero() const {
    for (const Rat& x : e_)
      if (x != 0) return false;
    return true;
  }

  [[nodiscard]] bool isIdentity() const {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (at(r, c) != ((r == c) ? Rat(1) : Rat(0))) return false;
    return true;
  }

  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat operator+(const Mat& o) const {
    requireShape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    requireShape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= o.e_[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Rat& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Rat& b = o.at(k, j);
          if (b != 0) r.at(i, j) += a * b;
        }
      }
    return r;
  }

  [[nodiscard]] Mat scaled(const Rat& c) const {
    Mat r = *this;
    for (Rat& x : r.e_) x *= c;
    return r;
  }

  [[nodiscard]] Mat transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
  }

  /// Row-major flattening; inverse of reshape.
  [[nodiscard]] Vec flatten() const { return e_; }

  static Mat reshape(const Vec& v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("Mat::reshape: size mismatch");
    Mat m(rows, cols);
    m.e_ = v;
    return m;
  }

 private:
  void requireShape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Mat: shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rat> e_;
};

/// v * M for a row vector v.
inline Vec mulRowMat(const Vec& v, const Mat& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("mulRowMat: shape mismatch");
  Vec r(m.cols(), Rat(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& b = m.at(i, j);
      if (b != 0) r[j] += v[i] * b;
    }
  }
  return r;
}

/// Kronecker product; index convention (i,j) -> i * b.rows + j on rows and
/// (k,l) -> k * b.cols + l on columns, so kron(u, v) as 1-row matrices matches
/// the tensor basis ordering x_i (x) y_j -> i * dimY + j.
inline Mat kronecker(const Mat& a, const Mat& b) {
  Mat r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.rows(); ++j)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Rat& y = b.at(j, l);
          if (y != 0) r.at(i * b.rows() + j, k * b.cols() + l) = x * y;
        }
    }
  return r;
}

inline Mat vstack(const Mat& a, const Mat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Mat r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t c = 0; c < a.cols(); ++c) r.at(i, c) = a.at(i, c);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t c = 0; c < b.cols(); ++c) r.at(a.rows() + i, c) = b.at(i, c);
  return r;
}

// ====== Incremental reduced row echelon ======

/// Maintains the reduced row echelon form of the span of the rows fed to it.
/// RREF is unique per row space, so every derived basis below is canonical
/// and independent of insertion order. Optional tag rows track how each
/// stored row was combined from the input (used by the solver).
class RowReducer {
 public:
  explicit RowReducer(std::size_t width, std::size_t tagWidth = 0)
      : width_(width), tagWidth_(tagWidth) {}

  [[nodiscard]] std::size_t width() const { return width_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

  /// Adds a row (with optional tag); returns true when the rank grew.
  bool addRow(Vec v, Vec tag = {}) {
    if (v.size() != width_) throw std::invalid_argument("RowReducer::addRow: width mismatch");
    if (tagWidth_ != 0 && tag.size() != tagWidth_)
      throw std::invalid_argument("RowReducer::addRow: tag width mismatch");
    reduceInPlace(v, &tag);
    const auto piv = firstNonZero(v);
    if (!piv) return false;
    normalize(v, tag, *piv);
    backEliminate(v, tag, *piv);
    insertSorted(std::move(v), std::move(tag), *piv);
    return true;
  }

  /// Residual of v after elimination against the stored rows.
  [[nodiscard]] Vec reduce(Vec v) const {
    reduceInPlace(v, nullptr);
    return v;
  }

  [[nodiscard]] bool contains(const Vec& v) const { return isZeroVec(reduce(v)); }

  /// Expresses v as a tag-combination of the input rows (requires tags);
  /// nullopt when v is outside the span.
  [[nodiscard]] std::optional<Vec> coordinates(Vec v) const {
    if (tagWidth_ == 0) throw std::logic_error("RowReducer::coordinates: no tags tracked");
    Vec acc(tagWidth_, Rat(0));
    for (const Row& row : rows_) {
      const Rat& c = v[row.pivot];
      if (c == 0) continue;
      const Rat cc = c;
      axpy(v, -cc, row.v);
      axpy(acc, cc, row.tag);
    }
    if (!isZeroVec(v)) return std::nullopt;
    return acc;
  }

  /// Canonical RREF basis of the span, rows ordered by pivot column.
  [[nodiscard]] Mat basis() const {
    Mat m(rows_.size(), width_);
    for (std::size_t i = 0; i < rows_.size(); ++i) m.setRow(i, rows_[i].v);
    return m;
  }

  [[nodiscard]] std::vector<std::size_t> pivots() const {
    std::vector<std::size_t> p;
    p.reserve(rows_.size());
    for (const Row& r : rows_) p.push_back(r.pivot);
    return p;
  }

  [[nodiscard]] std::vector<std::size_t> freeColumns() const {
    std::vector<std::size_t> f;
    std::size_t idx = 0;
    for (std::size_t c = 0; c < width_; ++c) {
      if (idx < rows_.size() && rows_[idx].pivot == c) {
        ++idx;
      } else {
        f.push_back(c);
      }
    }
    return f;
  }

  /// When the stored rows are read as homogeneous constraints on column
  /// vectors x (one equation per row, row . x = 0), returns the canonical
  /// basis of the solution space, one row per free column.
  [[nodiscard]] Mat solutionBasis() const {
    const auto free = freeColumns();
    Mat out(free.size(), width_);
    for (std::size_t i = 0; i < free.size(); ++i) {
      out.at(i, free[i]) = 1;
      for (const Row& r : rows_) out.at(i, r.pivot) = -r.v[free[i]];
    }
    return out;
  }

 private:
  struct Row {
    Vec v;
    Vec tag;
    std::size_t pivot;
  };

  static std::optional<std::size_t> firstNonZero(const Vec& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) return i;
    return std::nullopt;
  }

  void reduceInPlace(Vec& v, Vec* tag) const {
    for (const Row& row : rows_) {
      const Rat& c = v[row.pivot];
      if (c == 0) continue;
      const Rat cc = c;
      axpy(v, -cc, row.v);
      if (tag && tagWidth_ != 0) axpy(*tag, -cc, row.tag);
    }
  }

  static void normalize(Vec& v, Vec& tag, std::size_t pivot) {
    const Rat p = v[pivot];
    if (p == 1) return;
    for (Rat& x : v) x /= p;
    for (Rat& x : tag) x /= p;
  }

  void backEliminate(const Vec& v, const Vec& tag, std::size_t pivot) {
    for (Row& row : rows_) {
      const Rat& c = row.v[pivot];
      if (c == 0) continue;
      const Rat cc = c;
      axpy(row.v, -cc, v);
      if (tagWidth_ != 0) axpy(row.tag, -cc, tag);
    }
  }

  void insertSorted(Vec v, Vec tag, std::size_t pivot) {
    Row row{std::move(v), std::move(tag), pivot};
    const auto pos = std::lower_bound(
        rows_.begin(), rows_.end(), pivot,
        [](const Row& r, std::size_t p) { return r.pivot < p; });
    rows_.insert(pos, std::move(row));
  }

  std::size_t width_, tagWidth_;
  std::vector<Row> rows_;
};

// ====== Core primitives ======

[[nodiscard]] inline std::size_t rank(const Mat& m) {
  RowReducer red(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.addRow(m.row(r));
  return red.rank();
}

/// Canonical basis of the left kernel {v : v * m = 0}; size = rows - rank.
[[nodiscard]] inline Mat kernelBasis(const Mat& m) {
  RowReducer red(m.cols(), m.rows());
  RowReducer kernel(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vec tag = unitVec(m.rows(), r);
    Vec v = m.row(r);
    // Inline reduction with tag tracking: a row that dies yields tag * m = 0.
    if (!red.addRow(v, tag)) {
      auto coords = red.coordinates(m.row(r));
      Vec k = unitVec(m.rows(), r);
      axpy(k, Rat(-1), *coords);
      kernel.addRow(std::move(k));
    }
  }
  return kernel.basis();
}

/// Canonical basis of the row space.
[[nodiscard]] inline Mat rowSpaceBasis(const Mat& m) {
  RowReducer red(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) red.addRow(m.row(r));
  return red.basis();
}

/// Solves x * system = rhs exactly (one x-row per rhs-row); nullopt when any
/// rhs row is outside the row space. Underdetermined systems yield one
/// particular solution; kernelBasis(system) spans the homogeneous part.
[[nodiscard]] inline std::optional<Mat> solveLinear(const Mat& system, const Mat& rhs) {
  if (system.cols() != rhs.cols()) throw std::invalid_argument("solveLinear: shape mismatch");
  RowReducer red(system.cols(), system.rows());
  for (std::size_t r = 0; r < system.rows(); ++r)
    red.addRow(system.row(r), unitVec(system.rows(), r));
  Mat x(rhs.rows(), system.rows());
  for (std::size_t r = 0; r < rhs.rows(); ++r) {
    auto coords = red.coordinates(rhs.row(r));
    if (!coords) return std::nullopt;
    x.setRow(r, *coords);
  }
  return x;
}

/// Exact inverse, or nullopt when singular. Throws on non-square input.
[[nodiscard]] inline std::optional<Mat> invert(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("invert: non-square input");
  return solveLinear(m, Mat::identity(m.rows()));
}

// ====== Coordinate-space quotients ======

/// Quotient of the ambient coordinate space by a row space (held as RREF in a
/// reducer). Basis = non-pivot coordinates; projection kills exactly the row
/// space; projection restricted along section is the identity.
struct QuotientSpace {
  std::vector<std::size_t> basisIdx;  // free columns, ascending
  Mat projection;                     // ambient x quotient
  Mat section;                        // quotient x ambient, unit rows
};

[[nodiscard]] inline QuotientSpace quotientByRowSpace(const RowReducer& red) {
  const std::size_t width = red.width();
  const auto free = red.freeColumns();
  const auto piv = red.pivots();
  const Mat rref = red.basis();
  QuotientSpace q;
  q.basisIdx = free;
  q.projection = Mat(width, free.size());
  q.section = Mat(free.size(), width);
  for (std::size_t i = 0; i < free.size(); ++i) {
    q.projection.at(free[i], i) = 1;
    q.section.at(i, free[i]) = 1;
    for (std::size_t r = 0; r < piv.size(); ++r)
      q.projection.at(piv[r], i) = -rref.at(r, free[i]);
  }
  return q;
}

}  // namespace gendobocs
