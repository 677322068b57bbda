#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace gendobocs {

/// Exact rational scalar. GMP keeps values in lowest terms with positive
/// denominator; zero is 0/1. No floating point is used anywhere downstream.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

/// Coefficient row (module elements and algebra elements are rows).
using Vec = std::vector<Rat>;

/// Parses "num/den" or a bare integer string. Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rat ratFromString(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("ratFromString: empty string");
  auto checkIntToken = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!checkIntToken(s)) throw std::invalid_argument("ratFromString: malformed '" + s + "'");
    return Rat(Int(s));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!checkIntToken(num) || !checkIntToken(den))
    throw std::invalid_argument("ratFromString: malformed '" + s + "'");
  Int d(den);
  if (d == 0) throw std::invalid_argument("ratFromString: zero denominator in '" + s + "'");
  return Rat(Int(num), d);
}

/// Canonical rendering "num/den"; the denominator is always present ("0/1").
inline std::string ratToString(const Rat& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// ====== Row helpers ======

inline bool isZeroVec(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

/// v += c * w (elementwise; sizes must match).
inline void axpy(Vec& v, const Rat& c, const Vec& w) {
  if (c == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (w[i] != 0) v[i] += c * w[i];
}

inline Rat dot(const Vec& a, const Vec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

inline Vec unitVec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v[i] = 1;
  return v;
}

}  // namespace gendobocs
