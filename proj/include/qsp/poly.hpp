#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsp {

using BigInt = boost::multiprecision::cpp_int;

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are stored in ascending degree and kept canonical: the last
/// stored coefficient is nonzero, and the zero polynomial has no coefficients.
/// Equality is therefore structural.
class Polynomial {
 public:
  Polynomial() = default;

  Polynomial(int c) : Polynomial(BigInt(c)) {}  // NOLINT: constants convert implicitly

  Polynomial(BigInt c) {  // NOLINT
    if (c != 0) coeffs_.push_back(std::move(c));
  }

  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial from_ints(std::initializer_list<long long> cs) {
    std::vector<BigInt> v;
    v.reserve(cs.size());
    for (long long c : cs) v.emplace_back(c);
    return Polynomial(std::move(v));
  }

  static Polynomial monomial(BigInt c, std::size_t degree) {
    if (c == 0) return {};
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// The indeterminate q.
  static Polynomial q() { return monomial(1, 1); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Multiplies by q^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// Exact Horner evaluation.
  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Descending-degree text form, e.g. "q^4 + 5*q^3 + 28*q + 21".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      first = false;
      if (k == 0) {
        out += mag.str();
        continue;
      }
      if (mag != 1) out += mag.str() + "*";
      out += "q";
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline Polynomial pow(const Polynomial& base, std::size_t e) {
  Polynomial result(1);
  Polynomial b = base;
  while (e > 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e > 0) b *= b;
  }
  return result;
}

/// q - 1.
inline Polynomial q_minus_one() { return Polynomial::from_ints({-1, 1}); }

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q is the zero polynomial.
inline Polynomial q_int(std::size_t n) { return Polynomial(std::vector<BigInt>(n, BigInt(1))); }

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline BigInt factorial(long n) {
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Gaussian binomial [n choose m]_q via [n,m] = [n-1,m-1] + q^m [n-1,m].
inline Polynomial q_binomial(std::size_t n, std::size_t m) {
  if (m > n) return {};
  std::vector<Polynomial> row{Polynomial(1)};
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Polynomial> next(std::min(i, m) + 1);
    for (std::size_t k = 0; k < next.size(); ++k) {
      if (k == 0 || k == i) {
        next[k] = Polynomial(1);
        continue;
      }
      Polynomial v = row[k - 1];
      if (k < row.size()) v += row[k].shifted(k);
      next[k] = std::move(v);
    }
    row = std::move(next);
  }
  return row[m];
}

}  // namespace qsp
