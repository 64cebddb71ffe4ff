#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "coxmorse/error.hpp"

namespace coxmorse {

/// Integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<std::int64_t>;

namespace detail {

inline void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

/// Exact division by a monic polynomial; the remainder must vanish.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() - 1 < dd) return {0};
  IntPoly q(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    const std::int64_t c = num[i];
    q[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  return q;
}

}  // namespace detail

/// n-th cyclotomic polynomial.
inline IntPoly cyclotomic(int n) {
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = detail::divide_monic(p, cyclotomic(d));
  detail::trim(p);
  return p;
}

/// Minimal polynomial of 2cos(pi/m) over Q (monic, integer coefficients).
/// Uses Phi_{2m}(z) = z^d psi(z + 1/z), with z^j + z^-j expanded through the
/// recurrence P_{j+1} = x P_j - P_{j-1}.
inline IntPoly min_poly_two_cos_pi_over(int m) {
  if (m < 2) throw Error(Errc::OutOfRange, "2cos(pi/m) needs m >= 2");
  const IntPoly phi = cyclotomic(2 * m);
  const std::size_t d = (phi.size() - 1) / 2;
  std::vector<IntPoly> P{{2}, {0, 1}};
  for (std::size_t j = 1; j < d; ++j) {
    IntPoly next(j + 2, 0);
    for (std::size_t i = 0; i < P[j].size(); ++i) next[i + 1] += P[j][i];
    for (std::size_t i = 0; i < P[j - 1].size(); ++i) next[i] -= P[j - 1][i];
    P.push_back(next);
  }
  IntPoly psi(d + 1, 0);
  psi[0] = phi[d];
  for (std::size_t j = 1; j <= d; ++j)
    for (std::size_t i = 0; i < P[j].size(); ++i) psi[i] += phi[d + j] * P[j][i];
  detail::trim(psi);
  return psi;
}

/// The ring Z[lambda] = Z[x]/(p) for a monic integer polynomial p. Elements
/// are coefficient vectors of length degree() in the basis 1, lambda, ...
/// Crystallographic root systems use p(x) = x, i.e. plain integers.
class AlgebraicRing {
 public:
  AlgebraicRing() : modulus_{0, 1} {}
  explicit AlgebraicRing(IntPoly monic) : modulus_(std::move(monic)) {
    detail::trim(modulus_);
    if (modulus_.size() < 2 || modulus_.back() != 1)
      throw Error(Errc::InvalidInput, "ring modulus must be monic of degree >= 1");
  }

  static AlgebraicRing integers() { return AlgebraicRing(); }
  static AlgebraicRing two_cos_pi_over(int m) {
    return AlgebraicRing(min_poly_two_cos_pi_over(m));
  }

  int degree() const { return static_cast<int>(modulus_.size()) - 1; }
  const IntPoly& modulus() const { return modulus_; }

  std::vector<std::int64_t> from_int(std::int64_t v) const {
    std::vector<std::int64_t> e(degree(), 0);
    e[0] = v;
    return e;
  }

  /// The generator lambda (the class of x), scaled by c.
  std::vector<std::int64_t> generator(std::int64_t c = 1) const {
    std::vector<std::int64_t> e(degree(), 0);
    if (degree() == 1)
      e[0] = -modulus_[0] * c;
    else
      e[1] = c;
    return e;
  }

  /// out += a * b
  void multiply_add(std::span<const std::int64_t> a, std::span<const std::int64_t> b,
                    std::span<std::int64_t> out) const {
    const int d = degree();
    if (d == 1) {
      out[0] += a[0] * b[0];
      return;
    }
    std::vector<std::int64_t> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i)
      if (a[i])
        for (int j = 0; j < d; ++j) prod[i + j] += a[i] * b[j];
    for (int i = 2 * d - 2; i >= d; --i) {
      const std::int64_t c = prod[i];
      if (!c) continue;
      for (int j = 0; j < d; ++j) prod[i - d + j] -= c * modulus_[j];
    }
    for (int i = 0; i < d; ++i) out[i] += prod[i];
  }

  bool operator==(const AlgebraicRing&) const = default;

 private:
  IntPoly modulus_;
};

}  // namespace coxmorse
