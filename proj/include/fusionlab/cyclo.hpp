#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fusionlab {

using Rational = mpq_class;

/// Always "p/q", also for integers ("3/1").
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& text);

/// An element of Q(zeta_N) for the least N containing it.
///
/// The coefficients are taken in the power basis 1, z, ..., z^(phi(N)-1) of
/// Q(zeta_N) = Q[z]/Phi_N(z), with trailing zeros dropped. Equal field
/// elements therefore have identical representations.
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long value);  // NOLINT(google-explicit-constructor)
  Cyclotomic(Rational value);  // NOLINT(google-explicit-constructor)

  static Cyclotomic root_of_unity(long n, long k);

  /// Builds sum_k coeffs[k] z_N^k for arbitrary exponents 0 <= k < N and
  /// canonicalizes.
  static Cyclotomic from_exponents(long n, const std::vector<Rational>& coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<Rational> rational_part() const;
  bool is_integer() const;

  /// Coefficients in the power basis of Q(zeta_m); m must be a multiple of
  /// the conductor. The result has length phi(m).
  std::vector<Rational> coefficients_at(long m) const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);
  Cyclotomic& operator/=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }

  Cyclotomic inverse() const;
  Cyclotomic conjugate() const;
  /// The Galois automorphism z_N -> z_N^k, k coprime to the conductor.
  Cyclotomic galois(long k) const;

  std::complex<double> numeric() const;

  /// Human-readable sum such as "1 + z5 + z5^4" or "-1/2".
  std::string to_string() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
  }
  /// Total order: conductor first, then coefficients lexicographically.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(long conductor, std::vector<Rational> coeffs);
  void canonicalize();

  long conductor_ = 1;
  std::vector<Rational> coeffs_;
};

std::complex<double> numeric_eval(const Cyclotomic& a);

struct CyclotomicHash {
  std::size_t operator()(const Cyclotomic& a) const noexcept;
};

/// Fixed-conductor arithmetic without re-minimizing the conductor after each
/// step. Used for long sums of products (Verlinde, inner products) where all
/// operands live in one known field Q(zeta_m).
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(long m);

  long modulus() const { return m_; }
  std::vector<Rational> embed(const Cyclotomic& a) const { return a.coefficients_at(m_); }

  std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  void add_product(std::vector<Rational>& acc, const std::vector<Rational>& a,
                   const std::vector<Rational>& b) const;
  Cyclotomic finish(const std::vector<Rational>& acc) const;

 private:
  long m_;
  std::size_t phi_;
  std::vector<long> poly_;  // Phi_m, low degree first
};

long euler_phi(long n);
/// Coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(long n);

}  // namespace fusionlab
