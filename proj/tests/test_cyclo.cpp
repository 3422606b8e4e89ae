#include <doctest.h>

#include <complex>
#include <numbers>
#include <random>

#include "fusionlab/cyclo.hpp"

using fusionlab::Cyclotomic;
using fusionlab::Rational;

namespace {

Cyclotomic z(long n, long k) { return Cyclotomic::root_of_unity(n, k); }

// Direct floating evaluation from exponent/coefficient pairs, independent of
// the canonical form.
std::complex<double> direct(long n, const std::vector<std::pair<long, double>>& terms) {
  std::complex<double> s = 0;
  for (auto [k, c] : terms) s += c * std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
  return s;
}

Cyclotomic random_element(std::mt19937& rng, long n, int height) {
  std::uniform_int_distribution<int> coef(-height, height);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> v(static_cast<std::size_t>(n));
  for (auto& c : v) {
    c = Rational(coef(rng), den(rng));
    c.canonicalize();
  }
  return Cyclotomic::from_exponents(n, v);
}

}  // namespace

TEST_CASE("roots of unity reduce to their conductor") {
  CHECK(z(4, 2) == Cyclotomic(-1));
  CHECK(z(4, 2).conductor() == 1);
  CHECK(z(1, 0) == Cyclotomic(1));
  Cyclotomic z6 = z(6, 1);
  CHECK(z6 == -z(3, 2));
  CHECK(z6.conductor() == 3);
  CHECK(z6 * z6 * z6 == Cyclotomic(-1));
  CHECK(z6 * z6 * z6 * z6 * z6 * z6 == Cyclotomic(1));
  CHECK(z(8, 2) == z(4, 1));
  CHECK(z(10, 5) == Cyclotomic(-1));
}

TEST_CASE("field operations on small examples") {
  CHECK((Cyclotomic(1) + z(3, 1)).inverse() == -z(3, 1));
  CHECK(z(5, 1).conjugate() == z(5, 4));
  CHECK((z(5, 1) + z(5, 4)) * (z(5, 2) + z(5, 3)) == Cyclotomic(-1));
  CHECK_THROWS(Cyclotomic().inverse());
  Cyclotomic sqrt5 = z(5, 1) - z(5, 2) - z(5, 3) + z(5, 4);
  CHECK(sqrt5 * sqrt5 == Cyclotomic(5));
  Cyclotomic i = z(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  CHECK((Cyclotomic(1) + i) / (Cyclotomic(1) - i) == i);
}

TEST_CASE("rational part") {
  CHECK(*(z(3, 1) + z(3, 2)).rational_part() == -1);
  CHECK_FALSE(z(5, 1).rational_part().has_value());
  CHECK(*(z(5, 1) + z(5, 2) + z(5, 3) + z(5, 4)).rational_part() == -1);
  CHECK((z(7, 1) + z(7, 2) + z(7, 4)) * (z(7, 3) + z(7, 5) + z(7, 6)) == Cyclotomic(2));
}

TEST_CASE("numeric evaluation matches direct summation") {
  CHECK(std::abs((z(5, 1) + z(5, 4)).numeric() - 2 * std::cos(2 * std::numbers::pi / 5)) < 1e-12);
  CHECK(std::abs((z(5, 1) + z(5, 4)).numeric() - 0.6180339887) < 1e-9);
  CHECK(Cyclotomic(-1).numeric() == std::complex<double>(-1.0, 0.0));
  CHECK(std::abs(z(8, 1).numeric() - std::complex<double>(std::sqrt(0.5), std::sqrt(0.5))) < 1e-12);
  Cyclotomic a = Cyclotomic(3) * z(12, 1) - Cyclotomic(Rational(1, 2)) * z(12, 7) + z(12, 11);
  CHECK(std::abs(a.numeric() - direct(12, {{1, 3.0}, {7, -0.5}, {11, 1.0}})) < 1e-12);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20240611);
  std::vector<long> conductors{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15, 20, 24};
  for (long n : conductors) {
    for (int trial = 0; trial < 4; ++trial) {
      Cyclotomic a = random_element(rng, n, 6);
      Cyclotomic b = random_element(rng, n, 6);
      long n2 = conductors[(trial * 5 + n) % conductors.size()];
      Cyclotomic c = random_element(rng, n2, 6);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == Cyclotomic());
      CHECK((a - a).conductor() == 1);
      CHECK(a.conjugate().conjugate() == a);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(1));
      if (!b.is_zero()) CHECK((a / b) * b == a);
      CHECK(std::abs((a * b).numeric() - a.numeric() * b.numeric()) < 1e-9);
      CHECK(std::abs((a + c).numeric() - (a.numeric() + c.numeric())) < 1e-9);
      CHECK(std::abs(a.conjugate().numeric() - std::conj(a.numeric())) < 1e-9);
    }
  }
}

TEST_CASE("canonical form is unique across representations") {
  // z_9 + z_9^4 + z_9^7 = z_9 (1 + z_3 + z_3^2) = 0
  CHECK((z(9, 1) + z(9, 4) + z(9, 7)).is_zero());
  // z_15^5 lives in Q(z_3)
  CHECK(z(15, 5) == z(3, 1));
  CHECK(z(15, 5).conductor() == 3);
  // z_20^4 = z_5
  CHECK(z(20, 4) == z(5, 1));
  // i * z_3 has conductor 12
  CHECK((z(4, 1) * z(3, 1)).conductor() == 12);
  CHECK(z(4, 1) * z(3, 1) == z(12, 7));
  // golden ratio built two ways
  Cyclotomic phi1 = Cyclotomic(1) + z(5, 1) + z(5, 4);
  Cyclotomic phi2 = (Cyclotomic(1) + (z(5, 1) - z(5, 2) - z(5, 3) + z(5, 4))) / Cyclotomic(2);
  CHECK(phi1 == phi2);
  CHECK(phi1 * phi1 == phi1 + Cyclotomic(1));
}

TEST_CASE("ordering and hashing are consistent with equality") {
  Cyclotomic a = z(15, 5);
  Cyclotomic b = z(3, 1);
  CHECK((a <=> b) == std::strong_ordering::equal);
  CHECK(fusionlab::CyclotomicHash{}(a) == fusionlab::CyclotomicHash{}(b));
  CHECK(Cyclotomic(1) < z(3, 1));
}

TEST_CASE("accumulator agrees with ordinary arithmetic") {
  fusionlab::CyclotomicAccumulator acc(60);
  Cyclotomic a = z(5, 1) + Cyclotomic(Rational(2, 3)) * z(4, 1);
  Cyclotomic b = z(3, 1) - z(12, 5);
  std::vector<Rational> s;
  acc.add_product(s, acc.embed(a), acc.embed(b));
  acc.add_product(s, acc.embed(b), acc.embed(b));
  CHECK(acc.finish(s) == a * b + b * b);
}

TEST_CASE("rational strings") {
  CHECK(fusionlab::rational_to_string(Rational(3)) == "3/1");
  CHECK(fusionlab::rational_to_string(Rational(-2, 4)) == "-1/2");
  CHECK(fusionlab::rational_from_string("6/4") == Rational(3, 2));
}
