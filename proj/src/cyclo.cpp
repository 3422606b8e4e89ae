#include "fusionlab/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "fusionlab/error.hpp"

namespace fusionlab {

std::string rational_to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
  }
  q.canonicalize();
  return q;
}

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<long> prime_divisors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::mutex& poly_mutex() {
  static std::mutex m;
  return m;
}

// Remainder of v modulo a monic integer polynomial of degree d.
void reduce_mod(std::vector<Rational>& v, const std::vector<long>& poly) {
  const std::size_t d = poly.size() - 1;
  for (std::size_t i = v.size(); i-- > d;) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    for (std::size_t j = 0; j < d; ++j) {
      if (poly[j] != 0) v[i - d + j] -= c * poly[j];
    }
    v[i] = 0;
  }
  v.resize(d);
}

void trim(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Q(zeta_m) inside Q(zeta_n): the embedding matrix and a left inverse on a
// set of pivot rows.
struct Embedding {
  std::size_t rows_n = 0;
  std::size_t cols_m = 0;
  std::vector<std::vector<long>> e;       // rows_n x cols_m
  std::vector<std::size_t> pivots;        // cols_m rows of e
  std::vector<std::vector<Rational>> inv;  // inverse of e restricted to pivots
};

std::shared_ptr<const Embedding> embedding(long n, long m) {
  static std::mutex mutex;
  static std::map<std::pair<long, long>, std::shared_ptr<const Embedding>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, m});
    if (it != cache.end()) return it->second;
  }
  auto emb = std::make_shared<Embedding>();
  const auto& phi_n = cyclotomic_polynomial(n);
  emb->rows_n = static_cast<std::size_t>(euler_phi(n));
  emb->cols_m = static_cast<std::size_t>(euler_phi(m));
  emb->e.assign(emb->rows_n, std::vector<long>(emb->cols_m, 0));
  const long step = n / m;
  for (std::size_t j = 0; j < emb->cols_m; ++j) {
    std::vector<Rational> v(static_cast<std::size_t>(j * step + 1), 0);
    v[j * step] = 1;
    if (v.size() < emb->rows_n) v.resize(emb->rows_n, 0);
    reduce_mod(v, phi_n);
    for (std::size_t i = 0; i < emb->rows_n; ++i) emb->e[i][j] = v[i].get_num().get_si();
  }
  // Pick pivot rows greedily by elimination on the transpose.
  std::vector<std::vector<Rational>> basis;  // reduced rows found so far
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < emb->rows_n && emb->pivots.size() < emb->cols_m; ++i) {
    std::vector<Rational> row(emb->cols_m);
    for (std::size_t j = 0; j < emb->cols_m; ++j) row[j] = emb->e[i][j];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (row[lead[b]] == 0) continue;
      Rational f = row[lead[b]] / basis[b][lead[b]];
      for (std::size_t j = 0; j < emb->cols_m; ++j) row[j] -= f * basis[b][j];
    }
    std::size_t l = 0;
    while (l < emb->cols_m && row[l] == 0) ++l;
    if (l == emb->cols_m) continue;
    basis.push_back(row);
    lead.push_back(l);
    emb->pivots.push_back(i);
  }
  // Invert the square submatrix by Gauss-Jordan.
  const std::size_t k = emb->cols_m;
  std::vector<std::vector<Rational>> a(k, std::vector<Rational>(2 * k, 0));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) a[r][j] = emb->e[emb->pivots[r]][j];
    a[r][k + r] = 1;
  }
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * k; ++j) a[r][j] -= f * a[c][j];
    }
  }
  emb->inv.assign(k, std::vector<Rational>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t j = 0; j < k; ++j) emb->inv[r][j] = a[r][k + j];
  }
  std::lock_guard lock(mutex);
  return cache.emplace(std::make_pair(n, m), std::move(emb)).first->second;
}

// Solve for b with E b = a; nullopt when a is outside the subfield.
std::optional<std::vector<Rational>> restrict_to(const std::vector<Rational>& a, long n, long m) {
  auto emb = embedding(n, m);
  std::vector<Rational> padded = a;
  padded.resize(emb->rows_n, 0);
  std::vector<Rational> b(emb->cols_m, 0);
  for (std::size_t r = 0; r < emb->cols_m; ++r) {
    for (std::size_t j = 0; j < emb->cols_m; ++j) {
      const Rational& x = padded[emb->pivots[j]];
      if (x != 0 && emb->inv[r][j] != 0) b[r] += emb->inv[r][j] * x;
    }
  }
  for (std::size_t i = 0; i < emb->rows_n; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < emb->cols_m; ++j) {
      if (emb->e[i][j] != 0 && b[j] != 0) s += b[j] * emb->e[i][j];
    }
    if (s != padded[i]) return std::nullopt;
  }
  return b;
}

std::vector<Rational> lift(const std::vector<Rational>& a, long from, long to) {
  const long step = to / from;
  const auto& poly = cyclotomic_polynomial(to);
  std::vector<Rational> v(std::max<std::size_t>(a.empty() ? 0 : (a.size() - 1) * step + 1, poly.size() - 1), 0);
  for (std::size_t k = 0; k < a.size(); ++k) v[k * step] = a[k];
  reduce_mod(v, poly);
  return v;
}

std::vector<Rational> poly_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                    const std::vector<long>& poly) {
  if (a.empty() || b.empty()) return std::vector<Rational>(poly.size() - 1, 0);
  std::vector<Rational> v(std::max(a.size() + b.size() - 1, poly.size() - 1), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) v[i + j] += a[i] * b[j];
    }
  }
  reduce_mod(v, poly);
  return v;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<long>> cache;
  {
    std::lock_guard lock(poly_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(static_cast<std::size_t>(n + 1), 0);
  num[0] = -1;
  num[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long>& div = cyclotomic_polynomial(d);
    const std::size_t dd = div.size() - 1;
    std::vector<long> quo(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      long c = num[i];
      quo[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * div[j];
    }
    num = std::move(quo);
  }
  std::lock_guard lock(poly_mutex());
  return cache.emplace(n, std::move(num)).first->second;
}

Cyclotomic::Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

Cyclotomic::Cyclotomic(Rational value) {
  value.canonicalize();
  if (value != 0) coeffs_.push_back(std::move(value));
}

Cyclotomic::Cyclotomic(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
  for (Rational& c : coeffs_) c.canonicalize();
  canonicalize();
}

void Cyclotomic::canonicalize() {
  trim(coeffs_);
  if (coeffs_.empty()) {
    conductor_ = 1;
    return;
  }
  bool reduced = true;
  while (reduced && conductor_ > 1) {
    reduced = false;
    for (long p : prime_divisors(conductor_)) {
      long m = conductor_ / p;
      auto b = restrict_to(coeffs_, conductor_, m);
      if (b) {
        coeffs_ = std::move(*b);
        trim(coeffs_);
        conductor_ = m;
        reduced = true;
        break;
      }
    }
  }
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "root of unity needs n >= 1");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> v(static_cast<std::size_t>(n), 0);
  v[static_cast<std::size_t>(k)] = 1;
  return from_exponents(n, v);
}

Cyclotomic Cyclotomic::from_exponents(long n, const std::vector<Rational>& coeffs) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "conductor must be positive");
  std::vector<Rational> v(static_cast<std::size_t>(n), 0);
  for (std::size_t k = 0; k < coeffs.size(); ++k) v[k % static_cast<std::size_t>(n)] += coeffs[k];
  reduce_mod(v, cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(v));
}

std::optional<Rational> Cyclotomic::rational_part() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

bool Cyclotomic::is_integer() const {
  auto q = rational_part();
  return q && q->get_den() == 1;
}

std::vector<Rational> Cyclotomic::coefficients_at(long m) const {
  if (m % conductor_ != 0) {
    throw Error(ErrorCode::InvalidArgument, "field Q(zeta_" + std::to_string(m) + ") does not contain element of conductor " +
                                                std::to_string(conductor_));
  }
  return lift(coeffs_, conductor_, m);
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (rhs.is_zero()) return *this;
  long m = std::lcm(conductor_, rhs.conductor_);
  std::vector<Rational> a = m == conductor_ ? coeffs_ : lift(coeffs_, conductor_, m);
  std::vector<Rational> b = m == rhs.conductor_ ? rhs.coeffs_ : lift(rhs.coeffs_, rhs.conductor_, m);
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  conductor_ = m;
  coeffs_ = std::move(a);
  canonicalize();
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) {
  if (is_zero()) return *this;
  if (rhs.is_zero()) return *this = Cyclotomic();
  if (rhs.conductor_ == 1) {
    for (auto& c : coeffs_) c *= rhs.coeffs_[0];
    return *this;
  }
  if (conductor_ == 1) {
    Rational s = coeffs_[0];
    *this = rhs;
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  long m = std::lcm(conductor_, rhs.conductor_);
  std::vector<Rational> a = m == conductor_ ? coeffs_ : lift(coeffs_, conductor_, m);
  std::vector<Rational> b = m == rhs.conductor_ ? rhs.coeffs_ : lift(rhs.coeffs_, rhs.conductor_, m);
  trim(a);
  trim(b);
  conductor_ = m;
  coeffs_ = poly_multiply(a, b, cyclotomic_polynomial(m));
  canonicalize();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (conductor_ == 1) return Cyclotomic(Rational(1 / coeffs_[0]));
  const auto& poly = cyclotomic_polynomial(conductor_);
  const std::size_t d = poly.size() - 1;
  // Column j of the multiplication matrix is a * z^j; solve for x with a x = 1.
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d + 1, 0));
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> zj(j + 1, 0);
    zj[j] = 1;
    std::vector<Rational> col = poly_multiply(coeffs_, zj, poly);
    for (std::size_t i = 0; i < d; ++i) mat[i][j] = col[i];
  }
  mat[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && mat[p][c] == 0) ++p;
    if (p == d) throw Error(ErrorCode::DivisionByZero, "singular multiplication matrix");
    std::swap(mat[p], mat[c]);
    Rational inv = 1 / mat[c][c];
    for (auto& x : mat[c]) x *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || mat[r][c] == 0) continue;
      Rational f = mat[r][c];
      for (std::size_t j = c; j <= d; ++j) mat[r][j] -= f * mat[c][j];
    }
  }
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i < d; ++i) x[i] = mat[i][d];
  return Cyclotomic(conductor_, std::move(x));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs) { return *this *= rhs.inverse(); }

Cyclotomic Cyclotomic::galois(long k) const {
  if (conductor_ == 1) return *this;
  const long n = conductor_;
  k %= n;
  if (k < 0) k += n;
  if (std::gcd(k, n) != 1) throw Error(ErrorCode::InvalidArgument, "Galois exponent not coprime to conductor");
  std::vector<Rational> v(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[(i * static_cast<std::size_t>(k)) % static_cast<std::size_t>(n)] += coeffs_[i];
  reduce_mod(v, cyclotomic_polynomial(n));
  return Cyclotomic(n, std::move(v));
}

Cyclotomic Cyclotomic::conjugate() const { return galois(-1); }

std::complex<double> Cyclotomic::numeric() const {
  std::complex<double> sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(conductor_);
    sum += coeffs_[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::complex<double> numeric_eval(const Cyclotomic& a) { return a.numeric(); }

std::string Cyclotomic::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string monomial;
    if (k > 0) {
      monomial = "z" + std::to_string(conductor_);
      if (k > 1) monomial += "^" + std::to_string(k);
    }
    if (monomial.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial;
    } else {
      out += mag.get_str() + "*" + monomial;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ != b.conductor_) return a.conductor_ <=> b.conductor_;
  const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    Rational x = i < a.coeffs_.size() ? a.coeffs_[i] : Rational(0);
    Rational y = i < b.coeffs_.size() ? b.coeffs_[i] : Rational(0);
    int c = cmp(x, y);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t CyclotomicHash::operator()(const Cyclotomic& a) const noexcept {
  std::size_t h = std::hash<long>{}(a.conductor());
  for (const Rational& c : a.coeffs()) {
    std::size_t x = std::hash<long>{}(mpz_get_si(c.get_num_mpz_t())) * 31 + std::hash<long>{}(mpz_get_si(c.get_den_mpz_t()));
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CyclotomicAccumulator::CyclotomicAccumulator(long m)
    : m_(m), phi_(static_cast<std::size_t>(euler_phi(m))), poly_(cyclotomic_polynomial(m)) {}

std::vector<Rational> CyclotomicAccumulator::multiply(const std::vector<Rational>& a,
                                                      const std::vector<Rational>& b) const {
  return poly_multiply(a, b, poly_);
}

void CyclotomicAccumulator::add_product(std::vector<Rational>& acc, const std::vector<Rational>& a,
                                        const std::vector<Rational>& b) const {
  std::vector<Rational> p = poly_multiply(a, b, poly_);
  if (acc.size() < phi_) acc.resize(phi_, 0);
  for (std::size_t i = 0; i < phi_; ++i) acc[i] += p[i];
}

Cyclotomic CyclotomicAccumulator::finish(const std::vector<Rational>& acc) const {
  return Cyclotomic::from_exponents(m_, acc);
}

}  // namespace fusionlab
