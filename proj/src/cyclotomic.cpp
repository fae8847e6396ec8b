#include "coxan/cyclotomic.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstring>
#include <numeric>
#include <sstream>

namespace coxan {

namespace {

void checked_into(__int128 v, std::int64_t& out) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OverflowError("exact coefficient left the 64-bit range");
  out = static_cast<std::int64_t>(v);
}

// Exact division of polynomials over Z, asserting zero remainder.
std::vector<std::int64_t> exact_div(std::vector<std::int64_t> num,
                                    const std::vector<std::int64_t>& den) {
  assert(!den.empty() && den.back() == 1);  // divisors here are monic
  std::vector<std::int64_t> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (int i = static_cast<int>(num.size()) - 1;
       i >= static_cast<int>(den.size()) - 1; --i) {
    std::int64_t c = num[i];
    if (c == 0) continue;
    int shift = i - static_cast<int>(den.size()) + 1;
    q[shift] = c;
    for (std::size_t j = 0; j < den.size(); ++j)
      num[shift + j] = checked_add(num[shift + j], -checked_mul(c, den[j]));
  }
  for (std::int64_t c : num) {
    (void)c;
    assert(c == 0 && "non-exact cyclotomic division");
  }
  return q;
}

}  // namespace

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("exact integer addition overflowed");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("exact integer multiplication overflowed");
  return r;
}

std::vector<std::int64_t> CycloField::cyclotomic_polynomial(long n) {
  // Phi_1 = x - 1; Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
  std::vector<std::vector<std::int64_t>> memo(n + 1);
  memo[1] = {-1, 1};
  for (long k = 2; k <= n; ++k) {
    if (n % k != 0) continue;
    std::vector<std::int64_t> num(k + 1, 0);
    num[0] = -1;
    num[k] = 1;
    for (long d = 1; d < k; ++d)
      if (k % d == 0) num = exact_div(std::move(num), memo[d]);
    memo[k] = std::move(num);
  }
  return memo[n];
}

CycloField::CycloField(long conductor) : n_(conductor) {
  if (conductor < 2 || conductor % 2 != 0)
    throw std::invalid_argument("conductor must be an even integer >= 2");
  phi_ = cyclotomic_polynomial(conductor);
  degree_ = static_cast<int>(phi_.size()) - 1;

  // Residues of zeta^k for k < N, built by multiplying by zeta and reducing.
  powers_.assign(n_, std::vector<std::int64_t>(degree_, 0));
  std::vector<std::int64_t> cur(degree_, 0);
  cur[0] = 1;
  for (long k = 0; k < n_; ++k) {
    powers_[k] = cur;
    // cur *= zeta
    std::int64_t top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < degree_; ++i)
        cur[i] = checked_add(cur[i], -checked_mul(top, phi_[i]));
  }
}

const std::vector<std::int64_t>& CycloField::power_residue(long k) const {
  k %= n_;
  if (k < 0) k += n_;
  return powers_[k];
}

long CycloField::conductor_for_labels(const std::vector<long>& labels) {
  long n = 4;
  for (long m : labels) n = std::lcm(n, 2 * m);
  return n;
}

Cyclo::Cyclo(const CycloField* f, std::vector<std::int64_t> num, std::int64_t den)
    : field_(f), num_(std::move(num)), den_(den) {
  normalize();
}

void Cyclo::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;  // INT64_MIN negation would overflow, but
                                  // denominators are tiny in practice
  }
  std::int64_t g = den_;
  for (auto c : num_) g = std::gcd(g, c < 0 ? -c : c);
  if (g > 1) {
    den_ /= g;
    for (auto& c : num_) c /= g;
  }
}

Cyclo Cyclo::zero(const CycloField& f) {
  return Cyclo(&f, std::vector<std::int64_t>(f.degree(), 0), 1);
}

Cyclo Cyclo::one(const CycloField& f) { return integer(f, 1); }

Cyclo Cyclo::integer(const CycloField& f, std::int64_t v) {
  std::vector<std::int64_t> c(f.degree(), 0);
  c[0] = v;
  return Cyclo(&f, std::move(c), 1);
}

Cyclo Cyclo::rational(const CycloField& f, std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  std::vector<std::int64_t> c(f.degree(), 0);
  c[0] = num;
  return Cyclo(&f, std::move(c), den);
}

Cyclo Cyclo::from_parts(const CycloField& f, std::vector<std::int64_t> num,
                        std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (static_cast<int>(num.size()) != f.degree())
    throw std::invalid_argument("coefficient vector has the wrong length");
  return Cyclo(&f, std::move(num), den);
}

Cyclo Cyclo::two_cos_pi_over(const CycloField& f, long m) {
  if ((f.conductor() % (2 * m)) != 0)
    throw std::invalid_argument("conductor does not contain cos(pi/m)");
  long k = f.conductor() / (2 * m);
  std::vector<std::int64_t> c(f.degree(), 0);
  const auto& p = f.power_residue(k);
  const auto& q = f.power_residue(f.conductor() - k);
  for (int i = 0; i < f.degree(); ++i) c[i] = checked_add(p[i], q[i]);
  return Cyclo(&f, std::move(c), 1);
}

Cyclo Cyclo::cos_pi_over(const CycloField& f, long m) {
  Cyclo t = two_cos_pi_over(f, m);
  t.den_ = checked_mul(t.den_, 2);
  t.normalize();
  return t;
}

bool Cyclo::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](std::int64_t c) { return c == 0; });
}

bool Cyclo::is_one() const {
  if (den_ != 1 || num_.empty() || num_[0] != 1) return false;
  return std::all_of(num_.begin() + 1, num_.end(),
                     [](std::int64_t c) { return c == 0; });
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

Cyclo Cyclo::operator+(const Cyclo& o) const {
  assert(field_ == o.field_);
  std::int64_t g = std::gcd(den_, o.den_);
  std::int64_t la = o.den_ / g, lb = den_ / g;
  std::vector<std::int64_t> c(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i)
    c[i] = checked_add(checked_mul(num_[i], la), checked_mul(o.num_[i], lb));
  return Cyclo(field_, std::move(c), checked_mul(den_, la));
}

Cyclo Cyclo::operator-(const Cyclo& o) const { return *this + (-o); }

Cyclo Cyclo::operator*(const Cyclo& o) const {
  assert(field_ == o.field_);
  const int d = field_->degree();
  // Convolution into 128-bit, then reduction mod Phi_N from the top.
  std::vector<__int128> acc(2 * d - 1, 0);
  for (int i = 0; i < d; ++i) {
    if (num_[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (o.num_[j] == 0) continue;
      acc[i + j] += static_cast<__int128>(num_[i]) * o.num_[j];
    }
  }
  const auto& phi = field_->modulus();
  for (int i = 2 * d - 2; i >= d; --i) {
    __int128 top = acc[i];
    if (top == 0) continue;
    acc[i] = 0;
    for (int j = 0; j < d; ++j) acc[i - d + j] -= top * phi[j];
  }
  std::vector<std::int64_t> c(d);
  for (int i = 0; i < d; ++i) checked_into(acc[i], c[i]);
  return Cyclo(field_, std::move(c), checked_mul(den_, o.den_));
}

bool Cyclo::operator==(const Cyclo& o) const {
  return den_ == o.den_ && num_ == o.num_;
}

bool Cyclo::is_real() const {
  // conj(zeta^k) = zeta^{N-k}; compare against the conjugated residue sum.
  const int d = field_->degree();
  std::vector<std::int64_t> conj(d, 0);
  for (int k = 0; k < d; ++k) {
    if (num_[k] == 0) continue;
    const auto& p = field_->power_residue(field_->conductor() - k);
    for (int i = 0; i < d; ++i)
      conj[i] = checked_add(conj[i], checked_mul(num_[k], p[i]));
  }
  return conj == num_;
}

double Cyclo::to_double() const {
  const long n = field_->conductor();
  double v = 0;
  for (std::size_t k = 0; k < num_.size(); ++k)
    if (num_[k] != 0)
      v += static_cast<double>(num_[k]) *
           std::cos(2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n));
  return v / static_cast<double>(den_);
}

int Cyclo::sign() const {
  if (is_zero()) return 0;
  assert(is_real() && "sign() is defined for real values only");

  // Fast path: double evaluation with a conservative error bound. The
  // denominator is positive and does not affect the sign.
  long double val = 0, mag = 0;
  const long n = field_->conductor();
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    long double c = cosl(2.0L * M_PIl * static_cast<long double>(k) /
                         static_cast<long double>(n));
    val += static_cast<long double>(num_[k]) * c;
    mag += fabsl(static_cast<long double>(num_[k]));
  }
  long double bound = (mag + 1.0L) * 1e-15L;
  if (val > bound) return 1;
  if (val < -bound) return -1;

  // Certified fallback: evaluate at growing MPFR precision until the value
  // clears its rounding-error bound. A nonzero real algebraic number does,
  // at some finite precision.
  for (mpfr_prec_t prec = 128; prec <= 1 << 14; prec *= 2) {
    mpfr_t sum, term, angle, pi;
    mpfr_inits2(prec, sum, term, angle, pi, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(sum, 1);
    long double coeff_mass = 0;
    for (std::size_t k = 0; k < num_.size(); ++k) {
      if (num_[k] == 0) continue;
      mpfr_mul_si(angle, pi, 2 * static_cast<long>(k), MPFR_RNDN);
      mpfr_div_si(angle, angle, n, MPFR_RNDN);
      mpfr_cos(term, angle, MPFR_RNDN);
      mpfr_mul_si(term, term, num_[k], MPFR_RNDN);
      mpfr_add(sum, sum, term, MPFR_RNDN);
      coeff_mass += fabsl(static_cast<long double>(num_[k]));
    }
    // Each term carries a handful of ulps of error; 2^(8-prec) per unit of
    // coefficient mass is a generous envelope.
    mpfr_t err;
    mpfr_init2(err, 64);
    mpfr_set_ld(err, coeff_mass + 1.0L, MPFR_RNDU);
    mpfr_mul_2si(err, err, 8 - static_cast<long>(prec), MPFR_RNDU);
    int result = 0;
    if (mpfr_cmpabs(sum, err) > 0) result = mpfr_sgn(sum) > 0 ? 1 : -1;
    mpfr_clears(sum, term, angle, pi, err, static_cast<mpfr_ptr>(nullptr));
    if (result != 0) return result;
  }
  throw OverflowError("sign(): exhausted precision on a nonzero value");
}

void Cyclo::serialize(std::string& out) const {
  auto put = [&out](std::int64_t v) {
    unsigned char b[8];
    std::uint64_t u = static_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
    out.append(reinterpret_cast<char*>(b), 8);
  };
  put(den_);
  for (auto c : num_) put(c);
}

std::string Cyclo::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    if (!first) os << (num_[k] > 0 ? " + " : " - ");
    else if (num_[k] < 0) os << "-";
    std::int64_t a = num_[k] < 0 ? -num_[k] : num_[k];
    if (a != 1 || k == 0) os << a;
    if (k > 0) {
      if (a != 1) os << "*";
      os << "z";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  std::string body = os.str();
  if (den_ != 1) return "(" + body + ")/" + std::to_string(den_);
  return body;
}

}  // namespace coxan
