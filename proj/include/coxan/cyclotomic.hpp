#ifndef COXAN_CYCLOTOMIC_HPP
#define COXAN_CYCLOTOMIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "coxan/errors.hpp"

namespace coxan {

// The field Q(zeta_N) for one fixed even conductor N. Holds the cyclotomic
// polynomial Phi_N and the reduction table for powers zeta^k, k < N. All
// Cyclo values carry a pointer to their field; fields must outlive them.
class CycloField {
 public:
  explicit CycloField(long conductor);

  long conductor() const { return n_; }
  int degree() const { return degree_; }

  // Phi_N as a monic integer polynomial, index = power, size degree+1.
  const std::vector<std::int64_t>& modulus() const { return phi_; }

  // Coefficient vector of zeta^k reduced mod Phi_N, 0 <= k < N.
  const std::vector<std::int64_t>& power_residue(long k) const;

  // Smallest conductor whose field contains cos(pi/m) for every label in
  // `labels`: lcm of 4 and all 2m. Edgeless inputs give 4.
  static long conductor_for_labels(const std::vector<long>& labels);

  // Phi_n by iterated exact division of x^n - 1 by the Phi_d, d | n proper.
  static std::vector<std::int64_t> cyclotomic_polynomial(long n);

 private:
  long n_;
  int degree_;
  std::vector<std::int64_t> phi_;
  std::vector<std::vector<std::int64_t>> powers_;  // [k] = zeta^k mod Phi_N
};

// An element of Q(zeta_N): integer coefficient vector over a common positive
// denominator, reduced mod Phi_N and normalized (gcd of all entries and the
// denominator is 1). Arithmetic is exact; int64 overflow raises OverflowError
// rather than wrapping.
class Cyclo {
 public:
  Cyclo() : field_(nullptr), den_(1) {}

  static Cyclo zero(const CycloField& f);
  static Cyclo one(const CycloField& f);
  static Cyclo integer(const CycloField& f, std::int64_t v);
  static Cyclo rational(const CycloField& f, std::int64_t num, std::int64_t den);
  // 2*cos(pi/m) = zeta^(N/2m) + zeta^(-N/2m); requires 2m | N.
  static Cyclo two_cos_pi_over(const CycloField& f, long m);
  // cos(pi/m); carries denominator 2 unless it is rational.
  static Cyclo cos_pi_over(const CycloField& f, long m);

  const CycloField* field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Cyclo operator-() const;
  Cyclo operator+(const Cyclo& o) const;
  Cyclo operator-(const Cyclo& o) const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }
  bool operator==(const Cyclo& o) const;
  bool operator!=(const Cyclo& o) const { return !(*this == o); }

  // True iff the value is fixed by complex conjugation (zeta -> zeta^{N-1}).
  bool is_real() const;

  // Exact sign (-1, 0, +1) of a real value. Fast path evaluates in double
  // with an a-priori error bound; ambiguous cases escalate through MPFR at
  // growing precision. Exact zero is decided on the coefficients alone.
  int sign() const;

  // Numeric value of the standard embedding zeta = exp(2*pi*i/N), real part.
  double to_double() const;

  // Appends a canonical byte serialization (denominator + coefficients,
  // little endian) used for hashing and exact deduplication.
  void serialize(std::string& out) const;

  std::string str() const;  // debug formatting, e.g. "(1 - z^2)/2"

  // Raw access for the fused matrix kernels; values stay normalized.
  std::int64_t den() const { return den_; }
  const std::vector<std::int64_t>& coeffs() const { return num_; }
  static Cyclo from_parts(const CycloField& f, std::vector<std::int64_t> num,
                          std::int64_t den);

 private:
  Cyclo(const CycloField* f, std::vector<std::int64_t> num, std::int64_t den);
  void normalize();

  const CycloField* field_;
  std::vector<std::int64_t> num_;
  std::int64_t den_;
};

// Checked int64 helpers shared by the exact-arithmetic code paths.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace coxan

#endif
