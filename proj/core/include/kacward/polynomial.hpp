#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kacward {

/// Dense polynomial in u with exact 64-bit integer coefficients.
/// All arithmetic stays in integers; multiplication throws on overflow.
class IntPolynomial {
public:
  IntPolynomial() : coeffs_{0} {}
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(int degree, std::int64_t c);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int k) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }

  void add_term(int degree, std::int64_t c);
  IntPolynomial truncated(int max_degree) const;
  double evaluate(double u) const;

  static IntPolynomial add(const IntPolynomial& a, const IntPolynomial& b);
  static IntPolynomial mul_truncated(const IntPolynomial& a,
                                     const IntPolynomial& b, int max_degree);

  bool operator==(const IntPolynomial& other) const {
    return coeffs_ == other.coeffs_;
  }

  /// {"degree": d, "coeffs": [c0, ..., cd]}
  std::string to_json() const;

private:
  void trim();
  std::vector<std::int64_t> coeffs_;  // coeffs_[k] multiplies u^k
};

}  // namespace kacward
