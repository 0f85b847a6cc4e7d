#include "kacward/polynomial.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace kacward {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  const __int128 s = static_cast<__int128>(a) + b;
  if (s > std::numeric_limits<std::int64_t>::max() ||
      s < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("IntPolynomial coefficient overflow");
  }
  return static_cast<std::int64_t>(s);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  const __int128 p = static_cast<__int128>(a) * b;
  if (p > std::numeric_limits<std::int64_t>::max() ||
      p < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("IntPolynomial coefficient overflow");
  }
  return static_cast<std::int64_t>(p);
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0);
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

std::int64_t IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

void IntPolynomial::add_term(int degree, std::int64_t c) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (degree >= static_cast<int>(coeffs_.size())) {
    coeffs_.resize(static_cast<std::size_t>(degree) + 1, 0);
  }
  coeffs_[static_cast<std::size_t>(degree)] =
      checked_add(coeffs_[static_cast<std::size_t>(degree)], c);
  trim();
}

IntPolynomial IntPolynomial::truncated(int max_degree) const {
  if (max_degree < 0) return IntPolynomial({0});
  std::vector<std::int64_t> v(
      coeffs_.begin(),
      coeffs_.begin() + std::min<std::size_t>(coeffs_.size(),
                                              static_cast<std::size_t>(max_degree) + 1));
  return IntPolynomial(std::move(v));
}

double IntPolynomial::evaluate(double u) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * u + static_cast<double>(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::add(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    v[k] = checked_add(a.coeff(static_cast<int>(k)), b.coeff(static_cast<int>(k)));
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::mul_truncated(const IntPolynomial& a,
                                           const IntPolynomial& b,
                                           int max_degree) {
  const int d = std::min(a.degree() + b.degree(), max_degree);
  if (d < 0) return IntPolynomial({0});
  std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i <= a.degree(); ++i) {
    const std::int64_t ai = a.coeff(i);
    if (ai == 0) continue;
    for (int j = 0; j <= b.degree() && i + j <= d; ++j) {
      const std::int64_t bj = b.coeff(j);
      if (bj == 0) continue;
      v[static_cast<std::size_t>(i + j)] =
          checked_add(v[static_cast<std::size_t>(i + j)], checked_mul(ai, bj));
    }
  }
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_json() const {
  std::ostringstream os;
  os << "{\"degree\": " << degree() << ", \"coeffs\": [";
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) os << ", ";
    os << coeffs_[k];
  }
  os << "]}";
  return os.str();
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace kacward
