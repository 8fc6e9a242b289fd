#include "ncalg/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace ncalg {

std::string to_string(const Rational& q) {
  return q.str();
}

std::string to_string(const BigInt& n) {
  return n.str();
}

double log_value(const BigInt& n) {
  if (n <= 0) throw std::domain_error("log_value requires a positive integer");
  // A 17-digit window keeps the relative error below 1e-16 no matter how
  // large n gets (doubles overflow near 10^308; partition-scale values don't fit).
  const std::string digits = n.str();
  constexpr std::size_t window = 17;
  if (digits.size() <= window) return std::log(std::stod(digits));
  double mantissa = std::stod(digits.substr(0, window));
  return std::log(mantissa) +
         static_cast<double>(digits.size() - window) * std::log(10.0);
}

}  // namespace ncalg
