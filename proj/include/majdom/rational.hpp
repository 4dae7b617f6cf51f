#ifndef MAJDOM_RATIONAL_HPP
#define MAJDOM_RATIONAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>

namespace majdom {

// Minimal exact rational, just enough for the closed-form regular-graph
// value. Always normalized: den > 0, gcd(|num|, den) = 1.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  Rational operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
  }
  Rational operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
  }
  bool operator==(const Rational&) const = default;
  bool operator<(const Rational& o) const {
    return num * o.den < o.num * den;
  }

  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / den; }

  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Rational max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace majdom

#endif  // MAJDOM_RATIONAL_HPP
