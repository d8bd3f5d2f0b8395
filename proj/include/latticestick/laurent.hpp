#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace latticestick {

/// Exact integer Laurent polynomial in one variable. Stored densely from the
/// lowest exponent; no leading or trailing zero coefficients are kept.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  /// c * var^exponent
  static LaurentPoly monomial(std::int64_t coefficient, int exponent);
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int exponent) const;
  const std::vector<std::int64_t>& coefficients() const { return coeffs_; }

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  /// Multiplies by var^k.
  LaurentPoly shifted(int k) const;
  /// var -> var^-1
  LaurentPoly inverted() const;
  /// Substitutes var -> var^(1/d); every exponent must be divisible by d.
  LaurentPoly exponents_divided(int d) const;
  LaurentPoly pow(unsigned k) const;
  /// Value at an integer point (only meaningful when it is exact, e.g. +-1).
  std::int64_t evaluate_at_minus_one() const;

  /// Ascending exponents, e.g. "-t^-4 + t^-3 + t^-1"; zero prints as "0".
  std::string to_string(std::string_view var = "t") const;
  static LaurentPoly parse(std::string_view text, std::string_view var = "t");

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// Total order used for choosing a mirror-canonical representative.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void trim();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace latticestick
