#include "latticestick/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "latticestick/errors.hpp"

namespace latticestick {

LaurentPoly LaurentPoly::monomial(std::int64_t coefficient, int exponent) {
  LaurentPoly p;
  if (coefficient != 0) {
    p.low_ = exponent;
    p.coeffs_ = {coefficient};
  }
  return p;
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  const long idx = static_cast<long>(exponent) - low_;
  if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(idx)];
}

void LaurentPoly::trim() {
  std::size_t front = 0;
  while (front < coeffs_.size() && coeffs_[front] == 0) ++front;
  if (front == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0) coeffs_.pop_back();
  if (front > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(front));
    low_ += static_cast<int>(front);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exponent(), o.max_exponent());
  if (lo < low_ || hi > max_exponent()) {
    std::vector<std::int64_t> grown(static_cast<std::size_t>(hi - lo + 1), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), grown.begin() + (low_ - lo));
    coeffs_ = std::move(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[static_cast<std::size_t>(o.low_ - low_) + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  if (is_zero()) return p;
  p.low_ = -max_exponent();
  p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  return p;
}

LaurentPoly LaurentPoly::exponents_divided(int d) const {
  LaurentPoly out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (e % d != 0) throw std::logic_error("exponent " + std::to_string(e) + " not divisible by " + std::to_string(d));
    out += monomial(coeffs_[i], e / d);
  }
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly result = constant(1), base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    base = base * base;
    k >>= 1u;
  }
  return result;
}

std::int64_t LaurentPoly::evaluate_at_minus_one() const {
  std::int64_t v = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = low_ + static_cast<int>(i);
    v += (e % 2 == 0) ? coeffs_[i] : -coeffs_[i];
  }
  return v;
}

std::string LaurentPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const int e = low_ + static_cast<int>(i);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::int64_t mag = c < 0 ? -c : c;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << var;
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

LaurentPoly LaurentPoly::parse(std::string_view text, std::string_view var) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "0") return {};
  auto fail = [&] { return Error(ErrorCode::MalformedInput, "cannot parse polynomial '" + std::string(text) + "'"); };
  LaurentPoly out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw fail();
    }
    std::int64_t coeff = 1;
    bool have_digits = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) {
      coeff = std::stoll(s.substr(i, j - i));
      have_digits = true;
      i = j;
    }
    int exponent = 0;
    if (s.compare(i, var.size(), var) == 0 || (have_digits && i < s.size() && s[i] == '*')) {
      if (s[i] == '*') ++i;
      if (s.compare(i, var.size(), var) != 0) throw fail();
      i += var.size();
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::size_t k = i;
        if (k < s.size() && s[k] == '-') ++k;
        std::size_t m = k;
        while (m < s.size() && std::isdigit(static_cast<unsigned char>(s[m]))) ++m;
        if (m == k) throw fail();
        exponent = std::stoi(s.substr(i, m - i));
        i = m;
      }
    } else if (!have_digits) {
      throw fail();
    }
    out += monomial(sign * coeff, exponent);
  }
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  return a.coeffs_ < b.coeffs_;
}

}  // namespace latticestick
