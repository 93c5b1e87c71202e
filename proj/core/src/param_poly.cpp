#include "isochron/param_poly.hpp"

#include <algorithm>

namespace isochron {

ParamPoly::ParamPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ParamPoly::ParamPoly(const Rational& constant) : coeffs_{constant} { trim(); }

ParamPoly ParamPoly::n() { return ParamPoly{Rational(0), Rational(1)}; }

void ParamPoly::trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational ParamPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational ParamPoly::evaluate(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

double ParamPoly::evaluate(double n) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * n + it->get_d();
  return acc;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) out[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

std::string ParamPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Rational mag = abs(c);
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += k == 1 ? "n" : "n^" + std::to_string(k);
  }
  return out;
}

ParamPoly binomial(const ParamPoly& top, int k) {
  ParamPoly result(Rational(1));
  for (int i = 0; i < k; ++i) {
    result *= top - ParamPoly(Rational(i));
    result *= Rational(1, i + 1);
  }
  return result;
}

}  // namespace isochron
