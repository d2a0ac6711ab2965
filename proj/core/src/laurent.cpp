#include "jring/laurent.hpp"

#include <cmath>
#include <sstream>

namespace jring {

LaurentPoly::LaurentPoly(int lowest, std::vector<Int> coeffs)
    : lo_(lowest), c_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Int c, int k) {
  LaurentPoly p;
  if (c != 0) {
    p.lo_ = k;
    p.c_.push_back(std::move(c));
  }
  return p;
}

void LaurentPoly::trim() {
  size_t a = 0, b = c_.size();
  while (a < b && c_[a] == 0) ++a;
  while (b > a && c_[b - 1] == 0) --b;
  if (a == b) {
    c_.clear();
    lo_ = 0;
    return;
  }
  if (a > 0 || b < c_.size()) {
    c_ = std::vector<Int>(c_.begin() + a, c_.begin() + b);
  }
  lo_ += static_cast<int>(a);
}

int LaurentPoly::lowest() const { return lo_; }
int LaurentPoly::highest() const { return lo_ + static_cast<int>(c_.size()) - 1; }

Int LaurentPoly::coeff(int k) const {
  if (is_zero() || k < lo_ || k > highest()) return Int(0);
  return c_[k - lo_];
}

Int LaurentPoly::top_coeff() const { return is_zero() ? Int(0) : c_.back(); }

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const Int& c : c_) s += c;
  return s;
}

double LaurentPoly::eval(double v) const {
  double s = 0;
  for (size_t i = 0; i < c_.size(); ++i)
    s += static_cast<double>(c_[i]) * std::pow(v, lo_ + static_cast<int>(i));
  return s;
}

bool LaurentPoly::nonnegative() const {
  for (const Int& c : c_)
    if (c < 0) return false;
  return true;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p = *this;
  if (!p.is_zero()) p.lo_ += k;
  return p;
}

LaurentPoly LaurentPoly::stretched(int m) const {
  if (is_zero()) return {};
  LaurentPoly p;
  p.lo_ = lo_ * m;
  p.c_.assign((c_.size() - 1) * m + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) p.c_[i * m] = c_[i];
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int nlo = std::min(lo_, o.lo_);
  int nhi = std::max(highest(), o.highest());
  std::vector<Int> nc(nhi - nlo + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) nc[lo_ - nlo + i] = std::move(c_[i]);
  for (size_t i = 0; i < o.c_.size(); ++i) nc[o.lo_ - nlo + i] += o.c_[i];
  lo_ = nlo;
  c_ = std::move(nc);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (Int& c : p.c_) c = -c;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly p;
  p.lo_ = a.lo_ + b.lo_;
  p.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) p.c_[i + j] += a.c_[i] * b.c_[j];
  p.trim();
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const Int& s) {
  if (s == 0) return {};
  LaurentPoly p = a;
  for (Int& c : p.c_) c *= s;
  return p;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    os << c_[i] << "*v^" << lo_ + static_cast<int>(i);
    first = false;
  }
  return os.str();
}

}  // namespace jring
