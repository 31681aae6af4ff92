#include "stringy/lpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace stringy {

LPoly::LPoly(Int constant) {
  if (constant != 0) c_.push_back(std::move(constant));
}

LPoly::LPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

LPoly LPoly::var() { return monomial(1); }

LPoly LPoly::monomial(int k, Int c) {
  LPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
  p.c_.back() = std::move(c);
  return p;
}

void LPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int LPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
  return c_[static_cast<size_t>(k)];
}

LPoly LPoly::operator+(const LPoly& o) const {
  LPoly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.normalize();
  return r;
}

LPoly LPoly::operator-(const LPoly& o) const { return *this + (-o); }

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LPoly LPoly::operator*(const LPoly& o) const {
  if (is_zero() || o.is_zero()) return LPoly();
  LPoly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.normalize();
  return r;
}

LPoly& LPoly::operator+=(const LPoly& o) { return *this = *this + o; }
LPoly& LPoly::operator*=(const LPoly& o) { return *this = *this * o; }

LPoly LPoly::scaled(const Int& c) const {
  LPoly r = *this;
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

LPoly LPoly::shifted(int k) const {
  if (is_zero() || k == 0) return k == 0 ? *this : LPoly();
  LPoly r;
  r.c_.assign(static_cast<size_t>(k), Int(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

LPoly LPoly::pow(unsigned e) const {
  LPoly r = one();
  LPoly b = *this;
  while (e != 0) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

Int LPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

LPoly LPoly::divide_exact(const LPoly& o) const {
  if (o.is_zero()) throw std::domain_error("LPoly: division by zero polynomial");
  if (is_zero()) return LPoly();
  if (degree() < o.degree())
    throw std::domain_error("LPoly: non-exact division (degree)");
  std::vector<Rat> rem(c_.begin(), c_.end());
  std::vector<Rat> quo(static_cast<size_t>(degree() - o.degree()) + 1, Rat(0));
  const Rat lead(o.c_.back());
  for (int k = degree() - o.degree(); k >= 0; --k) {
    Rat q = rem[static_cast<size_t>(k + o.degree())] / lead;
    quo[static_cast<size_t>(k)] = q;
    for (int j = 0; j <= o.degree(); ++j)
      rem[static_cast<size_t>(k + j)] -= q * Rat(o.c_[static_cast<size_t>(j)]);
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("LPoly: non-exact division (remainder)");
  std::vector<Int> out;
  out.reserve(quo.size());
  for (const auto& q : quo) {
    if (den(q) != 1) throw std::domain_error("LPoly: non-integral quotient");
    out.push_back(num(q));
  }
  return LPoly(std::move(out));
}

bool LPoly::is_palindromic() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != c_[c_.size() - 1 - i]) return false;
  return true;
}

bool LPoly::nonnegative_coeffs() const {
  for (const auto& c : c_)
    if (c < 0) return false;
  return true;
}

int LPoly::lowest_exponent() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::string LPoly::to_text() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const Int& c = c_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Int a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    const bool unit = (a == 1);
    if (k == 0) {
      out += a.str();
    } else {
      if (!unit) out += a.str();
      out += "L";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

LPoly operator*(const Int& c, const LPoly& p) { return p.scaled(c); }

QPoly::QPoly(const LPoly& p) {
  c_.assign(p.coeffs().begin(), p.coeffs().end());
}

void QPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  normalize();
  return *this;
}

QPoly& QPoly::add_scaled(const LPoly& p, const Rat& c) {
  if (c_.size() < p.coeffs().size()) c_.resize(p.coeffs().size(), Rat(0));
  for (size_t i = 0; i < p.coeffs().size(); ++i) c_[i] += c * Rat(p.coeffs()[i]);
  normalize();
  return *this;
}

QPoly QPoly::scaled(const Rat& c) const {
  QPoly r = *this;
  for (auto& x : r.c_) x *= c;
  r.normalize();
  return r;
}

LPoly QPoly::to_lpoly() const {
  std::vector<Int> out;
  out.reserve(c_.size());
  for (const auto& q : c_) {
    if (den(q) != 1)
      throw std::domain_error("QPoly: non-integral coefficient " + rat_to_string(q));
    out.push_back(num(q));
  }
  return LPoly(std::move(out));
}

} // namespace stringy
