#include "fock/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace fock {

void WeightInf::trim(int j) {
  auto it = c_.find(j);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

WeightInf WeightInf::fundamental(int j) {
  WeightInf w;
  w.c_[j] = 1;
  return w;
}

WeightInf WeightInf::of_charge(const Multicharge& s) {
  WeightInf w;
  for (int sc : s) {
    ++w.c_[sc];
    w.trim(sc);
  }
  return w;
}

WeightInf WeightInf::eps(int j) { return fundamental(j) - fundamental(j - 1); }

WeightInf WeightInf::alpha(int j) {
  return 2 * fundamental(j) - fundamental(j - 1) - fundamental(j + 1);
}

WeightInf WeightInf::omega(int k, EModulus e) {
  return fundamental(k) - fundamental(k - e.value());
}

int WeightInf::coeff(int j) const {
  auto it = c_.find(j);
  return it == c_.end() ? 0 : it->second;
}

int WeightInf::level() const {
  int n = 0;
  for (const auto& [j, a] : c_) n += a;
  return n;
}

WeightInf& WeightInf::operator+=(const WeightInf& o) {
  for (const auto& [j, a] : o.c_) {
    c_[j] += a;
    trim(j);
  }
  return *this;
}

WeightInf& WeightInf::operator-=(const WeightInf& o) {
  for (const auto& [j, a] : o.c_) {
    c_[j] -= a;
    trim(j);
  }
  return *this;
}

WeightInf operator*(int n, const WeightInf& w) {
  WeightInf out;
  if (n == 0) return out;
  for (const auto& [j, a] : w.c_) out.c_[j] = n * a;
  return out;
}

std::map<int, int> WeightInf::eps_coords() const {
  if (level() != 0) throw std::invalid_argument("eps coordinates need level zero");
  std::map<int, int> b;
  if (c_.empty()) return b;
  int hi = c_.rbegin()->first;
  int lo = c_.begin()->first;
  int running = 0;
  for (int j = hi; j >= lo; --j) {
    running += coeff(j);  // b_j = sum of coefficients at indices >= j
    if (running != 0) b[j] = running;
  }
  return b;
}

std::string WeightInf::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [j, a] : c_) {
    if (!first) os << (a >= 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    int mag = a >= 0 ? a : -a;
    if (mag != 1) os << mag << "*";
    os << "L" << j;
    first = false;
  }
  return os.str();
}

WeightAff::WeightAff(EModulus e) : e_(e) {
  if (e.is_infinite()) throw std::invalid_argument("affine weights need finite e");
}

void WeightAff::trim(int i) {
  auto it = c_.find(i);
  if (it != c_.end() && it->second == 0) c_.erase(it);
}

WeightAff WeightAff::fundamental(int i, EModulus e) {
  WeightAff w(e);
  w.c_[e.residue(i)] = 1;
  return w;
}

WeightAff WeightAff::of_charge(const Multicharge& s, EModulus e) {
  WeightAff w(e);
  for (int sc : s) {
    int i = e.residue(sc);
    ++w.c_[i];
    w.trim(i);
  }
  return w;
}

WeightAff WeightAff::alpha(int i, EModulus e) {
  // Projection of the affine simple root, with the null root dropped.
  WeightAff w(e);
  int lo = e.residue(i - 1), mid = e.residue(i), hi = e.residue(i + 1);
  w.c_[lo] -= 1;
  w.c_[mid] += 2;
  w.c_[hi] -= 1;
  w.trim(lo);
  w.trim(mid);
  w.trim(hi);
  return w;
}

int WeightAff::coeff(int i) const {
  auto it = c_.find(e_.residue(i));
  return it == c_.end() ? 0 : it->second;
}

int WeightAff::level() const {
  int n = 0;
  for (const auto& [i, a] : c_) n += a;
  return n;
}

WeightAff& WeightAff::operator+=(const WeightAff& o) {
  if (!(e_ == o.e_)) throw std::invalid_argument("mixed moduli in weight arithmetic");
  for (const auto& [i, a] : o.c_) {
    c_[i] += a;
    trim(i);
  }
  return *this;
}

WeightAff& WeightAff::operator-=(const WeightAff& o) {
  if (!(e_ == o.e_)) throw std::invalid_argument("mixed moduli in weight arithmetic");
  for (const auto& [i, a] : o.c_) {
    c_[i] -= a;
    trim(i);
  }
  return *this;
}

std::string WeightAff::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, a] : c_) {
    if (!first) os << (a >= 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    int mag = a >= 0 ? a : -a;
    if (mag != 1) os << mag << "*";
    os << "L" << i;
    first = false;
  }
  return os.str();
}

WeightAff project(const WeightInf& w, EModulus e) {
  WeightAff out(e);
  for (const auto& [j, a] : w.coeffs()) {
    WeightAff f = WeightAff::fundamental(j, e);
    for (int n = 0; n < (a >= 0 ? a : -a); ++n) {
      if (a >= 0)
        out += f;
      else
        out -= f;
    }
  }
  return out;
}

}  // namespace fock
