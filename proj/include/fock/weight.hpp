#pragma once

#include <map>
#include <string>

#include "fock/multipartition.hpp"

namespace fock {

// Integer combination of fundamental weights Lambda_j, j in Z.
// Derived symbols: eps_j = Lambda_j - Lambda_{j-1},
// alpha_j = 2 Lambda_j - Lambda_{j-1} - Lambda_{j+1},
// omega_k = Lambda_k - Lambda_{k-e} = eps_{k-e+1} + ... + eps_k.
class WeightInf {
public:
  WeightInf() = default;

  static WeightInf fundamental(int j);
  static WeightInf of_charge(const Multicharge& s);
  static WeightInf eps(int j);
  static WeightInf alpha(int j);
  static WeightInf omega(int k, EModulus e);  // finite e

  int coeff(int j) const;
  const std::map<int, int>& coeffs() const { return c_; }
  int level() const;
  bool is_zero() const { return c_.empty(); }

  WeightInf& operator+=(const WeightInf& o);
  WeightInf& operator-=(const WeightInf& o);
  friend WeightInf operator+(WeightInf a, const WeightInf& b) { return a += b; }
  friend WeightInf operator-(WeightInf a, const WeightInf& b) { return a -= b; }
  friend WeightInf operator*(int n, const WeightInf& w);
  friend bool operator==(const WeightInf&, const WeightInf&) = default;

  // eps-coordinates b_j = sum_{k >= j} coeff(k); zero-free map.
  // Requires level() == 0, otherwise the sums do not stabilize.
  std::map<int, int> eps_coords() const;

  std::string str() const;

private:
  std::map<int, int> c_;  // zero-free
  void trim(int j);
};

// Integer combination of affine fundamental weights Lambda_i, i in Z/e.
// The null root delta is projected away: alpha_i maps to
// -Lambda_{i-1} + 2 Lambda_i - Lambda_{i+1} with indices mod e.
class WeightAff {
public:
  explicit WeightAff(EModulus e);

  static WeightAff fundamental(int i, EModulus e);
  static WeightAff of_charge(const Multicharge& s, EModulus e);
  static WeightAff alpha(int i, EModulus e);

  EModulus modulus() const { return e_; }
  int coeff(int i) const;  // i reduced mod e
  const std::map<int, int>& coeffs() const { return c_; }
  int level() const;

  WeightAff& operator+=(const WeightAff& o);
  WeightAff& operator-=(const WeightAff& o);
  friend WeightAff operator+(WeightAff a, const WeightAff& b) { return a += b; }
  friend WeightAff operator-(WeightAff a, const WeightAff& b) { return a -= b; }
  friend bool operator==(const WeightAff&, const WeightAff&) = default;

  std::string str() const;

private:
  EModulus e_;
  std::map<int, int> c_;  // keys in [0, e), zero-free
  void trim(int i);
};

// Reduction mod e: Lambda_j -> Lambda_{j mod e}. Kills every omega_k.
WeightAff project(const WeightInf& w, EModulus e);

}  // namespace fock
