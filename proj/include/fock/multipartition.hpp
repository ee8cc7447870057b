#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "fock/common.hpp"

namespace fock {

// Residue modulus: a finite value e >= 2, or infinity (no reduction).
class EModulus {
public:
  static EModulus infinity() { return EModulus(0); }
  static EModulus finite(int e);
  // Accepts a decimal integer >= 2, or "inf"/"infinity".
  static EModulus parse(const std::string& text);

  bool is_infinite() const { return e_ == 0; }
  bool is_finite() const { return e_ != 0; }
  // Finite value; throws internal_error when infinite.
  int value() const;
  // Reduces x into [0, e); identity at infinity.
  int residue(int x) const;

  std::string str() const;
  friend bool operator==(EModulus a, EModulus b) = default;

private:
  explicit EModulus(int e) : e_(e) {}
  int e_;  // 0 encodes infinity
};

// Weakly decreasing positive parts; trailing zeros are stripped on input.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  // 1-based part access, zero beyond the last part.
  int part(int i) const;
  int height() const { return static_cast<int>(parts_.size()); }
  int rank() const;
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
};

// Level-l tuple of partitions, components indexed 0..l-1.
class Multipartition {
public:
  Multipartition() = default;
  explicit Multipartition(std::vector<Partition> components);
  static Multipartition empty(int level);

  int level() const { return static_cast<int>(components_.size()); }
  const Partition& component(int c) const;
  const std::vector<Partition>& components() const { return components_; }
  int rank() const;
  bool empty() const;

  friend bool operator==(const Multipartition&, const Multipartition&) = default;
  friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
    return a.components_ <=> b.components_;
  }

private:
  std::vector<Partition> components_;
};

// Box of a multipartition: 1-based row and column within component comp.
struct Node {
  int row = 0;
  int col = 0;
  int comp = 0;
  friend bool operator==(const Node&, const Node&) = default;
  friend std::strong_ordering operator<=>(const Node&, const Node&) = default;
};

using Multicharge = std::vector<int>;

// content(b) = col - row + s_comp.
int node_content(const Node& b, const Multicharge& s);

// Rows where a box may be appended keeping rows weakly decreasing.
std::vector<Node> addable_nodes(const Multipartition& lambda);
// Rows whose last box may be removed keeping rows weakly decreasing.
std::vector<Node> removable_nodes(const Multipartition& lambda);

Multipartition add_node(const Multipartition& lambda, const Node& b);
Multipartition remove_node(const Multipartition& lambda, const Node& b);

// Throws invalid_argument unless lambda.level() == s.size() >= 1.
void require_same_level(const Multipartition& lambda, const Multicharge& s);

// Text formats: partition "3.2.1" or "-" when empty; multipartition
// components joined with "|"; charge "1,0,2" with s_0 first.
Partition parse_partition(const std::string& text);
Multipartition parse_multipartition(const std::string& text);
Multicharge parse_charge(const std::string& text);
std::string format_partition(const Partition& p);
std::string format_multipartition(const Multipartition& lambda);
std::string format_charge(const Multicharge& s);

// All multipartitions of the given level and rank, sorted.
std::vector<Multipartition> multipartitions_of_rank(int level, int rank);
// All partitions of rank n, sorted.
std::vector<Partition> partitions_of_rank(int n);

}  // namespace fock
