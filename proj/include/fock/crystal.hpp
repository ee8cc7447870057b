#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fock/multipartition.hpp"
#include "fock/symbol.hpp"
#include "fock/weight.hpp"

namespace fock {

// Letters of the i-signature: addable/removable boxes of residue i, ordered
// by the crystal order (smaller content first; ties broken by larger c first).
enum class NodeTag { addable, removable };
struct TaggedNode {
  Node node;
  NodeTag tag = NodeTag::addable;
  int content = 0;
  friend bool operator==(const TaggedNode&, const TaggedNode&) = default;
};

// Box-side i-word: all addable and removable boxes of residue i in order.
// Finite e uses residues mod e; infinite e matches content == i exactly.
std::vector<TaggedNode> i_word(const Multipartition& lambda, const Multicharge& s,
                               EModulus e, int i);

// Symbol-side i-word: for each value j = i mod e between the saturation floor
// and the max entry, row c = l-1 down to 0 emits R when j+1 sits in the row
// and A when j does; a row holding both contributes a cancelled RA pair.
std::vector<TaggedNode> u_word(const Multipartition& lambda, const Multicharge& s,
                               EModulus e, int i);

// Stack-cancelled word A^phi R^eps with the surviving good boxes.
struct ReducedWord {
  int phi = 0;
  int eps = 0;
  std::optional<Node> good_addable;   // rightmost surviving A
  std::optional<Node> good_removable; // leftmost surviving R
  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;
};
ReducedWord reduce_word(const std::vector<TaggedNode>& word);
ReducedWord reduced_i_word(const Multipartition& lambda, const Multicharge& s,
                           EModulus e, int i);

// (eps_i, phi_i).
std::pair<int, int> eps_phi(const Multipartition& lambda, const Multicharge& s,
                            EModulus e, int i);

// Kashiwara operators; empty optional when phi_i = 0 resp. eps_i = 0.
std::optional<Multipartition> f_tilde(const Multipartition& lambda, const Multicharge& s,
                                      EModulus e, int i);
std::optional<Multipartition> e_tilde(const Multipartition& lambda, const Multicharge& s,
                                      EModulus e, int i);

// eps_i = 0 for every residue (finite e) or every content value (infinite e:
// contents from min-1 to max+1 over the boundary boxes suffice).
bool is_highest_weight(const Multipartition& lambda, const Multicharge& s, EModulus e);

// wt_inf = sum_c [Lambda_{s_c} - sum over boxes of alpha_{content}];
// cross-checked internally against the entry/row formula.
WeightInf weight_inf(const Multipartition& lambda, const Multicharge& s);

// wt_e = sum_c Lambda_{s_c mod e} - sum_i N_i alpha_{i,e}; cross-checked
// against sum_i (phi_i - eps_i) Lambda_{i,e}. Finite e.
WeightAff weight_aff(const Multipartition& lambda, const Multicharge& s, EModulus e);

// Finite e: sorted residues of s; two charges generate the same labelled
// crystal iff these agree.
Multicharge canonical_charge(const Multicharge& s, EModulus e);
bool equivalent_charges(const Multicharge& a, const Multicharge& b, EModulus e);

struct CrystalVertex {
  Multipartition lambda;
  int rank = 0;
  bool hw = false;
  WeightInf wt_inf;
  std::optional<WeightAff> wt_aff;  // finite e only
};
struct CrystalEdge {
  int src = 0;
  int dst = 0;
  int residue = 0;  // equals content at infinite e
  int content = 0;
  friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};
struct CrystalGraph {
  Multicharge charge;
  EModulus e = EModulus::infinity();
  int max_rank = 0;
  std::vector<CrystalVertex> vertices;  // sorted by (rank, formatted lambda)
  std::vector<CrystalEdge> edges;       // sorted by (src, content)
};

struct CrystalOptions {
  int max_rank = 0;
  std::size_t vertex_cap = 500000;
  bool normalize_charge = false;                 // replace s by canonical_charge
  std::optional<Multipartition> component_of;    // keep one connected component
};

// All multipartitions of rank <= max_rank with every f-edge that stays
// inside the rank bound. Deterministic ordering as in CrystalGraph.
CrystalGraph generate_crystal(const Multicharge& s, EModulus e,
                              const CrystalOptions& opt);

}  // namespace fock
