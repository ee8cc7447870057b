#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fock/multipartition.hpp"
#include "fock/symbol.hpp"
#include "fock/weight.hpp"

namespace fock {

// Tableaux here have strictly increasing rows and weakly increasing columns
// (read from the top row downward). Kostka-like count of fillings of shape
// with weight[j-1] copies of letter j, j = 1..weight.size().
long long kostka(const Partition& shape, const std::vector<int>& weight);

// Shape/weight pair attached to charges v <= s (levelwise): shape is the
// conjugate of (v_c - v_0)_c, weight is (s_c - v_0)_c.
std::pair<Partition, std::vector<int>> lambda_mu_of(const Multicharge& v,
                                                    const Multicharge& s);

// Row c of a skew tableau sits at absolute columns inner[c]+1 .. outer[c],
// strictly increasing; shared columns weakly increase downward from row l-1.
struct SkewTableau {
  Multicharge outer;
  Multicharge inner;
  std::vector<std::vector<int>> rows;  // rows[c] ascending

  int level() const { return static_cast<int>(outer.size()); }
  bool empty() const;
  // Entry at absolute column j of row c, or nullopt outside the row.
  std::optional<int> at(int c, int j) const;
  // Row c equals inner[c]+1, ..., outer[c].
  bool trivial() const;
  friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

// Shape and monotonicity checks; throws nothing, returns the first problem.
std::optional<std::string> skew_tableau_problem(const SkewTableau& t);
bool skew_tableau_valid(const SkewTableau& t);

// The filling of s/t by column indices: row c = t_c+1, ..., s_c.
SkewTableau trivial_skew_tableau(const Multicharge& outer, const Multicharge& inner);

// sum over rows c and entries x of eps_x.
WeightInf tableau_weight(const SkewTableau& t);

struct TableauPeriod {
  int form_max = 0;              // M; removed values M, M-1, ..., M-e+1
  std::vector<int> removed_per_row;  // d_c, indexed by c
};
struct TableauPeelTrace {
  SkewTableau final_tableau;
  std::vector<TableauPeriod> periods;
};

// Reading word: rows c = l-1 down to 0, each row right to left. A period
// takes the rightmost occurrences of M, M-1, ..., M-e+1 at positions that
// advance left to right; removals are always row suffixes. Peeling stops
// when no period exists or the tableau is the trivial filling of a shape
// whose outer charge lies in the reduced window. Finite e.
std::optional<TableauPeriod> find_tableau_period(const SkewTableau& t, EModulus e);
SkewTableau remove_tableau_period(const SkewTableau& t, EModulus e);
TableauPeelTrace tableau_peel(const SkewTableau& t, EModulus e);

// Entries of row c all exceed inner[c] and the peel removes everything.
bool is_totally_periodic_tableau(const SkewTableau& t, EModulus e);

// Splits a totally periodic symbol: t = reduced charge of the peel, row c
// keeps its entries above t_c (exactly s_c - t_c of them, with everything
// below already saturated). Semistandard input yields a valid skew tableau.
struct LevelParts {
  SkewTableau level0;   // shape s / t
  Multicharge level_l;  // t
};
LevelParts level_parts(const Multipartition& lambda, const Multicharge& s, EModulus e);

// Highest-weight vertices at infinite e, encoded as letter-rows: letter c+1
// occupies the rows of the tableau named by row c of the truncated symbol.
struct HwTableau {
  std::vector<std::vector<int>> rows;  // rows[r] = letters in tableau row r+1
  Multicharge v;                       // weight coordinates, weakly increasing
  Partition shape;
  std::vector<int> mu;                 // letter multiplicities
};
HwTableau hw_symbol_to_tableau(const Multipartition& lambda, const Multicharge& s);
Multipartition tableau_to_hw_symbol(const std::vector<std::vector<int>>& rows,
                                    const Multicharge& s, const Multicharge& v);

// nu = Lambda_t + sum_k a_k omega_k with t in the reduced window,
// every a_k >= 0, and a_k = 0 unless k >= t_0 + e. All solutions, sorted.
struct DecomposedWeight {
  Multicharge t;
  std::map<int, int> omega;  // k -> a_k, zero-free
  friend bool operator==(const DecomposedWeight&, const DecomposedWeight&) = default;
};
std::vector<DecomposedWeight> decompose_weight(const WeightInf& nu, int level,
                                               EModulus e);

// Multiplicity of the weight nu among highest-weight vertices of the
// semistandard component (count_m) and of the whole crystal (count_M).
// Finite e; s weakly increasing.
long long count_m(const Multicharge& s, const WeightInf& nu, EModulus e);
long long count_M(const Multicharge& s, const WeightInf& nu, EModulus e);

// Box counts per content forced by wt_inf = nu on charge s, if consistent.
std::optional<std::map<int, int>> solve_box_counts(const Multicharge& s,
                                                   const WeightInf& nu);

}  // namespace fock
