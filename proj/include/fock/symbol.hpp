#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fock/multipartition.hpp"

namespace fock {

// The symbol of (lambda, s) has one semi-infinite strictly decreasing row
// per component: row c lists B_i = lambda_i - i + s_c + 1 for i = 1, 2, ...
// Entries with i > height(lambda^c) form the tail s_c - h_c, s_c - h_c - 1, ...

// B_i of row c (1-based i, any i >= 1).
int symbol_entry(const Multipartition& lambda, const Multicharge& s, int c, int i);

// Largest entry over all rows (row c tops out at B_1).
int max_entry(const Multipartition& lambda, const Multicharge& s);

// Whether row c contains the value x somewhere (head or tail).
bool row_contains(const Multipartition& lambda, const Multicharge& s, int c, int x);

// Largest x such that row c contains every integer <= x.
int row_saturation(const Multipartition& lambda, const Multicharge& s, int c);

// Display form: each row keeps its entries down to the shared cutoff
// min_c (s_c - h_c) inclusive, listed ascending; rows ordered c = l-1 down to 0.
struct SymbolDisplay {
  int cutoff;
  std::vector<std::vector<int>> rows;  // rows[c] ascending, indexed by c
};
SymbolDisplay symbol_display(const Multipartition& lambda, const Multicharge& s);
std::string format_symbol(const Multipartition& lambda, const Multicharge& s);

// First h_c + e entries of each row (finite e), descending as stored.
std::vector<std::vector<int>> truncated_symbol(const Multipartition& lambda,
                                               const Multicharge& s, EModulus e);

// Truncated entries read row c = l-1 down to 0, each row in index order.
struct Letter {
  int value = 0;
  int c = 0;
  int i = 0;  // 1-based index within the row
  friend bool operator==(const Letter&, const Letter&) = default;
};
std::vector<Letter> reading_word(const Multipartition& lambda, const Multicharge& s,
                                 EModulus e);

// An e-period: entries of values k, k-1, ..., k-e+1 where k is the largest
// entry, taken in the minimal row containing each value, with those row
// indices weakly decreasing.
struct PeriodNode {
  int i = 0;     // row index of the entry within its symbol row
  int part = 0;  // lambda_i^c (0 when the entry lies in the tail)
  int c = 0;
  friend bool operator==(const PeriodNode&, const PeriodNode&) = default;
};
struct Period {
  int form_max = 0;                // k; the form is k, k-1, ..., k-e+1
  std::vector<PeriodNode> nodes;   // in value order k down to k-e+1
};

// The unique e-period if one exists. Finite e only.
std::optional<Period> find_period(const Multipartition& lambda, const Multicharge& s,
                                  EModulus e);

// Removes the e-period if present: the affected symbol entries are row
// prefixes, so component c drops its first d_c parts and s_c drops by d_c.
// Identity when no period exists.
std::pair<Multipartition, Multicharge> remove_period(const Multipartition& lambda,
                                                     const Multicharge& s, EModulus e);

// Admissible reduced charges: weakly increasing with spread <= e-1
// (finite e), or just weakly increasing (infinite e).
bool charge_in_reduced_window(const Multicharge& s, EModulus e);

struct PeelStep {
  Period period;
  Multicharge charge_before;
  Multicharge charge_after;
};
struct PeelTrace {
  Multipartition final_lambda;
  Multicharge final_charge;
  std::vector<PeelStep> steps;
};

// Repeatedly removes periods until either none exists, or the multipartition
// is empty with charge already inside the reduced window. Finite e only.
PeelTrace peel(const Multipartition& lambda, const Multicharge& s, EModulus e);

// Reduced charge s* of (empty, s); peel of the empty multipartition.
Multicharge reduce_charge(const Multicharge& s, EModulus e);

// Finite e: the peel empties lambda and lands in the reduced window.
// Infinite e: the suffix-matching criterion below.
bool is_totally_periodic(const Multipartition& lambda, const Multicharge& s, EModulus e);

// Infinite-e criterion: let m = 1 + min_c row_saturation(c); read all entries
// >= m (rows c = l-1 down to 0, each descending); the word must decompose
// into descending runs v, v-1, ..., m, tracked greedily.
bool is_totally_periodic_inf(const Multipartition& lambda, const Multicharge& s);

// s weakly increasing and B^{c+1}_{i+delta} <= B^c_i for delta = s_{c+1}-s_c:
// stacking the rows with matching tails gives weakly increasing columns.
bool is_semistandard(const Multipartition& lambda, const Multicharge& s);

}  // namespace fock
