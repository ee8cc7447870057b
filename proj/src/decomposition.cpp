#include "fock/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "fock/crystal.hpp"

namespace fock {

long long kostka(const Partition& shape, const std::vector<int>& weight) {
  for (int w : weight)
    if (w < 0) throw std::invalid_argument("weight entries must be nonnegative");
  int total = std::accumulate(weight.begin(), weight.end(), 0);
  if (total != shape.rank()) return 0;

  // Fillings with strictly increasing rows and weakly increasing columns,
  // weight[j-1] copies of letter j. Cells are filled in row-major order.
  std::vector<int> avail(weight);
  int nrows = shape.height();
  std::vector<std::vector<int>> grid(nrows);
  for (int r = 0; r < nrows; ++r) grid[r].assign(shape.part(r + 1), 0);

  long long count = 0;
  auto rec = [&](auto&& self, int r, int col) -> void {
    if (r == nrows) {
      ++count;
      return;
    }
    if (col == static_cast<int>(grid[r].size())) {
      self(self, r + 1, 0);
      return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, grid[r][col - 1] + 1);  // strict along the row
    if (r > 0 && col < static_cast<int>(grid[r - 1].size()))
      lo = std::max(lo, grid[r - 1][col]);  // weak down the column
    for (int letter = lo; letter <= static_cast<int>(avail.size()); ++letter) {
      if (avail[letter - 1] == 0) continue;
      --avail[letter - 1];
      grid[r][col] = letter;
      self(self, r, col + 1);
      ++avail[letter - 1];
    }
  };
  rec(rec, 0, 0);
  return count;
}

std::pair<Partition, std::vector<int>> lambda_mu_of(const Multicharge& v,
                                                    const Multicharge& s) {
  if (v.size() != s.size() || v.empty())
    throw std::invalid_argument("charge lengths differ");
  if (!std::is_sorted(v.begin(), v.end()))
    throw std::invalid_argument("weight coordinates must be weakly increasing");
  int v0 = v.front();
  std::vector<int> diffs;
  for (auto it = v.rbegin(); it != v.rend(); ++it) diffs.push_back(*it - v0);
  std::vector<int> mu;
  for (int sc : s) {
    if (sc < v0) throw std::invalid_argument("charge entry below the base coordinate");
    mu.push_back(sc - v0);
  }
  return {Partition(std::move(diffs)).conjugate(), std::move(mu)};
}

bool SkewTableau::empty() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const std::vector<int>& r) { return r.empty(); });
}

std::optional<int> SkewTableau::at(int c, int j) const {
  if (c < 0 || c >= level()) return std::nullopt;
  if (j <= inner[c] || j > outer[c]) return std::nullopt;
  return rows[c][j - inner[c] - 1];
}

bool SkewTableau::trivial() const {
  for (int c = 0; c < level(); ++c)
    for (std::size_t k = 0; k < rows[c].size(); ++k)
      if (rows[c][k] != inner[c] + 1 + static_cast<int>(k)) return false;
  return true;
}

std::optional<std::string> skew_tableau_problem(const SkewTableau& t) {
  int l = t.level();
  if (l == 0) return "empty level";
  if (t.inner.size() != t.outer.size() || t.rows.size() != t.outer.size())
    return "component counts differ";
  for (int c = 0; c < l; ++c) {
    if (t.inner[c] > t.outer[c]) return "inner charge exceeds outer charge";
    if (static_cast<int>(t.rows[c].size()) != t.outer[c] - t.inner[c])
      return "row length does not match the shape";
    for (std::size_t k = 0; k + 1 < t.rows[c].size(); ++k)
      if (t.rows[c][k] >= t.rows[c][k + 1]) return "row entries must strictly increase";
  }
  for (int c = 0; c + 1 < l; ++c) {
    int lo = std::max(t.inner[c], t.inner[c + 1]) + 1;
    int hi = std::min(t.outer[c], t.outer[c + 1]);
    for (int j = lo; j <= hi; ++j)
      if (*t.at(c, j) < *t.at(c + 1, j))
        return "columns must weakly increase downward";
  }
  return std::nullopt;
}

bool skew_tableau_valid(const SkewTableau& t) { return !skew_tableau_problem(t); }

SkewTableau trivial_skew_tableau(const Multicharge& outer, const Multicharge& inner) {
  if (outer.size() != inner.size() || outer.empty())
    throw std::invalid_argument("charge lengths differ");
  SkewTableau t{outer, inner, {}};
  t.rows.resize(outer.size());
  for (std::size_t c = 0; c < outer.size(); ++c) {
    if (inner[c] > outer[c])
      throw std::invalid_argument("inner charge exceeds outer charge");
    for (int j = inner[c] + 1; j <= outer[c]; ++j) t.rows[c].push_back(j);
  }
  return t;
}

WeightInf tableau_weight(const SkewTableau& t) {
  WeightInf w;
  for (const auto& row : t.rows)
    for (int x : row) w += WeightInf::eps(x);
  return w;
}

namespace {

struct TableauLetter {
  int value;
  int c;
  int k;  // 0-based index within rows[c]
};

std::vector<TableauLetter> tableau_reading_word(const SkewTableau& t) {
  std::vector<TableauLetter> w;
  for (int c = t.level() - 1; c >= 0; --c)
    for (int k = static_cast<int>(t.rows[c].size()) - 1; k >= 0; --k)
      w.push_back({t.rows[c][k], c, k});
  return w;
}

SkewTableau apply_tableau_period(const SkewTableau& t, const TableauPeriod& p) {
  SkewTableau out = t;
  for (int c = 0; c < t.level(); ++c) {
    int d = p.removed_per_row[c];
    if (d > static_cast<int>(out.rows[c].size()))
      throw internal_error("period removes more than the row holds");
    out.rows[c].resize(out.rows[c].size() - d);
    out.outer[c] -= d;
  }
  if (!skew_tableau_valid(out))
    throw internal_error("period removal broke the tableau");
  return out;
}

}  // namespace

std::optional<TableauPeriod> find_tableau_period(const SkewTableau& t, EModulus e) {
  if (e.is_infinite()) throw std::invalid_argument("period detection requires finite e");
  auto w = tableau_reading_word(t);
  if (w.empty()) return std::nullopt;
  int M = w[0].value;
  for (const auto& letter : w) M = std::max(M, letter.value);

  TableauPeriod period{M, std::vector<int>(t.level(), 0)};
  std::vector<std::pair<int, int>> picks;  // (position in w, row c)
  int prev_pos = -1;
  for (int a = 0; a < e.value(); ++a) {
    int v = M - a;
    int pos = -1;
    for (int q = 0; q < static_cast<int>(w.size()); ++q)
      if (w[q].value == v) pos = q;  // rightmost occurrence in the reading word
    if (pos < 0 || pos <= prev_pos) return std::nullopt;
    prev_pos = pos;
    picks.push_back({pos, w[pos].c});
    ++period.removed_per_row[w[pos].c];
  }
  // Removed entries must close each row: indices len-d .. len-1.
  for (int c = 0; c < t.level(); ++c) {
    int len = static_cast<int>(t.rows[c].size());
    int d = period.removed_per_row[c];
    for (const auto& [pos, pc] : picks)
      if (pc == c && w[pos].k < len - d)
        throw internal_error("tableau period is not a row suffix");
  }
  return period;
}

SkewTableau remove_tableau_period(const SkewTableau& t, EModulus e) {
  auto p = find_tableau_period(t, e);
  if (!p) return t;
  return apply_tableau_period(t, *p);
}

TableauPeelTrace tableau_peel(const SkewTableau& t, EModulus e) {
  if (e.is_infinite()) throw std::invalid_argument("peeling requires finite e");
  if (auto problem = skew_tableau_problem(t))
    throw std::invalid_argument("invalid tableau: " + *problem);
  TableauPeelTrace trace{t, {}};
  for (long long guard = 0;; ++guard) {
    if (guard > 1000000) throw internal_error("tableau peel failed to terminate");
    if (trace.final_tableau.trivial() &&
        charge_in_reduced_window(trace.final_tableau.outer, e))
      break;
    auto p = find_tableau_period(trace.final_tableau, e);
    if (!p) break;
    trace.final_tableau = apply_tableau_period(trace.final_tableau, *p);
    trace.periods.push_back(std::move(*p));
  }
  return trace;
}

bool is_totally_periodic_tableau(const SkewTableau& t, EModulus e) {
  if (auto problem = skew_tableau_problem(t))
    throw std::invalid_argument("invalid tableau: " + *problem);
  for (int c = 0; c < t.level(); ++c)
    for (int x : t.rows[c])
      if (x <= t.inner[c]) return false;
  return tableau_peel(t, e).final_tableau.empty();
}

LevelParts level_parts(const Multipartition& lambda, const Multicharge& s, EModulus e) {
  require_same_level(lambda, s);
  if (e.is_infinite()) throw std::invalid_argument("level split requires finite e");
  PeelTrace peeled = peel(lambda, s, e);
  if (!peeled.final_lambda.empty() ||
      !charge_in_reduced_window(peeled.final_charge, e))
    throw std::invalid_argument("symbol is not totally periodic");
  const Multicharge& t = peeled.final_charge;

  SkewTableau level0{s, t, {}};
  level0.rows.resize(s.size());
  for (int c = 0; c < lambda.level(); ++c) {
    for (int i = 1; symbol_entry(lambda, s, c, i) > t[c]; ++i)
      level0.rows[c].push_back(symbol_entry(lambda, s, c, i));
    std::reverse(level0.rows[c].begin(), level0.rows[c].end());
    if (static_cast<int>(level0.rows[c].size()) != s[c] - t[c])
      throw internal_error("level split row count mismatch");
    if (row_saturation(lambda, s, c) < t[c])
      throw internal_error("level split left a gap below the reduced charge");
  }
  // Semistandard symbols split into semistandard skew tableaux (the column
  // rule can fail otherwise, but the row split itself stays well defined).
  if (is_semistandard(lambda, s))
    if (auto problem = skew_tableau_problem(level0))
      throw internal_error("level split produced an invalid tableau: " + *problem);
  return {std::move(level0), t};
}

HwTableau hw_symbol_to_tableau(const Multipartition& lambda, const Multicharge& s) {
  require_same_level(lambda, s);
  if (!is_highest_weight(lambda, s, EModulus::infinity()))
    throw std::invalid_argument("symbol is not a highest weight vertex");
  WeightInf w = weight_inf(lambda, s);
  Multicharge v;
  for (const auto& [j, a] : w.coeffs()) {
    if (a < 0) throw internal_error("highest weight with a negative coefficient");
    for (int n = 0; n < a; ++n) v.push_back(j);
  }
  if (v.size() != s.size()) throw internal_error("weight level mismatch");

  auto [shape, mu] = lambda_mu_of(v, s);
  int v0 = v.front();

  HwTableau t;
  t.v = v;
  t.shape = shape;
  t.mu = mu;
  t.rows.resize(shape.height());
  for (int c = 0; c < lambda.level(); ++c) {
    int placed = 0;
    for (int i = 1; symbol_entry(lambda, s, c, i) > v0; ++i) {
      int r = symbol_entry(lambda, s, c, i) - v0;  // normalized entry names the row
      if (r > static_cast<int>(t.rows.size()))
        throw internal_error("entry beyond the tableau shape");
      t.rows[r - 1].push_back(c + 1);
      ++placed;
    }
    if (placed != mu[c]) throw internal_error("letter count mismatch");
    if (row_saturation(lambda, s, c) < v0)
      throw internal_error("row not saturated below the base coordinate");
  }
  for (auto& row : t.rows) std::sort(row.begin(), row.end());

  std::vector<int> lengths;
  for (const auto& row : t.rows) lengths.push_back(static_cast<int>(row.size()));
  std::vector<int> expected;
  for (int r = 1; r <= shape.height(); ++r) expected.push_back(shape.part(r));
  if (lengths != expected) throw internal_error("tableau rows disagree with the shape");
  for (std::size_t r = 0; r + 1 < t.rows.size(); ++r)
    for (std::size_t col = 0; col < t.rows[r + 1].size(); ++col)
      if (t.rows[r + 1][col] < t.rows[r][col])
        throw internal_error("tableau columns decrease");
  return t;
}

Multipartition tableau_to_hw_symbol(const std::vector<std::vector<int>>& rows,
                                    const Multicharge& s, const Multicharge& v) {
  if (s.empty() || v.size() != s.size())
    throw std::invalid_argument("charge lengths differ");
  if (!std::is_sorted(v.begin(), v.end()))
    throw std::invalid_argument("weight coordinates must be weakly increasing");
  int l = static_cast<int>(s.size());
  int v0 = v.front();

  // Structural checks: strict rows, weakly decreasing lengths, weak columns.
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!std::is_sorted(rows[r].begin(), rows[r].end()) ||
        std::adjacent_find(rows[r].begin(), rows[r].end()) != rows[r].end())
      throw std::invalid_argument("tableau rows must strictly increase");
    for (int letter : rows[r])
      if (letter < 1 || letter > l)
        throw std::invalid_argument("tableau letters must lie in 1..level");
    if (r + 1 < rows.size()) {
      if (rows[r + 1].size() > rows[r].size())
        throw std::invalid_argument("tableau row lengths must weakly decrease");
      for (std::size_t col = 0; col < rows[r + 1].size(); ++col)
        if (rows[r + 1][col] < rows[r][col])
          throw std::invalid_argument("tableau columns must weakly increase");
    }
  }

  std::vector<Partition> comps(l);
  for (int c = 0; c < l; ++c) {
    std::vector<int> entries;  // descending symbol entries above v0
    for (int r = static_cast<int>(rows.size()); r >= 1; --r)
      if (std::find(rows[r - 1].begin(), rows[r - 1].end(), c + 1) != rows[r - 1].end())
        entries.push_back(r + v0);
    if (static_cast<int>(entries.size()) != s[c] - v0)
      throw std::invalid_argument("letter multiplicities disagree with the charges");
    std::vector<int> parts;
    for (std::size_t i = 0; i < entries.size(); ++i)
      parts.push_back(entries[i] + static_cast<int>(i) + 1 - s[c] - 1);
    comps[c] = Partition(std::move(parts));
  }
  Multipartition lambda(std::move(comps));

  if (!is_highest_weight(lambda, s, EModulus::infinity()))
    throw internal_error("assembled symbol is not highest weight");
  if (!(weight_inf(lambda, s) == WeightInf::of_charge(v)))
    throw internal_error("assembled symbol has the wrong weight");
  return lambda;
}

std::vector<DecomposedWeight> decompose_weight(const WeightInf& nu, int level,
                                               EModulus e) {
  if (e.is_infinite()) throw std::invalid_argument("decomposition requires finite e");
  if (level < 1) throw std::invalid_argument("level must be at least 1");
  if (nu.level() != level) throw std::invalid_argument("weight level mismatch");
  int lo = nu.coeffs().begin()->first;
  int hi = nu.coeffs().rbegin()->first;
  int ev = e.value();

  std::vector<DecomposedWeight> out;
  Multicharge t(level, 0);
  auto try_charge = [&]() {
    WeightInf gamma = nu - WeightInf::of_charge(t);
    if (gamma.is_zero()) {
      out.push_back({t, {}});
      return;
    }
    auto b = gamma.eps_coords();
    if (b.empty()) return;
    int top = b.rbegin()->first;
    int bottom = t.front() + ev;  // omega indices live at or above t_0 + e
    if (top < bottom) return;
    std::map<int, int> a;
    auto a_at = [&](int k) {
      auto it = a.find(k);
      return it == a.end() ? 0 : it->second;
    };
    auto b_at = [&](int k) {
      auto it = b.find(k);
      return it == b.end() ? 0 : it->second;
    };
    for (int k = top; k >= bottom; --k) {
      int ak = b_at(k);
      for (int r = 1; r < ev; ++r) ak -= a_at(k + r);
      if (ak < 0) return;
      if (ak != 0) a[k] = ak;
    }
    WeightInf rebuilt;
    for (const auto& [k, ak] : a) rebuilt += ak * WeightInf::omega(k, e);
    if (!(rebuilt == gamma)) return;
    out.push_back({t, std::move(a)});
  };
  auto rec = [&](auto&& self, int c) -> void {
    if (c == level) {
      try_charge();
      return;
    }
    int from = c == 0 ? lo - ev : t[c - 1];
    int to = c == 0 ? hi : std::min(t[0] + ev - 1, hi);
    for (int x = from; x <= to; ++x) {
      t[c] = x;
      self(self, c + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const DecomposedWeight& a, const DecomposedWeight& b) { return a.t < b.t; });
  return out;
}

namespace {

// Count fillings of s/t by the multiset b (value -> multiplicity) that are
// totally periodic: rows strictly increase and stay above t_c, shared
// columns weakly increase downward.
long long count_periodic_fillings(const Multicharge& s, const Multicharge& t,
                                  const std::map<int, int>& b, EModulus e) {
  int l = static_cast<int>(s.size());
  SkewTableau tab{s, t, {}};
  tab.rows.resize(l);
  std::map<int, int> avail(b);

  long long count = 0;
  auto fill_row = [&](auto&& self, int c, int col, int prev) -> void {
    if (col > s[c]) {
      if (c == 0) {
        if (is_totally_periodic_tableau(tab, e)) ++count;
      } else {
        self(self, c - 1, t[c - 1] + 1, t[c - 1]);
      }
      return;
    }
    int floor_above = prev;
    if (c + 1 < l)
      if (auto above = tab.at(c + 1, col)) floor_above = std::max(floor_above, *above - 1);
    for (auto& [value, left] : avail) {
      if (left == 0 || value <= floor_above) continue;
      --left;
      tab.rows[c].push_back(value);
      self(self, c, col + 1, value);
      tab.rows[c].pop_back();
      ++left;
    }
  };
  fill_row(fill_row, l - 1, t[l - 1] + 1, t[l - 1]);
  return count;
}

}  // namespace

long long count_m(const Multicharge& s, const WeightInf& nu, EModulus e) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  if (!std::is_sorted(s.begin(), s.end()))
    throw std::invalid_argument("charge must be weakly increasing");
  if (e.is_infinite()) throw std::invalid_argument("multiplicity requires finite e");
  int l = static_cast<int>(s.size());

  long long total = 0;
  for (const DecomposedWeight& dec : decompose_weight(nu, l, e)) {
    bool fits = true;
    int boxes = 0;
    for (int c = 0; c < l; ++c) {
      if (dec.t[c] > s[c]) fits = false;
      boxes += s[c] - dec.t[c];
    }
    if (!fits) continue;
    WeightInf gamma = nu - WeightInf::of_charge(dec.t);
    std::map<int, int> b =
        gamma.is_zero() ? std::map<int, int>{} : gamma.eps_coords();
    int supply = 0;
    for (const auto& [value, n] : b) supply += n;
    if (supply != boxes) continue;
    total += count_periodic_fillings(s, dec.t, b, e);
  }
  return total;
}

long long count_M(const Multicharge& s, const WeightInf& nu, EModulus e) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  if (!std::is_sorted(s.begin(), s.end()))
    throw std::invalid_argument("charge must be weakly increasing");
  if (e.is_infinite()) throw std::invalid_argument("multiplicity requires finite e");
  int l = static_cast<int>(s.size());

  auto decs = decompose_weight(nu, l, e);
  if (decs.empty()) return 0;
  int min_t0 = decs.front().t.front();
  for (const auto& dec : decs) min_t0 = std::min(min_t0, dec.t.front());
  int total_charge = std::accumulate(s.begin(), s.end(), 0);

  long long total = 0;
  Multicharge v(l, 0);
  auto rec = [&](auto&& self, int c, int rem) -> void {
    if (c == l - 1) {
      if (rem < (c == 0 ? min_t0 : v[c - 1])) return;
      v[c] = rem;
      auto [shape, mu] = lambda_mu_of(v, s);
      long long k = kostka(shape, mu);
      if (k > 0) total += k * count_m(v, nu, e);
      return;
    }
    int from = c == 0 ? min_t0 : v[c - 1];
    for (int x = from; (l - c) * x <= rem; ++x) {
      v[c] = x;
      self(self, c + 1, rem - x);
    }
    return;
  };
  // v_0 ranges over [min_t0, s_0]; higher entries only grow.
  if (l == 1) {
    if (total_charge >= min_t0 && total_charge <= s[0]) {
      v[0] = total_charge;
      auto [shape, mu] = lambda_mu_of(v, s);
      long long k = kostka(shape, mu);
      if (k > 0) total += k * count_m(v, nu, e);
    }
    return total;
  }
  for (int v0 = min_t0; v0 <= s[0]; ++v0) {
    v[0] = v0;
    rec(rec, 1, total_charge - v0);
  }
  return total;
}

std::optional<std::map<int, int>> solve_box_counts(const Multicharge& s,
                                                   const WeightInf& nu) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  WeightInf diff = WeightInf::of_charge(s) - nu;
  if (diff.is_zero()) return std::map<int, int>{};
  if (diff.level() != 0) return std::nullopt;
  int lo = diff.coeffs().begin()->first;
  int hi = diff.coeffs().rbegin()->first;

  // diff = sum_j N_j alpha_j says N_{k+1} = 2 N_k - N_{k-1} - diff_k with
  // N vanishing below lo; the tail must also vanish for consistency.
  std::map<int, int> n;
  auto n_at = [&](int k) {
    auto it = n.find(k);
    return it == n.end() ? 0 : it->second;
  };
  for (int k = lo - 1; k <= hi + 1; ++k) {
    int next = 2 * n_at(k) - n_at(k - 1) - diff.coeff(k);
    if (next != 0) n[k + 1] = next;
  }
  if (n_at(hi + 1) != 0 || n_at(hi + 2) != 0) return std::nullopt;
  for (const auto& [k, count] : n)
    if (count < 0) return std::nullopt;
  return n;
}

}  // namespace fock
