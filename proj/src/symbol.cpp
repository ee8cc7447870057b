#include "fock/symbol.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fock {

int symbol_entry(const Multipartition& lambda, const Multicharge& s, int c, int i) {
  require_same_level(lambda, s);
  if (c < 0 || c >= lambda.level()) throw std::invalid_argument("row index out of range");
  if (i < 1) throw std::invalid_argument("entry index is 1-based");
  return lambda.component(c).part(i) - i + s[c] + 1;
}

int max_entry(const Multipartition& lambda, const Multicharge& s) {
  require_same_level(lambda, s);
  int best = symbol_entry(lambda, s, 0, 1);
  for (int c = 1; c < lambda.level(); ++c)
    best = std::max(best, symbol_entry(lambda, s, c, 1));
  return best;
}

bool row_contains(const Multipartition& lambda, const Multicharge& s, int c, int x) {
  require_same_level(lambda, s);
  const Partition& p = lambda.component(c);
  int h = p.height();
  if (x <= s[c] - h) return true;  // tail values are s_c - h, s_c - h - 1, ...
  for (int i = 1; i <= h; ++i)
    if (symbol_entry(lambda, s, c, i) == x) return true;
  return false;
}

int row_saturation(const Multipartition& lambda, const Multicharge& s, int c) {
  require_same_level(lambda, s);
  int x = s[c] - lambda.component(c).height();
  while (row_contains(lambda, s, c, x + 1)) ++x;
  return x;
}

SymbolDisplay symbol_display(const Multipartition& lambda, const Multicharge& s) {
  require_same_level(lambda, s);
  int l = lambda.level();
  int cutoff = s[0] - lambda.component(0).height();
  for (int c = 1; c < l; ++c)
    cutoff = std::min(cutoff, s[c] - lambda.component(c).height());
  SymbolDisplay d{cutoff, std::vector<std::vector<int>>(l)};
  for (int c = 0; c < l; ++c) {
    int count = s[c] - cutoff + 1;  // entries down to the shared cutoff value
    for (int i = count; i >= 1; --i) d.rows[c].push_back(symbol_entry(lambda, s, c, i));
  }
  return d;
}

std::string format_symbol(const Multipartition& lambda, const Multicharge& s) {
  SymbolDisplay d = symbol_display(lambda, s);
  std::ostringstream os;
  for (int c = lambda.level() - 1; c >= 0; --c) {
    os << (c == lambda.level() - 1 ? "( " : "  ");
    os << "...";
    for (int v : d.rows[c]) os << ' ' << v;
    os << (c == 0 ? " )" : "") << '\n';
  }
  return os.str();
}

std::vector<std::vector<int>> truncated_symbol(const Multipartition& lambda,
                                               const Multicharge& s, EModulus e) {
  require_same_level(lambda, s);
  if (e.is_infinite()) throw std::invalid_argument("truncation requires finite e");
  std::vector<std::vector<int>> rows(lambda.level());
  for (int c = 0; c < lambda.level(); ++c) {
    int n = lambda.component(c).height() + e.value();
    for (int i = 1; i <= n; ++i) rows[c].push_back(symbol_entry(lambda, s, c, i));
  }
  return rows;
}

std::vector<Letter> reading_word(const Multipartition& lambda, const Multicharge& s,
                                 EModulus e) {
  auto rows = truncated_symbol(lambda, s, e);
  std::vector<Letter> w;
  for (int c = lambda.level() - 1; c >= 0; --c)
    for (std::size_t i = 0; i < rows[c].size(); ++i)
      w.push_back({rows[c][i], c, static_cast<int>(i) + 1});
  return w;
}

std::optional<Period> find_period(const Multipartition& lambda, const Multicharge& s,
                                  EModulus e) {
  require_same_level(lambda, s);
  if (e.is_infinite()) throw std::invalid_argument("period detection requires finite e");
  auto w = reading_word(lambda, s, e);
  int k = max_entry(lambda, s);

  Period period;
  period.form_max = k;
  int prev_c = lambda.level();  // above every row
  for (int a = 0; a < e.value(); ++a) {
    int v = k - a;
    const Letter* hit = nullptr;
    for (const Letter& letter : w)
      if (letter.value == v) hit = &letter;  // keep the last occurrence
    if (!hit) return std::nullopt;
    if (hit->c > prev_c) return std::nullopt;  // row indices must weakly decrease
    prev_c = hit->c;
    period.nodes.push_back({hit->i, lambda.component(hit->c).part(hit->i), hit->c});
  }

  // The rightmost occurrence must be the minimal row containing the value in
  // the untruncated symbol; anything else means the truncation leaked.
  for (int a = 0; a < e.value(); ++a) {
    int v = k - a;
    int c = period.nodes[a].c;
    if (!row_contains(lambda, s, c, v))
      throw internal_error("period entry vanished from its row");
    for (int lower = 0; lower < c; ++lower)
      if (row_contains(lambda, s, lower, v))
        throw internal_error("period entry is not in its minimal row");
  }
  return period;
}

namespace {

std::pair<Multipartition, Multicharge> apply_period(const Multipartition& lambda,
                                                    const Multicharge& s,
                                                    const Period& period) {
  int l = lambda.level();
  std::vector<int> drop(l, 0);
  std::map<int, std::vector<int>> indices;  // row -> entry indices removed
  for (const PeriodNode& n : period.nodes) {
    ++drop[n.c];
    indices[n.c].push_back(n.i);
  }
  // Removed entries occupy the top of each row: indices must be 1..d_c.
  for (auto& [c, idx] : indices) {
    std::sort(idx.begin(), idx.end());
    for (int j = 0; j < static_cast<int>(idx.size()); ++j)
      if (idx[j] != j + 1) throw internal_error("period is not a row prefix");
  }
  std::vector<Partition> comps(l);
  Multicharge out(s);
  for (int c = 0; c < l; ++c) {
    const auto& parts = lambda.component(c).parts();
    int d = std::min<int>(drop[c], parts.size());
    comps[c] = Partition(std::vector<int>(parts.begin() + d, parts.end()));
    out[c] -= drop[c];
  }
  int before = std::accumulate(s.begin(), s.end(), 0);
  int after = std::accumulate(out.begin(), out.end(), 0);
  if (before - after != static_cast<int>(period.nodes.size()))
    throw internal_error("charge sum must drop by e per removal");
  return {Multipartition(std::move(comps)), std::move(out)};
}

}  // namespace

std::pair<Multipartition, Multicharge> remove_period(const Multipartition& lambda,
                                                     const Multicharge& s, EModulus e) {
  auto p = find_period(lambda, s, e);
  if (!p) return {lambda, s};
  return apply_period(lambda, s, *p);
}

bool charge_in_reduced_window(const Multicharge& s, EModulus e) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  if (!std::is_sorted(s.begin(), s.end())) return false;
  return e.is_infinite() || s.back() - s.front() <= e.value() - 1;
}

PeelTrace peel(const Multipartition& lambda, const Multicharge& s, EModulus e) {
  require_same_level(lambda, s);
  if (e.is_infinite()) throw std::invalid_argument("peeling requires finite e");
  PeelTrace trace{lambda, s, {}};
  for (long long guard = 0;; ++guard) {
    if (guard > 1000000) throw internal_error("peel failed to terminate");
    if (trace.final_lambda.empty() && charge_in_reduced_window(trace.final_charge, e))
      break;
    auto p = find_period(trace.final_lambda, trace.final_charge, e);
    if (!p) break;
    auto [nl, ns] = apply_period(trace.final_lambda, trace.final_charge, *p);
    trace.steps.push_back({*p, trace.final_charge, ns});
    trace.final_lambda = std::move(nl);
    trace.final_charge = std::move(ns);
  }
  return trace;
}

Multicharge reduce_charge(const Multicharge& s, EModulus e) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  return peel(Multipartition::empty(static_cast<int>(s.size())), s, e).final_charge;
}

bool is_totally_periodic(const Multipartition& lambda, const Multicharge& s, EModulus e) {
  require_same_level(lambda, s);
  if (e.is_infinite()) return is_totally_periodic_inf(lambda, s);
  PeelTrace trace = peel(lambda, s, e);
  return trace.final_lambda.empty() && charge_in_reduced_window(trace.final_charge, e);
}

bool is_totally_periodic_inf(const Multipartition& lambda, const Multicharge& s) {
  require_same_level(lambda, s);
  int l = lambda.level();
  int m = row_saturation(lambda, s, 0);
  for (int c = 1; c < l; ++c) m = std::min(m, row_saturation(lambda, s, c));
  ++m;  // entries >= m are the ones not saturated everywhere

  // Greedily match descending runs v, v-1, ..., m; open runs demand values.
  std::multiset<int, std::greater<int>> demanded;
  for (int c = l - 1; c >= 0; --c) {
    for (int i = 1;; ++i) {
      int v = symbol_entry(lambda, s, c, i);
      if (v < m) break;
      auto it = demanded.find(v);
      if (it != demanded.end()) demanded.erase(it);
      if (v - 1 >= m) demanded.insert(v - 1);
    }
  }
  return demanded.empty();
}

bool is_semistandard(const Multipartition& lambda, const Multicharge& s) {
  require_same_level(lambda, s);
  if (!std::is_sorted(s.begin(), s.end())) return false;
  for (int c = 0; c + 1 < lambda.level(); ++c) {
    int delta = s[c + 1] - s[c];
    int top = std::max(lambda.component(c).height(),
                       lambda.component(c + 1).height() - delta);
    for (int i = 1; i <= top; ++i)
      if (symbol_entry(lambda, s, c + 1, i + delta) > symbol_entry(lambda, s, c, i))
        return false;
  }
  return true;
}

}  // namespace fock
