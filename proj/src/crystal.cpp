#include "fock/crystal.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fock {

namespace {

bool residue_matches(EModulus e, int i, int content) {
  return e.is_infinite() ? content == i : e.residue(content) == e.residue(i);
}

// Crystal order: smaller content first, ties broken by larger component.
void sort_crystal(std::vector<TaggedNode>& word) {
  std::sort(word.begin(), word.end(), [](const TaggedNode& a, const TaggedNode& b) {
    if (a.content != b.content) return a.content < b.content;
    return a.node.comp > b.node.comp;
  });
}

// 1-based index of the entry with value v in symbol row c; v must be present.
int entry_index(const Multipartition& lambda, const Multicharge& s, int c, int v) {
  const Partition& p = lambda.component(c);
  for (int i = 1; i <= p.height(); ++i)
    if (symbol_entry(lambda, s, c, i) == v) return i;
  return s[c] + 1 - v;  // tail position
}

}  // namespace

std::vector<TaggedNode> i_word(const Multipartition& lambda, const Multicharge& s,
                               EModulus e, int i) {
  require_same_level(lambda, s);
  std::vector<TaggedNode> word;
  for (const Node& b : addable_nodes(lambda)) {
    int j = node_content(b, s);
    if (residue_matches(e, i, j)) word.push_back({b, NodeTag::addable, j});
  }
  for (const Node& b : removable_nodes(lambda)) {
    int j = node_content(b, s);
    if (residue_matches(e, i, j)) word.push_back({b, NodeTag::removable, j});
  }
  sort_crystal(word);
  return word;
}

std::vector<TaggedNode> u_word(const Multipartition& lambda, const Multicharge& s,
                               EModulus e, int i) {
  require_same_level(lambda, s);
  int l = lambda.level();
  std::vector<int> js;
  if (e.is_infinite()) {
    js.push_back(i);
  } else {
    int floor = row_saturation(lambda, s, 0);
    for (int c = 1; c < l; ++c) floor = std::min(floor, row_saturation(lambda, s, c));
    int jlow = floor - e.residue(floor - i);  // greatest j <= floor, j = i mod e
    int top = max_entry(lambda, s);
    for (int j = jlow; j <= top; j += e.value()) js.push_back(j);
  }
  // Per value j, rows top to bottom: R when j+1 sits in the row, then A when
  // j does. A row holding both contributes an adjacent pair that cancels.
  std::vector<TaggedNode> word;
  for (int j : js) {
    for (int c = l - 1; c >= 0; --c) {
      if (row_contains(lambda, s, c, j + 1)) {
        int idx = entry_index(lambda, s, c, j + 1);
        word.push_back({{idx, lambda.component(c).part(idx), c}, NodeTag::removable, j});
      }
      if (row_contains(lambda, s, c, j)) {
        int idx = entry_index(lambda, s, c, j);
        word.push_back({{idx, lambda.component(c).part(idx) + 1, c}, NodeTag::addable, j});
      }
    }
  }
  return word;
}

ReducedWord reduce_word(const std::vector<TaggedNode>& word) {
  std::vector<TaggedNode> stack;
  for (const TaggedNode& x : word) {
    if (x.tag == NodeTag::addable && !stack.empty() &&
        stack.back().tag == NodeTag::removable) {
      stack.pop_back();  // cancel an RA pair
    } else {
      stack.push_back(x);
    }
  }
  ReducedWord r;
  for (const TaggedNode& x : stack) {
    if (x.tag == NodeTag::addable) {
      ++r.phi;
      r.good_addable = x.node;  // ends at the rightmost surviving A
    } else {
      ++r.eps;
      if (!r.good_removable) r.good_removable = x.node;  // leftmost surviving R
    }
  }
  return r;
}

ReducedWord reduced_i_word(const Multipartition& lambda, const Multicharge& s,
                           EModulus e, int i) {
  return reduce_word(i_word(lambda, s, e, i));
}

std::pair<int, int> eps_phi(const Multipartition& lambda, const Multicharge& s,
                            EModulus e, int i) {
  ReducedWord r = reduced_i_word(lambda, s, e, i);
  return {r.eps, r.phi};
}

std::optional<Multipartition> f_tilde(const Multipartition& lambda, const Multicharge& s,
                                      EModulus e, int i) {
  ReducedWord r = reduced_i_word(lambda, s, e, i);
  if (!r.good_addable) return std::nullopt;
  return add_node(lambda, *r.good_addable);
}

std::optional<Multipartition> e_tilde(const Multipartition& lambda, const Multicharge& s,
                                      EModulus e, int i) {
  ReducedWord r = reduced_i_word(lambda, s, e, i);
  if (!r.good_removable) return std::nullopt;
  return remove_node(lambda, *r.good_removable);
}

bool is_highest_weight(const Multipartition& lambda, const Multicharge& s, EModulus e) {
  require_same_level(lambda, s);
  if (e.is_finite()) {
    for (int i = 0; i < e.value(); ++i)
      if (reduced_i_word(lambda, s, e, i).eps > 0) return false;
    return true;
  }
  auto addable = addable_nodes(lambda);
  auto removable = removable_nodes(lambda);
  int lo = node_content(addable.front(), s), hi = lo;
  for (const Node& b : addable) {
    lo = std::min(lo, node_content(b, s));
    hi = std::max(hi, node_content(b, s));
  }
  for (const Node& b : removable) {
    lo = std::min(lo, node_content(b, s));
    hi = std::max(hi, node_content(b, s));
  }
  for (int j = lo - 1; j <= hi + 1; ++j)
    if (reduced_i_word(lambda, s, e, j).eps > 0) return false;
  return true;
}

WeightInf weight_inf(const Multipartition& lambda, const Multicharge& s) {
  require_same_level(lambda, s);
  WeightInf w = WeightInf::of_charge(s);
  for (int c = 0; c < lambda.level(); ++c) {
    const Partition& p = lambda.component(c);
    for (int i = 1; i <= p.height(); ++i)
      for (int col = 1; col <= p.part(i); ++col)
        w -= WeightInf::alpha(col - i + s[c]);
  }
  // Entry/row form: each head entry B_i trades eps(s_c + 1 - i) for eps(B_i).
  WeightInf check = WeightInf::of_charge(s);
  for (int c = 0; c < lambda.level(); ++c) {
    const Partition& p = lambda.component(c);
    for (int i = 1; i <= p.height(); ++i) {
      check += WeightInf::eps(symbol_entry(lambda, s, c, i));
      check -= WeightInf::eps(s[c] + 1 - i);
    }
  }
  if (!(w == check)) throw internal_error("weight formulas disagree");
  return w;
}

WeightAff weight_aff(const Multipartition& lambda, const Multicharge& s, EModulus e) {
  require_same_level(lambda, s);
  if (e.is_infinite()) throw std::invalid_argument("affine weight requires finite e");
  WeightAff w = WeightAff::of_charge(s, e);
  for (int c = 0; c < lambda.level(); ++c) {
    const Partition& p = lambda.component(c);
    for (int i = 1; i <= p.height(); ++i)
      for (int col = 1; col <= p.part(i); ++col)
        w -= WeightAff::alpha(col - i + s[c], e);
  }
  WeightAff check(e);
  for (int i = 0; i < e.value(); ++i) {
    ReducedWord r = reduced_i_word(lambda, s, e, i);
    for (int n = 0; n < r.phi - r.eps; ++n) check += WeightAff::fundamental(i, e);
    for (int n = 0; n < r.eps - r.phi; ++n) check -= WeightAff::fundamental(i, e);
  }
  if (!(w == check)) throw internal_error("affine weight formulas disagree");
  return w;
}

Multicharge canonical_charge(const Multicharge& s, EModulus e) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  if (e.is_infinite()) throw std::invalid_argument("canonical charge requires finite e");
  Multicharge out;
  for (int sc : s) out.push_back(e.residue(sc));
  std::sort(out.begin(), out.end());
  return out;
}

bool equivalent_charges(const Multicharge& a, const Multicharge& b, EModulus e) {
  if (a.size() != b.size()) return false;
  return canonical_charge(a, e) == canonical_charge(b, e);
}

CrystalGraph generate_crystal(const Multicharge& s, EModulus e,
                              const CrystalOptions& opt) {
  if (s.empty()) throw std::invalid_argument("charge must have at least one entry");
  if (opt.max_rank < 0) throw std::invalid_argument("max rank must be nonnegative");
  Multicharge charge = (opt.normalize_charge && e.is_finite()) ? canonical_charge(s, e) : s;
  int l = static_cast<int>(charge.size());

  CrystalGraph g;
  g.charge = charge;
  g.e = e;
  g.max_rank = opt.max_rank;

  std::map<Multipartition, int> index;
  for (int n = 0; n <= opt.max_rank; ++n) {
    auto batch = multipartitions_of_rank(l, n);
    std::sort(batch.begin(), batch.end(),
              [](const Multipartition& a, const Multipartition& b) {
                return format_multipartition(a) < format_multipartition(b);
              });
    for (auto& m : batch) {
      if (g.vertices.size() >= opt.vertex_cap)
        throw resource_limit("vertex cap exceeded at rank " + std::to_string(n));
      index.emplace(m, static_cast<int>(g.vertices.size()));
      CrystalVertex v;
      v.lambda = m;
      v.rank = n;
      v.hw = is_highest_weight(m, charge, e);
      v.wt_inf = weight_inf(m, charge);
      if (e.is_finite()) v.wt_aff = weight_aff(m, charge, e);
      g.vertices.push_back(std::move(v));
    }
  }

  for (int src = 0; src < static_cast<int>(g.vertices.size()); ++src) {
    const CrystalVertex& v = g.vertices[src];
    if (v.rank == opt.max_rank) continue;
    std::vector<int> residues;
    if (e.is_finite()) {
      for (int i = 0; i < e.value(); ++i) residues.push_back(i);
    } else {
      std::set<int> contents;
      for (const Node& b : addable_nodes(v.lambda)) contents.insert(node_content(b, charge));
      residues.assign(contents.begin(), contents.end());
    }
    for (int i : residues) {
      ReducedWord r = reduced_i_word(v.lambda, charge, e, i);
      if (!r.good_addable) continue;
      Multipartition target = add_node(v.lambda, *r.good_addable);
      auto it = index.find(target);
      if (it == index.end()) throw internal_error("crystal edge left the rank window");
      g.edges.push_back({src, it->second, i, node_content(*r.good_addable, charge)});
    }
  }

  if (opt.component_of) {
    const Multipartition& seed = *opt.component_of;
    if (seed.level() != l)
      throw std::invalid_argument("component seed level does not match charge");
    auto it = index.find(seed);
    if (it == index.end())
      throw std::invalid_argument("component seed exceeds the rank bound");
    std::vector<std::vector<int>> adj(g.vertices.size());
    for (const CrystalEdge& ed : g.edges) {
      adj[ed.src].push_back(ed.dst);
      adj[ed.dst].push_back(ed.src);
    }
    std::vector<char> keep(g.vertices.size(), 0);
    std::queue<int> q;
    q.push(it->second);
    keep[it->second] = 1;
    while (!q.empty()) {
      int at = q.front();
      q.pop();
      for (int next : adj[at])
        if (!keep[next]) {
          keep[next] = 1;
          q.push(next);
        }
    }
    std::vector<int> remap(g.vertices.size(), -1);
    std::vector<CrystalVertex> kept;
    for (std::size_t k = 0; k < g.vertices.size(); ++k)
      if (keep[k]) {
        remap[k] = static_cast<int>(kept.size());
        kept.push_back(std::move(g.vertices[k]));
      }
    std::vector<CrystalEdge> edges;
    for (CrystalEdge ed : g.edges)
      if (keep[ed.src]) {
        ed.src = remap[ed.src];
        ed.dst = remap[ed.dst];
        edges.push_back(ed);
      }
    g.vertices = std::move(kept);
    g.edges = std::move(edges);
  }

  std::sort(g.edges.begin(), g.edges.end(), [](const CrystalEdge& a, const CrystalEdge& b) {
    if (a.src != b.src) return a.src < b.src;
    return a.content < b.content;
  });
  return g;
}

}  // namespace fock
