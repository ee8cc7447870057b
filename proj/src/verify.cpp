#include "fock/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fock/crystal.hpp"
#include "fock/decomposition.hpp"
#include "fock/symbol.hpp"
#include "fock/weight.hpp"

namespace fock {

namespace {

std::vector<Multicharge> pools_or_default(const VerifyOptions& opt) {
  if (!opt.charges.empty()) return opt.charges;
  return {{0}, {0, 0}, {0, 1}, {0, 0, 1}};
}

std::vector<Multipartition> pool(const Multicharge& s, int max_rank) {
  std::vector<Multipartition> out;
  for (int n = 0; n <= max_rank; ++n) {
    auto batch = multipartitions_of_rank(static_cast<int>(s.size()), n);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<int> residues_for(const Multipartition& lambda, const Multicharge& s,
                              EModulus e) {
  std::vector<int> out;
  if (e.is_finite()) {
    for (int i = 0; i < e.value(); ++i) out.push_back(i);
    return out;
  }
  int lo = 0, hi = 0;
  bool seen = false;
  auto visit = [&](const Node& b) {
    int j = node_content(b, s);
    lo = seen ? std::min(lo, j) : j;
    hi = seen ? std::max(hi, j) : j;
    seen = true;
  };
  for (const Node& b : addable_nodes(lambda)) visit(b);
  for (const Node& b : removable_nodes(lambda)) visit(b);
  for (int j = lo - 1; j <= hi + 1; ++j) out.push_back(j);
  return out;
}

std::string describe(const Multipartition& lambda, const Multicharge& s) {
  return format_multipartition(lambda) + " at charge (" + format_charge(s) + ")";
}

CheckResult check_hw_equivalence(const VerifyOptions& opt) {
  CheckResult r{"hw-equivalence", true, 0, ""};
  for (const Multicharge& s : pools_or_default(opt)) {
    for (const Multipartition& lambda : pool(s, opt.max_rank)) {
      bool hw = is_highest_weight(lambda, s, opt.e);
      bool periodic = is_totally_periodic(lambda, s, opt.e);
      ++r.cases;
      if (hw != periodic && r.pass) {
        r.pass = false;
        r.detail = describe(lambda, s) + ": highest-weight " +
                   (hw ? "true" : "false") + " but totally-periodic " +
                   (periodic ? "true" : "false");
      }
    }
  }
  return r;
}

CheckResult check_period_invariance(const VerifyOptions& opt) {
  CheckResult r{"period-invariance", true, 0, ""};
  if (opt.e.is_infinite()) {
    r.detail = "not applicable at infinite e";
    return r;
  }
  auto fail = [&](const std::string& msg) {
    if (r.pass) {
      r.pass = false;
      r.detail = msg;
    }
  };
  for (const Multicharge& s : pools_or_default(opt)) {
    for (const Multipartition& lambda : pool(s, opt.max_rank)) {
      auto p = find_period(lambda, s, opt.e);
      if (!p) continue;
      ++r.cases;
      auto [nl, ns] = remove_period(lambda, s, opt.e);
      for (int i = 0; i < opt.e.value(); ++i)
        if (eps_phi(lambda, s, opt.e, i) != eps_phi(nl, ns, opt.e, i))
          fail(describe(lambda, s) + ": removal changed (eps, phi) at residue " +
               std::to_string(i));
      if (!(weight_aff(lambda, s, opt.e) == weight_aff(nl, ns, opt.e)))
        fail(describe(lambda, s) + ": removal changed the affine weight");
      WeightInf shifted =
          weight_inf(nl, ns) + WeightInf::omega(p->form_max, opt.e);
      if (!(weight_inf(lambda, s) == shifted))
        fail(describe(lambda, s) + ": removal did not shift weight by omega");
      if (is_semistandard(lambda, s) && is_totally_periodic(lambda, s, opt.e)) {
        Multipartition at = lambda;
        Multicharge sc = s;
        while (!(at.empty() && charge_in_reduced_window(sc, opt.e))) {
          auto step = find_period(at, sc, opt.e);
          if (!step) break;
          auto next = remove_period(at, sc, opt.e);
          at = next.first;
          sc = next.second;
          if (!is_semistandard(at, sc))
            fail(describe(lambda, s) + ": peel left the semistandard family");
        }
      }
    }
  }
  return r;
}

CheckResult check_word_equality(const VerifyOptions& opt) {
  CheckResult r{"word-equality", true, 0, ""};
  for (const Multicharge& s : pools_or_default(opt)) {
    for (const Multipartition& lambda : pool(s, opt.max_rank)) {
      for (int i : residues_for(lambda, s, opt.e)) {
        ++r.cases;
        ReducedWord a = reduce_word(i_word(lambda, s, opt.e, i));
        ReducedWord b = reduce_word(u_word(lambda, s, opt.e, i));
        if (!(a == b) && r.pass) {
          r.pass = false;
          r.detail = describe(lambda, s) + ": box word and symbol word reduce " +
                     "differently at residue " + std::to_string(i);
        }
      }
      // The weight functions cross-check their two formulas internally.
      weight_inf(lambda, s);
      if (opt.e.is_finite()) weight_aff(lambda, s, opt.e);
    }
  }
  return r;
}

CheckResult check_weight_projection(const VerifyOptions& opt) {
  CheckResult r{"weight-projection", true, 0, ""};
  if (opt.e.is_infinite()) {
    r.detail = "not applicable at infinite e";
    return r;
  }
  for (int k = -10; k <= 10; ++k) {
    ++r.cases;
    WeightAff image = project(WeightInf::omega(k, opt.e), opt.e);
    if (!(image == WeightAff(opt.e)) && r.pass) {
      r.pass = false;
      r.detail = "omega_" + std::to_string(k) + " does not project to zero";
    }
  }
  for (const Multicharge& s : pools_or_default(opt)) {
    for (const Multipartition& lambda : pool(s, opt.max_rank)) {
      ++r.cases;
      if (!(project(weight_inf(lambda, s), opt.e) ==
            weight_aff(lambda, s, opt.e)) &&
          r.pass) {
        r.pass = false;
        r.detail = describe(lambda, s) + ": projected weight disagrees";
      }
    }
  }
  return r;
}

CheckResult check_subgraph(const VerifyOptions& opt) {
  CheckResult r{"subgraph", true, 0, ""};
  if (opt.e.is_infinite()) {
    r.detail = "not applicable at infinite e";
    return r;
  }
  for (const Multicharge& s : pools_or_default(opt)) {
    CrystalOptions copt;
    copt.max_rank = opt.max_rank;
    copt.vertex_cap = opt.vertex_cap;
    CrystalGraph g = generate_crystal(s, opt.e, copt);
    for (const CrystalEdge& edge : g.edges) {
      ++r.cases;
      const Multipartition& src = g.vertices[edge.src].lambda;
      const Multipartition& dst = g.vertices[edge.dst].lambda;
      auto lifted = f_tilde(src, s, EModulus::infinity(), edge.content);
      bool ok = lifted && *lifted == dst &&
                opt.e.residue(edge.content) == opt.e.residue(edge.residue);
      if (!ok && r.pass) {
        r.pass = false;
        r.detail = describe(src, s) + ": edge at residue " +
                   std::to_string(edge.residue) + " content " +
                   std::to_string(edge.content) + " does not lift";
      }
    }
  }
  return r;
}

CheckResult check_counting(const VerifyOptions& opt) {
  CheckResult r{"counting", true, 0, ""};
  auto fail = [&](const std::string& msg) {
    if (r.pass) {
      r.pass = false;
      r.detail = msg;
    }
  };
  for (const Multicharge& s : pools_or_default(opt)) {
    if (!std::is_sorted(s.begin(), s.end())) continue;
    auto vertices = pool(s, opt.max_rank);

    // Highest-weight counts at infinite e match the tableau count.
    std::map<Multicharge, long long> hw_inf;
    for (const Multipartition& lambda : vertices)
      if (is_highest_weight(lambda, s, EModulus::infinity())) {
        WeightInf w = weight_inf(lambda, s);
        Multicharge v;
        for (const auto& [j, a] : w.coeffs())
          for (int n = 0; n < a; ++n) v.push_back(j);
        hw_inf[v] += 1;
      }
    int total = 0;
    for (int sc : s) total += sc;
    int l = static_cast<int>(s.size());
    std::set<Multicharge> candidates;
    Multicharge v(l, 0);
    auto enumerate = [&](auto&& self, int c, int rem) -> void {
      if (c == l - 1) {
        if (rem >= (c == 0 ? s[0] - opt.max_rank - 1 : v[c - 1])) {
          v[c] = rem;
          candidates.insert(v);
        }
        return;
      }
      int from = c == 0 ? s[0] - opt.max_rank - 1 : v[c - 1];
      for (int x = from; (l - c) * x <= rem; ++x) {
        v[c] = x;
        self(self, c + 1, rem - x);
      }
    };
    if (l == 1) {
      candidates.insert({total});
    } else {
      for (int v0 = s[0] - opt.max_rank - 1; v0 <= s[0]; ++v0) {
        v[0] = v0;
        enumerate(enumerate, 1, total - v0);
      }
    }
    for (const auto& [w, count] : hw_inf)
      if (!candidates.count(w))
        fail("candidate window missed the weight (" + format_charge(w) + ")");
    for (const Multicharge& cand : candidates) {
      if (cand.front() > s[0]) continue;
      auto boxes = solve_box_counts(s, WeightInf::of_charge(cand));
      if (!boxes) continue;
      long long rank = 0;
      for (const auto& [j, njk] : *boxes) rank += njk;
      if (rank > opt.max_rank) continue;
      ++r.cases;
      auto [shape, mu] = lambda_mu_of(cand, s);
      long long expect = kostka(shape, mu);
      long long got = hw_inf.count(cand) ? hw_inf[cand] : 0;
      if (expect != got)
        fail("weight (" + format_charge(cand) + ") at charge (" + format_charge(s) +
             "): " + std::to_string(got) + " highest-weight vertices but kostka " +
             std::to_string(expect));
    }

    if (opt.e.is_infinite()) continue;

    // Finite-e highest-weight counts match count_m / count_M.
    std::map<std::string, std::pair<WeightInf, std::pair<long long, long long>>> hw;
    for (const Multipartition& lambda : vertices)
      if (is_highest_weight(lambda, s, opt.e)) {
        WeightInf w = weight_inf(lambda, s);
        auto& slot = hw[w.str()];
        slot.first = w;
        slot.second.second += 1;
        if (is_semistandard(lambda, s)) slot.second.first += 1;
      }
    for (const auto& [key, slot] : hw) {
      ++r.cases;
      long long m = count_m(s, slot.first, opt.e);
      long long big = count_M(s, slot.first, opt.e);
      if (m != slot.second.first)
        fail("count_m disagrees at charge (" + format_charge(s) + ") weight " + key +
             ": counted " + std::to_string(slot.second.first) + ", formula " +
             std::to_string(m));
      if (big != slot.second.second)
        fail("count_M disagrees at charge (" + format_charge(s) + ") weight " + key +
             ": counted " + std::to_string(slot.second.second) + ", formula " +
             std::to_string(big));
    }
  }
  return r;
}

CheckResult check_crystal_sanity(const VerifyOptions& opt) {
  CheckResult r{"crystal-sanity", true, 0, ""};
  auto fail = [&](const std::string& msg) {
    if (r.pass) {
      r.pass = false;
      r.detail = msg;
    }
  };
  for (const Multicharge& s : pools_or_default(opt)) {
    for (const Multipartition& lambda : pool(s, opt.max_rank)) {
      for (int i : residues_for(lambda, s, opt.e)) {
        ++r.cases;
        if (auto up = f_tilde(lambda, s, opt.e, i)) {
          auto back = e_tilde(*up, s, opt.e, i);
          if (!back || !(*back == lambda))
            fail(describe(lambda, s) + ": lowering then raising at residue " +
                 std::to_string(i) + " is not the identity");
          ReducedWord word = reduced_i_word(lambda, s, opt.e, i);
          int j = node_content(*word.good_addable, s);
          if (!(weight_inf(*up, s) == weight_inf(lambda, s) - WeightInf::alpha(j)))
            fail(describe(lambda, s) + ": edge does not shift wt_inf by -alpha");
          if (opt.e.is_finite() &&
              !(weight_aff(*up, s, opt.e) ==
                weight_aff(lambda, s, opt.e) - WeightAff::alpha(i, opt.e)))
            fail(describe(lambda, s) + ": edge does not shift wt_e by -alpha");
        }
        if (auto down = e_tilde(lambda, s, opt.e, i)) {
          auto back = f_tilde(*down, s, opt.e, i);
          if (!back || !(*back == lambda))
            fail(describe(lambda, s) + ": raising then lowering at residue " +
                 std::to_string(i) + " is not the identity");
        }
      }
    }
    CrystalOptions copt;
    copt.max_rank = opt.max_rank;
    copt.vertex_cap = opt.vertex_cap;
    CrystalGraph g1 = generate_crystal(s, opt.e, copt);
    CrystalGraph g2 = generate_crystal(s, opt.e, copt);
    ++r.cases;
    bool same = g1.vertices.size() == g2.vertices.size() && g1.edges == g2.edges;
    for (std::size_t k = 0; same && k < g1.vertices.size(); ++k)
      same = g1.vertices[k].lambda == g2.vertices[k].lambda &&
             g1.vertices[k].hw == g2.vertices[k].hw;
    if (!same) fail("regenerating the crystal changed the output");
    std::set<std::pair<int, int>> out_deg, in_deg;
    for (const CrystalEdge& edge : g1.edges) {
      ++r.cases;
      if (!out_deg.insert({edge.src, opt.e.residue(edge.residue)}).second)
        fail("vertex " + std::to_string(edge.src) + " has two outgoing edges at one residue");
      if (!in_deg.insert({edge.dst, opt.e.residue(edge.residue)}).second)
        fail("vertex " + std::to_string(edge.dst) + " has two incoming edges at one residue");
    }
  }
  return r;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"hw-equivalence", "period-invariance", "word-equality",
          "weight-projection", "subgraph", "counting", "crystal-sanity"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
  std::vector<CheckResult> out;
  auto dispatch = [&](const std::string& name) {
    if (name == "hw-equivalence") out.push_back(check_hw_equivalence(opt));
    else if (name == "period-invariance") out.push_back(check_period_invariance(opt));
    else if (name == "word-equality") out.push_back(check_word_equality(opt));
    else if (name == "weight-projection") out.push_back(check_weight_projection(opt));
    else if (name == "subgraph") out.push_back(check_subgraph(opt));
    else if (name == "counting") out.push_back(check_counting(opt));
    else if (name == "crystal-sanity") out.push_back(check_crystal_sanity(opt));
    else throw std::invalid_argument("unknown suite '" + name + "'");
  };
  if (suite == "all") {
    for (const std::string& name : suite_names()) dispatch(name);
  } else {
    dispatch(suite);
  }
  return out;
}

}  // namespace fock
