#include "fock/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fock/crystal.hpp"
#include "fock/decomposition.hpp"
#include "fock/multipartition.hpp"
#include "fock/symbol.hpp"
#include "fock/verify.hpp"
#include "fock/weight.hpp"

namespace fock::cli {

namespace {

using nlohmann::json;

json charge_json(const Multicharge& s) { return json(s); }

json weight_inf_json(const WeightInf& w) {
  json coeffs = json::object();
  for (const auto& [j, a] : w.coeffs()) coeffs[std::to_string(j)] = a;
  return json{{"fundamental", coeffs}};
}

json weight_aff_json(const WeightAff& w) {
  json coeffs = json::object();
  for (const auto& [i, a] : w.coeffs()) coeffs[std::to_string(i)] = a;
  return json{{"e", w.modulus().value()}, {"fundamental", coeffs}};
}

WeightInf parse_weight_inf(const std::string& text) {
  json parsed;
  try {
    parsed = json::parse(text);
  } catch (const json::exception& ex) {
    throw std::invalid_argument(std::string("bad weight JSON: ") + ex.what());
  }
  if (!parsed.is_object() || !parsed.contains("fundamental") ||
      !parsed["fundamental"].is_object())
    throw std::invalid_argument("weight JSON must be {\"fundamental\": {\"j\": coeff}}");
  WeightInf w;
  for (const auto& [key, value] : parsed["fundamental"].items()) {
    int j = 0;
    try {
      j = std::stoi(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad fundamental index '" + key + "'");
    }
    if (!value.is_number_integer())
      throw std::invalid_argument("weight coefficients must be integers");
    int a = value.get<int>();
    if (a >= 0)
      w += a * WeightInf::fundamental(j);
    else
      w -= (-a) * WeightInf::fundamental(j);
  }
  return w;
}

json period_json(const Period& p) {
  json nodes = json::array();
  for (const PeriodNode& n : p.nodes) nodes.push_back(json::array({n.i, n.part, n.c}));
  json form = json::array();
  for (int a = 0; a < static_cast<int>(p.nodes.size()); ++a)
    form.push_back(p.form_max - a);
  return json{{"form", form}, {"nodes", nodes}};
}

std::string period_text(const Period& p) {
  std::ostringstream os;
  os << "form:";
  for (int a = 0; a < static_cast<int>(p.nodes.size()); ++a)
    os << ' ' << p.form_max - a;
  os << "\n";
  for (int a = 0; a < static_cast<int>(p.nodes.size()); ++a) {
    const PeriodNode& n = p.nodes[a];
    os << "  value " << p.form_max - a << ": row index " << n.i << ", part "
       << n.part << ", component " << n.c << "\n";
  }
  return os.str();
}

struct Common {
  std::string lambda_text;
  std::string charge_text;
  std::string e_text = "inf";
  std::string format = "text";
};

void emit(std::ostream& out, const std::string& format, const json& payload,
          const std::string& text) {
  if (format == "json")
    out << payload.dump(2) << "\n";
  else
    out << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"combinatorics of level-l charged Fock space crystals"};
  app.name("fock");
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "parallelism cap (the engine may use fewer)")
      ->check(CLI::PositiveNumber);

  int exit_code = 0;

  // symbol
  auto sym = Common{};
  auto* symbol_cmd = app.add_subcommand("symbol", "display the symbol of a charged multipartition");
  symbol_cmd->add_option("--lambda", sym.lambda_text, "multipartition, e.g. 3|2.2.2|2.1")->required();
  symbol_cmd->add_option("--charge", sym.charge_text, "charge list, s_0 first")->required();
  symbol_cmd->add_option("--e", sym.e_text, "modulus (>= 2 or inf)");
  symbol_cmd->add_option("--format", sym.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  symbol_cmd->callback([&] {
    Multipartition lambda = parse_multipartition(sym.lambda_text);
    Multicharge s = parse_charge(sym.charge_text);
    EModulus e = EModulus::parse(sym.e_text);
    SymbolDisplay d = symbol_display(lambda, s);
    json payload{{"lambda", format_multipartition(lambda)},
                 {"charge", charge_json(s)},
                 {"cutoff", d.cutoff},
                 {"rows", d.rows}};
    if (e.is_finite()) payload["truncated"] = truncated_symbol(lambda, s, e);
    emit(out, sym.format, payload, format_symbol(lambda, s));
  });

  // period
  auto per = Common{};
  per.e_text.clear();
  auto* period_cmd = app.add_subcommand("period", "find the unique e-period if any");
  period_cmd->add_option("--lambda", per.lambda_text, "multipartition")->required();
  period_cmd->add_option("--charge", per.charge_text, "charge list")->required();
  period_cmd->add_option("--e", per.e_text, "modulus (finite)")->required();
  period_cmd->add_option("--format", per.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  period_cmd->callback([&] {
    Multipartition lambda = parse_multipartition(per.lambda_text);
    Multicharge s = parse_charge(per.charge_text);
    EModulus e = EModulus::parse(per.e_text);
    auto p = find_period(lambda, s, e);
    json payload{{"found", static_cast<bool>(p)}};
    std::string text = "no period\n";
    if (p) {
      payload.update(period_json(*p));
      text = period_text(*p);
    }
    emit(out, per.format, payload, text);
  });

  // peel
  auto pe = Common{};
  pe.e_text.clear();
  auto* peel_cmd = app.add_subcommand("peel", "iteratively remove periods");
  peel_cmd->add_option("--lambda", pe.lambda_text, "multipartition")->required();
  peel_cmd->add_option("--charge", pe.charge_text, "charge list")->required();
  peel_cmd->add_option("--e", pe.e_text, "modulus (finite)")->required();
  peel_cmd->add_option("--format", pe.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  peel_cmd->callback([&] {
    Multipartition lambda = parse_multipartition(pe.lambda_text);
    Multicharge s = parse_charge(pe.charge_text);
    EModulus e = EModulus::parse(pe.e_text);
    PeelTrace trace = peel(lambda, s, e);
    bool totally = trace.final_lambda.empty() &&
                   charge_in_reduced_window(trace.final_charge, e);
    json steps = json::array();
    std::ostringstream text;
    for (const PeelStep& step : trace.steps) {
      json entry = period_json(step.period);
      entry["charge_before"] = charge_json(step.charge_before);
      entry["charge_after"] = charge_json(step.charge_after);
      steps.push_back(entry);
      text << "remove form";
      for (int a = 0; a < static_cast<int>(step.period.nodes.size()); ++a)
        text << ' ' << step.period.form_max - a;
      text << ": charge (" << format_charge(step.charge_before) << ") -> ("
           << format_charge(step.charge_after) << ")\n";
    }
    text << "final: " << format_multipartition(trace.final_lambda) << " at charge ("
         << format_charge(trace.final_charge) << ")\n";
    text << "totally_periodic: " << (totally ? "true" : "false") << "\n";
    json payload{{"steps", steps},
                 {"final_lambda", format_multipartition(trace.final_lambda)},
                 {"final_charge", charge_json(trace.final_charge)},
                 {"totally_periodic", totally}};
    emit(out, pe.format, payload, text.str());
  });

  // hw
  auto hwc = Common{};
  hwc.e_text.clear();
  auto* hw_cmd = app.add_subcommand("hw", "test whether the vertex is highest weight");
  hw_cmd->add_option("--lambda", hwc.lambda_text, "multipartition")->required();
  hw_cmd->add_option("--charge", hwc.charge_text, "charge list")->required();
  hw_cmd->add_option("--e", hwc.e_text, "modulus (>= 2 or inf)")->required();
  hw_cmd->add_option("--format", hwc.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  hw_cmd->callback([&] {
    Multipartition lambda = parse_multipartition(hwc.lambda_text);
    Multicharge s = parse_charge(hwc.charge_text);
    EModulus e = EModulus::parse(hwc.e_text);
    bool hw = is_highest_weight(lambda, s, e);
    emit(out, hwc.format, json{{"highest_weight", hw}},
         std::string(hw ? "true" : "false") + "\n");
  });

  // crystal
  struct {
    std::string charge_text;
    std::string e_text;
    int max_rank = 0;
    std::string component;
    std::string format = "json";
    std::size_t vertex_cap = 500000;
    bool normalize = false;
  } cry;
  auto* crystal_cmd = app.add_subcommand("crystal", "generate the crystal graph up to a rank");
  crystal_cmd->add_option("--charge", cry.charge_text, "charge list")->required();
  crystal_cmd->add_option("--e", cry.e_text, "modulus (>= 2 or inf)")->required();
  crystal_cmd->add_option("--max-rank", cry.max_rank, "largest rank generated")->required();
  crystal_cmd->add_option("--component-of", cry.component, "keep the component of this multipartition");
  crystal_cmd->add_option("--format", cry.format, "dot, json, or text")
      ->check(CLI::IsMember({"dot", "json", "text"}));
  crystal_cmd->add_option("--vertex-cap", cry.vertex_cap, "vertex budget");
  crystal_cmd->add_flag("--normalize-charge", cry.normalize, "replace the charge by its canonical form");
  crystal_cmd->callback([&] {
    Multicharge s = parse_charge(cry.charge_text);
    EModulus e = EModulus::parse(cry.e_text);
    CrystalOptions opt;
    opt.max_rank = cry.max_rank;
    opt.vertex_cap = cry.vertex_cap;
    opt.normalize_charge = cry.normalize;
    if (!cry.component.empty()) opt.component_of = parse_multipartition(cry.component);
    CrystalGraph g = generate_crystal(s, e, opt);

    if (cry.format == "dot") {
      out << "digraph crystal {\n";
      out << "  rankdir=TB;\n  node [shape=box];\n";
      for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        out << "  v" << k << " [label=\"" << format_multipartition(g.vertices[k].lambda)
            << "\"" << (g.vertices[k].hw ? " style=bold" : "") << "];\n";
      }
      for (const CrystalEdge& edge : g.edges)
        out << "  v" << edge.src << " -> v" << edge.dst << " [label=\"" << edge.residue
            << " (" << edge.content << ")\"];\n";
      out << "}\n";
      return;
    }
    if (cry.format == "text") {
      out << "vertices: " << g.vertices.size() << "\n";
      out << "edges: " << g.edges.size() << "\n";
      for (std::size_t k = 0; k < g.vertices.size(); ++k) {
        const CrystalVertex& v = g.vertices[k];
        out << "v" << k << ": " << format_multipartition(v.lambda) << " rank " << v.rank
            << (v.hw ? " hw" : "") << "\n";
      }
      for (const CrystalEdge& edge : g.edges)
        out << "v" << edge.src << " -> v" << edge.dst << " residue " << edge.residue
            << " content " << edge.content << "\n";
      return;
    }
    json vertices = json::array();
    for (std::size_t k = 0; k < g.vertices.size(); ++k) {
      const CrystalVertex& v = g.vertices[k];
      json entry{{"id", k},
                 {"lambda", format_multipartition(v.lambda)},
                 {"charge", charge_json(g.charge)},
                 {"rank", v.rank},
                 {"hw", v.hw},
                 {"wt_inf", weight_inf_json(v.wt_inf)}};
      entry["wt_aff"] = v.wt_aff ? weight_aff_json(*v.wt_aff) : json(nullptr);
      vertices.push_back(entry);
    }
    json edges = json::array();
    for (const CrystalEdge& edge : g.edges)
      edges.push_back(json{{"src", edge.src},
                           {"dst", edge.dst},
                           {"residue", edge.residue},
                           {"content", edge.content}});
    json payload{{"charge", charge_json(g.charge)},
                 {"e", e.is_finite() ? json(e.value()) : json("inf")},
                 {"max_rank", g.max_rank},
                 {"vertices", vertices},
                 {"edges", edges}};
    out << payload.dump(2) << "\n";
  });

  // branch
  struct {
    std::string charge_text;
    std::string e_text;
    int max_rank = 0;
    std::string format = "text";
  } br;
  auto* branch_cmd = app.add_subcommand(
      "branch", "list highest weight vertices of the semistandard family");
  branch_cmd->add_option("--charge", br.charge_text, "charge list")->required();
  branch_cmd->add_option("--e", br.e_text, "modulus (>= 2 or inf)")->required();
  branch_cmd->add_option("--max-rank", br.max_rank, "largest rank scanned")->required();
  branch_cmd->add_option("--format", br.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  branch_cmd->callback([&] {
    Multicharge s = parse_charge(br.charge_text);
    EModulus e = EModulus::parse(br.e_text);
    json vertices = json::array();
    std::ostringstream text;
    for (int n = 0; n <= br.max_rank; ++n) {
      auto batch = multipartitions_of_rank(static_cast<int>(s.size()), n);
      std::sort(batch.begin(), batch.end(),
                [](const Multipartition& a, const Multipartition& b) {
                  return format_multipartition(a) < format_multipartition(b);
                });
      for (const Multipartition& lambda : batch) {
        if (!is_semistandard(lambda, s)) continue;
        if (!is_highest_weight(lambda, s, e)) continue;
        WeightInf w = weight_inf(lambda, s);
        Multicharge t;
        json omega = json::object();
        std::ostringstream omega_text;
        if (e.is_finite()) {
          PeelTrace trace = peel(lambda, s, e);
          t = trace.final_charge;
          std::map<int, int> counts;
          for (const PeelStep& step : trace.steps) ++counts[step.period.form_max];
          for (const auto& [k, a] : counts) {
            omega[std::to_string(k)] = a;
            omega_text << " + " << a << "*w" << k;
          }
        } else {
          for (const auto& [j, a] : w.coeffs())
            for (int q = 0; q < a; ++q) t.push_back(j);
        }
        vertices.push_back(json{{"lambda", format_multipartition(lambda)},
                                {"rank", n},
                                {"wt_inf", weight_inf_json(w)},
                                {"t", charge_json(t)},
                                {"omega", omega}});
        text << format_multipartition(lambda) << " rank " << n << ": wt " << w.str()
             << "; t (" << format_charge(t) << ")" << omega_text.str() << "\n";
      }
    }
    json payload{{"charge", charge_json(s)},
                 {"e", e.is_finite() ? json(e.value()) : json("inf")},
                 {"max_rank", br.max_rank},
                 {"vertices", vertices}};
    emit(out, br.format, payload, text.str());
  });

  // kostka
  struct {
    std::string shape_text;
    std::string weight_text;
    std::string format = "text";
  } ko;
  auto* kostka_cmd = app.add_subcommand(
      "kostka", "count fillings with strict rows and weak columns");
  kostka_cmd->add_option("--shape", ko.shape_text, "partition, e.g. 3.3.1")->required();
  kostka_cmd->add_option("--weight", ko.weight_text, "letter multiplicities")->required();
  kostka_cmd->add_option("--format", ko.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  kostka_cmd->callback([&] {
    Partition shape = parse_partition(ko.shape_text);
    std::vector<int> weight = parse_charge(ko.weight_text);
    long long n = kostka(shape, weight);
    emit(out, ko.format,
         json{{"shape", shape.parts()}, {"weight", weight}, {"kostka", n}},
         std::to_string(n) + "\n");
  });

  // tableau
  struct {
    std::string lambda_text;
    std::string charge_text;
    std::string format = "text";
  } ta;
  auto* tableau_cmd = app.add_subcommand(
      "tableau", "encode a highest weight vertex at infinite e as a tableau");
  tableau_cmd->add_option("--of-symbol", ta.lambda_text, "multipartition")->required();
  tableau_cmd->add_option("--charge", ta.charge_text, "charge list")->required();
  tableau_cmd->add_option("--format", ta.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  tableau_cmd->callback([&] {
    Multipartition lambda = parse_multipartition(ta.lambda_text);
    Multicharge s = parse_charge(ta.charge_text);
    HwTableau t = hw_symbol_to_tableau(lambda, s);
    Multipartition back = tableau_to_hw_symbol(t.rows, s, t.v);
    if (!(back == lambda)) throw internal_error("tableau round trip failed");
    std::ostringstream text;
    text << "v: (" << format_charge(t.v) << ")\n";
    text << "shape: " << format_partition(t.shape) << "\n";
    text << "weight: (" << format_charge(t.mu) << ")\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      text << "row " << r + 1 << ":";
      for (int letter : t.rows[r]) text << ' ' << letter;
      text << "\n";
    }
    emit(out, ta.format,
         json{{"v", charge_json(t.v)},
              {"shape", t.shape.parts()},
              {"mu", t.mu},
              {"rows", t.rows}},
         text.str());
  });

  // multiplicity
  struct {
    std::string charge_text;
    std::string e_text;
    std::string nu_text;
    std::string which = "m";
    std::string format = "text";
  } mu;
  auto* mult_cmd = app.add_subcommand(
      "multiplicity", "multiplicity of a weight among highest weight vertices");
  mult_cmd->add_option("--charge", mu.charge_text, "charge list")->required();
  mult_cmd->add_option("--e", mu.e_text, "modulus (finite)")->required();
  mult_cmd->add_option("--nu", mu.nu_text, "weight JSON {\"fundamental\":{...}}")->required();
  mult_cmd->add_option("--which", mu.which, "m (semistandard family) or M (whole crystal)")
      ->check(CLI::IsMember({"m", "M"}));
  mult_cmd->add_option("--format", mu.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  mult_cmd->callback([&] {
    Multicharge s = parse_charge(mu.charge_text);
    EModulus e = EModulus::parse(mu.e_text);
    WeightInf nu = parse_weight_inf(mu.nu_text);
    long long value = mu.which == "M" ? count_M(s, nu, e) : count_m(s, nu, e);
    json decs = json::array();
    for (const DecomposedWeight& dec :
         decompose_weight(nu, static_cast<int>(s.size()), e)) {
      json omega = json::object();
      for (const auto& [k, a] : dec.omega) omega[std::to_string(k)] = a;
      decs.push_back(json{{"t", charge_json(dec.t)}, {"omega", omega}});
    }
    emit(out, mu.format,
         json{{"which", mu.which},
              {"nu", weight_inf_json(nu)},
              {"value", value},
              {"decompositions", decs}},
         std::to_string(value) + "\n");
  });

  // verify
  struct {
    std::string suite;
    std::string charges_text;
    int level = 0;
    std::string e_text = "2";
    int max_rank = 4;
    std::size_t vertex_cap = 500000;
    std::string format = "text";
  } ve;
  auto* verify_cmd = app.add_subcommand("verify", "run a property-check suite");
  verify_cmd->add_option("--suite", ve.suite, "suite name or all")->required();
  verify_cmd->add_option("--charges", ve.charges_text, "semicolon-separated charge lists");
  verify_cmd->add_option("--l", ve.level, "restrict pools to this level");
  verify_cmd->add_option("--e", ve.e_text, "modulus (>= 2 or inf)");
  verify_cmd->add_option("--max-rank", ve.max_rank, "largest rank scanned");
  verify_cmd->add_option("--vertex-cap", ve.vertex_cap, "vertex budget");
  verify_cmd->add_option("--format", ve.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->callback([&] {
    VerifyOptions opt;
    opt.e = EModulus::parse(ve.e_text);
    opt.max_rank = ve.max_rank;
    opt.vertex_cap = ve.vertex_cap;
    if (!ve.charges_text.empty()) {
      std::string cur;
      std::vector<std::string> pieces;
      for (char ch : ve.charges_text) {
        if (ch == ';') {
          pieces.push_back(cur);
          cur.clear();
        } else {
          cur.push_back(ch);
        }
      }
      pieces.push_back(cur);
      for (const std::string& piece : pieces) opt.charges.push_back(parse_charge(piece));
    } else {
      opt.charges = {{0}, {0, 0}, {0, 1}, {0, 0, 1}};
    }
    if (ve.level > 0) {
      std::vector<Multicharge> kept;
      for (const Multicharge& s : opt.charges)
        if (static_cast<int>(s.size()) == ve.level) kept.push_back(s);
      if (kept.empty())
        throw std::invalid_argument("no charge pools for the requested level");
      opt.charges = std::move(kept);
    }
    auto results = run_suite(ve.suite, opt);
    bool all_pass = true;
    json payload = json::array();
    std::ostringstream text;
    for (const CheckResult& r : results) {
      all_pass = all_pass && r.pass;
      payload.push_back(json{{"name", r.name},
                             {"pass", r.pass},
                             {"cases", r.cases},
                             {"detail", r.detail}});
      text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " (cases=" << r.cases << ")";
      if (!r.detail.empty()) text << ": " << r.detail;
      text << "\n";
    }
    emit(out, ve.format, payload, text.str());
    if (!all_pass) exit_code = 1;
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const resource_limit& e) {
    err << "resource limit: " << e.what() << "\n";
    return 1;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

}  // namespace fock::cli
