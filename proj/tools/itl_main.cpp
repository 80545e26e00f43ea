// itl: exact inverse Turán laboratory — command-line surface.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "itl/constructions.hpp"
#include "itl/extremal.hpp"
#include "itl/graph.hpp"
#include "itl/inverse.hpp"
#include "itl/oneuniform.hpp"
#include "itl/pattern.hpp"
#include "itl/rational.hpp"
#include "itl/verify.hpp"

using itl::MultiHypergraph;
using itl::Pattern;
using itl::Rational;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inline graph literals: K5, K3,3, C6, P4, 2K7 (an optional repetition count
// before K/C/P). Anything else is treated as a path to a graph file.
std::optional<MultiHypergraph> parse_literal(const std::string& s) {
  size_t i = 0;
  long long copies = 1;
  if (i < s.size() && isdigit((unsigned char)s[i])) {
    size_t j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
    if (j == s.size()) return std::nullopt;
    copies = std::stoll(s.substr(i, j - i));
    i = j;
  }
  if (i >= s.size() || copies < 1 || copies > 32) return std::nullopt;
  char kind = s[i++];
  auto num = [&]() -> std::optional<long long> {
    size_t j = i;
    while (j < s.size() && isdigit((unsigned char)s[j])) ++j;
    if (j == i) return std::nullopt;
    long long v = std::stoll(s.substr(i, j - i));
    i = j;
    return v;
  };
  auto a = num();
  if (!a || *a < 1 || *a > 64) return std::nullopt;
  MultiHypergraph unit;
  if (kind == 'K' && i < s.size() && s[i] == ',') {
    ++i;
    auto b = num();
    if (!b || i != s.size() || *b < 1 || *b > 64) return std::nullopt;
    unit = itl::complete_bipartite((int)*a, (int)*b);
  } else if (i != s.size()) {
    return std::nullopt;
  } else if (kind == 'K') {
    unit = itl::clique((int)*a);
  } else if (kind == 'C') {
    if (*a < 3) return std::nullopt;
    unit = itl::cycle_graph((int)*a);
  } else if (kind == 'P') {
    unit = itl::path_graph((int)*a);
  } else {
    return std::nullopt;
  }
  MultiHypergraph g;
  g.n = (int)(copies * unit.n);
  if (g.n > 64) return std::nullopt;
  for (long long c = 0; c < copies; ++c)
    for (auto& [key, m] : unit.edges) {
      itl::Edge shifted = key;
      for (int& v : shifted) v += (int)(c * unit.n);
      g.add_edge(shifted, m);
    }
  return g;
}

MultiHypergraph load_graph(const std::string& arg) {
  if (auto g = parse_literal(arg)) return *g;
  std::ifstream in(arg);
  if (!in) throw UsageError("cannot read graph '" + arg + "' (not a literal, not a file)");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return itl::parse_graph(buf.str());
  } catch (const std::exception& e) {
    throw UsageError(std::string("parsing '") + arg + "': " + e.what());
  }
}

Pattern load_pattern(const std::string& arg) {
  if (auto p = Pattern::parse(arg)) return *p;
  // Fall back to a single-member finite family from a graph argument.
  return Pattern::finite({load_graph(arg)});
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad integer list '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

json graph_json(const MultiHypergraph& g) {
  json edges = json::array();
  for (auto& [key, m] : g.edges) edges.push_back(json{{"vertices", key}, {"mult", m}});
  return json{{"n", g.n}, {"e", g.e()}, {"edges", edges}, {"text", itl::format_graph(g)}};
}

json witness_json(const std::vector<std::pair<itl::Edge, int>>& w) {
  json out = json::array();
  for (auto& [key, m] : w) out.push_back(json{{"vertices", key}, {"mult", m}});
  return out;
}

void emit(const json& j, bool pretty) {
  if (pretty)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump() << "\n";
}

double default_budget_seconds() {
  if (const char* env = std::getenv("ITL_BUDGET_SECONDS")) {
    try {
      return std::stod(env);
    } catch (const std::exception&) {
      throw UsageError("ITL_BUDGET_SECONDS is not a number");
    }
  }
  return -1;  // unlimited
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"itl — exact computation of Turán and inverse Turán numbers"};
  app.require_subcommand(1);
  bool pretty = false;
  bool json_flag = true;
  int threads = 0;
  app.add_flag("--pretty", pretty, "indented human-oriented output");
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_option("--threads", threads, "cap worker parallelism (solvers are deterministic)");

  // --- ex -------------------------------------------------------------------
  auto* cmd_ex = app.add_subcommand("ex", "maximum H-free subgraph size ex(G, H)");
  std::string ex_graph, ex_pattern;
  double ex_budget = -2;
  cmd_ex->add_option("graph", ex_graph)->required();
  cmd_ex->add_option("pattern", ex_pattern)->required();
  cmd_ex->add_option("--budget", ex_budget, "time budget in seconds");

  // --- inverse --------------------------------------------------------------
  auto* cmd_inv = app.add_subcommand("inverse", "inverse value E_H(k) within caps");
  std::string inv_pattern;
  int inv_k = 0, inv_nmax = 8, inv_multmax = 1;
  long long inv_mmax = 16;
  std::string inv_compress = "none";
  bool inv_multi = false, inv_simple = false, inv_loops = false;
  double inv_budget = -2;
  cmd_inv->add_option("pattern", inv_pattern)->required();
  cmd_inv->add_option("k", inv_k)->required();
  cmd_inv->add_option("--nmax", inv_nmax, "max host vertices");
  cmd_inv->add_option("--mmax", inv_mmax, "max host edges");
  cmd_inv->add_option("--multmax", inv_multmax, "max edge multiplicity (with --multi)");
  cmd_inv->add_option("--compress", inv_compress, "none | component | underlying");
  cmd_inv->add_flag("--multi", inv_multi, "multigraph hosts");
  cmd_inv->add_flag("--simple", inv_simple, "simple hosts (default)");
  cmd_inv->add_flag("--loops", inv_loops, "allow 1-uniform loops in hosts");
  cmd_inv->add_option("--budget", inv_budget, "time budget in seconds");

  // --- construct ------------------------------------------------------------
  auto* cmd_con = app.add_subcommand("construct", "emit a named extremal construction");
  std::string con_name;
  std::vector<std::string> con_params;
  cmd_con->add_option("name", con_name)->required();
  cmd_con->add_option("params", con_params, "construction parameters");

  // --- ch -------------------------------------------------------------------
  auto* cmd_ch = app.add_subcommand("ch", "quadratic constant c_H of a 1-uniform pattern");
  std::string ch_seq;
  int ch_chain = 0;
  cmd_ch->add_option("seq", ch_seq, "degree sequence d1,...,dt")->required();
  cmd_ch->add_option("--chain", ch_chain, "also evaluate the reduced programs at this k");

  // --- sunflower ------------------------------------------------------------
  auto* cmd_sun = app.add_subcommand("sunflower", "sunflower test and core of a graph");
  std::string sun_graph;
  cmd_sun->add_option("graph", sun_graph)->required();

  // --- contract -------------------------------------------------------------
  auto* cmd_ctr = app.add_subcommand("contract", "contract an independent set to one vertex");
  std::string ctr_graph, ctr_set;
  cmd_ctr->add_option("graph", ctr_graph)->required();
  cmd_ctr->add_option("set", ctr_set, "comma-separated vertex indices")->required();

  // --- rho-star -------------------------------------------------------------
  auto* cmd_rho = app.add_subcommand("rho-star", "exact fractional edge cover number");
  std::string rho_graph;
  cmd_rho->add_option("graph", rho_graph)->required();

  // --- verify-paper ---------------------------------------------------------
  auto* cmd_ver = app.add_subcommand("verify-paper", "run the theorem regression battery");
  bool ver_quick = false, ver_full = false;
  cmd_ver->add_flag("--quick", ver_quick, "fast subset (~1 minute)");
  cmd_ver->add_flag("--full", ver_full, "entire desk-scale battery (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cmd_ex) {
      auto g = load_graph(ex_graph);
      auto p = load_pattern(ex_pattern);
      itl::ExOptions opt;
      opt.budget.max_seconds = ex_budget > -2 ? ex_budget : default_budget_seconds();
      auto r = itl::ex_exact(g, p, opt);
      emit(json{{"value", r.value},
                {"method", r.method},
                {"complete", r.complete},
                {"nodes", r.nodes_explored},
                {"witness", witness_json(r.witness)}},
           pretty);
      return r.complete ? kExitOk : kExitBudget;
    }

    if (*cmd_inv) {
      auto p = load_pattern(inv_pattern);
      if (inv_k < 1) throw UsageError("k must be positive");
      itl::SearchSpace sp;
      sp.n_max = inv_nmax;
      sp.m_max = inv_mmax;
      sp.simple_only = !inv_multi;
      sp.mult_max = inv_multmax;
      sp.allow_loops1 = inv_loops;
      if (inv_compress == "none")
        sp.compression = itl::SearchSpace::Compression::None;
      else if (inv_compress == "component")
        sp.compression = itl::SearchSpace::Compression::ComponentClosure;
      else if (inv_compress == "underlying")
        sp.compression = itl::SearchSpace::Compression::UnderlyingSimple;
      else
        throw UsageError("--compress must be none | component | underlying");
      itl::Budget b;
      b.max_seconds = inv_budget > -2 ? inv_budget : default_budget_seconds();
      auto r = itl::inverse_search(p, inv_k, sp, b);
      json hosts = json::array();
      for (auto& h : r.hosts) hosts.push_back(graph_json(h));
      json out{{"k", r.k},
               {"status", r.status},
               {"best_value", r.best_value},
               {"hosts", hosts},
               {"nodes", r.nodes}};
      if (r.sunflower_core >= 0) out["sunflower_core"] = r.sunflower_core;
      emit(out, pretty);
      return r.status == "budget-exhausted" ? kExitBudget : kExitOk;
    }

    if (*cmd_con) {
      auto need = [&](size_t k) {
        if (con_params.size() != k)
          throw UsageError("construction '" + con_name + "' takes " + std::to_string(k) +
                           " parameter(s)");
      };
      auto iparam = [&](size_t i) {
        try {
          return std::stoi(con_params.at(i));
        } catch (const std::exception&) {
          throw UsageError("bad integer parameter");
        }
      };
      MultiHypergraph g;
      if (con_name == "pendant") {
        need(2);
        g = itl::pendant_graph(iparam(0), parse_int_list(con_params[1]));
      } else if (con_name == "gk") {
        need(1);
        g = itl::gk_graph(iparam(0));
      } else if (con_name == "two-cliques") {
        need(1);
        g = itl::two_cliques(iparam(0));
      } else if (con_name == "p1p2-host") {
        need(1);
        g = itl::p1p2_host(iparam(0));
      } else if (con_name == "dumbbell-multihost") {
        need(2);
        g = itl::dumbbell_multihost(iparam(0), iparam(1));
      } else if (con_name == "dumbbell-simplehost") {
        need(1);
        g = itl::dumbbell_simplehost(iparam(0));
      } else if (con_name == "nested-cliques") {
        need(1);
        g = itl::nested_cliques(parse_int_list(con_params[0]));
      } else if (con_name == "turan") {
        need(2);
        g = itl::turan_graph(iparam(0), iparam(1));
      } else if (con_name == "multistar") {
        need(1);
        g = itl::multistar(parse_int_list(con_params[0]));
      } else if (con_name == "oneuniform-host") {
        need(1);
        g = itl::one_uniform_host(parse_int_list(con_params[0]));
      } else {
        throw UsageError(
            "unknown construction '" + con_name +
            "' (pendant, gk, two-cliques, p1p2-host, dumbbell-multihost, "
            "dumbbell-simplehost, nested-cliques, turan, multistar, oneuniform-host)");
      }
      if (pretty)
        std::cout << itl::format_graph(g);
      else
        emit(graph_json(g), false);
      return kExitOk;
    }

    if (*cmd_ch) {
      auto d = parse_int_list(ch_seq);
      auto r = itl::c_constant(d);
      json out{{"c_H", itl::rat_str(r.c)},
               {"x", itl::rat_str(r.x)},
               {"j", itl::rat_str(r.j)},
               {"active", r.active}};
      if (ch_chain > 0) {
        auto rep = itl::reduction_chain_check(d, ch_chain);
        json chain{{"k", rep.k}, {"f1", rep.f1}, {"f3", rep.f3}, {"f4", itl::rat_str(rep.f4)}};
        if (rep.f2) chain["f2"] = *rep.f2;
        if (rep.estar) chain["estar"] = *rep.estar;
        out["chain"] = chain;
      }
      emit(out, pretty);
      return kExitOk;
    }

    if (*cmd_sun) {
      auto g = load_graph(sun_graph);
      auto core = itl::is_sunflower(g);
      json out{{"sunflower", core.has_value()}};
      if (core) out["core"] = core->to_vector();
      emit(out, pretty);
      return kExitOk;
    }

    if (*cmd_ctr) {
      auto g = load_graph(ctr_graph);
      itl::VertexSet is;
      for (int v : parse_int_list(ctr_set)) {
        if (v < 0 || v >= g.n) throw UsageError("vertex index out of range");
        is.add(v);
      }
      emit(graph_json(itl::contract(g, is)), pretty);
      return kExitOk;
    }

    if (*cmd_rho) {
      auto g = load_graph(rho_graph);
      Rational rho = itl::fractional_cover_number(g);
      json out{{"rho_star", itl::rat_str(rho)}};
      auto ge = itl::genupper_exponent(g);
      if (ge) out["genupper_exponent"] = itl::rat_str(*ge);
      emit(out, pretty);
      return kExitOk;
    }

    if (*cmd_ver) {
      if (ver_quick && ver_full) throw UsageError("--quick and --full are exclusive");
      auto results = itl::run_verification(!ver_quick);
      bool all = true;
      json checks = json::array();
      for (auto& r : results) {
        all = all && r.pass;
        checks.push_back(json{{"tag", r.tag}, {"pass", r.pass}, {"detail", r.detail}});
        if (pretty)
          std::cout << (r.pass ? "PASS " : "FAIL ") << r.tag << "  " << r.detail << "\n";
      }
      if (!pretty) emit(json{{"pass", all}, {"checks", checks}}, false);
      return all ? kExitOk : kExitVerifyFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
