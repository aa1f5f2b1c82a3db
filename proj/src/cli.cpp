#include <flowpart/cli.hpp>

#include <flowpart/analysis.hpp>
#include <flowpart/cluster.hpp>
#include <flowpart/clutter.hpp>
#include <flowpart/graph_ops.hpp>
#include <flowpart/idealness.hpp>
#include <flowpart/lehman.hpp>
#include <flowpart/limits.hpp>
#include <flowpart/rational.hpp>
#include <flowpart/signed_graph.hpp>
#include <flowpart/vertex_enum.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace flowpart {
namespace {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Envelope plumbing

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  std::ostringstream o;
  o << std::hex << std::setw(16) << std::setfill('0') << v;
  return o.str();
}

std::string read_all(std::istream& s) {
  std::ostringstream o;
  o << s.rdbuf();
  return o.str();
}

/// Reads the named file, or the fallback stream for "" / "-".
std::string load_source(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return read_all(in);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open " + path);
  return read_all(f);
}

// ---------------------------------------------------------------------------
// JSON views of the library types

ordered_json json_rat(const Rat& q) { return rat_to_string(q); }

ordered_json json_ratvec(const RatVec& x) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < x.ids.size(); ++i) {
    a.push_back({{"id", x.ids[i]}, {"value", rat_to_string(x.values[i])}});
  }
  return a;
}

ordered_json json_flow(const Flow& f) {
  return {{"edges", f.edge_ids}, {"negative", f.negative_edge_id}};
}

ordered_json json_clutter(const Clutter& c) {
  return {{"ground", c.ground()}, {"members", c.members()}};
}

ordered_json json_steps(const std::vector<MinorStep>& steps) {
  ordered_json a = ordered_json::array();
  for (const MinorStep& s : steps) {
    a.push_back({{"op", s.op == MinorOp::deletion ? "delete" : "contract"},
                 {"edge", s.edge_id}});
  }
  return a;
}

ordered_json json_edge_map(const std::vector<std::pair<int, int>>& edge_map) {
  ordered_json m = ordered_json::object();
  for (const auto& [from, to] : edge_map) m[std::to_string(from)] = to;
  return m;
}

std::string family_name(MinorFamily f) {
  switch (f) {
    case MinorFamily::odd_flow_star:
      return "odd-flow-star";
    case MinorFamily::odd_flow_circuit:
      return "odd-flow-circuit";
    case MinorFamily::flow_split_k5:
      return "flow-split-k5";
  }
  return "?";
}

ordered_json json_witness(const FamilyWitness& w) {
  ordered_json j;
  j["family"] = family_name(w.family);
  if (w.family != MinorFamily::flow_split_k5) j["k"] = w.k;
  j["operations"] = json_steps(w.operations);
  j["mapping"] = json_edge_map(w.edge_map);
  return j;
}

std::string screen_name(KnownFatCore s) {
  switch (s) {
    case KnownFatCore::none:
      return "none";
    case KnownFatCore::fano_f7:
      return "fano";
    case KnownFatCore::triangles_k5:
      return "triangles-k5";
    case KnownFatCore::blocker_triangles_k5:
      return "blocker-triangles-k5";
  }
  return "?";
}

ordered_json json_lehman(const LehmanReport& rep) {
  ordered_json j;
  j["mni"] = rep.mni;
  j["degenerate_projective_plane_order"] =
      rep.dpp_order ? ordered_json(*rep.dpp_order) : ordered_json(nullptr);
  j["n"] = rep.n;
  j["c"] = rep.c;
  j["b"] = rep.b;
  j["excess"] = rep.excess;
  j["clauses"] = {{"cores_have_n_members", rep.cores_have_n_members},
                  {"i", rep.clause_i},
                  {"ii", rep.clause_ii},
                  {"iii", rep.clause_iii},
                  {"iv", rep.clause_iv},
                  {"v", rep.clause_v},
                  {"unique_fractional_vertex", rep.unique_fractional_ok}};
  j["fractional_vertex"] = rep.unique_fractional_vertex
                               ? json_ratvec(*rep.unique_fractional_vertex)
                               : ordered_json(nullptr);
  j["pass"] = rep.all_pass;
  return j;
}

// ---------------------------------------------------------------------------
// Human-readable rendering of the same payload

std::string inline_value(const ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void pretty_block(std::ostream& out, const ordered_json& obj, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << pad << key << ":\n";
      pretty_block(out, value, indent + 2);
    } else if (value.is_array() && !value.empty() &&
               value.front().is_structured()) {
      out << pad << key << ":\n";
      for (const auto& item : value) {
        out << pad << "  - " << item.dump() << "\n";
      }
    } else {
      out << pad << key << ": " << inline_value(value) << "\n";
    }
  }
}

// ---------------------------------------------------------------------------
// Command wiring

struct Output {
  bool plain = false;      // transformer: text goes out verbatim, no envelope
  std::string text;        // plain payload
  ordered_json result;     // analyzer payload
  int exit_code = 0;
};

struct Session {
  Caps caps;
  std::int64_t deadline_ms = 0;  // 0 = none; reported in the envelope
  std::string format = "json";
  std::string graph_file;    // "" or "-" = stdin
  std::string clutter_file;  // "" or "-" = stdin for clutter commands
  std::istream* in = nullptr;

  std::string input_text;  // everything read, for the digest
  bool consumed_input = false;

  SignedGraph graph() {
    input_text = load_source(graph_file, *in);
    consumed_input = true;
    return parse_signed_graph(input_text).graph;
  }

  WeightedInstance weighted() {
    input_text = load_source(graph_file, *in);
    consumed_input = true;
    return WeightedInstance::from_parsed(parse_signed_graph(input_text));
  }

  Clutter clutter() {
    input_text = load_source(clutter_file, *in);
    consumed_input = true;
    return parse_clutter(input_text);
  }

  bool clutter_mode() const { return !clutter_file.empty(); }
};

std::vector<MinorStep> parse_ops(const std::string& spec) {
  std::vector<MinorStep> steps;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    MinorOp op;
    if (token[0] == 'd') {
      op = MinorOp::deletion;
    } else if (token[0] == 'c') {
      op = MinorOp::contraction;
    } else {
      throw std::invalid_argument("bad op '" + token +
                                  "': expected d<ID> or c<ID>");
    }
    std::size_t pos = 0;
    int id = std::stoi(token.substr(1), &pos);
    if (pos + 1 != token.size()) {
      throw std::invalid_argument("bad op '" + token + "'");
    }
    steps.push_back({op, id});
  }
  return steps;
}

Output cmd_flows(Session& s) {
  SignedGraph g = s.graph();
  std::vector<Flow> flows = enumerate_flows(g, s.caps);
  Output o;
  o.result["count"] = flows.size();
  ordered_json a = ordered_json::array();
  for (const Flow& f : flows) a.push_back(json_flow(f));
  o.result["flows"] = a;
  return o;
}

Output cmd_balance(Session& s) {
  SignedGraph g = s.graph();
  Output o;
  o.result["balanced"] = is_balanced(g);
  o.result["weakly_balanced"] = is_weakly_balanced(g);
  return o;
}

Output cmd_solve(Session& s) {
  WeightedInstance inst = s.weighted();
  ExactCcResult r = cc_exact(inst, s.caps);
  Output o;
  o.result["value"] = json_rat(r.value);
  o.result["partition"] = r.partition.block_of;
  o.result["multicut"] = multicut_of(r.partition, inst.graph).edge_ids;
  o.result["gap"] = json_rat(r.gap);
  return o;
}

Output cmd_lp(Session& s) {
  WeightedInstance inst = s.weighted();
  CycleLpResult r = cycle_lp(inst, s.caps);
  Output o;
  o.result["value"] = json_rat(r.value);
  o.result["x"] = json_ratvec(r.x);
  ordered_json a = ordered_json::array();
  for (const Flow& f : r.active_flows) a.push_back(json_flow(f));
  o.result["active_flows"] = a;
  return o;
}

Output cmd_partitionable(Session& s) {
  SignedGraph g = s.graph();
  IdealnessResult r = is_flow_partitionable(g, s.caps);
  Output o;
  o.result["partitionable"] = r.ideal;
  if (r.fractional_vertex) {
    o.result["fractional_vertex"] = json_ratvec(*r.fractional_vertex);
  }
  return o;
}

Output cmd_ideal(Session& s) {
  IdealnessResult r = s.clutter_mode() ? is_ideal(s.clutter(), s.caps)
                                       : is_flow_partitionable(s.graph(), s.caps);
  Output o;
  o.result["ideal"] = r.ideal;
  if (r.fractional_vertex) {
    o.result["fractional_vertex"] = json_ratvec(*r.fractional_vertex);
  }
  return o;
}

Output cmd_mni(Session& s) {
  Output o;
  o.result["mni"] = is_mni(s.clutter(), s.caps);
  return o;
}

Output cmd_weakly_mni(Session& s) {
  SignedGraph g = s.graph();
  WeaklyMniResult r = is_weakly_mni(g, s.caps);
  Output o;
  o.result["weakly_mni"] = r.weakly_mni;
  if (r.fractional_vertex) {
    o.result["fractional_vertex"] = json_ratvec(*r.fractional_vertex);
  }
  o.result["minors_checked"] = r.minors.size();
  return o;
}

Output cmd_lehman(Session& s) {
  Output o;
  o.result = json_lehman(lehman_verify(s.clutter(), s.caps));
  return o;
}

Output cmd_blocker(Session& s) {
  BlockerResult r = blocker(s.clutter(), s.caps);
  if (r.no_cover_needed) {
    throw std::invalid_argument(
        "blocker of a memberless clutter is not representable (no cover "
        "needed)");
  }
  Output o;
  o.plain = true;
  o.text = format_clutter(r.clutter);
  return o;
}

Output cmd_minor(Session& s, const std::string& ops_spec) {
  std::vector<MinorStep> steps = parse_ops(ops_spec);
  Output o;
  o.plain = true;
  if (s.clutter_mode()) {
    Clutter c = s.clutter();
    for (const MinorStep& st : steps) {
      c = st.op == MinorOp::deletion ? delete_element(c, st.edge_id)
                                     : contract_element(c, st.edge_id).clutter;
    }
    o.text = format_clutter(c);
  } else {
    SignedGraph g = s.graph();
    for (const MinorStep& st : steps) {
      g = st.op == MinorOp::deletion ? delete_edge(g, st.edge_id)
                                     : contract_positive(g, st.edge_id);
    }
    o.text = format_signed_graph(g);
  }
  return o;
}

Output cmd_detect(Session& s, const std::string& family) {
  SignedGraph g = s.graph();
  bool found = false;
  bool inconclusive = false;
  ordered_json families = ordered_json::object();

  auto run_one = [&](const std::string& name) {
    ordered_json entry;
    try {
      std::optional<FamilyWitness> w;
      if (name == "star") {
        w = detect_odd_flow_star(g, s.caps);
      } else if (name == "circuit") {
        w = detect_odd_flow_circuit(g, s.caps);
      } else {
        auto sm = strong_minor_reachable(g, flow_split_k5(), s.caps);
        if (sm) {
          FamilyWitness fw;
          fw.family = MinorFamily::flow_split_k5;
          fw.operations = sm->steps;
          fw.vertex_map = sm->iso.vertex_map;
          fw.edge_map = sm->iso.edge_map;
          w = std::move(fw);
        }
      }
      entry["found"] = w.has_value();
      if (w) {
        entry["witness"] = json_witness(*w);
        found = true;
      }
    } catch (const SizeLimitError& e) {
      entry["inconclusive"] = true;
      entry["reason"] = e.what();
      inconclusive = true;
    }
    families[name] = entry;
  };

  if (family == "all") {
    run_one("star");
    run_one("circuit");
    run_one("split-k5");
  } else {
    run_one(family);
  }

  Output o;
  o.result["families"] = families;
  o.result["found"] = found;
  if (!found && inconclusive) o.exit_code = 3;
  return o;
}

Output cmd_gen(Session& s, const std::string& family,
               const std::vector<int>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n) {
      throw std::invalid_argument("gen " + family + " expects " +
                                  std::to_string(n) + " parameter(s), got " +
                                  std::to_string(params.size()));
    }
  };
  SignedGraph g = [&] {
    if (family == "flow-star") {
      need(1);
      return flow_star(params[0]);
    }
    if (family == "flow-circuit") {
      need(1);
      return flow_circuit(params[0]);
    }
    if (family == "flow-split-k5") {
      need(0);
      return flow_split_k5();
    }
    if (family == "circulant") {
      need(2);
      return signed_circulant(params[0], params[1]);
    }
    throw std::invalid_argument("unknown family '" + family + "'");
  }();
  s.input_text = family;
  for (int p : params) s.input_text += " " + std::to_string(p);
  Output o;
  o.plain = true;
  o.text = format_signed_graph(g);
  return o;
}

Output cmd_terminal_paths(Session& s) {
  SignedGraph g = s.graph();
  Output o;
  o.plain = true;
  o.text = format_clutter(terminal_path_clutter(g, s.caps));
  return o;
}

Output cmd_fatcore(Session& s) {
  SignedGraph g = s.graph();
  FatCoreReport r = fat_core_pipeline(g, s.caps);
  Output o;
  o.result["vertex"] = json_ratvec(r.vertex);
  o.result["contracted"] = r.contracted;
  o.result["contracted_all_negatives"] = r.contracted_all_negatives;
  o.result["minor"] = json_clutter(r.minor);
  o.result["constants"] = json_lehman(r.constants);
  o.result["fat"] = r.fat ? ordered_json(*r.fat) : ordered_json(nullptr);
  o.result["screen"] = screen_name(r.screen);
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{
      "flowpart: exact rational analysis of signed graphs, their flow "
      "clutters, and correlation clustering"};
  app.require_subcommand(1);
  app.fallthrough();

  Session session;
  session.in = &in;

  app.add_option("--format", session.format, "output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  app.add_flag_callback(
      "--json", [&session] { session.format = "json"; },
      "shorthand for --format json");
  app.add_flag_callback(
      "--pretty", [&session] { session.format = "pretty"; },
      "shorthand for --format pretty");
  app.add_option("--graph", session.graph_file,
                 "graph file ('-' or omitted: stdin)");
  app.add_option("--clutter", session.clutter_file,
                 "clutter file ('-': stdin); selects clutter input where "
                 "both kinds are accepted");
  app.add_option("--max-ground", session.caps.max_ground,
                 "vertex enumeration ground size cap");
  app.add_option("--max-minors", session.caps.max_minor_states,
                 "strong-minor search state cap");
  app.add_option("--deadline-ms", session.deadline_ms,
                 "wall-clock budget in ms, 0 = unlimited; exceeding it "
                 "exits 3");

  std::string minor_ops;
  std::string detect_family = "all";
  std::string gen_family;
  std::vector<int> gen_params;

  app.add_subcommand("flows", "list every flow of the graph");
  app.add_subcommand("balance", "balance and weak balance of the graph");
  app.add_subcommand("solve",
                     "exact minimum-error clustering (weights honored)");
  app.add_subcommand("lp", "exact optimum of the flow covering relaxation");
  app.add_subcommand("partitionable",
                     "is the flow covering polyhedron integral?");
  app.add_subcommand("ideal",
                     "idealness of a clutter (--clutter) or of the graph's "
                     "flow clutter");
  app.add_subcommand("mni", "minimal non-idealness of a clutter");
  app.add_subcommand("weakly-mni",
                     "is the graph's flow clutter weakly minimally "
                     "non-ideal?");
  app.add_subcommand("lehman", "core structure constants of an MNI clutter");
  app.add_subcommand("blocker", "blocker of a clutter (clutter text out)");
  CLI::App* minor_cmd = app.add_subcommand(
      "minor", "apply delete/contract steps (graph or clutter text out)");
  minor_cmd->add_option("--ops", minor_ops,
                        "comma-separated steps, e.g. d0,c3,d5")
      ->required();
  CLI::App* detect_cmd = app.add_subcommand(
      "detect", "search for forbidden strong minors in the graph");
  detect_cmd->add_option("family", detect_family, "star|circuit|split-k5|all")
      ->check(CLI::IsMember({"star", "circuit", "split-k5", "all"}));
  CLI::App* gen_cmd =
      app.add_subcommand("gen", "emit a stock instance (graph text out)");
  gen_cmd->add_option("family", gen_family,
                      "flow-star|flow-circuit|flow-split-k5|circulant")
      ->required();
  gen_cmd->add_option("params", gen_params, "family parameters");
  app.add_subcommand("terminal-paths",
                     "flow clutter with negatives contracted (clutter text "
                     "out)");
  app.add_subcommand("fatcore",
                     "contraction-to-MNI pipeline on a weakly MNI graph");

  std::vector<const char*> argv;
  argv.push_back("flowpart");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  if (session.deadline_ms > 0) {
    session.caps = session.caps.with_deadline_ms(session.deadline_ms);
  }

  Output output;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (command == "flows") {
      output = cmd_flows(session);
    } else if (command == "balance") {
      output = cmd_balance(session);
    } else if (command == "solve") {
      output = cmd_solve(session);
    } else if (command == "lp") {
      output = cmd_lp(session);
    } else if (command == "partitionable") {
      output = cmd_partitionable(session);
    } else if (command == "ideal") {
      output = cmd_ideal(session);
    } else if (command == "mni") {
      output = cmd_mni(session);
    } else if (command == "weakly-mni") {
      output = cmd_weakly_mni(session);
    } else if (command == "lehman") {
      output = cmd_lehman(session);
    } else if (command == "blocker") {
      output = cmd_blocker(session);
    } else if (command == "minor") {
      output = cmd_minor(session, minor_ops);
    } else if (command == "detect") {
      output = cmd_detect(session, detect_family);
    } else if (command == "gen") {
      output = cmd_gen(session, gen_family, gen_params);
    } else if (command == "terminal-paths") {
      output = cmd_terminal_paths(session);
    } else if (command == "fatcore") {
      output = cmd_fatcore(session);
    } else {
      err << "error: unknown command\n";
      return 2;
    }
  } catch (const FalsificationError& e) {
    err << "falsification: " << e.what() << "\n" << e.bundle;
    return 4;
  } catch (const SizeLimitError& e) {
    err << "inconclusive: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  const auto stop = std::chrono::steady_clock::now();
  const double wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  if (output.plain) {
    out << output.text;
    return output.exit_code;
  }

  if (session.format == "json") {
    ordered_json envelope;
    envelope["command"] = command;
    envelope["input_digest"] = hex64(fnv1a(session.input_text));
    envelope["wall_ms"] = wall_ms;
    envelope["caps"] = {
        {"max_ground", session.caps.max_ground},
        {"max_minor_states", session.caps.max_minor_states},
        {"deadline_ms", session.deadline_ms > 0
                            ? ordered_json(session.deadline_ms)
                            : ordered_json(nullptr)}};
    envelope["result"] = output.result;
    out << envelope.dump(2) << "\n";
  } else {
    out << "command: " << command << "\n";
    pretty_block(out, output.result, 0);
    out << "# digest=" << hex64(fnv1a(session.input_text)) << " wall_ms="
        << std::fixed << std::setprecision(2) << wall_ms << "\n";
  }
  return output.exit_code;
}

}  // namespace flowpart
