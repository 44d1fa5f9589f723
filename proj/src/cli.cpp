#include "qts/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "qts/augmentation.hpp"
#include "qts/finite_topology.hpp"
#include "qts/graph_spaces.hpp"
#include "qts/heyting.hpp"
#include "qts/quantum.hpp"
#include "qts/serialization.hpp"
#include "qts/tensor_network.hpp"

namespace qts::cli {

namespace {

using io::json;

// An error tied to one input file.
struct InputError {
  std::string code;
  std::string message;
  std::string path;
};

struct Globals {
  std::uint64_t seed = 0;
  std::optional<double> tolerance;
  std::string dot;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, const Globals& g) : in_(in), out_(out), g_(g) {}

  template <typename T>
  T load(const std::string& path, const std::function<T(const json&)>& parse) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream f(path);
      if (!f) throw InputError{"file_not_found", "cannot open '" + path + "'", path};
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
      return parse(json::parse(text));
    } catch (const json::exception& e) {
      throw InputError{"schema", e.what(), path};
    } catch (const Error& e) {
      throw InputError{e.code(), e.what(), path};
    }
  }

  double tolerance() const { return g_.tolerance.value_or(kDecisionTolerance); }
  std::uint64_t seed() const { return g_.seed; }

  void write_dot(const std::string& dot) const {
    if (g_.dot.empty()) return;
    std::ofstream f(g_.dot);
    if (!f) throw InputError{"file_not_writable", "cannot write '" + g_.dot + "'", g_.dot};
    f << dot;
  }

  void emit(const std::string& command, json result) const {
    json meta = {{"command", command}, {"seed", g_.seed}, {"tolerance", tolerance()}};
    if (!g_.dot.empty()) meta["dot"] = g_.dot;
    result["meta"] = std::move(meta);
    out_ << result.dump(2) << '\n';
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  const Globals& g_;
};

json pairs_to_json(const FiniteSpace& s, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  json out = json::array();
  for (auto [a, b] : pairs) out.push_back(io::set_to_json(s, s.set_of({s.name(a), s.name(b)})));
  return out;
}

json components_to_json(const FiniteSpace& s) {
  json out = json::array();
  for (const auto& c : connected_components(s)) out.push_back(io::set_to_json(s, c));
  return out;
}

std::vector<std::string> link_labels(const AugmentedSpace& a) {
  std::vector<std::string> out;
  for (const auto& l : a.links()) out.push_back(l.label);
  return out;
}

json measurement_to_json(const MeasurementResult& r, double p_other) {
  return {{"outcome", r.outcome},
          {"probability", r.probability},
          {"probabilities", r.outcome == 0 ? json::array({r.probability, p_other}) : json::array({p_other, r.probability})},
          {"residual", io::state_to_json(r.residual)}};
}

void print_error(std::ostream& out, const std::string& code, const std::string& message, const json& path) {
  out << json{{"code", code}, {"message", message}, {"path", path}}.dump(2) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite topological spaces, entanglement augmentation and tensor-network contraction"};
  app.require_subcommand(1);
  Globals g;
  double tolerance = 0.0;
  app.add_option("--seed", g.seed, "Seed for sampled measurements and law checks");
  auto* tol_opt = app.add_option("--tolerance", tolerance, "Override the decision tolerance")->check(CLI::PositiveNumber);
  app.add_option("--dot", g.dot, "Write a Graphviz rendering to this path");

  // topo
  auto* topo = app.add_subcommand("topo", "Finite spaces from graphs and subbases")->require_subcommand(1);
  topo->fallthrough();
  std::string graph_path, space_path, mode = "top", dom_path, cod_path, map_path;
  std::size_t limit = kDefaultOpenLimit;

  auto* build = topo->add_subcommand("build", "Build Top(G), the face model of G, or a space from a subbasis");
  auto* build_src = build->add_option("--graph", graph_path, "Graph JSON");
  build->add_option("--space", space_path, "Space JSON")->excludes(build_src);
  build->add_option("--mode", mode, "top | face")->check(CLI::IsMember({"top", "face"}));

  auto* connected = topo->add_subcommand("connected", "Connectivity, components and non-Hausdorff pairs");
  auto* conn_src = connected->add_option("--graph", graph_path, "Graph JSON");
  connected->add_option("--space", space_path, "Space JSON")->excludes(conn_src);
  connected->add_option("--mode", mode, "top | face")->check(CLI::IsMember({"top", "face"}));

  auto* heyting = topo->add_subcommand("heyting", "Negation table, Boolean test and law check");
  heyting->add_option("--space", space_path, "Space JSON")->required();
  heyting->add_option("--limit", limit, "Enumerate at most this many opens before sampling");

  auto* continuity = topo->add_subcommand("continuity", "Continuity of a point map");
  auto* cont_graph = continuity->add_option("--graph", graph_path, "Check the identity Top(G) -> face model of G");
  continuity->add_option("--dom", dom_path, "Domain space JSON")->excludes(cont_graph);
  continuity->add_option("--cod", cod_path, "Codomain space JSON")->excludes(cont_graph);
  continuity->add_option("--map", map_path, "Point map JSON (identity when omitted)");

  // augment / swap
  std::string links_path, ab, bc, new_label, m_path;
  auto* aug = app.add_subcommand("augment", "Weld entanglement links into a space");
  aug->add_option("--space", space_path, "Base space JSON")->required();
  aug->add_option("--links", links_path, "Links JSON")->required();

  auto* swap = app.add_subcommand("swap", "Entanglement swapping on an augmented space");
  swap->add_option("--space", space_path, "Base space JSON")->required();
  swap->add_option("--links", links_path, "Links JSON")->required();
  swap->add_option("--ab", ab, "Label of the A-B link")->required();
  swap->add_option("--bc", bc, "Label of the B-C link")->required();
  swap->add_option("--new", new_label, "Label of the resulting A-C link")->required();
  swap->add_option("--m", m_path, "Measurement matrix JSON (identity when omitted)");

  // quantum
  auto* quantum = app.add_subcommand("quantum", "Teleportation, swapping and measurement")->require_subcommand(1);
  quantum->fallthrough();
  std::string psi_path, e_path, e2_path, state_path;
  std::size_t qubit = 0;
  int outcome = -1;
  auto* teleport_cmd = quantum->add_subcommand("teleport", "psi'_k = psi_i M_ij E_jk");
  teleport_cmd->add_option("--psi", psi_path, "Single-qubit state JSON")->required();
  teleport_cmd->add_option("--m", m_path, "Measurement matrix JSON")->required();
  teleport_cmd->add_option("--e", e_path, "Link state matrix JSON")->required();

  auto* qswap = quantum->add_subcommand("swap", "E * M * E'");
  qswap->add_option("--e", e_path, "A-B link matrix JSON")->required();
  qswap->add_option("--m", m_path, "Measurement matrix JSON")->required();
  qswap->add_option("--e2", e2_path, "B-C link matrix JSON")->required();

  auto* measure = quantum->add_subcommand("measure", "Standard-basis measurement of one qubit");
  measure->add_option("--state", state_path, "State JSON")->required();
  measure->add_option("--qubit", qubit, "Qubit index (0 = leftmost factor)")->required();
  measure->add_option("--outcome", outcome, "Forced outcome; sampled with --seed when omitted")
      ->check(CLI::Range(0, 1));

  // net
  auto* net = app.add_subcommand("net", "Tensor-network contraction")->require_subcommand(1);
  net->fallthrough();
  std::string net_path, node, strategy = "greedy";
  auto* contract = net->add_subcommand("contract", "Contract a network to its external tensor");
  contract->add_option("--net", net_path, "Network JSON")->required();
  contract->add_option("--strategy", strategy, "greedy | brute")->check(CLI::IsMember({"greedy", "brute"}));
  auto* refine = net->add_subcommand("refine", "Split a projector node P into P P");
  refine->add_option("--net", net_path, "Network JSON")->required();
  refine->add_option("--node", node, "Projector node id")->required();

  std::vector<std::string> storage{"qts"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    print_error(out, "usage", e.what(), nullptr);
    return kExitInvalid;
  }
  if (*tol_opt) g.tolerance = tolerance;

  Session s(in, out, g);
  auto load_space = [&](const std::string& p) { return s.load<FiniteSpace>(p, io::space_from_json); };
  auto load_graph = [&](const std::string& p) { return s.load<Graph>(p, io::graph_from_json); };
  auto load_matrix = [&](const std::string& p) { return s.load<TwoQubitMatrix>(p, io::matrix_from_json); };
  auto load_net = [&](const std::string& p) { return s.load<TensorNetwork>(p, io::network_from_json); };
  auto space_from_args = [&]() {
    if (!graph_path.empty()) {
      Graph gr = load_graph(graph_path);
      return mode == "face" ? face_model(gr) : graph_topology(gr);
    }
    if (space_path.empty()) throw InputError{"usage", "one of --graph or --space is required", ""};
    return load_space(space_path);
  };

  try {
    if (build->parsed()) {
      FiniteSpace sp = space_from_args();
      s.write_dot(io::space_to_dot(sp));
      s.emit("topo build", io::space_to_json(sp));
    } else if (connected->parsed()) {
      FiniteSpace sp = space_from_args();
      s.write_dot(io::space_to_dot(sp));
      s.emit("topo connected", {{"connected", is_connected(sp)},
                                {"components", components_to_json(sp)},
                                {"non_hausdorff_pairs", pairs_to_json(sp, non_hausdorff_pairs(sp))}});
    } else if (heyting->parsed()) {
      HeytingAlgebra h(load_space(space_path));
      const FiniteSpace& sp = h.space();
      json table = json::array();
      std::set<PointSet> seen;
      for (const auto& m : sp.min_opens()) {
        if (!seen.insert(m).second) continue;
        table.push_back({{"open", io::set_to_json(sp, m)}, {"negation", io::set_to_json(sp, h.negation(m))}});
      }
      const HeytingReport rep = verify_heyting_laws(h, limit, s.seed());
      s.emit("topo heyting", {{"is_boolean", h.is_boolean()},
                              {"negations", std::move(table)},
                              {"laws",
                               {{"passed", rep.passed()},
                                {"exhaustive", rep.exhaustive},
                                {"adjunction_exhaustive", rep.adjunction_exhaustive},
                                {"opens_checked", rep.opens_checked},
                                {"triples_checked", rep.triples_checked},
                                {"counterexamples", rep.counterexamples}}}});
    } else if (continuity->parsed()) {
      FiniteSpace dom, cod;
      if (!graph_path.empty()) {
        Graph gr = load_graph(graph_path);
        dom = graph_topology(gr);
        cod = face_model(gr);
      } else {
        if (dom_path.empty() || cod_path.empty()) {
          throw InputError{"usage", "continuity needs --graph or both --dom and --cod", ""};
        }
        dom = load_space(dom_path);
        cod = load_space(cod_path);
      }
      PointMap f = map_path.empty() ? PointMap::identity(dom) : s.load<PointMap>(map_path, io::point_map_from_json);
      const auto r = is_continuous(f, dom, cod);
      json res = {{"continuous", r.continuous}, {"witness", nullptr}, {"preimage", nullptr}};
      if (r.witness) {
        res["witness"] = io::set_to_json(cod, *r.witness);
        res["preimage"] = io::set_to_json(dom, *r.preimage);
      }
      s.emit("topo continuity", std::move(res));
    } else if (aug->parsed()) {
      FiniteSpace base = load_space(space_path);
      auto links = s.load<std::vector<EntanglementLink>>(links_path, io::links_from_json);
      AugmentedSpace a = augment(base, std::move(links));
      s.write_dot(io::space_to_dot(a.space(), link_labels(a)));
      json res = io::augmented_to_json(a);
      res["connected"] = is_connected(a.space());
      s.emit("augment", std::move(res));
    } else if (swap->parsed()) {
      FiniteSpace base = load_space(space_path);
      auto links = s.load<std::vector<EntanglementLink>>(links_path, io::links_from_json);
      std::optional<TwoQubitMatrix> m;
      if (!m_path.empty()) m = load_matrix(m_path);
      AugmentedSpace a = swap_links(augment(base, std::move(links)), ab, bc, new_label, m);
      s.write_dot(io::space_to_dot(a.space(), link_labels(a)));
      json res = io::augmented_to_json(a);
      res["components"] = components_to_json(a.space());
      s.emit("swap", std::move(res));
    } else if (teleport_cmd->parsed()) {
      PureState psi = s.load<PureState>(psi_path, io::state_from_json);
      const auto r = teleport(psi, load_matrix(m_path), load_matrix(e_path));
      s.emit("quantum teleport", {{"state", io::state_to_json(r.state)}, {"scale", r.scale}});
    } else if (qswap->parsed()) {
      const TwoQubitMatrix res = entanglement_swap(load_matrix(e_path), load_matrix(m_path), load_matrix(e2_path));
      json j = {{"matrix", io::matrix_to_json(res)}, {"zero", res.norm() < kZeroNorm}, {"entangled", false}};
      if (res.norm() >= kZeroNorm) {
        const auto st = matrix_to_state(res);
        j["state"] = io::state_to_json(st.state);
        j["scale"] = st.scale;
        j["entangled"] = is_entangled(st.state, s.tolerance());
      }
      s.emit("quantum swap", std::move(j));
    } else if (measure->parsed()) {
      PureState st = s.load<PureState>(state_path, io::state_from_json);
      MeasurementResult r = [&] {
        if (outcome >= 0) return measure_qubit(st, qubit, outcome);
        std::mt19937_64 rng(s.seed());
        return measure_qubit(st, qubit, rng);
      }();
      json j = measurement_to_json(r, 1.0 - r.probability);
      j["residual_product"] = r.residual.num_qubits() < 2 || schmidt_rank(r.residual, {0}, s.tolerance()) == 1;
      s.emit("quantum measure", std::move(j));
    } else if (contract->parsed()) {
      TensorNetwork nw = load_net(net_path);
      json j;
      if (strategy == "brute") {
        j["tensor"] = io::tensor_to_json(contract_full(nw));
      } else {
        const ContractionPlan plan = greedy_order(nw);
        json steps = json::array();
        for (const auto& st : plan) steps.push_back({st.keep, st.absorb});
        j["plan"] = std::move(steps);
        j["tensor"] = io::tensor_to_json(contract_ordered(nw, plan));
      }
      s.emit("net contract", std::move(j));
    } else if (refine->parsed()) {
      TensorNetwork nw = load_net(net_path);
      s.emit("net refine", io::network_to_json(projector_refine(nw, node, s.tolerance())));
    }
  } catch (const InputError& e) {
    print_error(out, e.code, e.message, e.path.empty() ? json(nullptr) : json(e.path));
    return kExitInvalid;
  } catch (const Error& e) {
    print_error(out, e.code(), e.what(), nullptr);
    return kExitInvalid;
  }
  return kExitOk;
}

}  // namespace qts::cli
