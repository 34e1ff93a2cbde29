// Command-line front end: predicates, factors, hamilton cycles, partition
// witnesses, matrix generators, and the conjecture verification pipeline.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "squad/cycle_factor.hpp"
#include "squad/digraph.hpp"
#include "squad/ffactor.hpp"
#include "squad/graph_io.hpp"
#include "squad/matrix.hpp"
#include "squad/verifier.hpp"

namespace {

using namespace squad;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitHypothesis = 4;

struct LoadedInput {
  std::variant<Digraph, UGraph> graph;
  bool from_matrix = false;
  bool unitary = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LoadedInput load_input(const std::string& path, double tol) {
  std::string text = read_file(path);
  std::istringstream probe(text);
  std::string tok;
  while (probe >> tok && tok[0] == '#') probe.ignore(1 << 20, '\n');
  if (tok == "matrix") {
    ComplexMatrix m = parse_matrix(text);
    return {digraph_of_matrix(m, tol), true, is_unitary(m, tol)};
  }
  LoadedInput li{parse_graph_file(text)};
  return li;
}

std::string set_str(VertexSet s) {
  std::string out = "{";
  for (VertexSet m = s; m; m &= m - 1) {
    out += std::to_string(first_vertex(m));
    if (m & (m - 1)) out += ",";
  }
  return out + "}";
}

std::string cycle_str(const std::vector<int>& cyc) {
  std::string out;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(cyc[i]);
  }
  return out;
}

int cmd_check(const std::string& path, double tol) {
  LoadedInput in = load_input(path, tol);
  bool squad_ok;
  if (auto* d = std::get_if<Digraph>(&in.graph)) {
    if (in.from_matrix)
      std::cout << "unitary(tol=" << tol << "): " << std::boolalpha
                << in.unitary << "\n";
    squad_ok = is_s_quadrangular(*d);
    std::cout << "digraph n=" << d->n() << " arcs=" << d->arc_count() << "\n"
              << std::boolalpha                            //
              << "strong: " << is_strong(*d) << "\n"       //
              << "s-quadrangular: " << squad_ok << "\n"    //
              << "max-semidegree: " << max_semidegree(*d) << "\n"
              << "eulerian: " << is_eulerian(*d) << "\n";
  } else {
    const UGraph& g = std::get<UGraph>(in.graph);
    squad_ok = is_s_quadrangular(g);
    bool even_degrees = true;
    for (int v = 0; v < g.n(); ++v)
      if (g.degree(v) & 1) even_degrees = false;
    std::cout << "graph n=" << g.n() << " edges=" << g.edge_count() << "\n"
              << std::boolalpha                                 //
              << "connected: " << is_connected(g) << "\n"       //
              << "s-quadrangular: " << squad_ok << "\n"         //
              << "max-degree: " << max_degree(g) << "\n"
              << "eulerian: " << (is_connected(g) && even_degrees) << "\n";
  }
  return squad_ok ? kExitOk : kExitPropertyFails;
}

int cmd_factor(const std::string& path, double tol) {
  LoadedInput in = load_input(path, tol);
  if (auto* d = std::get_if<Digraph>(&in.graph)) {
    FactorResult res = find_cycle_factor(*d);
    if (auto* f = std::get_if<CycleFactor>(&res)) {
      std::cout << "cycle factor with " << f->cycle_count() << " cycle(s)\n";
      for (const auto& cyc : f->cycles)
        std::cout << "  cycle: " << cycle_str(cyc) << "\n";
      return kExitOk;
    }
    const auto& hv = std::get<HallViolator>(res);
    std::cout << "no cycle factor; hall violator (side="
              << (hv.side == Dir::out ? "out" : "in") << "): " << set_str(hv.set)
              << "\n";
    return kExitPropertyFails;
  }
  const UGraph& g = std::get<UGraph>(in.graph);
  if (auto tf = find_two_factor(g)) {
    std::cout << "2-factor:";
    for (auto [u, v] : *tf) std::cout << " " << u << "-" << v;
    std::cout << "\n";
    return kExitOk;
  }
  std::cout << "no 2-factor";
  if (g.n() <= 14) {
    auto tv = tutte_check(g, FFactorSpec::uniform(g.n(), 2));
    if (tv)
      std::cout << "; tutte violator: S=" << set_str(tv->s)
                << " T=" << set_str(tv->t) << " lhs=" << tv->lhs
                << " rhs=" << tv->rhs;
  }
  std::cout << "\n";
  return kExitPropertyFails;
}

int cmd_hamilton(const std::string& path, const std::string& method,
                 double tol) {
  LoadedInput in = load_input(path, tol);
  if (method == "exact") {
    std::optional<std::vector<int>> cyc;
    if (auto* d = std::get_if<Digraph>(&in.graph))
      cyc = hamilton_cycle(*d);
    else
      cyc = hamilton_cycle_graph(std::get<UGraph>(in.graph));
    if (cyc) {
      std::cout << "hamilton cycle: " << cycle_str(*cyc) << "\n";
      return kExitOk;
    }
    std::cout << "no hamilton cycle\n";
    return kExitPropertyFails;
  }

  // factor-improvement method; undirected inputs run on the biorientation
  Digraph d = std::holds_alternative<Digraph>(in.graph)
                  ? std::get<Digraph>(in.graph)
                  : complete_biorientation(std::get<UGraph>(in.graph));
  FactorHamiltonResult res = hamilton_via_factor(d);
  if (auto* cyc = std::get_if<std::vector<int>>(&res)) {
    std::cout << "hamilton cycle: " << cycle_str(*cyc) << "\n";
    return kExitOk;
  }
  std::cout << "hypothesis violation: " << std::get<HypothesisViolation>(res).detail
            << "\n";
  return kExitHypothesis;
}

int cmd_partition(const std::string& path) {
  std::string text = read_file(path);
  ParsedGraph pg = parse_graph_file(text);
  if (!std::holds_alternative<UGraph>(pg))
    throw std::invalid_argument("partition requires an undirected graph file");
  const UGraph& g = std::get<UGraph>(pg);

  PartitionResult res = build_partition(g);
  if (auto* fail = std::get_if<PartitionFailure>(&res)) {
    switch (*fail) {
      case PartitionFailure::capacity:
        std::cout << "capacity: partition scan capped at n = 14\n";
        return kExitCapacity;
      case PartitionFailure::min_degree:
        std::cout << "hypothesis violation: minimum degree below 2\n";
        return kExitHypothesis;
      case PartitionFailure::has_two_factor:
        std::cout << "hypothesis violation: graph has a 2-factor\n";
        return kExitHypothesis;
    }
  }
  const auto& p = std::get<TuttePartition>(res);
  std::cout << "S=" << set_str(p.s) << " T=" << set_str(p.t)
            << " O=" << set_str(p.o) << " R=" << set_str(p.r) << "\n"
            << "w=" << p.w << " oc=" << p.oc << " e(T,O)=" << p.e_to << "\n";
  auto viol = verify_partition(g, p);
  static const char* names[] = {
      "T independent",
      "e(R, O u T) = 0",
      "components of G<O> send odd edge counts into T",
      "no T vertex doubles into one component of G<O>",
      "every O vertex sends at most one edge into T",
      "no O-T edge with e(t,S)=0 and e(o,O)=0",
      "|T|-|S|-(e(T,O)-oc)/2 > 0",
  };
  for (int k = 1; k <= 7; ++k) {
    auto hit = std::find_if(viol.begin(), viol.end(),
                            [&](const auto& v) { return v.property == k; });
    std::cout << "(" << k << ") " << names[k - 1] << ": "
              << (hit == viol.end() ? "ok" : "VIOLATED - " + hit->witness)
              << "\n";
  }
  return viol.empty() ? kExitOk : kExitPropertyFails;
}

int cmd_gen(const std::string& kind, int size, std::uint64_t seed,
            bool have_seed, const std::string& emit, double tol) {
  ComplexMatrix m(1);
  if (kind == "dft") {
    m = dft_matrix(size);
  } else if (kind == "sylvester") {
    if (size < 1 || (size & (size - 1)))
      throw std::invalid_argument("sylvester size must be a power of two");
    m = sylvester_matrix(std::countr_zero(static_cast<unsigned>(size)));
  } else if (kind == "weighing43") {
    if (size != 0 && size != 4)
      throw std::invalid_argument("weighing43 has fixed size 4");
    m = weighing43_matrix();
  } else if (kind == "permutation") {
    std::vector<int> p(size);
    if (have_seed) {
      for (int i = 0; i < size; ++i) p[i] = i;
      std::mt19937_64 rng(seed);
      for (int i = size - 1; i > 0; --i)
        std::swap(p[i], p[rng() % (i + 1)]);
    } else {
      for (int i = 0; i < size; ++i) p[i] = (i + 1) % size;  // cyclic shift
    }
    m = permutation_matrix(p);
  } else if (kind == "random") {
    m = random_unitary(size, seed);
  } else {
    throw std::invalid_argument("unknown --kind '" + kind + "'");
  }

  if (emit == "matrix")
    std::cout << write_matrix(m);
  else
    std::cout << write_graph_file(digraph_of_matrix(m, tol));
  return kExitOk;
}

int cmd_verify(const std::string& mode, int n, bool loops,
               std::uint64_t sample, bool have_sample, std::uint64_t seed,
               int threads, const std::string& json_path) {
  EnumSpace space{mode == "graph" ? SpaceMode::graph : SpaceMode::digraph, n,
                  loops};
  VerificationReport rep = have_sample
                               ? sample_verify(space, sample, seed, threads)
                               : verify_conjecture(space, threads);
  std::string json = to_json_string(rep);
  std::cout << json << "\n";
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw std::invalid_argument("cannot write '" + json_path + "'");
    out << json << "\n";
  }
  return rep.conjecture_holds() ? kExitOk : kExitPropertyFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-quadrangular digraph toolkit"};
  app.require_subcommand(1);

  std::string file, method = "exact", kind, emit = "matrix", mode = "digraph";
  std::string json_path;
  double tol = 1e-9;
  int size = 0, n = 0, threads = 1;
  std::uint64_t seed = 0, sample = 0;
  bool loops = false;

  auto* check = app.add_subcommand("check", "structural predicates");
  check->add_option("file", file)->required();
  check->add_option("--tol", tol, "nonzero threshold for matrix files");

  auto* factor = app.add_subcommand(
      "factor", "cycle factor / 2-factor, or a violator witness");
  factor->add_option("file", file)->required();
  factor->add_option("--tol", tol);

  auto* ham = app.add_subcommand("hamilton", "hamilton cycle search");
  ham->add_option("file", file)->required();
  ham->add_option("--method", method)
      ->check(CLI::IsMember({"exact", "theorem23"}));
  ham->add_option("--tol", tol);

  auto* part = app.add_subcommand(
      "partition", "no-2-factor witness partition with property checks");
  part->add_option("file", file)->required();

  auto* gen = app.add_subcommand("gen", "unitary matrix generators");
  gen->add_option("--kind", kind)
      ->required()
      ->check(CLI::IsMember(
          {"dft", "sylvester", "weighing43", "permutation", "random"}));
  gen->add_option("--size", size)->required();
  auto* seed_opt = gen->add_option("--seed", seed);
  gen->add_option("--emit", emit)->check(CLI::IsMember({"matrix", "digraph"}));
  gen->add_option("--tol", tol);

  auto* verify = app.add_subcommand("verify", "conjecture verification runs");
  verify->add_option("--mode", mode)
      ->required()
      ->check(CLI::IsMember({"digraph", "graph"}));
  verify->add_option("--n", n)->required();
  verify->add_flag("--loops", loops, "include loop arcs in the space");
  auto* sample_opt = verify->add_option("--sample", sample);
  verify->add_option("--seed", seed);
  verify->add_option("--threads", threads);
  verify->add_option("--json", json_path, "also write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return cmd_check(file, tol);
    if (factor->parsed()) return cmd_factor(file, tol);
    if (ham->parsed()) return cmd_hamilton(file, method, tol);
    if (part->parsed()) return cmd_partition(file);
    if (gen->parsed())
      return cmd_gen(kind, size, seed, seed_opt->count() > 0, emit, tol);
    if (verify->parsed())
      return cmd_verify(mode, n, loops, sample, sample_opt->count() > 0, seed,
                        threads, json_path);
  } catch (const squad::CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
