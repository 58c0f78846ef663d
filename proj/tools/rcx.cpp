#include <CLI11.hpp>

#include "rcx/bounds.hpp"
#include "rcx/io.hpp"
#include "rcx/lattice_set.hpp"
#include "rcx/rc2d.hpp"
#include "rcx/relaxations.hpp"
#include "rcx/separation.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace rcx;

struct AgainstSpec {
  enum class Kind { Ball, File, ParityObs } kind = Kind::Ball;
  long long t = 1;
  std::string path;
};

AgainstSpec parse_against(const std::string& text) {
  AgainstSpec spec;
  if (text == "parity-obs") {
    spec.kind = AgainstSpec::Kind::ParityObs;
  } else if (text == "ball") {
    spec.kind = AgainstSpec::Kind::Ball;
  } else if (text.rfind("ball:", 0) == 0) {
    spec.kind = AgainstSpec::Kind::Ball;
    spec.t = std::stoll(text.substr(5));
    if (spec.t < 1) throw std::invalid_argument("--against ball:t needs t >= 1");
  } else if (text.rfind("file:", 0) == 0) {
    spec.kind = AgainstSpec::Kind::File;
    spec.path = text.substr(5);
  } else {
    throw std::invalid_argument("--against must be ball:t, file:PATH or parity-obs");
  }
  return spec;
}

LatticeSet resolve_against(const AgainstSpec& spec, const LatticeSet& x) {
  switch (spec.kind) {
    case AgainstSpec::Kind::Ball:
      return ball(x, spec.t);
    case AgainstSpec::Kind::File:
      return read_point_file(spec.path);
    case AgainstSpec::Kind::ParityObs: {
      const auto candidates = parity_candidates(x);
      if (!candidates) {
        throw std::invalid_argument(
            "parity-obs: X does not meet every residue class mod 2");
      }
      return observers_in_region(x, *candidates);
    }
  }
  throw std::logic_error("unreachable");
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  ~Timer() {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    std::cerr << "time: " << ms << " ms\n";
  }
};

void print_header(const std::string& command, const std::vector<std::string>& inputs) {
  std::cout << "command: " << command << "\n";
  for (const auto& path : inputs) {
    std::cout << "input: " << file_digest(path) << " " << path << "\n";
  }
}

int cmd_rc2d(const std::string& input, const std::string& cert_path) {
  Timer timer;
  const auto v = read_point_file(input);
  print_header("rc2d " + input, {input});
  const auto result = rc_2d(v);
  std::cout << "observers = " << result.observers.points.size() << "\n";
  std::cout << "arcs = " << result.arcs.size() << "\n";
  std::cout << "rc = " << result.k << "\n";
  if (!cert_path.empty()) {
    write_certificate_file(cert_path, result.cert);
    std::cout << "certificate: " << cert_path << "\n";
  }
  return 0;
}

int cmd_rc(const std::string& input, const std::string& against,
           const std::string& cert_path, int jobs) {
  Timer timer;
  const auto x = read_point_file(input);
  const auto spec = parse_against(against);
  std::vector<std::string> inputs = {input};
  if (spec.kind == AgainstSpec::Kind::File) inputs.push_back(spec.path);
  print_header("rc " + input + " --against " + against, inputs);
  const auto y = resolve_against(spec, x);
  RcOptions opts;
  opts.jobs = jobs;
  const auto result = rc_finite(x, y, opts);
  std::cout << "outer = " << y.minus(x).size() << "\n";
  std::cout << "rc = " << result.k << "\n";
  if (!cert_path.empty()) {
    write_certificate_file(cert_path, result.cert);
    std::cout << "certificate: " << cert_path << "\n";
  }
  return 0;
}

int cmd_rc_eps(const std::string& input, const std::string& eps_text,
               const std::string& against, const std::string& cert_path, int jobs) {
  Timer timer;
  const auto x = read_point_file(input);
  const Rat eps = parse_rat(eps_text);
  if (eps <= 0) throw std::invalid_argument("--eps must be positive");
  RcOptions opts;
  opts.jobs = jobs;
  if (against.empty()) {
    print_header("rc-eps " + input + " --eps " + eps_text, {input});
    const auto result = rc_eps_full(x, eps, opts);
    std::cout << "constant = " << rat_str(result.constant) << "\n";
    std::cout << "rc_eps = " << result.k << "\n";
    if (!cert_path.empty()) {
      write_certificate_file(cert_path, result.cert);
      std::cout << "certificate: " << cert_path << "\n";
    }
  } else {
    const auto spec = parse_against(against);
    std::vector<std::string> inputs = {input};
    if (spec.kind == AgainstSpec::Kind::File) inputs.push_back(spec.path);
    print_header("rc-eps " + input + " --eps " + eps_text + " --against " + against, inputs);
    const auto y = resolve_against(spec, x);
    const auto result = rc_eps(x, eps, y, opts);
    std::cout << "rc_eps = " << result.k << "\n";
    if (!cert_path.empty()) {
      write_certificate_file(cert_path, result.cert);
      std::cout << "certificate: " << cert_path << "\n";
    }
  }
  return 0;
}

int cmd_bounds(const std::string& input, const std::string& against,
               const std::string& dot_path, int jobs) {
  Timer timer;
  const auto x = read_point_file(input);
  const auto spec = parse_against(against);
  std::vector<std::string> inputs = {input};
  if (spec.kind == AgainstSpec::Kind::File) inputs.push_back(spec.path);
  print_header("bounds " + input + " --against " + against, inputs);
  const auto y = resolve_against(spec, x);
  const auto graph = hiding_graph(x, y, jobs);
  const auto clique = max_clique(graph);
  std::cout << "vertices = " << graph.size() << "\n";
  std::cout << "edges = " << graph.edge_count() << "\n";
  std::cout << "clique = " << clique.size << "\n";
  if (graph.size() == 0) {
    std::cout << "chromatic = 0\n";
  } else {
    std::cout << "chromatic = " << chromatic_number(graph).chi << "\n";
  }
  if (!dot_path.empty()) {
    std::ofstream out(dot_path);
    if (!out) throw IoError(0, "cannot write '" + dot_path + "'");
    out << to_dot(graph);
    std::cout << "dot: " << dot_path << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& q_path, const std::string& x_path) {
  Timer timer;
  const auto q = read_hrep_file(q_path);
  const auto x = read_point_file(x_path);
  print_header("verify " + q_path + " " + x_path, {q_path, x_path});
  const auto result = verify_relaxation(q, x);
  switch (result.status) {
    case VerifyStatus::Verified:
      std::cout << "verified\n";
      return 0;
    case VerifyStatus::Unbounded:
      std::cout << "unbounded\n";
      return 1;
    case VerifyStatus::Fails: {
      std::cout << "fails at";
      for (long long c : *result.witness) std::cout << " " << c;
      std::cout << "\n";
      return 1;
    }
  }
  return 1;
}

std::vector<long long> parse_params(const std::string& text) {
  std::vector<long long> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) out.push_back(std::stoll(token));
  return out;
}

int cmd_gen(const std::string& name, const std::string& out_path) {
  const auto colon = name.find(':');
  const std::string kind = name.substr(0, colon);
  const std::string params = colon == std::string::npos ? "" : name.substr(colon + 1);

  std::optional<LatticeSet> points;
  std::optional<HPolyhedron> hrep;
  if (kind == "simplex") {
    points = simplex_set(static_cast<int>(parse_params(params).at(0)));
  } else if (kind == "cross") {
    points = cross_set(static_cast<int>(parse_params(params).at(0)));
  } else if (kind == "box") {
    const auto v = parse_params(params);
    if (v.empty() || v.size() % 2 != 0) {
      throw std::invalid_argument("box needs parameters a1,b1[,a2,b2,...]");
    }
    std::vector<std::pair<long long, long long>> segments;
    for (std::size_t i = 0; i < v.size(); i += 2) segments.emplace_back(v[i], v[i + 1]);
    points = box_set(segments);
  } else if (kind == "debruijn") {
    points = debruijn_set(static_cast<int>(parse_params(params).at(0)));
  } else if (kind == "table1") {
    points = delta3_certificate();
  } else if (kind == "eq3") {
    points = eq3_set(static_cast<int>(parse_params(params).at(0)));
  } else if (kind == "cross-relaxation") {
    hrep = cross_relaxation(static_cast<int>(parse_params(params).at(0)));
  } else if (kind == "box-simplex") {
    const auto v = parse_params(params);
    if (v.size() != 2) throw std::invalid_argument("box-simplex needs parameters l,b");
    hrep = box_simplex(static_cast<int>(v[0]), v[1]);
  } else {
    throw std::invalid_argument(
        "unknown generator '" + kind +
        "' (try simplex:d, cross:d, box:a,b,..., debruijn:d, table1, eq3:k, "
        "cross-relaxation:d, box-simplex:l,b)");
  }

  const std::string content = points ? format_point_set(*points) : format_hrep(*hrep);
  if (out_path.empty()) {
    std::cout << content;
  } else {
    std::ofstream out(out_path);
    if (!out) throw IoError(0, "cannot write '" + out_path + "'");
    out << content;
    print_header("gen " + name, {});
    std::cout << "wrote: " << out_path << "\n";
  }
  return 0;
}

int cmd_iterate(const std::string& input, const std::string& start, long long box_t,
                int rounds, const std::string& cert_path, int jobs) {
  Timer timer;
  const auto x = read_point_file(input);
  const auto spec = parse_against(start);
  std::vector<std::string> inputs = {input};
  if (spec.kind == AgainstSpec::Kind::File) inputs.push_back(spec.path);
  print_header("iterate " + input + " --start " + start, inputs);
  const auto y0 = resolve_against(spec, x);
  RcOptions opts;
  opts.jobs = jobs;
  const auto result = iterative_rc(x, y0, box_t, rounds, opts);
  std::cout << "rounds = " << result.rounds << "\n";
  std::cout << "final_outer = " << result.final_outer.minus(x).size() << "\n";
  if (result.converged) {
    std::cout << "converged\n";
    std::cout << "rc = " << result.k << "\n";
    std::cout << format_hrep(result.relaxation);
    return 0;
  }
  std::cout << "bound-only\n";
  std::cout << "rc >= " << result.k << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact relaxation-complexity toolkit for lattice point sets"};
  app.require_subcommand(1);

  std::string input, against, cert_path, dot_path, eps_text, name, out_path;
  std::string q_path, x_path, start = "ball:1";
  long long box_t = 5;
  int rounds = 10, jobs = 1;

  auto* rc2d_cmd = app.add_subcommand("rc2d", "rc of a planar set via the observer cycle");
  rc2d_cmd->add_option("input", input, "point file (d = 2)")->required();
  rc2d_cmd->add_option("--cert", cert_path, "write the certificate JSON here");

  auto* rc_cmd = app.add_subcommand("rc", "rc(X, Y) by exact set cover");
  rc_cmd->add_option("input", input, "point file for X")->required();
  rc_cmd->add_option("--against", against, "ball:t | file:PATH | parity-obs")->required();
  rc_cmd->add_option("--cert", cert_path, "write the certificate JSON here");
  rc_cmd->add_option("--jobs", jobs, "threads for hiding-graph construction");

  auto* eps_cmd = app.add_subcommand("rc-eps", "epsilon-robust separation number");
  eps_cmd->add_option("input", input, "point file for X")->required();
  eps_cmd->add_option("--eps", eps_text, "positive rational, e.g. 1/4")->required();
  eps_cmd->add_option("--against", against,
                      "ball:t | file:PATH | parity-obs (default: full certificate region)");
  eps_cmd->add_option("--cert", cert_path, "write the certificate JSON here");
  eps_cmd->add_option("--jobs", jobs, "threads for hiding-graph construction");

  auto* bounds_cmd = app.add_subcommand("bounds", "clique and chromatic lower bounds");
  bounds_cmd->add_option("input", input, "point file for X")->required();
  bounds_cmd->add_option("--against", against, "ball:t | file:PATH | parity-obs")->required();
  bounds_cmd->add_option("--dot", dot_path, "write the hiding graph in DOT format");
  bounds_cmd->add_option("--jobs", jobs, "threads for hiding-graph construction");

  auto* verify_cmd = app.add_subcommand("verify", "check Q cap Z^d == X");
  verify_cmd->add_option("hrep", q_path, "H-polyhedron file for Q")->required();
  verify_cmd->add_option("points", x_path, "point file for X")->required();

  auto* gen_cmd = app.add_subcommand("gen", "emit fixture point sets and systems");
  gen_cmd->add_option("name", name,
                      "simplex:d | cross:d | box:a,b,... | debruijn:d | table1 | "
                      "eq3:k | cross-relaxation:d | box-simplex:l,b")
      ->required();
  gen_cmd->add_option("-o,--output", out_path, "output path (default: stdout)");

  auto* iter_cmd = app.add_subcommand("iterate", "grow a certificate set until it verifies");
  iter_cmd->add_option("input", input, "point file for X")->required();
  iter_cmd->add_option("--start", start, "initial Y: ball:t | file:PATH | parity-obs");
  iter_cmd->add_option("--box", box_t, "harvest box half-width [-t,t]^d");
  iter_cmd->add_option("--rounds", rounds, "maximum number of rounds");
  iter_cmd->add_option("--cert", cert_path, "write the final certificate JSON here");
  iter_cmd->add_option("--jobs", jobs, "threads for hiding-graph construction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (rc2d_cmd->parsed()) return cmd_rc2d(input, cert_path);
    if (rc_cmd->parsed()) return cmd_rc(input, against, cert_path, jobs);
    if (eps_cmd->parsed()) return cmd_rc_eps(input, eps_text, against, cert_path, jobs);
    if (bounds_cmd->parsed()) return cmd_bounds(input, against, dot_path, jobs);
    if (verify_cmd->parsed()) return cmd_verify(q_path, x_path);
    if (gen_cmd->parsed()) return cmd_gen(name, out_path);
    if (iter_cmd->parsed()) return cmd_iterate(input, start, box_t, rounds, cert_path, jobs);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
