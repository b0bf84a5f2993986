// monoflat: command-line front end.
//
// Exit codes: 0 success, 1 the checked property failed, 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "monoflat/dual_rail.hpp"
#include "monoflat/netlist.hpp"
#include "monoflat/random_circuit.hpp"
#include "monoflat/tableau.hpp"
#include "monoflat/transducer.hpp"
#include "monoflat/turing.hpp"
#include "monoflat/verifier.hpp"

namespace {

using namespace monoflat;

constexpr int kOk = 0;
constexpr int kPropertyFailed = 1;
constexpr int kUsage = 2;

struct Globals {
  std::size_t gate_cap = 10'000'000;
  std::uint64_t seed = 1;
};

int write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "error: cannot write " << path << "\n";
    return kUsage;
  }
  return kOk;
}

int report_result(const std::optional<CounterexampleReport>& report, const std::string& ok_line) {
  if (report) {
    std::cout << report->to_line() << "\n";
    if (!report->location.empty()) std::cerr << "location: " << report->location << "\n";
    return kPropertyFailed;
  }
  std::cout << ok_line << "\n";
  return kOk;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monotone circuits, dual-rail flattening and tableau compilation"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--gate-cap", g.gate_cap, "Largest circuit compile-tm may build")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");

  int code = kOk;

  // compile-tm
  std::string tm_path, out_path;
  std::size_t n = 0, t = 0;
  bool flattened = false;
  auto* compile_cmd = app.add_subcommand("compile-tm", "Compile a Turing machine tableau to a netlist");
  compile_cmd->add_option("tm", tm_path, "Machine description")->required();
  compile_cmd->add_option("-n", n, "Input length")->required();
  compile_cmd->add_option("-t", t, "Step budget")->required();
  compile_cmd->add_flag("--flattened", flattened, "Dual-rail inputs, no NOT gates");
  compile_cmd->add_option("--out", out_path, "Output file (default stdout)");
  compile_cmd->callback([&] {
    const TuringMachine tm = read_tm_file(tm_path);
    const CompileOptions opts{.gate_cap = g.gate_cap};
    const Circuit c = flattened ? compile_flattened(tm, n, t, opts) : compile(tm, n, t, opts);
    code = write_output(emit_netlist(c), out_path);
  });

  // flatten
  std::string circuit_path;
  std::optional<std::string> bits_arg;
  auto* flatten_cmd = app.add_subcommand("flatten", "Flatten a bit string or dual-rail a circuit");
  auto* circuit_opt = flatten_cmd->add_option("circuit", circuit_path, "Netlist to transform");
  auto* bits_opt = flatten_cmd->add_option("--bits", bits_arg, "Bit string to flatten");
  circuit_opt->excludes(bits_opt);
  flatten_cmd->callback([&] {
    if (bits_arg) {
      std::cout << to_string(flatten_bits(parse_bits(*bits_arg))) << "\n";
    } else if (!circuit_path.empty()) {
      std::cout << emit_netlist(dual_rail_transform(read_netlist_file(circuit_path)));
    } else {
      throw CLI::RequiredError("flatten needs a circuit or --bits");
    }
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive checks");
  verify_cmd->require_subcommand(1);

  std::string b_path, m_path;
  bool equiv_flat = false;
  auto* equiv_cmd = verify_cmd->add_subcommand("equiv", "b and m agree on every assignment");
  equiv_cmd->add_flag("--flattened", equiv_flat, "Compare b(x) with m(flatten(x))");
  equiv_cmd->add_option("b", b_path, "Reference netlist")->required();
  equiv_cmd->add_option("m", m_path, "Candidate netlist")->required();
  equiv_cmd->callback([&] {
    const Circuit b = read_netlist_file(b_path);
    const Circuit m = read_netlist_file(m_path);
    const auto r = exhaustive_equiv(b, m, equiv_flat ? EquivMode::Flattened : EquivMode::Raw);
    code = report_result(r, "equivalent assignments=" +
                                std::to_string(std::uint64_t{1} << b.input_count()));
  });

  std::string mono_path;
  auto* mono_cmd = verify_cmd->add_subcommand("monotone", "u <= v implies c(u) <= c(v)");
  mono_cmd->add_option("circuit", mono_path, "Netlist")->required();
  mono_cmd->callback([&] {
    const Circuit c = read_netlist_file(mono_path);
    code = report_result(check_semantic_monotone(c),
                         "monotone structural=" + yes_no(is_structurally_monotone(c)));
  });

  std::size_t census_n = 2;
  auto* census_cmd = verify_cmd->add_subcommand("census", "List monotone truth tables");
  census_cmd->add_option("-n", census_n, "Arity")->check(CLI::Range(0, 4));
  census_cmd->callback([&] {
    const auto tables = enumerate_monotone_functions(census_n);
    for (const TruthTable& f : tables) std::cout << f.to_string() << "\n";
    std::cerr << "count=" << tables.size() << "\n";
  });

  std::size_t pairs = 1;
  auto* refute_cmd = verify_cmd->add_subcommand("eq-refute", "Show EQ is not monotone");
  refute_cmd->add_option("-n", pairs, "Bits per operand")->check(CLI::Range(1, 2));
  refute_cmd->callback([&] {
    const EqRefutation r = refute_eq_monotone(pairs);
    std::cout << "census arity=" << 2 * pairs << " size=" << r.census_size << "\n";
    std::cout << "eq=" << eq_table(pairs).to_string() << " member=" << yes_no(r.eq_in_census)
              << "\n";
    std::cout << "chain " << r.chain_string() << "\n";
    std::cout << "eq_at_middle=" << int{r.eq_at_middle}
              << " members_one_at_ends=" << r.members_equal_at_ends
              << " forced_one_at_middle=" << yes_no(r.chain_forces_middle) << "\n";
    std::cout << r.eq_violation.to_line() << "\n";
    std::cout << (r.refuted() ? "refuted" : "not refuted") << "\n";
    code = r.refuted() ? kOk : kPropertyFailed;
  });

  std::string hot_tm;
  std::size_t hot_n = 0, hot_t = 0;
  bool hot_flat = false;
  auto* hot_cmd = verify_cmd->add_subcommand("one-hot", "Every tableau cell one-hot on every input");
  hot_cmd->add_option("tm", hot_tm, "Machine description")->required();
  hot_cmd->add_option("-n", hot_n, "Input length")->required();
  hot_cmd->add_option("-t", hot_t, "Step budget")->required();
  hot_cmd->add_flag("--flattened", hot_flat, "Dual-rail inputs");
  hot_cmd->callback([&] {
    const Tableau tab = build_tableau(read_tm_file(hot_tm), hot_n, hot_t,
                                      hot_flat ? InputEncoding::Flattened : InputEncoding::Raw,
                                      CompileOptions{.gate_cap = g.gate_cap});
    code = report_result(check_one_hot(tab), "one-hot cells=" + std::to_string(tab.rows() * tab.cols()));
  });

  std::size_t random_count = 200;
  std::size_t random_max_inputs = 10;
  auto* random_cmd =
      verify_cmd->add_subcommand("random-dual-rail", "Dual-rail transform of seeded random circuits");
  random_cmd->add_option("--count", random_count, "Number of circuits");
  random_cmd->add_option("--max-inputs", random_max_inputs, "Inputs per circuit")
      ->check(CLI::Range(std::size_t{1}, kMaxExhaustiveInputs));
  random_cmd->callback([&] {
    std::mt19937_64 rng(g.seed);
    RandomCircuitOptions opts;
    opts.max_inputs = random_max_inputs;
    double worst = 0.0;
    for (std::size_t i = 0; i < random_count; ++i) {
      const Circuit b = random_circuit(rng, opts);
      const Circuit m = dual_rail_transform(b);
      const SizeReport size = size_report(b, m);
      worst = std::max(worst, size.ratio);
      std::optional<CounterexampleReport> r = exhaustive_equiv(b, m, EquivMode::Flattened);
      if (!r) r = rail_counterexample(validate_rail_complement(b, m));
      if (r || size.not_count_target != 0 || size.ratio > 2.0) {
        std::cout << "circuit " << i << " failed ratio=" << size.ratio
                  << " not=" << size.not_count_target << "\n";
        if (r) std::cout << r->to_line() << "\n";
        std::cout << emit_netlist(b);
        code = kPropertyFailed;
        return;
      }
    }
    std::cout << "circuits=" << random_count << " seed=" << g.seed << " max_ratio=" << worst
              << " ok\n";
  });

  // stream-flatten
  auto* stream_cmd = app.add_subcommand("stream-flatten", "Flatten bits from stdin to stdout");
  stream_cmd->callback([&] {
    IstreamBitSource source(std::cin);
    OstreamBitSink sink(std::cout);
    const TransducerStats s = stream_flatten(source, sink);
    std::cout.flush();
    std::cerr << "read=" << s.input_bits_read << " written=" << s.output_bits_written
              << " peak_state_bits=" << s.peak_state_bits << "\n";
  });

  // stats
  std::string stats_path;
  auto* stats_cmd = app.add_subcommand("stats", "Gate counts and depth");
  stats_cmd->add_option("circuit", stats_path, "Netlist")->required();
  stats_cmd->callback([&] {
    const Circuit c = read_netlist_file(stats_path);
    const CircuitStats s = stats(c);
    std::cout << "inputs=" << s.input_count << "\noutputs=" << s.output_count
              << "\ngates=" << s.total() << "\nand=" << s.and_gates << "\nor=" << s.or_gates
              << "\nnot=" << s.not_gates << "\nconst=" << s.const_gates << "\ndepth=" << s.depth
              << "\nmonotone=" << yes_no(is_structurally_monotone(c)) << "\n";
  });

  // emit-dot
  std::string dot_path, dot_out;
  auto* dot_cmd = app.add_subcommand("emit-dot", "Graphviz rendering of a netlist");
  dot_cmd->add_option("circuit", dot_path, "Netlist")->required();
  dot_cmd->add_option("--out", dot_out, "Output file (default stdout)");
  dot_cmd->callback([&] { code = write_output(emit_dot(read_netlist_file(dot_path)), dot_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const GateCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}
