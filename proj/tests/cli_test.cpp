#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>
#include <random>

#include "monoflat/dual_rail.hpp"
#include "monoflat/netlist.hpp"
#include "monoflat/simulate.hpp"
#include "process.hpp"
#include "test_util.hpp"

using namespace monoflat;
using monoflat::testing::fixture;
using monoflat::testing::run_cli;

namespace {

std::string quoted(const std::string& path) { return "\"" + path + "\""; }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() /
         ("monoflat_cli_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(cli, compile_tm_raw_and_flattened) {
  const auto raw = run_cli("compile-tm " + quoted(fixture("contains_one.tm")) + " -n 2 -t 6");
  ASSERT_EQ(raw.exit_code, 0) << raw.err;
  const Circuit c = parse_netlist(raw.out);
  EXPECT_EQ(stats(c).not_gates, 2u);
  EXPECT_EQ(evaluate(c, parse_bits("01")), Bits{1});

  const auto flat =
      run_cli("compile-tm " + quoted(fixture("contains_one.tm")) + " -n 2 -t 6 --flattened");
  ASSERT_EQ(flat.exit_code, 0) << flat.err;
  const Circuit f = parse_netlist(flat.out);
  EXPECT_EQ(stats(f).not_gates, 0u);
  EXPECT_EQ(f.input_count(), 4u);
}

TEST(cli, compile_tm_errors) {
  const std::string tm = quoted(fixture("contains_one.tm"));
  EXPECT_EQ(run_cli("compile-tm " + tm + " -n 9 -t 6").exit_code, 2);
  EXPECT_EQ(run_cli("--gate-cap 100 compile-tm " + tm + " -n 2 -t 6").exit_code, 2);
  EXPECT_EQ(run_cli("compile-tm " + tm + " -n 2 -t 6 --gate-cap 100").exit_code, 2);
  EXPECT_EQ(run_cli("compile-tm " + quoted(fixture("not.net")) + " -n 2 -t 6").exit_code, 2);
  EXPECT_EQ(run_cli("compile-tm /nonexistent/x.tm -n 2 -t 6").exit_code, 2);
  EXPECT_EQ(run_cli("compile-tm " + tm + " -n 2").exit_code, 2);
}

TEST(cli, compile_tm_out_file_and_determinism) {
  const auto out = temp_path("c1.net");
  const std::string args = "compile-tm " + quoted(fixture("parity.tm")) + " -n 3 -t 5";
  const auto a = run_cli(args + " --out " + quoted(out.string()));
  ASSERT_EQ(a.exit_code, 0) << a.err;
  EXPECT_TRUE(a.out.empty());
  const auto b = run_cli(args);
  EXPECT_EQ(monoflat::testing::slurp(out), b.out);
  EXPECT_EQ(run_cli(args).out, b.out);
  std::filesystem::remove(out);
}

TEST(cli, flatten_bits) {
  const auto r = run_cli("flatten --bits 101");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "011001\n");
  EXPECT_EQ(run_cli("flatten --bits 10a").exit_code, 2);
  EXPECT_EQ(run_cli("flatten").exit_code, 2);
}

TEST(cli, flatten_circuit) {
  const auto r = run_cli("flatten " + quoted(fixture("eq_not.net")));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const Circuit m = parse_netlist(r.out);
  EXPECT_TRUE(is_structurally_monotone(m));
  EXPECT_EQ(m, dual_rail_transform(read_netlist_file(fixture("eq_not.net"))));
  EXPECT_EQ(run_cli("flatten " + quoted(fixture("contains_one.tm"))).exit_code, 2);
}

TEST(cli, verify_eq_refute) {
  const auto r = run_cli("verify eq-refute");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("(0,0) <= (0,1) <= (1,1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("size=6"), std::string::npos);
  const auto two = run_cli("verify eq-refute -n 2");
  EXPECT_EQ(two.exit_code, 0);
  EXPECT_NE(two.out.find("size=168"), std::string::npos);
  EXPECT_EQ(run_cli("verify eq-refute -n 3").exit_code, 2);
}

TEST(cli, verify_census) {
  const auto r = run_cli("verify census -n 2");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "0000\n0001\n0101\n0011\n0111\n1111\n");
  EXPECT_NE(r.err.find("count=6"), std::string::npos);
  EXPECT_EQ(run_cli("verify census -n 5").exit_code, 2);
}

TEST(cli, verify_equiv) {
  const auto b = fixture("eq_not.net");
  const auto m = temp_path("m.net");
  {
    std::ofstream(m) << emit_netlist(dual_rail_transform(read_netlist_file(b)));
  }
  const auto ok = run_cli("verify equiv --flattened " + quoted(b) + " " + quoted(m.string()));
  EXPECT_EQ(ok.exit_code, 0) << ok.err;
  const auto bad = run_cli("verify equiv " + quoted(b) + " " + quoted(fixture("flatten_eq.net")));
  EXPECT_EQ(bad.exit_code, 2);  // input count mismatch is a usage error

  const auto and_net = temp_path("and.net");
  { std::ofstream(and_net) << "input x\ninput y\nand g x y\noutput g\n"; }
  const auto differ = run_cli("verify equiv " + quoted(b) + " " + quoted(and_net.string()));
  EXPECT_EQ(differ.exit_code, 1);
  EXPECT_EQ(differ.out, "kind=EQUIVALENCE witness=00 expected=1 observed=0\n");
  std::filesystem::remove(m);
  std::filesystem::remove(and_net);
}

TEST(cli, verify_monotone) {
  const auto r = run_cli("verify monotone " + quoted(fixture("not.net")));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.out, "kind=MONOTONICITY witness=0,1 expected=1 observed=0\n");
  EXPECT_EQ(run_cli("verify monotone " + quoted(fixture("flatten_eq.net"))).exit_code, 0);
  EXPECT_EQ(run_cli("verify monotone").exit_code, 2);
  EXPECT_EQ(run_cli("verify").exit_code, 2);
}

TEST(cli, verify_one_hot_and_random) {
  EXPECT_EQ(run_cli("verify one-hot " + quoted(fixture("parity.tm")) + " -n 3 -t 5").exit_code, 0);
  const auto a = run_cli("verify random-dual-rail --count 20 --seed 7");
  const auto b = run_cli("--seed 7 verify random-dual-rail --count 20");
  EXPECT_EQ(a.exit_code, 0) << a.out << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("seed=7"), std::string::npos);
}

TEST(cli, stream_flatten) {
  const auto r = run_cli("stream-flatten", "0\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "10");
  EXPECT_NE(r.err.find("read=1 written=2 peak_state_bits="), std::string::npos) << r.err;

  const auto empty = run_cli("stream-flatten", "");
  EXPECT_EQ(empty.exit_code, 0);
  EXPECT_EQ(empty.out, "");

  EXPECT_EQ(run_cli("stream-flatten", "01x").exit_code, 2);
}

TEST(cli, stream_flatten_large_input) {
  std::mt19937_64 rng(3);
  Bits in(1u << 16);
  for (auto& b : in) b = rng() & 1U;
  const auto r = run_cli("stream-flatten", to_string(in));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, to_string(flatten_bits(in)));
  const auto pos = r.err.find("peak_state_bits=");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_LE(std::stoul(r.err.substr(pos + 16)), 17u + 2u);
}

TEST(cli, stats_and_dot) {
  const auto s = run_cli("stats " + quoted(fixture("eq_not.net")));
  EXPECT_EQ(s.exit_code, 0);
  EXPECT_NE(s.out.find("not=2\n"), std::string::npos) << s.out;
  EXPECT_NE(s.out.find("monotone=no\n"), std::string::npos);
  const auto d = run_cli("emit-dot " + quoted(fixture("flatten_eq.net")));
  EXPECT_EQ(d.exit_code, 0);
  EXPECT_EQ(d.out, emit_dot(read_netlist_file(fixture("flatten_eq.net"))));
}

TEST(cli, usage) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("--help").exit_code, 0);
  EXPECT_EQ(run_cli("--gate-cap 0 stats x").exit_code, 2);
}
