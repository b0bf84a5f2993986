#include <gtest/gtest.h>

#include <random>

#include "monoflat/dual_rail.hpp"
#include "monoflat/netlist.hpp"
#include "monoflat/simulate.hpp"
#include "monoflat/turing.hpp"
#include "test_util.hpp"

using namespace monoflat;
using monoflat::testing::contains_one;
using monoflat::testing::ends_with_one;
using monoflat::testing::parity;

namespace {

const char* kContainsOne =
    "states: q0 qa qr\nalphabet: 0 1 _\nstart: q0\naccept: qa\nreject: qr\n"
    "delta: q0 0 -> q0 0 R\ndelta: q0 1 -> qa 1 R\ndelta: q0 _ -> qr _ R\n";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

std::size_t error_line(const std::string& text) {
  try {
    parse_tm(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "expected a parse error for:\n" << text;
  return 0;
}

}  // namespace

TEST(tm_parse, contains_one_fixture) {
  const TuringMachine& tm = contains_one();
  EXPECT_EQ(tm.states(), (std::vector<std::string>{"q0", "qa", "qr"}));
  EXPECT_EQ(tm.alphabet(), (std::vector<std::string>{"0", "1", "_"}));
  EXPECT_EQ(tm.states()[tm.start()], "q0");
  EXPECT_EQ(tm.states()[tm.accept()], "qa");
  EXPECT_EQ(tm.states()[tm.reject()], "qr");
  for (SymbolId s = 0; s < 3; ++s) EXPECT_NO_THROW(tm.delta(tm.start(), s));
  EXPECT_THROW(tm.delta(tm.accept(), 0), std::logic_error);
  EXPECT_EQ(tm.delta(tm.start(), tm.one()).next, tm.accept());
}

TEST(tm_parse, inline_source_matches_fixture) {
  const TuringMachine tm = parse_tm(kContainsOne);
  EXPECT_EQ(tm.states(), contains_one().states());
}

TEST(tm_parse, errors) {
  const std::string base = kContainsOne;
  try {
    parse_tm(replace(base, "delta: q0 _ -> qr _ R\n", ""));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("missing transition (q0, _)"), std::string::npos);
  }
  EXPECT_GT(error_line(replace(base, "reject: qr", "reject: qa")), 0u);
  EXPECT_EQ(error_line(replace(base, "delta: q0 0 -> q0 0 R", "delta: q0 0 -> q9 0 R")), 6u);
  EXPECT_EQ(error_line(replace(base, "delta: q0 0 -> q0 0 R", "delta: q0 2 -> q0 0 R")), 6u);
  EXPECT_EQ(error_line(replace(base, "delta: q0 0 -> q0 0 R", "delta: q0 0 -> q0 0 S")), 6u);
  EXPECT_EQ(error_line(replace(base, "delta: q0 0 -> q0 0 R", "delta: q0 0 q0 0 R")), 6u);
  EXPECT_EQ(error_line(base + "delta: q0 0 -> q0 1 R\n"), 9u);   // duplicate
  EXPECT_EQ(error_line(base + "delta: qa 0 -> q0 1 R\n"), 9u);   // out of accept
  EXPECT_GT(error_line(replace(base, "alphabet: 0 1 _", "alphabet: 0 1")), 0u);
  EXPECT_EQ(error_line(replace(base, "start: q0", "begin: q0")), 3u);
}

TEST(tm_step, moves_right_without_writing_changes) {
  const TuringMachine& tm = contains_one();
  Configuration c = initial_configuration(tm, parse_bits("01"));
  const Configuration next = step(tm, c);
  EXPECT_EQ(next.tape, c.tape);
  EXPECT_EQ(next.head, 1u);
  EXPECT_EQ(next.state, tm.start());
  EXPECT_EQ(next.steps_taken, 1u);
}

TEST(tm_step, left_move_at_wall_stays) {
  const TuringMachine& tm = parity();
  const Configuration c = initial_configuration(tm, parse_bits("1"));
  const Configuration next = step(tm, c);
  EXPECT_EQ(next.head, 0u);
  EXPECT_EQ(tm.states()[next.state], "e");
}

TEST(tm_step, write_replaces_one_cell) {
  const TuringMachine tm = parse_tm(
      "states: q qa qr\nalphabet: 0 1 _\nstart: q\naccept: qa\nreject: qr\n"
      "delta: q 0 -> q 1 R\ndelta: q 1 -> q 0 R\ndelta: q _ -> qa _ R\n");
  Configuration c = initial_configuration(tm, parse_bits("0110"));
  c = step(tm, c);
  c = step(tm, c);
  EXPECT_EQ(c.tape, (std::vector<SymbolId>{tm.one(), tm.zero(), tm.one(), tm.zero()}));
}

TEST(tm_step, halted_configuration_is_an_error) {
  const TuringMachine& tm = contains_one();
  const RunResult r = run(tm, parse_bits("1"), 5);
  ASSERT_EQ(r.verdict, Verdict::Accept);
  EXPECT_THROW(step(tm, r.final), TmError);
}

TEST(tm_run, contains_one_examples) {
  const TuringMachine& tm = contains_one();
  const RunResult a = run(tm, parse_bits("01"), 10);
  EXPECT_EQ(a.verdict, Verdict::Accept);
  EXPECT_EQ(a.final.steps_taken, 2u);

  const RunResult r = run(tm, parse_bits("000"), 10);
  EXPECT_EQ(r.verdict, Verdict::Reject);
  EXPECT_EQ(r.final.steps_taken, 4u);

  EXPECT_EQ(run(tm, parse_bits("0"), 0).verdict, Verdict::Timeout);
  EXPECT_EQ(run(tm, parse_bits(""), 5).verdict, Verdict::Reject);
}

TEST(tm_run, fixture_languages) {
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::uint32_t i = 0; i < (1u << n); ++i) {
      const Bits x = assignment_from_index(i, n);
      std::size_t ones = 0;
      for (auto b : x) ones += b;
      EXPECT_EQ(run(contains_one(), x, 100).verdict, ones > 0 ? Verdict::Accept : Verdict::Reject);
      EXPECT_EQ(run(parity(), x, 100).verdict, ones % 2 ? Verdict::Accept : Verdict::Reject);
      const bool last = n > 0 && x.back();
      EXPECT_EQ(run(ends_with_one(), x, 100).verdict, last ? Verdict::Accept : Verdict::Reject);
    }
  }
}

TEST(tm_run, properties) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const TuringMachine& tm = i % 3 == 0 ? contains_one() : (i % 3 == 1 ? parity() : ends_with_one());
    Bits x(rng() % 10);
    for (auto& b : x) b = rng() & 1U;
    const std::size_t budget = rng() % 15;
    const RunResult a = run(tm, x, budget);
    const RunResult b = run(tm, x, budget);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.final, b.final);
    EXPECT_LE(a.final.steps_taken, budget);
    EXPECT_LE(a.final.tape.size(), std::max(x.size(), a.final.steps_taken));
  }
}

TEST(tm_render, head_cell_shows_state) {
  const TuringMachine& tm = contains_one();
  const auto cells = render_cells(tm, initial_configuration(tm, parse_bits("1")), 4);
  EXPECT_EQ(cells, (std::vector<std::string>{"(q0,1)", "_", "_", "_"}));
}
