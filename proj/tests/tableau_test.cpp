#include <gtest/gtest.h>

#include "monoflat/dual_rail.hpp"
#include "monoflat/simulate.hpp"
#include "monoflat/tableau.hpp"
#include "monoflat/verifier.hpp"
#include "test_util.hpp"

using namespace monoflat;
using monoflat::testing::contains_one;
using monoflat::testing::ends_with_one;
using monoflat::testing::parity;

namespace {

std::uint8_t accepts(const TuringMachine& tm, const Bits& x, std::size_t t) {
  return run(tm, x, t).verdict == Verdict::Accept ? 1 : 0;
}

}  // namespace

TEST(cell_alphabet, layout) {
  const CellAlphabet cells(contains_one());
  EXPECT_EQ(cells.size(), 3u + 3u * 3u);
  EXPECT_FALSE(cells.is_head(2));
  EXPECT_EQ(cells.head(0, 0), 3u);
  EXPECT_EQ(cells.head(2, 2), 11u);
  EXPECT_EQ(cells.state(cells.head(1, 2)), 1u);
  EXPECT_EQ(cells.symbol(cells.head(1, 2)), 2u);
  EXPECT_EQ(cells.render(contains_one(), cells.head(0, 1)), "(q0,1)");
}

TEST(compile, contains_one_small_example) {
  const Circuit c = compile(contains_one(), 2, 6);
  EXPECT_EQ(evaluate(c, parse_bits("01")), Bits{1});
  EXPECT_EQ(evaluate(c, parse_bits("00")), Bits{0});
  for (std::uint32_t i = 0; i < 4; ++i) {
    const Bits x = assignment_from_index(i, 2);
    EXPECT_EQ(evaluate(c, x)[0], accepts(contains_one(), x, 6));
  }
  EXPECT_EQ(c.input_count(), 2u);
  EXPECT_EQ(c.output_count(), 1u);
}

TEST(compile, not_gates_only_complement_inputs) {
  for (std::size_t n = 0; n <= 5; ++n) {
    const Circuit c = compile(parity(), n, n + 2);
    EXPECT_EQ(stats(c).not_gates, n);
    for (const Gate& g : c.gates()) {
      if (g.kind == GateKind::Not) EXPECT_EQ(c.gate(g.a).kind, GateKind::Input);
    }
  }
}

TEST(compile, agrees_with_simulator) {
  for (const TuringMachine* tm : {&contains_one(), &parity(), &ends_with_one()}) {
    for (std::size_t n = 0; n <= 5; ++n) {
      for (std::size_t t : {n, 2 * n, 2 * n + 4}) {
        if (t == 0) continue;
        const Circuit c = compile(*tm, n, t);
        for (std::uint32_t i = 0; i < (1u << n); ++i) {
          const Bits x = assignment_from_index(i, n);
          ASSERT_EQ(evaluate(c, x)[0], accepts(*tm, x, t)) << "n=" << n << " t=" << t;
        }
      }
    }
  }
}

TEST(compile, one_hot_cells) {
  for (const TuringMachine* tm : {&contains_one(), &parity(), &ends_with_one()}) {
    for (std::size_t n : {0u, 1u, 3u, 4u}) {
      for (auto enc : {InputEncoding::Raw, InputEncoding::Flattened}) {
        const Tableau tab = build_tableau(*tm, n, 2 * n + 2, enc);
        EXPECT_FALSE(check_one_hot(tab).has_value());
        EXPECT_FALSE(reference::check_one_hot(tab).has_value());
      }
    }
  }
}

TEST(compile, flattened_mode) {
  const Circuit raw = compile(contains_one(), 2, 6);
  const Circuit flat = compile_flattened(contains_one(), 2, 6);
  EXPECT_TRUE(is_structurally_monotone(flat));
  EXPECT_EQ(flat.input_count(), 4u);
  EXPECT_EQ(flat.gate(flat.inputs()[0]).name, "x0__0");
  EXPECT_EQ(flat.gate(flat.inputs()[1]).name, "x0__1");
  EXPECT_EQ(flat.gate(flat.inputs()[2]).name, "x1__0");
  for (std::uint32_t i = 0; i < 4; ++i) {
    const Bits x = assignment_from_index(i, 2);
    EXPECT_EQ(evaluate(flat, flatten_bits(x)), evaluate(raw, x));
  }
  const auto sr = stats(raw);
  const auto sf = stats(flat);
  EXPECT_EQ(sr.and_gates, sf.and_gates);
  EXPECT_EQ(sr.or_gates, sf.or_gates);
  EXPECT_EQ(sr.const_gates, sf.const_gates);
  EXPECT_EQ(sr.not_gates, 2u);
  EXPECT_EQ(sf.not_gates, 0u);
  EXPECT_EQ(sr.total(), sf.total());
}

TEST(compile, flattened_agrees_with_raw_sweep) {
  for (const TuringMachine* tm : {&contains_one(), &parity(), &ends_with_one()}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t t : {n, 2 * n, 2 * n + 4}) {
        const Circuit raw = compile(*tm, n, t);
        const Circuit flat = compile_flattened(*tm, n, t);
        ASSERT_TRUE(is_structurally_monotone(flat));
        ASSERT_FALSE(exhaustive_equiv(raw, flat, EquivMode::Flattened).has_value());
      }
    }
  }
}

TEST(compile, wire_names_follow_public_scheme) {
  const Tableau tab = build_tableau(contains_one(), 2, 4, InputEncoding::Raw);
  const Circuit& c = tab.circuit();
  for (std::size_t r = 1; r < tab.rows(); ++r) {
    for (std::size_t col = 0; col < tab.cols(); ++col) {
      for (std::size_t e = 0; e < tab.alphabet().size(); ++e) {
        const std::string name = Tableau::cell_wire_name(r, col, e);
        ASSERT_EQ(tab.wire_name(r, col, e), name);
        ASSERT_EQ(c.find(name), tab.wire(r, col, e));
      }
    }
  }
  // Row 0: head on the first input bit, constant cells after the input.
  const CellAlphabet& cells = tab.alphabet();
  const TuringMachine& tm = tab.machine();
  EXPECT_EQ(tab.wire_name(0, 0, cells.head(tm.start(), tm.one())), "x0");
  EXPECT_EQ(tab.wire_name(0, 0, cells.head(tm.start(), tm.zero())), "nx0");
  EXPECT_EQ(tab.wire_name(0, 1, cells.plain(tm.one())), "x1");
  EXPECT_EQ(tab.wire_name(0, 3, cells.plain(tm.blank())), "c_0_3_2");
}

TEST(compile, rejects_bad_shapes) {
  EXPECT_THROW(compile(contains_one(), 9, 6), TableauError);
  EXPECT_THROW(compile(contains_one(), 0, 0), TableauError);
  EXPECT_NO_THROW(compile(contains_one(), 7, 6));
  try {
    compile(contains_one(), 2, 32, CompileOptions{.gate_cap = 1000});
    FAIL();
  } catch (const GateCapError& e) {
    EXPECT_EQ(e.needed(), tableau_gate_count(contains_one(), 2, 32, InputEncoding::Raw));
  }
}

TEST(compile, predicted_gate_count_is_exact_and_deterministic) {
  for (std::size_t t : {1u, 2u, 5u, 9u}) {
    for (auto enc : {InputEncoding::Raw, InputEncoding::Flattened}) {
      const Tableau a = build_tableau(parity(), std::min<std::size_t>(3, t + 1), t, enc);
      EXPECT_EQ(a.circuit().size(),
                tableau_gate_count(parity(), a.input_length(), t, enc));
      const Tableau b = build_tableau(parity(), a.input_length(), t, enc);
      EXPECT_EQ(a.circuit(), b.circuit());
    }
  }
}

TEST(compile, size_bound_in_alphabet_and_steps) {
  // gates <= C * (t+1)^2 * |CellAlphabet|^3 with C fixed here.
  constexpr double kC = 3.0;
  for (const TuringMachine* tm : {&contains_one(), &parity(), &ends_with_one()}) {
    const double a = static_cast<double>(CellAlphabet(*tm).size());
    for (std::size_t t : {1u, 2u, 4u, 8u, 16u}) {
      const double gates =
          static_cast<double>(tableau_gate_count(*tm, std::min<std::size_t>(2, t + 1), t,
                                                 InputEncoding::Raw));
      EXPECT_LE(gates, kC * (t + 1) * (t + 1) * a * a * a) << "t=" << t;
    }
  }
}

TEST(compile, quadratic_growth_in_steps) {
  // Measured gate/t^2 for contains_one with n=2 stays in [500, 600].
  for (std::size_t t : {4u, 8u, 16u, 32u}) {
    const double g = static_cast<double>(stats(compile(contains_one(), 2, t)).total());
    const double ratio = g / static_cast<double>(t * t);
    EXPECT_GE(ratio, 500.0) << "t=" << t;
    EXPECT_LE(ratio, 600.0) << "t=" << t;
  }
}

TEST(trace, initial_row) {
  const auto rows = tableau_trace(contains_one(), parse_bits("1"), 3);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"(q0,1)", "_", "_", "_"}));
}

TEST(trace, rows_match_simulator_configurations) {
  for (const TuringMachine* tm : {&contains_one(), &parity(), &ends_with_one()}) {
    for (std::size_t n = 0; n <= 4; ++n) {
      const std::size_t t = 2 * n + 3;
      const Tableau tab = build_tableau(*tm, n, t, InputEncoding::Raw);
      for (std::uint32_t i = 0; i < (1u << n); ++i) {
        const Bits x = assignment_from_index(i, n);
        const auto grid = tableau_grid(tab, x);
        for (std::size_t r = 0; r <= t; ++r) {
          const auto expected = render_cells(*tm, run(*tm, x, r).final, t + 1);
          std::vector<std::string> got;
          for (std::size_t e : grid[r]) got.push_back(tab.alphabet().render(*tm, e));
          ASSERT_EQ(got, expected) << "row " << r << " input " << to_string(x);
        }
      }
    }
  }
}

TEST(trace, halted_rows_repeat) {
  const auto rows = tableau_trace(contains_one(), parse_bits("1"), 5);
  // Accepts after one step; every later row is identical.
  for (std::size_t r = 2; r < rows.size(); ++r) EXPECT_EQ(rows[r], rows[1]);
  EXPECT_EQ(rows[1][1], "(qa,_)");
}
