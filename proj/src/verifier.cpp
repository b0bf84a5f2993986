#include "monoflat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>

#include <omp.h>

#include "monoflat/dual_rail.hpp"
#include "monoflat/simulate.hpp"

namespace monoflat {
namespace {

constexpr std::uint64_t kNoWitness = std::numeric_limits<std::uint64_t>::max();

std::string bits_string(const Bits& bits) { return to_string(bits); }

void check_equiv_shape(const Circuit& b, const Circuit& m, EquivMode mode) {
  const std::size_t n = b.input_count();
  if (n > kMaxExhaustiveInputs) {
    throw std::invalid_argument("exhaustive equivalence is limited to " +
                                std::to_string(kMaxExhaustiveInputs) + " inputs");
  }
  const std::size_t want = mode == EquivMode::Flattened ? 2 * n : n;
  if (m.input_count() != want) {
    throw std::invalid_argument("input count mismatch: expected " + std::to_string(want) +
                                " inputs on the second circuit, got " +
                                std::to_string(m.input_count()));
  }
  if (b.output_count() != m.output_count()) {
    throw std::invalid_argument("output count mismatch: " + std::to_string(b.output_count()) +
                                " vs " + std::to_string(m.output_count()));
  }
}

CounterexampleReport equivalence_report(const Circuit& b, const Circuit& m, EquivMode mode,
                                        std::uint64_t index) {
  const Bits x = assignment_from_index(index, b.input_count());
  CounterexampleReport r;
  r.kind = ReportKind::Equivalence;
  r.witness = {x};
  r.expected = bits_string(evaluate(b, x));
  r.observed = bits_string(evaluate(m, mode == EquivMode::Flattened ? flatten_bits(x) : x));
  return r;
}

CounterexampleReport monotone_report(const Circuit& c, std::uint64_t lower, std::size_t raised) {
  const std::size_t n = c.input_count();
  const Bits u = assignment_from_index(lower, n);
  Bits v = u;
  v[raised] = 1;
  CounterexampleReport r;
  r.kind = ReportKind::Monotonicity;
  r.witness = {u, v};
  r.expected = bits_string(evaluate(c, u));
  r.observed = bits_string(evaluate(c, v));
  r.location = c.gate(c.inputs()[raised]).name;
  return r;
}

std::string cell_location(std::size_t row, std::size_t col) {
  return "cell(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

std::vector<std::uint64_t> block_inputs(std::uint64_t base, std::size_t n, bool flattened) {
  auto words = enumeration_words(base, n);
  return flattened ? flatten_words(words) : words;
}

}  // namespace

// ---------------------------------------------------------------------------
// Truth tables and the monotone census

std::uint64_t TruthTable::code() const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < bits.size() && i < 64; ++i) {
    if (bits[i]) code |= std::uint64_t{1} << i;
  }
  return code;
}

std::string TruthTable::to_string() const { return bits_string(bits); }

TruthTable truth_table(const Circuit& c) {
  if (c.output_count() != 1) throw std::invalid_argument("truth table needs exactly one output");
  const std::size_t n = c.input_count();
  if (n > kMaxExhaustiveInputs) throw std::invalid_argument("too many inputs for a truth table");
  TruthTable t{n, Bits(std::size_t{1} << n)};
  for (std::uint64_t i = 0; i < t.bits.size(); ++i) {
    t.bits[i] = evaluate(c, assignment_from_index(i, n))[0];
  }
  return t;
}

TruthTable eq_table(std::size_t pairs) {
  const std::size_t n = 2 * pairs;
  TruthTable t{n, Bits(std::size_t{1} << n)};
  const std::uint64_t low = (std::uint64_t{1} << pairs) - 1;
  for (std::uint64_t i = 0; i < t.bits.size(); ++i) {
    t.bits[i] = ((i >> pairs) == (i & low)) ? 1 : 0;
  }
  return t;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> first_monotone_violation(
    const TruthTable& f) {
  const std::size_t n = f.arity;
  for (std::uint64_t u = 0; u < f.bits.size(); ++u) {
    if (!f.bits[u]) continue;
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if (u & bit) continue;
      if (!f.bits[u | bit]) return std::make_pair(u, u | bit);
    }
  }
  return std::nullopt;
}

bool is_monotone(const TruthTable& f) { return !first_monotone_violation(f).has_value(); }

std::vector<TruthTable> enumerate_monotone_functions(std::size_t arity) {
  if (arity > 4) throw std::invalid_argument("monotone census supports arity 0..4");
  const std::size_t rows = std::size_t{1} << arity;
  const std::uint64_t tables = std::uint64_t{1} << rows;
  std::vector<TruthTable> out;
  TruthTable t{arity, Bits(rows)};
  for (std::uint64_t code = 0; code < tables; ++code) {
    for (std::size_t i = 0; i < rows; ++i) t.bits[i] = (code >> i) & 1U;
    if (is_monotone(t)) out.push_back(t);
  }
  return out;
}

std::string_view to_string(ReportKind kind) {
  switch (kind) {
    case ReportKind::Equivalence:
      return "EQUIVALENCE";
    case ReportKind::Monotonicity:
      return "MONOTONICITY";
    case ReportKind::OneHot:
      return "ONE_HOT";
    case ReportKind::Rail:
      return "RAIL";
  }
  return "?";
}

std::string CounterexampleReport::to_line() const {
  std::string line = "kind=" + std::string(to_string(kind)) + " witness=";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) line += ',';
    line += bits_string(witness[i]);
  }
  line += " expected=" + expected + " observed=" + observed;
  return line;
}

std::string EqRefutation::chain_string() const {
  auto tuple = [](const Bits& bits) {
    std::string s = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (i) s += ',';
      s += bits[i] ? '1' : '0';
    }
    return s + ")";
  };
  return tuple(chain[0]) + " <= " + tuple(chain[1]) + " <= " + tuple(chain[2]);
}

EqRefutation refute_eq_monotone(std::size_t pairs) {
  if (pairs != 1 && pairs != 2) throw std::invalid_argument("eq refutation supports 1 or 2 pairs");
  const std::size_t n = 2 * pairs;
  const TruthTable eq = eq_table(pairs);
  const auto census = enumerate_monotone_functions(n);

  EqRefutation r;
  r.pairs = pairs;
  r.census_size = census.size();
  r.eq_in_census = std::find(census.begin(), census.end(), eq) != census.end();

  const std::uint64_t bottom = 0;
  const std::uint64_t top = eq.bits.size() - 1;
  const auto middle_it = std::find(eq.bits.begin(), eq.bits.end(), 0);
  const auto middle = static_cast<std::uint64_t>(middle_it - eq.bits.begin());
  r.chain = {assignment_from_index(bottom, n), assignment_from_index(middle, n),
             assignment_from_index(top, n)};
  r.eq_at_middle = eq.bits[middle];

  r.chain_forces_middle = true;
  for (const auto& f : census) {
    if (f.bits[bottom] && f.bits[top]) {
      ++r.members_equal_at_ends;
      if (!f.bits[middle]) r.chain_forces_middle = false;
    }
  }

  if (auto v = first_monotone_violation(eq)) {
    r.eq_violation.kind = ReportKind::Monotonicity;
    r.eq_violation.witness = {assignment_from_index(v->first, n),
                              assignment_from_index(v->second, n)};
    r.eq_violation.expected = eq.bits[v->first] ? "1" : "0";
    r.eq_violation.observed = eq.bits[v->second] ? "1" : "0";
    r.eq_violation.location = "EQ";
  }
  return r;
}

// ---------------------------------------------------------------------------
// Parallel kernels. Assignment space is split into 64-lane blocks; each
// block is simulated bit-sliced and the lowest failing key wins.

std::optional<CounterexampleReport> exhaustive_equiv(const Circuit& b, const Circuit& m,
                                                     EquivMode mode) {
  check_equiv_shape(b, m, mode);
  const std::size_t n = b.input_count();
  const std::int64_t blocks = static_cast<std::int64_t>(((std::uint64_t{1} << n) + 63) / 64);
  const bool flattened = mode == EquivMode::Flattened;
  std::atomic<std::uint64_t> best{kNoWitness};

#pragma omp parallel
  {
    std::vector<std::uint64_t> bw, mw;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      const std::uint64_t base = static_cast<std::uint64_t>(blk) * 64;
      if (base > best.load(std::memory_order_relaxed)) continue;
      const auto words = enumeration_words(base, n);
      simulate_words(b, words, bw);
      if (flattened) {
        simulate_words(m, flatten_words(words), mw);
      } else {
        simulate_words(m, words, mw);
      }
      std::uint64_t diff = 0;
      for (std::size_t o = 0; o < b.output_count(); ++o) {
        diff |= bw[b.outputs()[o]] ^ mw[m.outputs()[o]];
      }
      diff &= lane_mask(base, n);
      if (diff) {
        const std::uint64_t index = base + static_cast<unsigned>(std::countr_zero(diff));
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (index < cur && !best.compare_exchange_weak(cur, index)) {
        }
      }
    }
  }
  if (best.load() == kNoWitness) return std::nullopt;
  return equivalence_report(b, m, mode, best.load());
}

std::optional<CounterexampleReport> check_semantic_monotone(const Circuit& c) {
  const std::size_t n = c.input_count();
  if (n > kMaxMonotoneCheckInputs) {
    throw std::invalid_argument("semantic monotonicity check is limited to " +
                                std::to_string(kMaxMonotoneCheckInputs) + " inputs");
  }
  const std::int64_t blocks = static_cast<std::int64_t>(((std::uint64_t{1} << n) + 63) / 64);
  // Key orders witnesses by lower assignment, then by raised input.
  std::atomic<std::uint64_t> best{kNoWitness};

#pragma omp parallel
  {
    std::vector<std::uint64_t> low, high;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      const std::uint64_t base = static_cast<std::uint64_t>(blk) * 64;
      if (base * n > best.load(std::memory_order_relaxed)) continue;
      auto words = enumeration_words(base, n);
      const std::uint64_t mask = lane_mask(base, n);
      simulate_words(c, words, low);
      for (std::size_t k = 0; k < n; ++k) {
        const std::uint64_t candidates = ~words[k] & mask;
        if (!candidates) continue;
        const std::uint64_t saved = words[k];
        words[k] = ~std::uint64_t{0};
        simulate_words(c, words, high);
        words[k] = saved;
        std::uint64_t bad = 0;
        for (GateId o : c.outputs()) bad |= low[o] & ~high[o];
        bad &= candidates;
        if (!bad) continue;
        const std::uint64_t key = (base + static_cast<unsigned>(std::countr_zero(bad))) * n + k;
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (key < cur && !best.compare_exchange_weak(cur, key)) {
        }
      }
    }
  }
  if (best.load() == kNoWitness) return std::nullopt;
  return monotone_report(c, best.load() / n, static_cast<std::size_t>(best.load() % n));
}

std::optional<CounterexampleReport> check_one_hot(const Tableau& tableau) {
  const Circuit& c = tableau.circuit();
  const std::size_t n = tableau.input_length();
  if (n > kMaxExhaustiveInputs) throw std::invalid_argument("one-hot check is limited to 20 inputs");
  const bool flattened = tableau.encoding() == InputEncoding::Flattened;
  const std::size_t cells = tableau.rows() * tableau.cols();
  const std::size_t width = tableau.alphabet().size();
  const std::int64_t blocks = static_cast<std::int64_t>(((std::uint64_t{1} << n) + 63) / 64);
  std::atomic<std::uint64_t> best{kNoWitness};

#pragma omp parallel
  {
    std::vector<std::uint64_t> gw;
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t blk = 0; blk < blocks; ++blk) {
      const std::uint64_t base = static_cast<std::uint64_t>(blk) * 64;
      if (base * cells > best.load(std::memory_order_relaxed)) continue;
      simulate_words(c, block_inputs(base, n, flattened), gw);
      const std::uint64_t mask = lane_mask(base, n);
      for (std::size_t r = 0; r < tableau.rows(); ++r) {
        for (std::size_t col = 0; col < tableau.cols(); ++col) {
          std::uint64_t seen = 0, dup = 0;
          for (std::size_t e = 0; e < width; ++e) {
            const std::uint64_t w = gw[tableau.wire(r, col, e)];
            dup |= seen & w;
            seen |= w;
          }
          const std::uint64_t bad = (~seen | dup) & mask;
          if (!bad) continue;
          const std::uint64_t key =
              (base + static_cast<unsigned>(std::countr_zero(bad))) * cells + r * tableau.cols() + col;
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (key < cur && !best.compare_exchange_weak(cur, key)) {
          }
        }
      }
    }
  }
  if (best.load() == kNoWitness) return std::nullopt;

  const std::uint64_t index = best.load() / cells;
  const std::size_t cell = static_cast<std::size_t>(best.load() % cells);
  const std::size_t row = cell / tableau.cols();
  const std::size_t col = cell % tableau.cols();
  const Bits x = assignment_from_index(index, n);
  const Bits value = evaluate_all(c, flattened ? flatten_bits(x) : x);
  std::size_t hot = 0;
  for (std::size_t e = 0; e < width; ++e) hot += value[tableau.wire(row, col, e)];

  CounterexampleReport r;
  r.kind = ReportKind::OneHot;
  r.witness = {x};
  r.expected = "1";
  r.observed = std::to_string(hot);
  r.location = cell_location(row, col);
  return r;
}

// ---------------------------------------------------------------------------
// Serial reference kernels.

namespace reference {

std::optional<CounterexampleReport> exhaustive_equiv(const Circuit& b, const Circuit& m,
                                                     EquivMode mode) {
  check_equiv_shape(b, m, mode);
  const std::size_t n = b.input_count();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Bits x = assignment_from_index(i, n);
    const Bits eb = evaluate(b, x);
    const Bits em = evaluate(m, mode == EquivMode::Flattened ? flatten_bits(x) : x);
    if (eb != em) return equivalence_report(b, m, mode, i);
  }
  return std::nullopt;
}

std::optional<CounterexampleReport> check_semantic_monotone(const Circuit& c) {
  const std::size_t n = c.input_count();
  if (n > kMaxMonotoneCheckInputs) {
    throw std::invalid_argument("semantic monotonicity check is limited to " +
                                std::to_string(kMaxMonotoneCheckInputs) + " inputs");
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < total; ++u) {
    const Bits x = assignment_from_index(u, n);
    const Bits low = evaluate(c, x);
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k]) continue;
      Bits y = x;
      y[k] = 1;
      const Bits high = evaluate(c, y);
      for (std::size_t o = 0; o < low.size(); ++o) {
        if (low[o] > high[o]) return monotone_report(c, u, k);
      }
    }
  }
  return std::nullopt;
}

std::optional<CounterexampleReport> check_one_hot(const Tableau& tableau) {
  const std::size_t n = tableau.input_length();
  const bool flattened = tableau.encoding() == InputEncoding::Flattened;
  const std::size_t width = tableau.alphabet().size();
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 0; i < total; ++i) {
    const Bits x = assignment_from_index(i, n);
    const Bits value = evaluate_all(tableau.circuit(), flattened ? flatten_bits(x) : x);
    for (std::size_t r = 0; r < tableau.rows(); ++r) {
      for (std::size_t col = 0; col < tableau.cols(); ++col) {
        std::size_t hot = 0;
        for (std::size_t e = 0; e < width; ++e) hot += value[tableau.wire(r, col, e)];
        if (hot != 1) {
          CounterexampleReport rep;
          rep.kind = ReportKind::OneHot;
          rep.witness = {x};
          rep.expected = "1";
          rep.observed = std::to_string(hot);
          rep.location = cell_location(r, col);
          return rep;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace reference

bool certifies(const CounterexampleReport& report, const Circuit& b, const Circuit& m,
               EquivMode mode) {
  switch (report.kind) {
    case ReportKind::Equivalence: {
      if (report.witness.size() != 1) return false;
      const Bits& x = report.witness[0];
      if (x.size() != b.input_count()) return false;
      const Bits eb = evaluate(b, x);
      const Bits em = evaluate(m, mode == EquivMode::Flattened ? flatten_bits(x) : x);
      return eb != em && bits_string(eb) == report.expected && bits_string(em) == report.observed;
    }
    case ReportKind::Monotonicity: {
      if (report.witness.size() != 2) return false;
      const Bits& u = report.witness[0];
      const Bits& v = report.witness[1];
      if (u.size() != b.input_count() || v.size() != u.size()) return false;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] > v[i]) return false;
      }
      const Bits eu = evaluate(b, u);
      const Bits ev = evaluate(b, v);
      bool violated = false;
      for (std::size_t o = 0; o < eu.size(); ++o) violated |= eu[o] > ev[o];
      return violated && bits_string(eu) == report.expected && bits_string(ev) == report.observed;
    }
    case ReportKind::Rail: {
      if (report.witness.size() != 1) return false;
      auto id = b.find(report.location);
      if (!id) return false;
      const RailPair rails = rail_map(b)[*id];
      auto z = m.find(rails.zero_rail);
      auto o = m.find(rails.one_rail);
      if (!z || !o) return false;
      const Bits value = evaluate_all(m, flatten_bits(report.witness[0]));
      return value[*z] == value[*o] && report.observed == (value[*z] ? "1" : "0") &&
             report.expected == (value[*o] ? "0" : "1");
    }
    case ReportKind::OneHot:
      return false;
  }
  return false;
}

bool certifies(const CounterexampleReport& report, const Tableau& tableau) {
  if (report.kind != ReportKind::OneHot || report.witness.size() != 1) return false;
  const Bits& x = report.witness[0];
  if (x.size() != tableau.input_length()) return false;
  const bool flattened = tableau.encoding() == InputEncoding::Flattened;
  const Bits value = evaluate_all(tableau.circuit(), flattened ? flatten_bits(x) : x);
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    for (std::size_t col = 0; col < tableau.cols(); ++col) {
      if (cell_location(r, col) != report.location) continue;
      std::size_t hot = 0;
      for (std::size_t e = 0; e < tableau.alphabet().size(); ++e) {
        hot += value[tableau.wire(r, col, e)];
      }
      return hot != 1 && std::to_string(hot) == report.observed;
    }
  }
  return false;
}

std::optional<CounterexampleReport> rail_counterexample(const RailReport& report) {
  if (report.ok) return std::nullopt;
  CounterexampleReport r;
  r.kind = ReportKind::Rail;
  r.witness = {report.witness};
  r.expected = report.one_value ? "0" : "1";
  r.observed = report.zero_value ? "1" : "0";
  r.location = report.wire;
  return r;
}

SizeReport size_report(const Circuit& source, const Circuit& target) {
  const auto s = stats(source);
  const auto t = stats(target);
  SizeReport r;
  r.source_gates = s.total();
  r.target_gates = t.total();
  r.ratio = r.source_gates == 0 ? 0.0
                                : static_cast<double>(r.target_gates) /
                                      static_cast<double>(r.source_gates);
  r.not_count_source = s.not_gates;
  r.not_count_target = t.not_gates;
  return r;
}

}  // namespace monoflat
