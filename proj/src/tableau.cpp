#include "monoflat/tableau.hpp"

#include <map>
#include <optional>

#include "monoflat/dual_rail.hpp"
#include "monoflat/simulate.hpp"

namespace monoflat {

CellAlphabet::CellAlphabet(const TuringMachine& tm)
    : symbols_(tm.symbol_count()), states_(tm.state_count()) {}

std::string CellAlphabet::render(const TuringMachine& tm, std::size_t entry) const {
  if (!is_head(entry)) return tm.alphabet()[entry];
  return "(" + tm.states()[state(entry)] + "," + tm.alphabet()[symbol(entry)] + ")";
}

std::string Tableau::cell_wire_name(std::size_t row, std::size_t col, std::size_t entry) {
  return "c_" + std::to_string(row) + "_" + std::to_string(col) + "_" + std::to_string(entry);
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

enum class Edge { Left, Interior, Right };

// Windows for one column class. A window is 2 or 3 wires of the row above;
// 3-wire windows share the AND of their (left, center) pair.
struct Window {
  std::size_t pair = kNone;   // index into CellPlan::pairs, 3-wire windows only
  std::size_t first = kNone;  // 2-wire windows: column offsets -1/0/+1 encoded below
  int first_offset = 0;
  std::size_t second = kNone;
  int second_offset = 0;
};

struct CellPlan {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (left, center)
  std::vector<std::vector<Window>> by_result;              // indexed by next entry

  std::size_t gate_count() const {
    std::size_t gates = pairs.size();
    for (const auto& windows : by_result) {
      gates += windows.empty() ? 1 : 2 * windows.size() - 1;
    }
    return gates;
  }
};

// Next content of the center cell given its neighbourhood; kNone marks an
// absent (virtual wall or virtual blank) neighbour.
std::size_t next_entry(const TuringMachine& tm, const CellAlphabet& cells, std::size_t left,
                       std::size_t center, std::size_t right, bool at_wall) {
  if (cells.is_head(center)) {
    const StateId q = cells.state(center);
    if (tm.is_halting(q)) return center;
    const Transition& t = tm.delta(q, cells.symbol(center));
    if (t.move == Move::Left && at_wall) return cells.head(t.next, t.write);
    return cells.plain(t.write);
  }
  const SymbolId under = cells.symbol(center);
  if (left != kNone && cells.is_head(left)) {
    const StateId q = cells.state(left);
    if (!tm.is_halting(q)) {
      const Transition& t = tm.delta(q, cells.symbol(left));
      if (t.move == Move::Right) return cells.head(t.next, under);
    }
  }
  if (right != kNone && cells.is_head(right)) {
    const StateId q = cells.state(right);
    if (!tm.is_halting(q)) {
      const Transition& t = tm.delta(q, cells.symbol(right));
      if (t.move == Move::Left) return cells.head(t.next, under);
    }
  }
  return center;
}

CellPlan make_plan(const TuringMachine& tm, const CellAlphabet& cells, Edge edge) {
  const std::size_t size = cells.size();
  CellPlan plan;
  plan.by_result.resize(size);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;

  auto heads = [&](std::size_t e) { return e != kNone && cells.is_head(e) ? 1 : 0; };
  const std::vector<std::size_t> absent{kNone};
  std::vector<std::size_t> all(size);
  for (std::size_t e = 0; e < size; ++e) all[e] = e;

  const auto& lefts = edge == Edge::Left ? absent : all;
  const auto& rights = edge == Edge::Right ? absent : all;
  for (std::size_t left : lefts) {
    for (std::size_t center = 0; center < size; ++center) {
      for (std::size_t right : rights) {
        // Rows of a run hold at most one head, so only these windows occur.
        if (heads(left) + heads(center) + heads(right) > 1) continue;
        const std::size_t result =
            next_entry(tm, cells, left, center, right, edge == Edge::Left);
        Window w;
        if (left == kNone) {
          w.first = center;
          w.first_offset = 0;
          w.second = right;
          w.second_offset = 1;
        } else if (right == kNone) {
          w.first = left;
          w.first_offset = -1;
          w.second = center;
          w.second_offset = 0;
        } else {
          auto key = std::make_pair(left, center);
          auto [it, inserted] = pair_index.emplace(key, plan.pairs.size());
          if (inserted) plan.pairs.push_back(key);
          w.pair = it->second;
          w.second = right;
          w.second_offset = 1;
        }
        plan.by_result[result].push_back(w);
      }
    }
  }
  return plan;
}

struct Plans {
  CellPlan left, interior, right;

  Plans(const TuringMachine& tm, const CellAlphabet& cells)
      : left(make_plan(tm, cells, Edge::Left)),
        interior(make_plan(tm, cells, Edge::Interior)),
        right(make_plan(tm, cells, Edge::Right)) {}

  const CellPlan& for_column(std::size_t col, std::size_t cols) const {
    if (col == 0) return left;
    if (col + 1 == cols) return right;
    return interior;
  }
};

void check_shape(std::size_t n, std::size_t t) {
  if (t < 1) throw TableauError("step bound t must be at least 1");
  if (n > t + 1) {
    throw TableauError("input length " + std::to_string(n) + " exceeds tableau width " +
                       std::to_string(t + 1));
  }
}

std::size_t count_gates(const TuringMachine& tm, const Plans& plans, std::size_t n, std::size_t t) {
  const CellAlphabet cells(tm);
  const std::size_t cols = t + 1;
  // Raw: n inputs + n complements; flattened: 2n rails. Either way 2n.
  std::size_t gates = 2 * n + cols * cells.size() - 2 * n;
  std::size_t row = plans.left.gate_count() + plans.right.gate_count() +
                    (cols - 2) * plans.interior.gate_count();
  gates += t * row;
  gates += tm.symbol_count() * cols - 1;  // accept collector
  return gates;
}

}  // namespace

std::size_t tableau_gate_count(const TuringMachine& tm, std::size_t n, std::size_t t,
                               InputEncoding) {
  check_shape(n, t);
  const CellAlphabet cells(tm);
  return count_gates(tm, Plans(tm, cells), n, t);
}

Tableau build_tableau(const TuringMachine& tm, std::size_t n, std::size_t t, InputEncoding encoding,
                      const CompileOptions& options) {
  check_shape(n, t);
  Tableau tab(tm, n, t, encoding);
  const CellAlphabet& cells = tab.alphabet_;
  const Plans plans(tm, cells);
  const std::size_t expected = count_gates(tm, plans, n, t);
  if (expected > options.gate_cap) throw GateCapError(expected, options.gate_cap);

  const std::size_t rows = tab.rows_;
  const std::size_t cols = tab.cols_;
  const std::size_t width = cells.size();
  tab.wires_.assign(rows * cols * width, 0);
  auto wire = [&](std::size_t r, std::size_t c, std::size_t e) -> GateId& {
    return tab.wires_[(r * cols + c) * width + e];
  };

  CircuitBuilder b;
  b.reserve(expected);

  // Input layer. zero[i]/one[i] are the wires hot when x_i is 0/1.
  std::vector<GateId> zero(n), one(n);
  if (encoding == InputEncoding::Raw) {
    for (std::size_t i = 0; i < n; ++i) one[i] = b.add_input("x" + std::to_string(i));
    for (std::size_t i = 0; i < n; ++i) zero[i] = b.add_not("nx" + std::to_string(i), one[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const RailPair r = rail_names("x" + std::to_string(i));
      zero[i] = b.add_input(r.zero_rail);
      one[i] = b.add_input(r.one_rail);
    }
  }

  // Row 0: the start configuration with the head on cell 0.
  for (std::size_t c = 0; c < cols; ++c) {
    std::optional<std::size_t> zero_entry, one_entry, const_entry;
    if (c < n) {
      zero_entry = c == 0 ? cells.head(tm.start(), tm.zero()) : cells.plain(tm.zero());
      one_entry = c == 0 ? cells.head(tm.start(), tm.one()) : cells.plain(tm.one());
    } else {
      const_entry = c == 0 ? cells.head(tm.start(), tm.blank()) : cells.plain(tm.blank());
    }
    for (std::size_t e = 0; e < width; ++e) {
      if (zero_entry == e) {
        wire(0, c, e) = zero[c];
      } else if (one_entry == e) {
        wire(0, c, e) = one[c];
      } else {
        wire(0, c, e) = b.add_const(Tableau::cell_wire_name(0, c, e), const_entry == e);
      }
    }
  }

  std::vector<GateId> pair_gates;
  std::vector<GateId> terms, next_terms;
  for (std::size_t r = 1; r < rows; ++r) {
    const std::string row_tag = std::to_string(r) + "_";
    for (std::size_t c = 0; c < cols; ++c) {
      const CellPlan& plan = plans.for_column(c, cols);
      const std::string tag = row_tag + std::to_string(c) + "_";

      pair_gates.clear();
      for (std::size_t p = 0; p < plan.pairs.size(); ++p) {
        const auto [left, center] = plan.pairs[p];
        pair_gates.push_back(b.add_and("p_" + tag + std::to_string(p), wire(r - 1, c - 1, left),
                                       wire(r - 1, c, center)));
      }

      for (std::size_t e = 0; e < width; ++e) {
        const auto& windows = plan.by_result[e];
        const std::string final_name = Tableau::cell_wire_name(r, c, e);
        if (windows.empty()) {
          wire(r, c, e) = b.add_const(final_name, false);
          continue;
        }
        const std::string etag = tag + std::to_string(e) + "_";
        terms.clear();
        for (std::size_t k = 0; k < windows.size(); ++k) {
          const Window& w = windows[k];
          std::string name = windows.size() == 1 ? final_name : "w_" + etag + std::to_string(k);
          const GateId second = wire(r - 1, c + w.second_offset, w.second);
          const GateId first =
              w.pair != kNone ? pair_gates[w.pair] : wire(r - 1, c + w.first_offset, w.first);
          terms.push_back(b.add_and(std::move(name), first, second));
        }
        std::size_t or_index = 0;
        while (terms.size() > 2) {
          next_terms.clear();
          for (std::size_t k = 0; k + 1 < terms.size(); k += 2) {
            next_terms.push_back(
                b.add_or("o_" + etag + std::to_string(or_index++), terms[k], terms[k + 1]));
          }
          if (terms.size() % 2 == 1) next_terms.push_back(terms.back());
          terms.swap(next_terms);
        }
        wire(r, c, e) = terms.size() == 1 ? terms[0] : b.add_or(final_name, terms[0], terms[1]);
      }
    }
  }

  // Output: some cell of the last row holds the accept state.
  terms.clear();
  for (std::size_t c = 0; c < cols; ++c) {
    for (SymbolId s = 0; s < tm.symbol_count(); ++s) {
      terms.push_back(wire(rows - 1, c, cells.head(tm.accept(), s)));
    }
  }
  std::size_t acc_index = 0;
  while (terms.size() > 2) {
    next_terms.clear();
    for (std::size_t k = 0; k + 1 < terms.size(); k += 2) {
      next_terms.push_back(
          b.add_or("acc_" + std::to_string(acc_index++), terms[k], terms[k + 1]));
    }
    if (terms.size() % 2 == 1) next_terms.push_back(terms.back());
    terms.swap(next_terms);
  }
  b.add_output(b.add_or("accept", terms[0], terms[1]));

  tab.circuit_ = std::move(b).build();
  if (tab.circuit_.size() != expected) {
    throw std::logic_error("tableau gate count mismatch: built " +
                           std::to_string(tab.circuit_.size()) + ", expected " +
                           std::to_string(expected));
  }
  return tab;
}

Circuit compile(const TuringMachine& tm, std::size_t n, std::size_t t,
                const CompileOptions& options) {
  return build_tableau(tm, n, t, InputEncoding::Raw, options).circuit();
}

Circuit compile_flattened(const TuringMachine& tm, std::size_t n, std::size_t t,
                          const CompileOptions& options) {
  return build_tableau(tm, n, t, InputEncoding::Flattened, options).circuit();
}

std::vector<std::vector<std::size_t>> tableau_grid(const Tableau& tableau, const Bits& x) {
  if (x.size() != tableau.input_length()) {
    throw std::invalid_argument("input length " + std::to_string(x.size()) +
                                " does not match tableau input length " +
                                std::to_string(tableau.input_length()));
  }
  const Bits assignment = tableau.encoding() == InputEncoding::Raw ? x : flatten_bits(x);
  const Bits value = evaluate_all(tableau.circuit(), assignment);
  const std::size_t width = tableau.alphabet().size();

  std::vector<std::vector<std::size_t>> grid(tableau.rows(),
                                             std::vector<std::size_t>(tableau.cols()));
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    for (std::size_t c = 0; c < tableau.cols(); ++c) {
      std::size_t hot = 0;
      for (std::size_t e = 0; e < width; ++e) {
        if (value[tableau.wire(r, c, e)]) {
          grid[r][c] = e;
          ++hot;
        }
      }
      if (hot != 1) {
        throw std::logic_error("tableau cell (" + std::to_string(r) + "," + std::to_string(c) +
                               ") has " + std::to_string(hot) + " hot entries");
      }
    }
  }
  return grid;
}

std::vector<std::vector<std::string>> tableau_trace(const TuringMachine& tm, const Bits& x,
                                                    std::size_t t, const CompileOptions& options) {
  const Tableau tableau = build_tableau(tm, x.size(), t, InputEncoding::Raw, options);
  const auto grid = tableau_grid(tableau, x);
  std::vector<std::vector<std::string>> rendered;
  rendered.reserve(grid.size());
  for (const auto& row : grid) {
    auto& out = rendered.emplace_back();
    for (std::size_t e : row) out.push_back(tableau.alphabet().render(tm, e));
  }
  return rendered;
}

}  // namespace monoflat
