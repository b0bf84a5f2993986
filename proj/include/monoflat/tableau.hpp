#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoflat/circuit.hpp"
#include "monoflat/turing.hpp"

namespace monoflat {

/// Cell contents of a tableau: every tape symbol, then every (state, symbol)
/// head marker, states and symbols in declaration order.
class CellAlphabet {
 public:
  explicit CellAlphabet(const TuringMachine& tm);

  std::size_t size() const { return symbols_ + states_ * symbols_; }
  std::size_t plain(SymbolId s) const { return s; }
  std::size_t head(StateId q, SymbolId s) const { return symbols_ + q * symbols_ + s; }

  bool is_head(std::size_t entry) const { return entry >= symbols_; }
  StateId state(std::size_t entry) const { return static_cast<StateId>((entry - symbols_) / symbols_); }
  /// Tape symbol under the cell, head or not.
  SymbolId symbol(std::size_t entry) const {
    return static_cast<SymbolId>(is_head(entry) ? (entry - symbols_) % symbols_ : entry);
  }

  std::string render(const TuringMachine& tm, std::size_t entry) const;

 private:
  std::size_t symbols_;
  std::size_t states_;
};

enum class InputEncoding {
  Raw,        // n inputs x0..x{n-1}; row 0 complements them with NOT gates
  Flattened,  // 2n rail inputs x0__0, x0__1, ...; no NOT gates at all
};

struct CompileOptions {
  std::size_t gate_cap = 10'000'000;
};

class TableauError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class GateCapError : public TableauError {
 public:
  GateCapError(std::size_t needed, std::size_t cap)
      : TableauError("tableau needs " + std::to_string(needed) + " gates, cap is " +
                     std::to_string(cap)),
        needed_(needed) {}

  std::size_t needed() const { return needed_; }

 private:
  std::size_t needed_;
};

/// A compiled configuration-history grid: (t+1) rows by (t+1) columns, each
/// cell a one-hot vector of CellAlphabet wires. Row r+1 is derived from row r
/// through legal 3-cell windows; accept/reject heads are absorbing. The single
/// output is 1 iff some row-t cell holds an accept-state head.
class Tableau {
 public:
  const Circuit& circuit() const& { return circuit_; }
  Circuit circuit() && { return std::move(circuit_); }
  const TuringMachine& machine() const { return machine_; }
  const CellAlphabet& alphabet() const { return alphabet_; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t input_length() const { return n_; }
  InputEncoding encoding() const { return encoding_; }

  GateId wire(std::size_t row, std::size_t col, std::size_t entry) const {
    return wires_[(row * cols_ + col) * alphabet_.size() + entry];
  }
  /// Rows >= 1 (and constant row-0 cells) follow `c_{row}_{col}_{entry}`;
  /// input-driven row-0 wires are the input or its complement.
  const std::string& wire_name(std::size_t row, std::size_t col, std::size_t entry) const {
    return circuit_.gate(wire(row, col, entry)).name;
  }

  static std::string cell_wire_name(std::size_t row, std::size_t col, std::size_t entry);

 private:
  friend Tableau build_tableau(const TuringMachine&, std::size_t, std::size_t, InputEncoding,
                               const CompileOptions&);
  Tableau(const TuringMachine& tm, std::size_t n, std::size_t t, InputEncoding encoding)
      : machine_(tm), alphabet_(tm), rows_(t + 1), cols_(t + 1), n_(n), encoding_(encoding) {}

  TuringMachine machine_;
  CellAlphabet alphabet_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t n_;
  InputEncoding encoding_;
  Circuit circuit_;
  std::vector<GateId> wires_;
};

/// Throws TableauError when t < 1 or n > t + 1, GateCapError when the
/// circuit would exceed options.gate_cap.
Tableau build_tableau(const TuringMachine& tm, std::size_t n, std::size_t t, InputEncoding encoding,
                      const CompileOptions& options = {});

/// Raw-input circuit: evaluate(c, x) == 1 iff run(tm, x, t) accepts. The only
/// NOT gates are the n input complements.
Circuit compile(const TuringMachine& tm, std::size_t n, std::size_t t,
                const CompileOptions& options = {});

/// Same circuit over flatten_bits(x): every input complement is replaced by
/// its zero rail, so the result has no NOT gate.
Circuit compile_flattened(const TuringMachine& tm, std::size_t n, std::size_t t,
                          const CompileOptions& options = {});

/// Exact gate count of compile()/compile_flattened() for these parameters,
/// computed without building the circuit.
std::size_t tableau_gate_count(const TuringMachine& tm, std::size_t n, std::size_t t,
                               InputEncoding encoding);

/// Decoded cell entries of every tableau row after evaluating the raw
/// circuit on x. Throws std::logic_error if a cell is not exactly one-hot.
std::vector<std::vector<std::size_t>> tableau_grid(const Tableau& tableau, const Bits& x);

/// Rendered rows of tableau_grid for a freshly compiled raw tableau.
std::vector<std::vector<std::string>> tableau_trace(const TuringMachine& tm, const Bits& x,
                                                    std::size_t t,
                                                    const CompileOptions& options = {});

}  // namespace monoflat
