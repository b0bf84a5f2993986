#include "monoflat/turing.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "monoflat/netlist.hpp"

namespace monoflat {
namespace {

template <typename Names>
std::optional<std::uint32_t> index_of(const Names& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::uint32_t>(it - names.begin());
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) words.push_back(w);
  return words;
}

}  // namespace

TuringMachine::TuringMachine(std::vector<std::string> states, std::vector<std::string> alphabet,
                             StateId start, StateId accept, StateId reject,
                             std::vector<std::optional<Transition>> delta)
    : states_(std::move(states)),
      alphabet_(std::move(alphabet)),
      start_(start),
      accept_(accept),
      reject_(reject),
      delta_(std::move(delta)) {
  const auto nq = states_.size();
  const auto ns = alphabet_.size();
  if (start_ >= nq || accept_ >= nq || reject_ >= nq) throw TmError("state id out of range");
  if (accept_ == reject_) throw TmError("accept and reject states must differ");
  auto blank = find_symbol("_");
  auto zero = find_symbol("0");
  auto one = find_symbol("1");
  if (!blank || !zero || !one) throw TmError("alphabet must contain 0, 1 and _");
  blank_ = *blank;
  zero_ = *zero;
  one_ = *one;
  if (delta_.size() != nq * ns) throw TmError("transition table has the wrong size");
  for (StateId q = 0; q < nq; ++q) {
    for (SymbolId s = 0; s < ns; ++s) {
      const auto& t = delta_[q * ns + s];
      if (is_halting(q)) {
        if (t) throw TmError("halting state '" + states_[q] + "' has a transition");
        continue;
      }
      if (!t) {
        throw TmError("missing transition (" + states_[q] + ", " + alphabet_[s] + ")");
      }
      if (t->next >= nq || t->write >= ns) throw TmError("transition target out of range");
    }
  }
}

std::optional<StateId> TuringMachine::find_state(std::string_view name) const {
  return index_of(states_, name);
}

std::optional<SymbolId> TuringMachine::find_symbol(std::string_view name) const {
  return index_of(alphabet_, name);
}

const Transition& TuringMachine::delta(StateId q, SymbolId s) const {
  const auto& t = delta_.at(q * alphabet_.size() + s);
  if (!t) throw std::logic_error("no transition out of halting state '" + states_[q] + "'");
  return *t;
}

TuringMachine parse_tm(std::string_view text) {
  std::vector<std::string> states, alphabet;
  std::optional<std::string> start, accept, reject;
  struct RawDelta {
    std::size_t line;
    std::vector<std::string> words;
  };
  std::vector<RawDelta> raw;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = split_words(line);
    if (words.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError(line_no, "expected 'key: value'");
    const auto keys = split_words(line.substr(0, colon));
    if (keys.size() != 1) throw ParseError(line_no, "malformed key");
    const std::string& key = keys[0];
    auto values = split_words(line.substr(colon + 1));

    auto single = [&](std::optional<std::string>& slot) {
      if (values.size() != 1) throw ParseError(line_no, "'" + key + "' takes exactly one state");
      if (slot) throw ParseError(line_no, "'" + key + "' given twice");
      slot = values[0];
    };
    auto list = [&](std::vector<std::string>& slot) {
      if (!slot.empty()) throw ParseError(line_no, "'" + key + "' given twice");
      if (values.empty()) throw ParseError(line_no, "'" + key + "' is empty");
      std::set<std::string> seen;
      for (const auto& v : values) {
        if (!seen.insert(v).second) throw ParseError(line_no, "duplicate entry '" + v + "'");
      }
      slot = std::move(values);
    };

    if (key == "states") {
      list(states);
    } else if (key == "alphabet") {
      list(alphabet);
    } else if (key == "start") {
      single(start);
    } else if (key == "accept") {
      single(accept);
    } else if (key == "reject") {
      single(reject);
    } else if (key == "delta") {
      if (values.size() != 6 || values[2] != "->") {
        throw ParseError(line_no, "expected 'delta: STATE SYMBOL -> STATE SYMBOL L|R'");
      }
      raw.push_back({line_no, std::move(values)});
    } else {
      throw ParseError(line_no, "unknown key '" + key + "'");
    }
  }

  const std::size_t end_line = line_no;
  if (states.empty()) throw ParseError(end_line, "missing 'states'");
  if (alphabet.empty()) throw ParseError(end_line, "missing 'alphabet'");
  if (!start || !accept || !reject) throw ParseError(end_line, "missing start/accept/reject");

  auto state = [&](const std::string& name, std::size_t line) {
    auto id = index_of(states, name);
    if (!id) throw ParseError(line, "unknown state '" + name + "'");
    return *id;
  };
  auto symbol = [&](const std::string& name, std::size_t line) {
    auto id = index_of(alphabet, name);
    if (!id) throw ParseError(line, "unknown symbol '" + name + "'");
    return *id;
  };

  for (const char* required : {"0", "1", "_"}) {
    if (!index_of(alphabet, required)) {
      throw ParseError(end_line, std::string("alphabet must contain '") + required + "'");
    }
  }
  const StateId q_start = state(*start, end_line);
  const StateId q_accept = state(*accept, end_line);
  const StateId q_reject = state(*reject, end_line);
  if (q_accept == q_reject) throw ParseError(end_line, "accept and reject must differ");

  const std::size_t ns = alphabet.size();
  std::vector<std::optional<Transition>> delta(states.size() * ns);
  for (const auto& d : raw) {
    const StateId q = state(d.words[0], d.line);
    const SymbolId s = symbol(d.words[1], d.line);
    const StateId next = state(d.words[3], d.line);
    const SymbolId write = symbol(d.words[4], d.line);
    Move move;
    if (d.words[5] == "L") {
      move = Move::Left;
    } else if (d.words[5] == "R") {
      move = Move::Right;
    } else {
      throw ParseError(d.line, "direction must be L or R, got '" + d.words[5] + "'");
    }
    if (q == q_accept || q == q_reject) {
      throw ParseError(d.line, "transition out of halting state '" + d.words[0] + "'");
    }
    auto& slot = delta[q * ns + s];
    if (slot) throw ParseError(d.line, "duplicate transition (" + d.words[0] + ", " + d.words[1] + ")");
    slot = Transition{next, write, move};
  }
  for (StateId q = 0; q < states.size(); ++q) {
    if (q == q_accept || q == q_reject) continue;
    for (SymbolId s = 0; s < ns; ++s) {
      if (!delta[q * ns + s]) {
        throw ParseError(end_line, "missing transition (" + states[q] + ", " + alphabet[s] + ")");
      }
    }
  }
  return TuringMachine(std::move(states), std::move(alphabet), q_start, q_accept, q_reject,
                       std::move(delta));
}

TuringMachine read_tm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tm(buf.str());
}

Configuration initial_configuration(const TuringMachine& tm, const Bits& input) {
  Configuration c;
  c.tape.reserve(input.size());
  for (auto b : input) c.tape.push_back(tm.bit_symbol(b));
  c.state = tm.start();
  return c;
}

Configuration step(const TuringMachine& tm, const Configuration& c) {
  if (tm.is_halting(c.state)) {
    throw TmError("step on halted configuration (state '" + tm.states()[c.state] + "')");
  }
  Configuration next = c;
  if (next.head >= next.tape.size()) next.tape.resize(next.head + 1, tm.blank());
  const Transition& t = tm.delta(c.state, next.tape[next.head]);
  next.tape[next.head] = t.write;
  next.state = t.next;
  if (t.move == Move::Right) {
    ++next.head;
  } else if (next.head > 0) {
    --next.head;
  }
  ++next.steps_taken;
  return next;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Accept:
      return "ACCEPT";
    case Verdict::Reject:
      return "REJECT";
    case Verdict::Timeout:
      return "TIMEOUT";
  }
  return "?";
}

RunResult run(const TuringMachine& tm, const Bits& input, std::size_t max_steps) {
  RunResult result;
  result.final = initial_configuration(tm, input);
  while (true) {
    if (result.final.state == tm.accept()) {
      result.verdict = Verdict::Accept;
      return result;
    }
    if (result.final.state == tm.reject()) {
      result.verdict = Verdict::Reject;
      return result;
    }
    if (result.final.steps_taken >= max_steps) {
      result.verdict = Verdict::Timeout;
      return result;
    }
    result.final = step(tm, result.final);
  }
}

std::vector<std::string> render_cells(const TuringMachine& tm, const Configuration& c,
                                      std::size_t width) {
  std::vector<std::string> cells;
  cells.reserve(width);
  for (std::size_t j = 0; j < width; ++j) {
    const SymbolId s = j < c.tape.size() ? c.tape[j] : tm.blank();
    if (j == c.head) {
      cells.push_back("(" + tm.states()[c.state] + "," + tm.alphabet()[s] + ")");
    } else {
      cells.push_back(tm.alphabet()[s]);
    }
  }
  return cells;
}

}  // namespace monoflat
