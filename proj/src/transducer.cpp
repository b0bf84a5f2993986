#include "monoflat/transducer.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <string>

namespace monoflat {

TransducerError::TransducerError(std::size_t position, char symbol)
    : std::runtime_error("non-bit symbol at input position " + std::to_string(position)),
      position_(position),
      symbol_(symbol) {}

TransducerStats stream_flatten(BitSource& source, BitSink& sink) {
  TransducerStats stats;
  std::uint64_t position = 0;
  stats.peak_state_bits = kTransducerControlBits;

  while (auto symbol = source.next()) {
    if (*symbol != '0' && *symbol != '1') throw TransducerError(position, *symbol);
    const std::uint8_t bit = *symbol == '1' ? 1 : 0;
    ++stats.input_bits_read;
    sink.put(bit ^ 1U);
    sink.put(bit);
    stats.output_bits_written += 2;
    ++position;
    stats.peak_state_bits = std::max<std::size_t>(
        stats.peak_state_bits, static_cast<std::size_t>(std::bit_width(position)) +
                                   kTransducerControlBits);
  }
  return stats;
}

std::optional<char> IstreamBitSource::next() {
  std::istream::int_type ch;
  do {
    ch = in_.get();
    if (ch == std::istream::traits_type::eof()) return std::nullopt;
  } while (ch == '\n');
  return static_cast<char>(ch);
}

void OstreamBitSink::put(std::uint8_t bit) { out_.put(bit ? '1' : '0'); }

}  // namespace monoflat
