#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>

#include "monoflat/circuit.hpp"

namespace monoflat {

/// Forward-only source of input symbols. next() returns the raw symbol or
/// nullopt at end of stream; there is no way to rewind.
class BitSource {
 public:
  virtual ~BitSource() = default;
  virtual std::optional<char> next() = 0;
};

class BitSink {
 public:
  virtual ~BitSink() = default;
  virtual void put(std::uint8_t bit) = 0;
};

struct TransducerStats {
  std::size_t input_bits_read = 0;
  std::size_t output_bits_written = 0;
  std::size_t peak_state_bits = 0;

  friend bool operator==(const TransducerStats&, const TransducerStats&) = default;
};

/// Control state besides the position counter: the current-symbol register
/// and a one-bit emit phase.
inline constexpr std::size_t kTransducerControlBits = 2;

class TransducerError : public std::runtime_error {
 public:
  TransducerError(std::size_t position, char symbol);
  std::size_t position() const { return position_; }
  char symbol() const { return symbol_; }

 private:
  std::size_t position_;
  char symbol_;
};

/// Single-pass flattening: each input bit b is followed on the sink by
/// (!b, b) before the next read. Working memory is the position counter
/// plus kTransducerControlBits; peak_state_bits reports its high-water mark.
/// Throws TransducerError on a symbol other than '0'/'1'; bits already
/// emitted stay emitted.
TransducerStats stream_flatten(BitSource& source, BitSink& sink);

// Adapters over standard streams and in-memory bit-strings.

/// Reads '0'/'1' characters, skipping LF.
class IstreamBitSource : public BitSource {
 public:
  explicit IstreamBitSource(std::istream& in) : in_(in) {}
  std::optional<char> next() override;

 private:
  std::istream& in_;
};

class OstreamBitSink : public BitSink {
 public:
  explicit OstreamBitSink(std::ostream& out) : out_(out) {}
  void put(std::uint8_t bit) override;

 private:
  std::ostream& out_;
};

class BitsSource : public BitSource {
 public:
  explicit BitsSource(const Bits& bits) : bits_(bits) {}
  std::optional<char> next() override {
    if (pos_ >= bits_.size()) return std::nullopt;
    return bits_[pos_++] ? '1' : '0';
  }

 private:
  const Bits& bits_;
  std::size_t pos_ = 0;
};

class BitsSink : public BitSink {
 public:
  void put(std::uint8_t bit) override { bits_.push_back(bit); }
  const Bits& bits() const { return bits_; }

 private:
  Bits bits_;
};

}  // namespace monoflat
