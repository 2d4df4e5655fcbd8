#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "alcs/index_builder.hpp"

namespace alcs {

// Serialized layout, version 1, all integers little-endian:
//   "ALCS" | version u32 | epsilon f64 | n u64 | z u64 | base u64 |
//   seed u64 | max_len u64 | length count u32 | lengths u32 each |
//   left entry count u64 | entries (length u32, fp u64, lo u32, hi u32) |
//   right map likewise | y_of_x u32*z | boundary_of_x u64*z | crc32 u32
// The fingerprint modulus is implied by the version. Wavelet levels are
// derived data and are rebuilt on load. The trailing CRC-32 covers every
// preceding byte.

class IndexIoError : public std::runtime_error {
public:
    enum class Kind { BadMagic, BadVersion, BadChecksum, Truncated, Malformed, Io };

    IndexIoError(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// The exact file bytes for an index; deterministic.
std::string serialize_index(const AlcsIndex& index);

// Parses bytes produced by serialize_index. Throws IndexIoError with the
// kind naming what went wrong: Truncated when the body runs out, BadMagic /
// BadVersion for a foreign or future file, BadChecksum on a CRC mismatch,
// Malformed when checksummed content is still inconsistent.
AlcsIndex deserialize_index(std::string_view bytes);

// Writes serialize_index's bytes to the stream; returns the byte count.
// Throws IndexIoError(Io) on stream failure.
uint64_t save_index(const AlcsIndex& index, std::ostream& out);

// Reads the whole stream and deserializes it.
AlcsIndex load_index(std::istream& in);

// fstream wrappers; throw IndexIoError(Io) when the file cannot be opened.
uint64_t save_index_file(const AlcsIndex& index, const std::string& path);
AlcsIndex load_index_file(const std::string& path);

}  // namespace alcs
