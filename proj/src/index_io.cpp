#include "alcs/index_io.hpp"

#include <zlib.h>

#include <bit>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

namespace alcs {

namespace {

constexpr char kMagic[4] = {'A', 'L', 'C', 'S'};
constexpr uint32_t kFormatVersion = 1;

void put_u32(std::string& out, uint32_t v) {
    for (int shift = 0; shift < 32; shift += 8) {
        out.push_back(static_cast<char>((v >> shift) & 0xff));
    }
}

void put_u64(std::string& out, uint64_t v) {
    for (int shift = 0; shift < 64; shift += 8) {
        out.push_back(static_cast<char>((v >> shift) & 0xff));
    }
}

void put_f64(std::string& out, double v) { put_u64(out, std::bit_cast<uint64_t>(v)); }

void put_map(std::string& out, const FingerprintRangeMap& map) {
    put_u64(out, map.entry_count());
    for (const auto& entry : map.entries()) {
        put_u32(out, entry.length);
        put_u64(out, entry.fp);
        put_u32(out, entry.lo);
        put_u32(out, entry.hi);
    }
}

uint32_t crc_of(std::string_view bytes) {
    uLong crc = crc32(0L, Z_NULL, 0);
    crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()),
                static_cast<uInt>(bytes.size()));
    return static_cast<uint32_t>(crc);
}

// Bounded little-endian reader over the checksummed body.
struct Cursor {
    std::string_view bytes;
    size_t pos = 0;

    void need(size_t count) const {
        if (count > bytes.size() - pos) {
            throw IndexIoError(IndexIoError::Kind::Truncated, "index file body is truncated");
        }
    }
    uint32_t u32() {
        need(4);
        uint32_t v = 0;
        for (int shift = 0; shift < 32; shift += 8) {
            v |= static_cast<uint32_t>(static_cast<unsigned char>(bytes[pos++])) << shift;
        }
        return v;
    }
    uint64_t u64() {
        need(8);
        uint64_t v = 0;
        for (int shift = 0; shift < 64; shift += 8) {
            v |= static_cast<uint64_t>(static_cast<unsigned char>(bytes[pos++])) << shift;
        }
        return v;
    }
    double f64() { return std::bit_cast<double>(u64()); }
};

std::vector<FingerprintRangeMap::Entry> read_entries(Cursor& cur) {
    const uint64_t count = cur.u64();
    if (count > (cur.bytes.size() - cur.pos) / 20) {  // reject absurd counts pre-allocation
        throw IndexIoError(IndexIoError::Kind::Truncated, "index file body is truncated");
    }
    std::vector<FingerprintRangeMap::Entry> entries(count);
    for (auto& entry : entries) {
        entry.length = cur.u32();
        entry.fp = cur.u64();
        entry.lo = cur.u32();
        entry.hi = cur.u32();
    }
    return entries;
}

}  // namespace

std::string serialize_index(const AlcsIndex& index) {
    std::string out;
    out.append(kMagic, sizeof kMagic);
    put_u32(out, kFormatVersion);
    put_f64(out, index.epsilon);
    put_u64(out, index.n);
    put_u64(out, index.z);
    put_u64(out, index.kr.base);
    put_u64(out, index.build_seed);
    put_u64(out, index.lengths.max_len);
    put_u32(out, static_cast<uint32_t>(index.lengths.values.size()));
    for (uint64_t d : index.lengths.values) put_u32(out, static_cast<uint32_t>(d));
    put_map(out, index.map_left);
    put_map(out, index.map_right);
    for (uint32_t y : index.grid.y_of_x()) put_u32(out, y);
    for (uint64_t e : index.grid.boundary_of_x()) put_u64(out, e);
    put_u32(out, crc_of(out));
    return out;
}

AlcsIndex deserialize_index(std::string_view bytes) {
    if (bytes.size() < sizeof kMagic + 4) {
        throw IndexIoError(IndexIoError::Kind::Truncated, "index file shorter than its header");
    }
    if (bytes.substr(0, sizeof kMagic) != std::string_view(kMagic, sizeof kMagic)) {
        throw IndexIoError(IndexIoError::Kind::BadMagic, "not an index file (bad magic)");
    }
    Cursor cur{bytes, sizeof kMagic};
    const uint32_t version = cur.u32();
    if (version != kFormatVersion) {
        throw IndexIoError(IndexIoError::Kind::BadVersion,
                           "unsupported index format version " + std::to_string(version));
    }
    if (bytes.size() < cur.pos + 4) {
        throw IndexIoError(IndexIoError::Kind::Truncated, "index file lacks its checksum");
    }
    // Structural pass over the body, bounded so the trailing CRC stays out
    // of reach.
    cur.bytes = bytes.substr(0, bytes.size() - 4);

    AlcsIndex index;
    index.epsilon = cur.f64();
    index.n = cur.u64();
    index.z = cur.u64();
    index.kr.modulus = kMersennePrime61;
    index.kr.base = cur.u64();
    index.build_seed = cur.u64();
    index.lengths.epsilon = index.epsilon;
    index.lengths.max_len = cur.u64();
    const uint32_t length_count = cur.u32();
    cur.need(uint64_t{length_count} * 4);
    index.lengths.values.resize(length_count);
    for (auto& d : index.lengths.values) d = cur.u32();
    auto left_entries = read_entries(cur);
    auto right_entries = read_entries(cur);
    if (index.z > (cur.bytes.size() - cur.pos) / 12) {
        throw IndexIoError(IndexIoError::Kind::Truncated, "index file body is truncated");
    }
    std::vector<uint32_t> y_of_x(index.z);
    for (auto& y : y_of_x) y = cur.u32();
    std::vector<uint64_t> boundary_of_x(index.z);
    for (auto& e : boundary_of_x) e = cur.u64();
    if (cur.pos != cur.bytes.size()) {
        throw IndexIoError(IndexIoError::Kind::Malformed, "index file has trailing bytes");
    }

    const uint32_t stored_crc = Cursor{bytes, bytes.size() - 4}.u32();
    if (stored_crc != crc_of(bytes.substr(0, bytes.size() - 4))) {
        throw IndexIoError(IndexIoError::Kind::BadChecksum, "index file checksum mismatch");
    }

    auto map_left = FingerprintRangeMap::from_entries(std::move(left_entries));
    auto map_right = FingerprintRangeMap::from_entries(std::move(right_entries));
    if (!map_left || !map_right) {
        throw IndexIoError(IndexIoError::Kind::Malformed, "index file has colliding map entries");
    }
    index.map_left = std::move(*map_left);
    index.map_right = std::move(*map_right);
    try {
        index.grid = BoundaryGrid::from_permutation(std::move(y_of_x), std::move(boundary_of_x));
    } catch (const std::invalid_argument& e) {
        throw IndexIoError(IndexIoError::Kind::Malformed, e.what());
    }
    return index;
}

uint64_t save_index(const AlcsIndex& index, std::ostream& out) {
    const std::string bytes = serialize_index(index);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) {
        throw IndexIoError(IndexIoError::Kind::Io, "failed to write index stream");
    }
    return bytes.size();
}

AlcsIndex load_index(std::istream& in) {
    std::string bytes(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
    if (in.bad()) {
        throw IndexIoError(IndexIoError::Kind::Io, "failed to read index stream");
    }
    return deserialize_index(bytes);
}

uint64_t save_index_file(const AlcsIndex& index, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IndexIoError(IndexIoError::Kind::Io, "cannot open " + path + " for writing");
    }
    return save_index(index, out);
}

AlcsIndex load_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IndexIoError(IndexIoError::Kind::Io, "cannot open " + path + " for reading");
    }
    return load_index(in);
}

}  // namespace alcs
