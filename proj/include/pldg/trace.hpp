#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pldg/geometry.hpp"

namespace pldg {

// FNV-1a over raw values. Traces hash geometry only (coordinate bit
// patterns), never vertex indices, so a node's trace is comparable
// between a full run and a run on a restricted point set.
class TraceHasher {
public:
    TraceHasher& add(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h_ ^= (v >> (8 * i)) & 0xff;
            h_ *= 0x100000001b3ull;
        }
        return *this;
    }
    TraceHasher& add(double v) { return add(std::bit_cast<std::uint64_t>(v)); }
    TraceHasher& add(Point p) { return add(p.x).add(p.y); }
    TraceHasher& add(std::string_view s) {
        for (char c : s) {
            h_ ^= static_cast<unsigned char>(c);
            h_ *= 0x100000001b3ull;
        }
        return *this;
    }
    std::uint64_t value() const { return h_; }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ull;
};

// One recorded computing or broadcasting step of a node's run.
struct TraceEntry {
    std::string op;
    std::uint64_t in_hash = 0;
    std::uint64_t out_hash = 0;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

} // namespace pldg
