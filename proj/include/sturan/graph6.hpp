#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sturan/graph.hpp"

namespace sturan {

// Parse or encoding failure; offset is the byte position in the input string.
class graph6_error : public std::runtime_error {
public:
    graph6_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          offset_(offset) {}

    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Decodes one graph6 string (no trailing newline). Supports orders 0..4096.
Graph from_graph6(std::string_view s);

// Canonical encoding: short header for n <= 62, 4-byte header above.
std::string to_graph6(const Graph& g);

}  // namespace sturan
