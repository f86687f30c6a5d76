#include "sturan/graph6.hpp"

namespace sturan {

namespace {

constexpr int kBias = 63;

bool printable(unsigned char c) { return c >= 63 && c <= 126; }

long long body_bytes(long long n) { return (n * (n - 1) / 2 + 5) / 6; }

}  // namespace

Graph from_graph6(std::string_view s) {
    if (s.empty()) throw graph6_error("empty graph6 string", 0);

    size_t pos = 0;
    long long n = 0;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw graph6_error("graph6 orders above 258047 are not supported", 1);
        if (s.size() < 4) throw graph6_error("truncated graph6 header", s.size());
        n = 0;
        for (size_t i = 1; i < 4; ++i) {
            unsigned char c = static_cast<unsigned char>(s[i]);
            if (!printable(c)) throw graph6_error("graph6 byte out of range", i);
            n = (n << 6) | (c - kBias);
        }
        pos = 4;
    } else {
        unsigned char c = static_cast<unsigned char>(s[0]);
        if (!printable(c)) throw graph6_error("graph6 byte out of range", 0);
        n = c - kBias;
        pos = 1;
    }
    if (n > kMaxVertices)
        throw graph6_error("graph order " + std::to_string(n) + " exceeds limit " +
                               std::to_string(kMaxVertices),
                           0);

    const long long need = body_bytes(n);
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < need)
        throw graph6_error("truncated graph6 body", s.size());
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) > need)
        throw graph6_error("trailing bytes after graph6 body", pos + static_cast<size_t>(need));

    Graph g(static_cast<int>(n));
    long long bit = 0;
    const long long nbits = n * (n - 1) / 2;
    // Upper-triangle bits in column order: (0,1), (0,2), (1,2), (0,3), ...
    int col = 1, row = 0;
    for (long long b = 0; b < need; ++b) {
        unsigned char c = static_cast<unsigned char>(s[pos + static_cast<size_t>(b)]);
        if (!printable(c)) throw graph6_error("graph6 byte out of range", pos + static_cast<size_t>(b));
        int val = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            int x = (val >> k) & 1;
            if (bit >= nbits) {
                if (x) throw graph6_error("nonzero padding bits", pos + static_cast<size_t>(b));
                continue;
            }
            if (x) g.add_edge(row, col);
            if (++row == col) {
                row = 0;
                ++col;
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const long long n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int acc = 0, nb = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>((acc << (6 - nb)) + kBias));
    return out;
}

}  // namespace sturan
