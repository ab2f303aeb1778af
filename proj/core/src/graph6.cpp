#include "thetakit/graph6.hpp"

namespace thetakit {

// Short form: byte 0 is chr(63+n); the upper triangle in column-major order
// (0,1),(0,2),(1,2),(0,3),... is packed into 6-bit groups, most significant
// bit first, each group stored as chr(63+value), zero-padded at the end.

Graph parse_graph6(const std::string& text) {
    if (text.empty()) throw Graph6Error("empty graph6 string", 0);
    const unsigned char header = static_cast<unsigned char>(text[0]);
    if (header == '~')
        throw Graph6Error("long-form graph6 (n > 62) is not supported", 0);
    if (header < 63 || header > 63 + Graph::max_vertices)
        throw Graph6Error("malformed graph6 header byte", 0);
    const int n = header - 63;
    if (n == 0) throw Graph6Error("graph6 order 0 is not supported", 0);

    const int pairs = n * (n - 1) / 2;
    const std::size_t body = static_cast<std::size_t>((pairs + 5) / 6);
    if (text.size() < 1 + body)
        throw Graph6Error("graph6 bit vector truncated", text.size());
    if (text.size() > 1 + body)
        throw Graph6Error("trailing bytes after graph6 bit vector", 1 + body);

    Graph g(n);
    int bit = 0;
    for (std::size_t byte = 0; byte < body; ++byte) {
        const unsigned char raw = static_cast<unsigned char>(text[1 + byte]);
        if (raw < 63 || raw > 126)
            throw Graph6Error("graph6 body byte out of range", 1 + byte);
        const int group = raw - 63;
        for (int k = 5; k >= 0; --k, ++bit) {
            const int value = (group >> k) & 1;
            if (bit >= pairs) {
                if (value)
                    throw Graph6Error("nonzero padding bit in graph6 body", 1 + byte);
                continue;
            }
            if (value) {
                // bit index -> column-major upper-triangle pair (u, v), u < v
                int v = 1, acc = 0;
                while (acc + v <= bit) acc += v, ++v;
                g.add_edge(bit - acc, v);
            }
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int group = 0, filled = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

}  // namespace thetakit
