#pragma once

#include <stdexcept>
#include <string>

#include "thetakit/graph.hpp"

namespace thetakit {

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Short-form graph6 (n <= 62), one graph per string.
Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

}  // namespace thetakit
