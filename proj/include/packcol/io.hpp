#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "packcol/graph.hpp"

namespace packcol {

enum class GraphFormat { EdgeList, Dimacs };

GraphFormat parse_format_name(const std::string &name);

/// Malformed input. what() reads "[source: ]line N: message" when a line is at fault.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string &msg, const std::string &source = {});
    int line() const { return line_; }
    const std::string &message() const { return message_; }

  private:
    int line_;
    std::string message_;
};

// Edge list: "n m" header then m lines "u v", 0-based.
// DIMACS:    "p edge n m" header, "e u v" lines, 1-based; "c" lines are comments.
Graph read_graph(std::istream &in, GraphFormat format);
Graph parse_graph(const std::filesystem::path &path, GraphFormat format);

void write_graph(std::ostream &out, const Graph &g, GraphFormat format);

} // namespace packcol
