#pragma once

#include <stdexcept>
#include <string>

namespace lapdist {

struct graph_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_vertex_error : graph_error {
    using graph_error::graph_error;
};

struct self_loop_error : graph_error {
    using graph_error::graph_error;
};

struct duplicate_edge_error : graph_error {
    using graph_error::graph_error;
};

struct parse_error : graph_error {
    using graph_error::graph_error;
};

struct not_connected_error : graph_error {
    using graph_error::graph_error;
};

struct not_a_tree_error : graph_error {
    using graph_error::graph_error;
};

struct cap_exceeded_error : graph_error {
    using graph_error::graph_error;
};

struct invalid_spec_error : graph_error {
    using graph_error::graph_error;
};

struct interval_error : graph_error {
    using graph_error::graph_error;
};

struct convergence_error : graph_error {
    using graph_error::graph_error;
};

}  // namespace lapdist
