#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hexcover/covering.hpp"

namespace hexcover {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double re_min = 0.0;
    double re_max = 0.0;
    double im_min = 0.0;
    double im_max = 0.0;
    int nx = 1;
    int ny = 1;
};

// literals "a", "bi", "a+bi", "a-bi"; dot decimal separator, no spaces
cplx parse_complex(const std::string& text);
std::string format_complex(cplx v);

enum class GridFunction { wp, wp_prime, lambda, j, phi, phi_prime };

GridFunction parse_function(const std::string& name);

struct GridNode {
    cplx z;
    cplx value;
    double residual = 0.0;
    bool ok = false;
};

// Row-major sweep, im outer (ascending) and re inner. Failed nodes are kept
// with ok = false. Rows are independent, so they can run in parallel while the
// output stays deterministic; within a row the phi path reuses the previous
// node's triangle representative as the Newton seed.
std::vector<GridNode> evaluate_grid(GridFunction f, const GridSpec& spec,
                                    const CoverContext& ctx);

void write_csv(const std::string& path, const std::vector<GridNode>& nodes);
void write_ppm(const std::string& path, const GridSpec& spec,
               const std::vector<GridNode>& nodes);

} // namespace hexcover
