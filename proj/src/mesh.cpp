#include "hdg/mesh.hpp"

#include <algorithm>

#include "hdg/errors.hpp"

namespace hdg {

int Mesh::find_element(double r) const {
    if (r < 0.0 || r > b) throw ConfigError("find_element: r outside [0,b]");
    if (r <= nodes[1]) return 0;
    auto it = std::lower_bound(nodes.begin(), nodes.end(), r);
    int i = static_cast<int>(it - nodes.begin());
    return std::min(i - 1, N - 1);
}

Mesh build_uniform(double b, int N) {
    if (b <= 0.0) throw ConfigError("build_uniform: outer radius must be positive");
    if (N < 1) throw ConfigError("build_uniform: element count must be >= 1");
    Mesh m;
    m.b = b;
    m.N = N;
    m.nodes.resize(N + 1);
    // Closed-form node formula; no cumulative summation drift.
    for (int i = 0; i <= N; ++i) m.nodes[i] = i * b / N;
    m.nodes[0] = 0.0;
    m.nodes[N] = b;
    m.widths.resize(N);
    for (int i = 0; i < N; ++i) m.widths[i] = m.nodes[i + 1] - m.nodes[i];
    m.h_max = *std::max_element(m.widths.begin(), m.widths.end());
    m.h_min = *std::min_element(m.widths.begin(), m.widths.end());
    return m;
}

} // namespace hdg
