#include "eds/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace eds {

Graph path_graph(int n) {
    EdgeList e;
    for (int i = 0; i + 1 < n; ++i)
        e.push_back({i, i + 1});
    return Graph(n, e);
}

Graph cycle_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        e.push_back(make_edge(i, (i + 1) % n));
    return Graph(n, e);
}

Graph complete_graph(int n) {
    EdgeList e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.push_back({i, j});
    return Graph(n, e);
}

Graph petersen_graph() {
    EdgeList e;
    for (int i = 0; i < 5; ++i) {
        e.push_back(make_edge(i, (i + 1) % 5)); // outer cycle
        e.push_back({i, i + 5});                // spokes
        e.push_back(make_edge(i + 5, (i + 2) % 5 + 5)); // pentagram
    }
    return Graph(10, e);
}

Graph random_gnp(int n, double p, std::mt19937& rng) {
    EdgeList e;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p)
                e.push_back({i, j});
    return Graph(n, e);
}

Graph random_cubic(int n, std::mt19937& rng) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: n must be even and >= 4");
    for (;;) {
        std::vector<int> stubs(3 * n);
        for (int i = 0; i < 3 * n; ++i)
            stubs[i] = i / 3;
        std::shuffle(stubs.begin(), stubs.end(), rng);
        EdgeList e;
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v)
                simple = false;
            else
                e.push_back(make_edge(u, v));
        }
        if (!simple)
            continue;
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            continue;
        return Graph(n, e);
    }
}

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_mask(int n, std::uint64_t mask) {
    EdgeList e;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask >> bit & 1)
                e.push_back({i, j});
    return Graph(n, e);
}

BinaryMatrix random_matrix(int rows, int cols, double density, std::mt19937& rng) {
    BinaryMatrix m;
    m.rows = rows;
    m.cols = cols;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density)
                m.ones.emplace_back(r, c);
    return m;
}

} // namespace eds
