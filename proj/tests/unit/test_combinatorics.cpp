#include <doctest.h>

#include <random>

#include "netid/combinatorics.hpp"
#include "oracles.hpp"

using namespace netid;

namespace {

// Checks that `paths` are genuine, vertex-disjoint source->target paths.
void check_path_family(const NetworkModel& m, const std::vector<Path>& paths,
                       const VertexSet& sources, const VertexSet& targets) {
    std::vector<bool> seen(m.vertex_count() + 1, false);
    for (const Path& p : paths) {
        REQUIRE_FALSE(p.empty());
        CHECK(sources.contains(p.front()));
        CHECK(targets.contains(p.back()));
        for (std::size_t k = 0; k < p.size(); ++k) {
            CHECK_FALSE(seen[p[k]]);
            seen[p[k]] = true;
            if (k + 1 < p.size()) CHECK(m.has_edge(p[k], p[k + 1]));
        }
    }
}

std::vector<std::vector<bool>> random_pattern(std::mt19937_64& rng, int rows, int cols, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::vector<bool>> nz(rows, std::vector<bool>(cols));
    for (auto& row : nz)
        for (std::size_t c = 0; c < row.size(); ++c) row[c] = coin(rng);
    return nz;
}

} // namespace

TEST_CASE("matching on the four-vertex two-cycle fixture") {
    auto m = oracle::load_fixture("fig4.json");
    auto b = bipartite_graph(m);
    Matching full = max_matching(b, m.measured(), m.excited());
    CHECK(full.size() == 3);
    std::set<Vertex> used_r, used_c;
    for (const BipartiteEdge& e : full.edges) {
        CHECK(b.has_edge(e.excited, e.measured));
        CHECK(used_r.insert(e.excited).second);
        CHECK(used_c.insert(e.measured).second);
    }
    CHECK(max_matching(b, VertexSet{3, 4}, VertexSet{1, 2}).size() == 2);
    CHECK(max_vertex_disjoint_paths(m, VertexSet{1, 2}, VertexSet{3, 4}) == 1);
}

TEST_CASE("matching with an empty side") {
    auto b = bipartite_graph(oracle::load_fixture("fig1.json"));
    CHECK(max_matching(b, VertexSet{}, VertexSet{1, 2}).size() == 0);
    CHECK(matching_size({}, 3) == 0);
    CHECK(matching_size({{}, {}}, 0) == 0);
}

TEST_CASE("disjoint paths on the bundled fixtures") {
    auto fig6 = oracle::load_fixture("fig6.json");
    auto paths = vertex_disjoint_paths(fig6, fig6.excited(), fig6.measured());
    CHECK(paths == std::vector<Path>{{1, 2}, {4, 5}});

    auto fig3 = oracle::load_fixture("fig3.json");
    CHECK(max_vertex_disjoint_paths(fig3, fig3.excited(), fig3.measured()) == 1);
    CHECK(vertex_disjoint_paths(fig3, fig3.excited(), fig3.measured()) == std::vector<Path>{{3, 4}});

    auto fig2 = oracle::load_fixture("fig2.json");
    CHECK(max_vertex_disjoint_paths(fig2, VertexSet{1, 2, 3}, VertexSet{6, 7, 8}) == 2);
    CHECK(max_vertex_disjoint_paths(fig2, fig2.excited(), fig2.measured()) == 4);
}

TEST_CASE("a vertex in both sets is a path of length zero") {
    auto m = oracle::ring(4, VertexSet{1, 3}, VertexSet{2, 3});
    auto paths = vertex_disjoint_paths(m, m.excited(), m.measured());
    CHECK(paths.size() == 2);
    CHECK(std::find(paths.begin(), paths.end(), Path{3}) != paths.end());
    CHECK(max_vertex_disjoint_paths(m, VertexSet{}, VertexSet{1}) == 0);
}

TEST_CASE("subsets in lexicographic order") {
    auto subs = subsets_of_size(VertexSet{2, 4, 7, 9}, 2);
    std::vector<VertexSet> expected{{2, 4}, {2, 7}, {2, 9}, {4, 7}, {4, 9}, {7, 9}};
    CHECK(subs == expected);
    CHECK(subsets_of_size(VertexSet{1, 2}, 3).empty());
    CHECK(subsets_of_size(VertexSet{1, 2}, 0) == std::vector<VertexSet>{VertexSet{}});
    CHECK(subsets_of_size(VertexSet{1, 2, 3, 4, 5, 6}, 3).size() == 20);
}

TEST_CASE("Hopcroft-Karp agrees with brute-force structural rank") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 300; ++iter) {
        const int rows = 1 + static_cast<int>(rng() % 7);
        const int cols = 1 + static_cast<int>(rng() % 7);
        auto nz = random_pattern(rng, rows, cols, 0.1 + 0.8 * (rng() % 100) / 100.0);
        std::vector<std::vector<int>> adj(rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (nz[r][c]) adj[r].push_back(c);
        auto match = hopcroft_karp(adj, cols);
        std::vector<bool> taken(cols, false);
        int size = 0;
        for (int r = 0; r < rows; ++r) {
            if (match[r] < 0) continue;
            CHECK(nz[r][match[r]]);
            CHECK_FALSE(taken[match[r]]);
            taken[match[r]] = true;
            ++size;
        }
        CHECK(size == oracle::sprank(nz));
        CHECK(matching_size(adj, cols) == size);
    }
}

TEST_CASE("disjoint path count agrees with exhaustive search") {
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 300; ++iter) {
        NetworkModel m = oracle::random_model(rng, {2, 7, 0.1, 0.5});
        auto paths = vertex_disjoint_paths(m, m.excited(), m.measured());
        check_path_family(m, paths, m.excited(), m.measured());
        CHECK(static_cast<int>(paths.size()) == oracle::disjoint_paths(m, m.excited(), m.measured()));
        CHECK(static_cast<int>(paths.size()) <= static_cast<int>(std::min(m.excited().size(), m.measured().size())));
    }
}

TEST_CASE("paths never exceed matchings") {
    std::mt19937_64 rng(6);
    for (int iter = 0; iter < 200; ++iter) {
        NetworkModel m = oracle::random_model(rng);
        auto b = bipartite_graph(m);
        CHECK(max_vertex_disjoint_paths(m, m.excited(), m.measured()) <=
              static_cast<int>(max_matching(b, m.measured(), m.excited()).size()));
    }
}
