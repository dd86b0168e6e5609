#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "specdl/enumerate.hpp"
#include "specdl/family.hpp"
#include "specdl/graph.hpp"
#include "specdl/graph_io.hpp"

using namespace specdl;

namespace {

// Independent connectivity oracle: union-find, no BFS.
bool connected_union_find(const Graph& g) {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
    for (int v = 1; v < g.order(); ++v)
        if (find(v) != find(0)) return false;
    return true;
}

std::vector<int> sorted_degrees(const Graph& g) {
    std::vector<int> d(g.order());
    for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> perm(a.order());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int u = 0; u < a.order() && match; ++u)
            for (int v = u + 1; v < a.order() && match; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) match = false;
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("family builders") {
    CHECK(build(parse_family_spec("complete:4")).size() == 6);
    Graph k23 = build(parse_family_spec("complete_bipartite:2,3"));
    CHECK(k23.size() == 6);
    auto parts = bipartition(k23);
    REQUIRE(parts.has_value());
    std::set<size_t> sizes{parts->first.size(), parts->second.size()};
    CHECK(sizes == std::set<size_t>{2, 3});

    // Paw graph by the definitions of join and union: K_2's edge plus three
    // cross edges from the K_1 hub.
    Graph paw = build(parse_family_spec("join:complete:1|complete:1+complete:2"));
    CHECK(paw.order() == 4);
    CHECK(paw.size() == 4);

    CHECK(build(parse_family_spec("star:4")).size() == 3);
    CHECK(build(parse_family_spec("cycle:5")).size() == 5);
    CHECK(build(parse_family_spec("complete_split:2,5")).size() == 7);
    CHECK(build(parse_family_spec("pineapple:6,2")).size() == 8);
    CHECK(build(parse_family_spec("s_plus:4")).size() == 4);
    CHECK(build(parse_family_spec("connectivity_family:4,1,1")) == paw);

    CHECK_THROWS_AS(build(parse_family_spec("complete_split:5,5")), range_error);
    CHECK_THROWS_AS(build(parse_family_spec("connectivity_family:5,4,1")), range_error);
    CHECK_THROWS_AS(build(parse_family_spec("cycle:2")), range_error);
    CHECK_THROWS_AS(parse_family_spec("blancmange:3"), parse_error);
    CHECK_THROWS_AS(parse_family_spec("complete:x"), parse_error);
}

TEST_CASE("every named family is connected") {
    const char* specs[] = {
        "complete:6",      "path:6",        "cycle:6",
        "star:6",          "complete_bipartite:2,4", "complete_split:2,6",
        "pineapple:6,3",   "s_plus:6",      "connectivity_family:6,2,2",
        "join:complete_bipartite:1,2|complete_split:1,2+complete:1",
    };
    for (const char* s : specs) {
        Graph g = build(parse_family_spec(s));
        CAPTURE(s);
        CHECK(is_connected(g));
        CHECK(connected_union_find(g));
    }
}

TEST_CASE("delete_edge") {
    Graph k3 = build(parse_family_spec("complete:3"));
    Graph p = delete_edge(k3, {0, 1});
    CHECK(p.size() == 2);
    CHECK(is_connected(p));
    CHECK(sorted_degrees(p) == std::vector<int>{1, 1, 2}); // P_3

    Graph p3 = build(parse_family_spec("path:3"));
    CHECK_FALSE(is_connected(delete_edge(p3, {0, 1})));

    Graph k4 = build(parse_family_spec("complete:4"));
    CHECK(delete_edge(k4, {1, 3}).size() == 5);

    CHECK_THROWS_AS(delete_edge(p3, {0, 2}), range_error);
}

TEST_CASE("is_connected basics") {
    CHECK(is_connected(build(parse_family_spec("path:5"))));
    Graph two_k2 = graph_union(build(parse_family_spec("complete:2")),
                               build(parse_family_spec("complete:2")));
    CHECK_FALSE(is_connected(two_k2));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("bipartition") {
    CHECK_FALSE(bipartition(build(parse_family_spec("cycle:5"))).has_value());
    auto p4 = bipartition(build(parse_family_spec("path:4")));
    REQUIRE(p4.has_value());
    CHECK(p4->first.size() == 2);
    CHECK(p4->second.size() == 2);
}

TEST_CASE("join size and cross edges") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph a = random_graph(rng, 1 + trial % 5, 0.5);
        Graph b = random_graph(rng, 1 + (trial * 3) % 6, 0.5);
        Graph j = graph_join(a, b);
        CHECK(j.size() == a.size() + b.size() + a.order() * b.order());
        CHECK(is_connected(j));
    }
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edge_list("3 2\n0 1\n1 2");
    CHECK(g == build(parse_family_spec("path:3")));

    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), parse_error);
    CHECK_THROWS_AS(parse_edge_list(""), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 0"), parse_error);   // u < v required
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n0 1"), parse_error);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2"), parse_error); // trailing tokens
}

TEST_CASE("graph6 fixed vectors") {
    // 'D' encodes n=5; data bits 000000 111100 place the four edges
    // (0,4),(1,4),(2,4),(3,4): the star K_{1,4}. Decoded by hand from the
    // format definition as an independent reference.
    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(g.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(g.has_edge(v, 4));
    CHECK(emit_graph6(g) == "D?{");

    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@").order() == 1);

    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("D?"), parse_error);     // truncated
    CHECK_THROWS_AS(parse_graph6("D?\x01"), parse_error); // byte below '?'
    CHECK_THROWS_AS(parse_graph6("~??"), parse_error);    // long form unsupported
}

TEST_CASE("graph6 round-trip on random graphs") {
    std::mt19937 rng(20260811);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 62);
        Graph g = random_graph(rng, n, 0.3);
        std::string enc = emit_graph6(g);
        Graph back = parse_graph6(enc);
        CHECK(back == g);
        CHECK(emit_graph6(back) == enc);
    }
}

TEST_CASE("enumerate_connected counts") {
    // Oracle: brute force over all edge subsets with union-find connectivity.
    auto brute_count = [](int n) {
        int bits = n * (n - 1) / 2;
        long long count = 0;
        for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask)
            if (connected_union_find(Graph::from_edge_mask(n, mask))) ++count;
        return count;
    };
    CHECK(count_connected(1) == 1);
    CHECK(count_connected(3) == 4);
    CHECK(count_connected(4) == 38);
    CHECK(count_connected(3) == brute_count(3));
    CHECK(count_connected(4) == brute_count(4));

    ConnectedGraphStream one(1);
    auto g = one.next();
    REQUIRE(g.has_value());
    CHECK(g->order() == 1);
    CHECK_FALSE(one.next().has_value());

    CHECK_THROWS_AS(count_connected(0), range_error);
    CHECK_THROWS_AS(count_connected(9), range_error);
}

TEST_CASE("iso-free enumeration matches pairwise isomorphism grouping") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Graph> all;
        ConnectedGraphStream stream(n);
        while (auto g = stream.next()) all.push_back(*g);
        std::vector<Graph> reps;
        for (const Graph& g : all) {
            bool fresh = true;
            for (const Graph& r : reps)
                if (brute_isomorphic(g, r)) {
                    fresh = false;
                    break;
                }
            if (fresh) reps.push_back(g);
        }
        CAPTURE(n);
        CHECK(count_connected(n, /*iso_free=*/true) == static_cast<long long>(reps.size()));
    }
}

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = random_graph(rng, n, 0.5);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h(n);
        for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
        CHECK(canonical_graph6(g) == canonical_graph6(h));
        CHECK(brute_isomorphic(g, parse_graph6(canonical_graph6(g))));
    }
}
