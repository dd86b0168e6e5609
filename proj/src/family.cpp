#include "specdl/family.hpp"

#include <charconv>
#include <string_view>

namespace specdl {

namespace {

void require(bool ok, const std::string& constraint) {
    if (!ok) throw range_error("family parameter out of range: requires " + constraint);
}

Graph build_complete(int n) {
    require(n >= 1, "n >= 1");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph build_path(int n) {
    require(n >= 1, "n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph build_cycle(int n) {
    require(n >= 3, "cycle: n >= 3");
    Graph g = build_path(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph build_star(int n) {
    require(n >= 2, "star: n >= 2");
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph build_complete_bipartite(int a, int b) {
    require(a >= 1 && b >= 1, "complete_bipartite: a,b >= 1");
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

Graph build_complete_split(int t, int n) {
    require(1 <= t && t <= n - 1, "complete_split: 1 <= t <= n-1");
    Graph g(n);
    for (int u = 0; u < t; ++u) {
        for (int v = u + 1; v < t; ++v) g.add_edge(u, v);
        for (int v = t; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph build_pineapple(int n, int p) {
    require(1 <= p && p <= n - 2, "pineapple: 1 <= p <= n-2");
    Graph g = graph_union(build_complete(n - p), Graph(p));
    for (int v = n - p; v < n; ++v) g.add_edge(0, v);
    return g;
}

Graph build_s_plus(int n) {
    require(n >= 4, "s_plus: n >= 4");
    Graph g = build_star(n);
    g.add_edge(1, 2);
    return g;
}

Graph build_connectivity_family(int n, int k, int t) {
    require(1 <= k && k <= n - 2, "connectivity_family: 1 <= k <= n-2");
    require(1 <= t && t <= (n - k) / 2, "connectivity_family: 1 <= t <= floor((n-k)/2)");
    return graph_join(build_complete(k),
                      graph_union(build_complete(t), build_complete(n - k - t)));
}

long long parse_int(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw parse_error("family spec: bad integer '" + std::string(s) + "'");
    return v;
}

FamilySpec parse_simple(std::string_view text) {
    size_t colon = text.find(':');
    std::string_view name = text.substr(0, colon);
    std::vector<long long> params;
    if (colon != std::string_view::npos) {
        std::string_view rest = text.substr(colon + 1);
        while (!rest.empty()) {
            size_t comma = rest.find(',');
            params.push_back(parse_int(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }
    auto want = [&](size_t count, const char* usage) {
        if (params.size() != count)
            throw parse_error("family spec: expected " + std::string(usage));
    };
    FamilySpec s;
    if (name == "complete") {
        want(1, "complete:n");
        s.kind = FamilyKind::complete;
        s.n = static_cast<int>(params[0]);
    } else if (name == "path") {
        want(1, "path:n");
        s.kind = FamilyKind::path;
        s.n = static_cast<int>(params[0]);
    } else if (name == "cycle") {
        want(1, "cycle:n");
        s.kind = FamilyKind::cycle;
        s.n = static_cast<int>(params[0]);
    } else if (name == "star") {
        want(1, "star:n");
        s.kind = FamilyKind::star;
        s.n = static_cast<int>(params[0]);
    } else if (name == "complete_bipartite") {
        want(2, "complete_bipartite:a,b");
        s.kind = FamilyKind::complete_bipartite;
        s.a = static_cast<int>(params[0]);
        s.b = static_cast<int>(params[1]);
        s.n = s.a + s.b;
    } else if (name == "complete_split") {
        want(2, "complete_split:t,n");
        s.kind = FamilyKind::complete_split;
        s.t = static_cast<int>(params[0]);
        s.n = static_cast<int>(params[1]);
    } else if (name == "pineapple") {
        want(2, "pineapple:n,p");
        s.kind = FamilyKind::pineapple;
        s.n = static_cast<int>(params[0]);
        s.p = static_cast<int>(params[1]);
    } else if (name == "s_plus") {
        want(1, "s_plus:n");
        s.kind = FamilyKind::s_plus;
        s.n = static_cast<int>(params[0]);
    } else if (name == "connectivity_family") {
        want(3, "connectivity_family:n,k,t");
        s.kind = FamilyKind::connectivity_family;
        s.n = static_cast<int>(params[0]);
        s.k = static_cast<int>(params[1]);
        s.t = static_cast<int>(params[2]);
    } else {
        throw parse_error("family spec: unknown family '" + std::string(name) + "'");
    }
    return s;
}

} // namespace

int FamilySpec::order() const {
    if (kind == FamilyKind::join) {
        int total = 0;
        for (const auto& p : parts) total += p.order();
        return total;
    }
    return n;
}

Graph build(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::complete: return build_complete(spec.n);
    case FamilyKind::path: return build_path(spec.n);
    case FamilyKind::cycle: return build_cycle(spec.n);
    case FamilyKind::star: return build_star(spec.n);
    case FamilyKind::complete_bipartite: return build_complete_bipartite(spec.a, spec.b);
    case FamilyKind::complete_split: return build_complete_split(spec.t, spec.n);
    case FamilyKind::pineapple: return build_pineapple(spec.n, spec.p);
    case FamilyKind::s_plus: return build_s_plus(spec.n);
    case FamilyKind::connectivity_family:
        return build_connectivity_family(spec.n, spec.k, spec.t);
    case FamilyKind::join: {
        require(spec.parts.size() >= 2, "join: at least two parts");
        Graph rhs = build(spec.parts[1]);
        for (size_t i = 2; i < spec.parts.size(); ++i)
            rhs = graph_union(rhs, build(spec.parts[i]));
        return graph_join(build(spec.parts[0]), rhs);
    }
    }
    throw range_error("unreachable family kind");
}

FamilySpec parse_family_spec(const std::string& text) {
    std::string_view sv(text);
    if (sv.rfind("join:", 0) == 0) {
        sv.remove_prefix(5);
        size_t bar = sv.find('|');
        if (bar == std::string_view::npos)
            throw parse_error("join spec: expected join:<g0>|<g1>+<g2>[+...]");
        FamilySpec s;
        s.kind = FamilyKind::join;
        s.parts.push_back(parse_simple(sv.substr(0, bar)));
        std::string_view rest = sv.substr(bar + 1);
        while (!rest.empty()) {
            size_t plus = rest.find('+');
            s.parts.push_back(parse_simple(rest.substr(0, plus)));
            if (plus == std::string_view::npos) break;
            rest = rest.substr(plus + 1);
        }
        if (s.parts.size() < 2) throw parse_error("join spec: needs a union side");
        s.n = s.order();
        return s;
    }
    return parse_simple(sv);
}

std::string family_name(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::complete: return "complete:" + std::to_string(spec.n);
    case FamilyKind::path: return "path:" + std::to_string(spec.n);
    case FamilyKind::cycle: return "cycle:" + std::to_string(spec.n);
    case FamilyKind::star: return "star:" + std::to_string(spec.n);
    case FamilyKind::complete_bipartite:
        return "complete_bipartite:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    case FamilyKind::complete_split:
        return "complete_split:" + std::to_string(spec.t) + "," + std::to_string(spec.n);
    case FamilyKind::pineapple:
        return "pineapple:" + std::to_string(spec.n) + "," + std::to_string(spec.p);
    case FamilyKind::s_plus: return "s_plus:" + std::to_string(spec.n);
    case FamilyKind::connectivity_family:
        return "connectivity_family:" + std::to_string(spec.n) + "," + std::to_string(spec.k) +
               "," + std::to_string(spec.t);
    case FamilyKind::join: {
        std::string out = "join:" + family_name(spec.parts[0]) + "|";
        for (size_t i = 1; i < spec.parts.size(); ++i) {
            if (i > 1) out += "+";
            out += family_name(spec.parts[i]);
        }
        return out;
    }
    }
    return "?";
}

} // namespace specdl
