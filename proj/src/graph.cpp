#include "bicolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bicolor {

BicoloredGraph::BicoloredGraph(int n) : n_(n), red_(n), blue_(n), red_count_(0), blue_count_(0) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

BicoloredGraph BicoloredGraph::complete(int n, Color c) {
    BicoloredGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v, c);
    return g;
}

void BicoloredGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void BicoloredGraph::add_edge(int u, int v, Color c) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    if (c == Color::Red) {
        red_.set(u, v);
        ++red_count_;
    } else {
        blue_.set(u, v);
        ++blue_count_;
    }
}

void BicoloredGraph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (red_.get(u, v)) {
        red_.clear(u, v);
        --red_count_;
    } else if (blue_.get(u, v)) {
        blue_.clear(u, v);
        --blue_count_;
    } else {
        throw std::invalid_argument("no edge " + std::to_string(u) + " " + std::to_string(v));
    }
}

BicoloredGraph BicoloredGraph::swap_colors() const {
    BicoloredGraph g(n_);
    g.red_ = blue_;
    g.blue_ = red_;
    g.red_count_ = blue_count_;
    g.blue_count_ = red_count_;
    return g;
}

BicoloredGraph BicoloredGraph::blow_up(int t) const {
    if (t < 1) throw std::invalid_argument("blow-up factor must be at least 1");
    BicoloredGraph g(n_ * t);
    for_each_edge([&](int u, int v, Color c) {
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) g.add_edge(u * t + i, v * t + j, c);
    });
    return g;
}

BicoloredGraph BicoloredGraph::clone_vertex(int v) const {
    check_vertex(v);
    BicoloredGraph g(n_ + 1);
    for_each_edge([&](int a, int b, Color c) { g.add_edge(a, b, c); });
    for (int x = 0; x < n_; ++x) {
        if (x == v) continue;
        if (auto c = edge(v, x)) g.add_edge(n_, x, *c);
    }
    return g;
}

BicoloredGraph BicoloredGraph::induced_subgraph(std::vector<int> s) const {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) check_vertex(v);
    BicoloredGraph g(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (auto c = edge(s[i], s[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j), *c);
        }
    }
    return g;
}

void BicoloredGraph::replace_with_clone(int y, int x) {
    check_vertex(y);
    check_vertex(x);
    if (adjacent(x, y)) throw std::invalid_argument("clone source and target must be non-adjacent");
    for (int v = 0; v < n_; ++v) {
        if (red_.get(y, v)) {
            red_.clear(y, v);
            --red_count_;
        }
        if (blue_.get(y, v)) {
            blue_.clear(y, v);
            --blue_count_;
        }
    }
    for (int v = 0; v < n_; ++v) {
        if (v == y) continue;
        if (red_.get(x, v)) {
            red_.set(y, v);
            ++red_count_;
        } else if (blue_.get(x, v)) {
            blue_.set(y, v);
            ++blue_count_;
        }
    }
}

BalanceSpec::BalanceSpec(Rational e) : epsilon(e) {
    if (!(Rational(0) < e && e <= Rational(1, 2)))
        throw std::invalid_argument("epsilon must lie in (0, 1/2], got " + e.str());
}

bool is_balanced(const BicoloredGraph& g, const BalanceSpec& spec) {
    // e_C >= eps * e, cross-multiplied so the comparison is exact.
    long long e = g.edge_count();
    long long p = spec.epsilon.num();
    long long q = spec.epsilon.den();
    return g.red_count() * q >= p * e && g.blue_count() * q >= p * e;
}

Density density(const BicoloredGraph& g) {
    long long pairs = binom2(g.vertex_count());
    if (pairs == 0) return Density{Rational(0), Rational(0), Rational(0)};
    return Density{Rational(g.edge_count(), pairs), Rational(g.red_count(), pairs),
                   Rational(g.blue_count(), pairs)};
}

} // namespace bicolor
