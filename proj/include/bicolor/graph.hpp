#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bicolor/bitmatrix.hpp"
#include "bicolor/color.hpp"
#include "bicolor/rational.hpp"

namespace bicolor {

// Simple graph whose every edge carries one of two colors. Adjacency is stored
// as one bit matrix per color. Values are treated as immutable once shared:
// the transformation methods return new graphs, and the in-place mutators are
// only used while a single owner is still building the value.
class BicoloredGraph {
public:
    BicoloredGraph() : n_(0), red_(0), blue_(0), red_count_(0), blue_count_(0) {}
    explicit BicoloredGraph(int n);

    static BicoloredGraph complete(int n, Color c);

    int vertex_count() const { return n_; }
    long long edge_count() const { return red_count_ + blue_count_; }
    long long red_count() const { return red_count_; }
    long long blue_count() const { return blue_count_; }

    bool adjacent(int u, int v) const { return red_.get(u, v) || blue_.get(u, v); }
    std::optional<Color> edge(int u, int v) const {
        if (red_.get(u, v)) return Color::Red;
        if (blue_.get(u, v)) return Color::Blue;
        return std::nullopt;
    }

    void add_edge(int u, int v, Color c);
    void remove_edge(int u, int v);
    BicoloredGraph with_edge(int u, int v, Color c) const {
        BicoloredGraph g = *this;
        g.add_edge(u, v, c);
        return g;
    }

    int red_degree(int v) const { return red_.row_popcount(v); }
    int blue_degree(int v) const { return blue_.row_popcount(v); }
    int degree(int v) const { return red_degree(v) + blue_degree(v); }

    const std::uint64_t* red_row(int v) const { return red_.row(v); }
    const std::uint64_t* blue_row(int v) const { return blue_.row(v); }
    int words() const { return red_.words(); }

    std::vector<std::uint64_t> union_row(int v) const {
        std::vector<std::uint64_t> r(words());
        const std::uint64_t* a = red_.row(v);
        const std::uint64_t* b = blue_.row(v);
        for (int i = 0; i < words(); ++i) r[i] = a[i] | b[i];
        return r;
    }

    template <typename F>
    void for_each_edge(F&& f) const {
        for (int u = 0; u < n_; ++u) {
            for (int v = u + 1; v < n_; ++v) {
                if (red_.get(u, v)) f(u, v, Color::Red);
                else if (blue_.get(u, v)) f(u, v, Color::Blue);
            }
        }
    }

    bool is_complete() const {
        return edge_count() == binom2(n_);
    }

    BicoloredGraph swap_colors() const;
    BicoloredGraph blow_up(int t) const;
    BicoloredGraph clone_vertex(int v) const;
    BicoloredGraph induced_subgraph(std::vector<int> s) const;

    // Redirects vertex y to carry a copy of x's colored neighborhood. Used by
    // the delete-and-clone rebuild; x and y must be non-adjacent.
    void replace_with_clone(int y, int x);

    bool operator==(const BicoloredGraph& o) const {
        return n_ == o.n_ && red_ == o.red_ && blue_ == o.blue_;
    }

private:
    void check_vertex(int v) const;

    int n_;
    BitMatrix red_;
    BitMatrix blue_;
    long long red_count_;
    long long blue_count_;
};

struct BalanceSpec {
    Rational epsilon;
    explicit BalanceSpec(Rational e);
    static BalanceSpec half() { return BalanceSpec(Rational(1, 2)); }
};

// Both color classes must hold at least an epsilon share of the edges,
// evaluated exactly. A graph with no edges is balanced for every epsilon.
bool is_balanced(const BicoloredGraph& g, const BalanceSpec& spec);

struct Density {
    Rational total;
    Rational red;
    Rational blue;
};

// Graphs on at most one vertex have density 0 by convention.
Density density(const BicoloredGraph& g);

inline std::pair<long long, long long> edge_counts(const BicoloredGraph& g) {
    return {g.red_count(), g.blue_count()};
}

} // namespace bicolor
