#include "phylotoric/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace phylotoric {

namespace {

// Leaves on the far side of each edge as seen from `from_vertex`, as sorted
// lists indexed by edge position in `edges`.
std::vector<std::vector<int>> far_sides(int n_leaves, int n_vertices,
                                        const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<std::vector<int>>& adj,
                                        int from_vertex) {
    std::vector<std::vector<int>> result(edges.size());
    std::map<std::pair<int, int>, std::size_t> edge_index;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        edge_index[edges[i]] = i;
        edge_index[{edges[i].second, edges[i].first}] = i;
    }
    // collect leaves under v, entered via parent
    std::function<std::vector<int>(int, int)> walk = [&](int v, int parent) {
        std::vector<int> leaves;
        if (v <= n_leaves) leaves.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (w == parent) continue;
            std::vector<int> sub = walk(w, v);
            std::size_t e = edge_index.at({v, w});
            result[e] = sub;
            leaves.insert(leaves.end(), sub.begin(), sub.end());
        }
        std::sort(leaves.begin(), leaves.end());
        return leaves;
    };
    walk(from_vertex, 0);
    (void)n_vertices;
    return result;
}

} // namespace

PhyloTree::PhyloTree(int n_leaves, int n_vertices, std::vector<std::pair<int, int>> edges)
    : n_leaves_(n_leaves), n_vertices_(n_vertices) {
    if (n_leaves < 2) throw DomainError("tree needs at least 2 leaves");
    if (static_cast<int>(edges.size()) != n_vertices - 1)
        throw DomainError("edge count must be vertex count minus one");

    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_vertices) + 1);
    for (auto& [a, b] : edges) {
        if (a < 1 || a > n_vertices || b < 1 || b > n_vertices || a == b)
            throw DomainError("edge endpoint out of range");
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    // connectivity (acyclicity follows from the edge count)
    std::vector<bool> reached(static_cast<std::size_t>(n_vertices) + 1, false);
    std::vector<int> stack{1};
    reached[1] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!reached[static_cast<std::size_t>(w)]) {
                reached[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
    }
    for (int v = 1; v <= n_vertices; ++v)
        if (!reached[static_cast<std::size_t>(v)]) throw DomainError("tree is not connected");
    for (int v = 1; v <= n_vertices; ++v) {
        std::size_t deg = adj[static_cast<std::size_t>(v)].size();
        if (v <= n_leaves && deg != 1)
            throw DomainError("leaf " + std::to_string(v) + " has degree " + std::to_string(deg));
        if (v > n_leaves && deg < 3)
            throw DomainError("internal vertex of degree " + std::to_string(deg));
    }

    // canonical edge order: leaf edges by leaf id, then internal edges by
    // their far split relative to leaf 1
    std::vector<std::vector<int>> far = far_sides(n_leaves, n_vertices, edges, adj, 1);
    std::vector<std::size_t> idx(edges.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    auto leaf_of = [&](std::size_t e) {
        int a = edges[e].first, b = edges[e].second;
        if (a <= n_leaves) return a;
        if (b <= n_leaves) return b;
        return 0;
    };
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        int lx = leaf_of(x), ly = leaf_of(y);
        if ((lx != 0) != (ly != 0)) return lx != 0; // leaf edges first
        if (lx != 0) return lx < ly;
        const auto& fx = far[x];
        const auto& fy = far[y];
        if (fx[0] != fy[0]) return fx[0] < fy[0];
        if (fx.size() != fy.size()) return fx.size() < fy.size();
        return fx < fy;
    });
    for (std::size_t e : idx) {
        auto [a, b] = edges[e];
        edges_.push_back({std::min(a, b), std::max(a, b)});
    }
    // adjacency in deterministic order
    adj_.assign(static_cast<std::size_t>(n_vertices) + 1, {});
    for (auto& [a, b] : edges_) {
        adj_[static_cast<std::size_t>(a)].push_back(b);
        adj_[static_cast<std::size_t>(b)].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool operator==(const PhyloTree& a, const PhyloTree& b) {
    return a.n_leaves_ == b.n_leaves_ && to_newick(a) == to_newick(b);
}

int PhyloTree::default_root() const {
    if (n_vertices_ > n_leaves_) return n_leaves_ + 1;
    return 1; // two-leaf tree has no internal vertex
}

// ---------------------------------------------------------------------------
// Newick

namespace {

struct NewickParser {
    const std::string& s;
    std::size_t pos = 0;

    // temporary graph while parsing
    int next_internal = -1; // temp internal ids are negative
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaf_labels;
    std::vector<std::size_t> label_offsets;

    char peek() const { return pos < s.size() ? s[pos] : '\0'; }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }

    int parse_node() {
        if (peek() == '(') {
            ++pos;
            int me = next_internal--;
            edges.push_back({me, parse_node()});
            while (peek() == ',') {
                ++pos;
                edges.push_back({me, parse_node()});
            }
            expect(')');
            reject_decorations();
            return me;
        }
        std::size_t start = pos;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected leaf label or '('", pos);
        long label = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            label = label * 10 + (s[pos] - '0');
            if (label > 1000000) throw ParseError("leaf label too large", start);
            ++pos;
        }
        if (label == 0) throw ParseError("leaf labels must be positive", start);
        reject_decorations();
        leaf_labels.push_back(static_cast<int>(label));
        label_offsets.push_back(start);
        return static_cast<int>(label);
    }

    void reject_decorations() {
        if (peek() == ':') throw ParseError("branch lengths are not accepted", pos);
        if (std::isalpha(static_cast<unsigned char>(peek())))
            throw ParseError("unexpected name", pos);
    }
};

} // namespace

PhyloTree parse_newick(const std::string& text) {
    NewickParser p{text};
    while (p.pos < text.size() && std::isspace(static_cast<unsigned char>(text[p.pos]))) ++p.pos;
    if (p.peek() != '(') throw ParseError("tree must start with '('", p.pos);
    int root = p.parse_node();
    if (p.peek() != ';') throw ParseError("unbalanced or unterminated tree", p.pos);
    ++p.pos;
    while (p.pos < text.size()) {
        if (!std::isspace(static_cast<unsigned char>(text[p.pos])))
            throw ParseError("trailing content after ';'", p.pos);
        ++p.pos;
    }

    // leaf labels must form 1..n exactly
    int n = static_cast<int>(p.leaf_labels.size());
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (std::size_t i = 0; i < p.leaf_labels.size(); ++i) {
        int lbl = p.leaf_labels[i];
        if (lbl > n)
            throw ParseError("leaf labels must form 1..n, found " + std::to_string(lbl),
                             p.label_offsets[i]);
        if (used[static_cast<std::size_t>(lbl)])
            throw ParseError("duplicate leaf label " + std::to_string(lbl), p.label_offsets[i]);
        used[static_cast<std::size_t>(lbl)] = true;
    }
    if (n < 2) throw ParseError("tree needs at least 2 leaves", 0);

    // suppress degree-2 vertices (the rooted artifact of Newick)
    std::map<int, std::vector<int>> adj;
    for (auto [a, b] : p.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [v, nb] : adj) {
            if (v > 0 || nb.size() != 2) continue; // only unlabeled internal vertices
            int a = nb[0], b = nb[1];
            auto& na = adj[a];
            auto& nbb = adj[b];
            na.erase(std::find(na.begin(), na.end(), v));
            nbb.erase(std::find(nbb.begin(), nbb.end(), v));
            na.push_back(b);
            nbb.push_back(a);
            adj.erase(v);
            changed = true;
            break;
        }
    }
    (void)root;

    // renumber internal vertices after the leaves
    std::map<int, int> id;
    for (int i = 1; i <= n; ++i) id[i] = i;
    int next = n + 1;
    for (auto& [v, nb] : adj)
        if (v < 0) id[v] = next++;
    std::vector<std::pair<int, int>> final_edges;
    for (auto& [v, nb] : adj)
        for (int w : nb)
            if (id.at(v) < id.at(w)) final_edges.push_back({id.at(v), id.at(w)});

    return PhyloTree(n, next - 1, std::move(final_edges));
}

namespace {

// smallest leaf in the subtree of v entered from parent
int min_leaf(const PhyloTree& t, int v, int parent) {
    if (t.is_leaf(v)) return v;
    int best = t.n_leaves() + 1;
    for (int w : t.neighbors(v))
        if (w != parent) best = std::min(best, min_leaf(t, w, v));
    return best;
}

std::string write_subtree(const PhyloTree& t, int v, int parent) {
    if (t.is_leaf(v)) return std::to_string(v);
    std::vector<int> children;
    for (int w : t.neighbors(v))
        if (w != parent) children.push_back(w);
    std::sort(children.begin(), children.end(),
              [&](int a, int b) { return min_leaf(t, a, v) < min_leaf(t, b, v); });
    std::string out = "(";
    for (std::size_t i = 0; i < children.size(); ++i) {
        if (i) out += ",";
        out += write_subtree(t, children[i], v);
    }
    return out + ")";
}

// center of the tree: peel degree-1 vertices until one vertex or one edge is left
std::pair<int, int> tree_center(const PhyloTree& t) {
    std::vector<int> degree(static_cast<std::size_t>(t.n_vertices()) + 1, 0);
    for (auto& [a, b] : t.edges()) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    std::vector<bool> removed(static_cast<std::size_t>(t.n_vertices()) + 1, false);
    int remaining = t.n_vertices();
    std::vector<int> layer;
    for (int v = 1; v <= t.n_vertices(); ++v)
        if (degree[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    while (remaining > 2) {
        std::vector<int> next_layer;
        for (int v : layer) {
            removed[static_cast<std::size_t>(v)] = true;
            --remaining;
            for (int w : t.neighbors(v))
                if (!removed[static_cast<std::size_t>(w)] &&
                    --degree[static_cast<std::size_t>(w)] == 1)
                    next_layer.push_back(w);
        }
        layer = std::move(next_layer);
    }
    std::vector<int> center;
    for (int v = 1; v <= t.n_vertices(); ++v)
        if (!removed[static_cast<std::size_t>(v)]) center.push_back(v);
    if (center.size() == 1) return {center[0], 0};
    return {center[0], center[1]};
}

} // namespace

std::string to_newick(const PhyloTree& t) {
    auto [u, v] = tree_center(t);
    if (v == 0) return write_subtree(t, u, 0) + ";";
    if (min_leaf(t, v, u) < min_leaf(t, u, v)) std::swap(u, v);
    return "(" + write_subtree(t, u, v) + "," + write_subtree(t, v, u) + ");";
}

std::vector<EdgeSplit> edge_splits(const PhyloTree& t, int root) {
    if (root < 1 || root > t.n_vertices())
        throw DomainError("unknown root vertex " + std::to_string(root));
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.n_vertices()) + 1);
    for (auto& [a, b] : t.edges()) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    auto far = far_sides(t.n_leaves(), t.n_vertices(), t.edges(), adj, root);
    std::vector<EdgeSplit> out;
    for (int e = 1; e <= t.n_edges(); ++e)
        out.push_back({e, far[static_cast<std::size_t>(e - 1)]});
    return out;
}

PhyloTree relabel_leaves(const PhyloTree& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.n_leaves())
        throw DomainError("permutation size mismatch");
    auto map_v = [&](int v) {
        return t.is_leaf(v) ? perm[static_cast<std::size_t>(v - 1)] : v;
    };
    std::vector<std::pair<int, int>> edges;
    for (auto& [a, b] : t.edges()) edges.push_back({map_v(a), map_v(b)});
    return PhyloTree(t.n_leaves(), t.n_vertices(), std::move(edges));
}

bool is_isomorphic(const PhyloTree& a, const PhyloTree& b) {
    if (a.n_leaves() != b.n_leaves() || a.n_vertices() != b.n_vertices() ||
        a.n_edges() != b.n_edges())
        return false;
    std::string target = to_newick(b);
    std::vector<int> perm(static_cast<std::size_t>(a.n_leaves()));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        if (to_newick(relabel_leaves(a, perm)) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<TreeCatalogEntry> catalog(int max_leaves) {
    if (max_leaves < 3 || max_leaves > 5)
        throw DomainError("catalog supports 3..5 leaves, got " + std::to_string(max_leaves));

    // grow all leaf-labeled trees by attaching the next leaf to an internal
    // vertex or into a subdivided edge, then dedupe shapes up to relabeling
    std::vector<PhyloTree> current{PhyloTree(2, 2, {{1, 2}})};
    std::vector<PhyloTree> shapes;
    for (int n = 3; n <= max_leaves; ++n) {
        std::set<std::string> seen;
        std::vector<PhyloTree> grown;
        for (const PhyloTree& t : current) {
            int leaf = n;
            // attach to an internal vertex
            for (int v = t.n_leaves() + 1; v <= t.n_vertices(); ++v) {
                std::vector<std::pair<int, int>> edges;
                auto shift = [&](int x) { return t.is_leaf(x) ? x : x + 1; };
                for (auto& [a, b] : t.edges()) edges.push_back({shift(a), shift(b)});
                edges.push_back({leaf, v + 1});
                PhyloTree u(n, t.n_vertices() + 1, std::move(edges));
                if (seen.insert(to_newick(u)).second) grown.push_back(u);
            }
            // subdivide an edge
            for (int e = 1; e <= t.n_edges(); ++e) {
                std::vector<std::pair<int, int>> edges;
                auto shift = [&](int x) { return t.is_leaf(x) ? x : x + 1; };
                int mid = t.n_vertices() + 2;
                for (int f = 1; f <= t.n_edges(); ++f) {
                    auto [a, b] = t.edge(f);
                    if (f == e) {
                        edges.push_back({shift(a), mid});
                        edges.push_back({mid, shift(b)});
                    } else {
                        edges.push_back({shift(a), shift(b)});
                    }
                }
                edges.push_back({leaf, mid});
                PhyloTree u(n, t.n_vertices() + 2, std::move(edges));
                if (seen.insert(to_newick(u)).second) grown.push_back(u);
            }
        }
        for (const PhyloTree& t : grown) {
            bool known = false;
            for (const PhyloTree& s : shapes)
                if (is_isomorphic(t, s)) {
                    known = true;
                    break;
                }
            if (!known) shapes.push_back(t);
        }
        current = std::move(grown);
    }

    // canonical labeling: the lexicographically smallest newick over relabelings
    std::vector<TreeCatalogEntry> entries;
    for (const PhyloTree& s : shapes) {
        std::vector<int> perm(static_cast<std::size_t>(s.n_leaves()));
        std::iota(perm.begin(), perm.end(), 1);
        std::string best = to_newick(s);
        do {
            best = std::min(best, to_newick(relabel_leaves(s, perm)));
        } while (std::next_permutation(perm.begin(), perm.end()));
        entries.push_back({0, parse_newick(best), best});
    }
    std::sort(entries.begin(), entries.end(), [](const TreeCatalogEntry& a,
                                                 const TreeCatalogEntry& b) {
        if (a.shape.n_leaves() != b.shape.n_leaves())
            return a.shape.n_leaves() < b.shape.n_leaves();
        if (a.shape.n_edges() != b.shape.n_edges()) return a.shape.n_edges() < b.shape.n_edges();
        return a.newick < b.newick;
    });
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].tree_id = static_cast<int>(i + 1);
    return entries;
}

} // namespace phylotoric
