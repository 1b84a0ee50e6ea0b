#ifndef PHYLOTORIC_TREE_HPP
#define PHYLOTORIC_TREE_HPP

#include <string>
#include <vector>

#include "phylotoric/errors.hpp"

namespace phylotoric {

// Unrooted leaf-labeled tree.  Leaves are vertices 1..n_leaves (the vertex id
// is the leaf label), internal vertices follow.  Edge ids are 1..E in a
// canonical split-based order: the edge at leaf i is edge i, internal edges
// come afterwards sorted by the leaf set on their far side from leaf 1.
class PhyloTree {
public:
    // Validates connectivity, acyclicity, leaf degrees, internal degrees >= 3
    // and renumbers the edges canonically.
    PhyloTree(int n_leaves, int n_vertices, std::vector<std::pair<int, int>> edges);

    int n_leaves() const { return n_leaves_; }
    int n_vertices() const { return n_vertices_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    bool is_leaf(int v) const { return v >= 1 && v <= n_leaves_; }

    // Edge with id e (1-based).
    const std::pair<int, int>& edge(int e) const { return edges_.at(static_cast<std::size_t>(e - 1)); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }

    // Lowest-id internal vertex; the default root for parametrizations.
    int default_root() const;

    // Equality of leaf-labeled unrooted trees: same canonical Newick form.
    friend bool operator==(const PhyloTree& a, const PhyloTree& b);

private:
    int n_leaves_;
    int n_vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct EdgeSplit {
    int edge_id;
    std::vector<int> far_leaves; // sorted; leaves beyond the edge, away from the root
};

struct TreeCatalogEntry {
    int tree_id;
    PhyloTree shape;
    std::string newick;
    int legacy_id = -1; // id on the original catalog when known; unresolved for now
};

// Newick without branch lengths, integer leaf labels 1..n, ';'-terminated.
// Degree-2 vertices from rooted input are suppressed.  Parse errors carry
// byte offsets.
PhyloTree parse_newick(const std::string& text);

// Canonical form: rooted at the tree center (vertex or edge), children
// ordered by smallest descendant leaf.  parse_newick(to_newick(t)) == t.
std::string to_newick(const PhyloTree& t);

// One split per edge, far side relative to the given root vertex.
std::vector<EdgeSplit> edge_splits(const PhyloTree& t, int root);

// Equality up to relabeling of leaves and internal vertices.  Exhaustive over
// leaf permutations; meant for the small-tree catalog.
bool is_isomorphic(const PhyloTree& a, const PhyloTree& b);

// All unrooted shapes with 3..max_leaves leaves and internal degrees >= 3, up
// to leaf relabeling, ordered by (leaves, edge count, canonical newick).
std::vector<TreeCatalogEntry> catalog(int max_leaves);

// Relabel leaves: perm[i] is the new label of leaf i+1.
PhyloTree relabel_leaves(const PhyloTree& t, const std::vector<int>& perm);

} // namespace phylotoric

#endif
