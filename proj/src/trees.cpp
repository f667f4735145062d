#include "moduli/trees.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace moduli {

namespace {

constexpr long kNoToken = std::numeric_limits<long>::max();
constexpr long kTokenBand = 1L << 20;  // real tokens < plus tokens < minus tokens

std::vector<std::vector<int>> adjacency(int nverts, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(nverts));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    return adj;
}

void check_tree_shape(int nverts, const std::vector<std::pair<int, int>>& edges,
                      const char* what) {
    if (nverts < 1) throw DomainError(std::string(what) + ": needs at least one vertex");
    if (static_cast<int>(edges.size()) != nverts - 1)
        throw DomainError(std::string(what) + ": edge count must be vertex count - 1");
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= nverts || v < 0 || v >= nverts)
            throw DomainError(std::string(what) + ": edge endpoint out of range");
        if (u == v) throw DomainError(std::string(what) + ": self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw DomainError(std::string(what) + ": duplicate edge");
    }
    auto adj = adjacency(nverts, edges);
    std::vector<char> vis(static_cast<std::size_t>(nverts), 0);
    std::queue<int> bfs;
    bfs.push(0);
    vis[0] = 1;
    int reached = 1;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int w : adj[static_cast<std::size_t>(v)])
            if (!vis[static_cast<std::size_t>(w)]) {
                vis[static_cast<std::size_t>(w)] = 1;
                ++reached;
                bfs.push(w);
            }
    }
    if (reached != nverts) throw DomainError(std::string(what) + ": graph is not connected");
}

// Renumber vertices by a preorder DFS from `root`, visiting branches in
// increasing order of the least leaf token they contain. Returns old -> new.
std::vector<int> canonical_numbering(int nverts, const std::vector<std::pair<int, int>>& edges,
                                     const std::vector<long>& vertex_token, int root) {
    auto adj = adjacency(nverts, edges);
    std::vector<long> subtree_min(static_cast<std::size_t>(nverts), kNoToken);
    std::function<long(int, int)> fill_min = [&](int v, int parent) -> long {
        long m = vertex_token[static_cast<std::size_t>(v)];
        for (int w : adj[static_cast<std::size_t>(v)])
            if (w != parent) m = std::min(m, fill_min(w, v));
        subtree_min[static_cast<std::size_t>(v)] = m;
        return m;
    };
    fill_min(root, -1);

    std::vector<int> old_to_new(static_cast<std::size_t>(nverts), -1);
    int next = 0;
    std::function<void(int, int)> assign = [&](int v, int parent) {
        old_to_new[static_cast<std::size_t>(v)] = next++;
        std::vector<int> kids;
        for (int w : adj[static_cast<std::size_t>(v)])
            if (w != parent) kids.push_back(w);
        std::sort(kids.begin(), kids.end(), [&](int x, int y) {
            return subtree_min[static_cast<std::size_t>(x)] < subtree_min[static_cast<std::size_t>(y)];
        });
        for (int w : kids) assign(w, v);
    };
    assign(root, -1);
    return old_to_new;
}

std::vector<std::pair<int, int>> remap_edges(const std::vector<std::pair<int, int>>& edges,
                                             const std::vector<int>& old_to_new) {
    std::vector<std::pair<int, int>> out;
    out.reserve(edges.size());
    for (auto [u, v] : edges) {
        int a = old_to_new[static_cast<std::size_t>(u)];
        int b = old_to_new[static_cast<std::size_t>(v)];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ComplexStableTree

ComplexStableTree ComplexStableTree::one_vertex(int leaves) {
    return make(leaves, 1, {}, std::vector<int>(static_cast<std::size_t>(std::max(leaves, 0)), 0));
}

ComplexStableTree ComplexStableTree::make(int leaves, int vertices,
                                          std::vector<std::pair<int, int>> edges,
                                          std::vector<int> leaf_vertex) {
    if (static_cast<int>(leaf_vertex.size()) != leaves)
        throw DomainError("tree: one carrier vertex per leaf label required");
    ComplexStableTree t;
    t.vertices_ = vertices;
    t.edges_ = std::move(edges);
    t.leaf_vertex_ = std::move(leaf_vertex);
    t.validate();
    t.canonicalize();
    return t;
}

int ComplexStableTree::leaf_vertex(int label) const {
    if (label < 1 || label > leaf_count()) throw DomainError("leaf label out of range");
    return leaf_vertex_[static_cast<std::size_t>(label - 1)];
}

void ComplexStableTree::validate() const {
    if (leaf_count() < 3)
        throw DomainError("unstable tree: needs at least 3 marked points, got " +
                          std::to_string(leaf_count()));
    check_tree_shape(vertices_, edges_, "tree");
    std::vector<int> valence(static_cast<std::size_t>(vertices_), 0);
    for (auto [u, v] : edges_) {
        ++valence[static_cast<std::size_t>(u)];
        ++valence[static_cast<std::size_t>(v)];
    }
    for (int v : leaf_vertex_) {
        if (v < 0 || v >= vertices_) throw DomainError("tree: leaf carrier out of range");
        ++valence[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < vertices_; ++v)
        if (valence[static_cast<std::size_t>(v)] < 3)
            throw DomainError("unstable tree: vertex of valence " +
                              std::to_string(valence[static_cast<std::size_t>(v)]));
}

void ComplexStableTree::canonicalize() {
    std::vector<long> token(static_cast<std::size_t>(vertices_), kNoToken);
    for (int j = 0; j < leaf_count(); ++j) {
        auto v = static_cast<std::size_t>(leaf_vertex_[static_cast<std::size_t>(j)]);
        token[v] = std::min(token[v], static_cast<long>(j + 1));
    }
    auto old_to_new = canonical_numbering(vertices_, edges_, token, leaf_vertex_[0]);
    edges_ = remap_edges(edges_, old_to_new);
    for (int& v : leaf_vertex_) v = old_to_new[static_cast<std::size_t>(v)];
}

// ---------------------------------------------------------------------------
// RealStableTree

RealStableTree RealStableTree::one_vertex(int real_points, int pairs) {
    if (real_points < 0 || pairs < 0) throw DomainError("negative marked-point count");
    return make(1, {}, {0}, std::vector<int>(static_cast<std::size_t>(real_points), 0),
                std::vector<std::pair<int, int>>(static_cast<std::size_t>(pairs), {0, 0}));
}

RealStableTree RealStableTree::make(int vertices, std::vector<std::pair<int, int>> edges,
                                    std::vector<int> involution,
                                    std::vector<int> real_leaf_vertex,
                                    std::vector<std::pair<int, int>> pair_vertices) {
    RealStableTree t;
    t.vertices_ = vertices;
    t.edges_ = std::move(edges);
    t.involution_ = std::move(involution);
    t.real_leaf_vertex_ = std::move(real_leaf_vertex);
    t.pair_vertex_ = std::move(pair_vertices);
    t.validate();
    t.canonicalize();
    return t;
}

int RealStableTree::involution(int v) const {
    if (v < 0 || v >= vertices_) throw DomainError("vertex out of range");
    return involution_[static_cast<std::size_t>(v)];
}

int RealStableTree::real_leaf_vertex(int label) const {
    if (label < 1 || label > real_count()) throw DomainError("real leaf label out of range");
    return real_leaf_vertex_[static_cast<std::size_t>(label - 1)];
}

int RealStableTree::pair_plus_vertex(int label) const {
    if (label < 1 || label > pair_count()) throw DomainError("pair label out of range");
    return pair_vertex_[static_cast<std::size_t>(label - 1)].first;
}

int RealStableTree::pair_minus_vertex(int label) const {
    if (label < 1 || label > pair_count()) throw DomainError("pair label out of range");
    return pair_vertex_[static_cast<std::size_t>(label - 1)].second;
}

void RealStableTree::validate() const {
    if (real_count() + 2 * pair_count() < 3)
        throw DomainError("unstable real tree: needs k + 2l >= 3, got k=" +
                          std::to_string(real_count()) + " l=" + std::to_string(pair_count()));
    check_tree_shape(vertices_, edges_, "real tree");
    if (static_cast<int>(involution_.size()) != vertices_)
        throw DomainError("real tree: involution must cover every vertex");
    for (int v = 0; v < vertices_; ++v) {
        int w = involution_[static_cast<std::size_t>(v)];
        if (w < 0 || w >= vertices_) throw DomainError("real tree: involution image out of range");
        if (involution_[static_cast<std::size_t>(w)] != v)
            throw DomainError("real tree: involution is not of order <= 2");
    }
    std::set<std::pair<int, int>> edge_set;
    for (auto [u, v] : edges_) edge_set.insert({std::min(u, v), std::max(u, v)});
    for (auto [u, v] : edges_) {
        int su = involution_[static_cast<std::size_t>(u)];
        int sv = involution_[static_cast<std::size_t>(v)];
        if (!edge_set.count({std::min(su, sv), std::max(su, sv)}))
            throw DomainError("real tree: involution does not preserve the edges");
    }
    std::vector<int> valence(static_cast<std::size_t>(vertices_), 0);
    for (auto [u, v] : edges_) {
        ++valence[static_cast<std::size_t>(u)];
        ++valence[static_cast<std::size_t>(v)];
    }
    for (int v : real_leaf_vertex_) {
        if (v < 0 || v >= vertices_) throw DomainError("real tree: leaf carrier out of range");
        if (involution_[static_cast<std::size_t>(v)] != v)
            throw DomainError("real tree: real marked point on a vertex moved by the involution");
        ++valence[static_cast<std::size_t>(v)];
    }
    for (auto [p, m] : pair_vertex_) {
        if (p < 0 || p >= vertices_ || m < 0 || m >= vertices_)
            throw DomainError("real tree: leaf carrier out of range");
        if (involution_[static_cast<std::size_t>(p)] != m)
            throw DomainError("real tree: conjugate points must be exchanged by the involution");
        ++valence[static_cast<std::size_t>(p)];
        ++valence[static_cast<std::size_t>(m)];
    }
    for (int v = 0; v < vertices_; ++v)
        if (valence[static_cast<std::size_t>(v)] < 3)
            throw DomainError("unstable real tree: vertex of valence " +
                              std::to_string(valence[static_cast<std::size_t>(v)]));
}

void RealStableTree::canonicalize() {
    std::vector<long> token(static_cast<std::size_t>(vertices_), kNoToken);
    auto feed = [&](int v, long t) {
        auto idx = static_cast<std::size_t>(v);
        token[idx] = std::min(token[idx], t);
    };
    for (int j = 0; j < real_count(); ++j)
        feed(real_leaf_vertex_[static_cast<std::size_t>(j)], j + 1);
    for (int j = 0; j < pair_count(); ++j) {
        feed(pair_vertex_[static_cast<std::size_t>(j)].first, kTokenBand + j + 1);
        feed(pair_vertex_[static_cast<std::size_t>(j)].second, 2 * kTokenBand + j + 1);
    }
    int root = 0;
    long best = kNoToken;
    for (int v = 0; v < vertices_; ++v)
        if (token[static_cast<std::size_t>(v)] < best) {
            best = token[static_cast<std::size_t>(v)];
            root = v;
        }
    auto old_to_new = canonical_numbering(vertices_, edges_, token, root);
    edges_ = remap_edges(edges_, old_to_new);
    std::vector<int> inv(static_cast<std::size_t>(vertices_));
    for (int v = 0; v < vertices_; ++v)
        inv[static_cast<std::size_t>(old_to_new[static_cast<std::size_t>(v)])] =
            old_to_new[static_cast<std::size_t>(involution_[static_cast<std::size_t>(v)])];
    involution_ = std::move(inv);
    for (int& v : real_leaf_vertex_) v = old_to_new[static_cast<std::size_t>(v)];
    for (auto& [p, m] : pair_vertex_) {
        p = old_to_new[static_cast<std::size_t>(p)];
        m = old_to_new[static_cast<std::size_t>(m)];
    }
}

// ---------------------------------------------------------------------------
// Gluings

ComplexStableTree glue_complex(const ComplexStableTree& a, int i, const ComplexStableTree& b) {
    const int k = a.leaf_count() - 1;
    const int l = b.leaf_count() - 1;
    auto [ma, mb] = glue_label_maps(k, l, i);  // also checks k,l >= 2 and the slot range

    const int va = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + va, v + va);
    edges.emplace_back(a.leaf_vertex(i), b.leaf_vertex(l + 1) + va);

    std::vector<int> leaves(static_cast<std::size_t>(k + l), -1);
    for (int j = 1; j <= k + 1; ++j)
        if (auto im = ma.image(j)) leaves[static_cast<std::size_t>(*im - 1)] = a.leaf_vertex(j);
    for (int j = 1; j <= l; ++j)
        if (auto im = mb.image(j)) leaves[static_cast<std::size_t>(*im - 1)] = b.leaf_vertex(j) + va;
    return ComplexStableTree::make(k + l, va + b.vertex_count(), std::move(edges),
                                   std::move(leaves));
}

RealStableTree glue_real_real(const RealStableTree& a, int i, const RealStableTree& b) {
    const int ra = a.real_count(), pa = a.pair_count();
    const int rb = b.real_count(), pb = b.pair_count();
    if (ra < 1 || rb < 1) throw DomainError("real-real gluing needs real marked points");
    const int k = ra - 1, kp = rb - 1;
    if (k + pa < 2 || kp + pb < 2)
        throw DomainError("real-real gluing needs operadic arity >= 2 on both factors");
    if (i < 1 || i > ra)
        throw DomainError("real gluing slot " + std::to_string(i) + " out of range [1," +
                          std::to_string(ra) + "]");

    const int va = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + va, v + va);
    edges.emplace_back(a.real_leaf_vertex(i), b.real_leaf_vertex(rb) + va);

    std::vector<int> inv;
    inv.reserve(static_cast<std::size_t>(va + b.vertex_count()));
    for (int v = 0; v < va; ++v) inv.push_back(a.involution(v));
    for (int v = 0; v < b.vertex_count(); ++v) inv.push_back(b.involution(v) + va);

    std::vector<int> reals(static_cast<std::size_t>(k + kp), -1);
    for (int j = 1; j <= ra; ++j) {
        if (j == i) continue;
        int target = j < i ? j : j + kp - 1;
        reals[static_cast<std::size_t>(target - 1)] = a.real_leaf_vertex(j);
    }
    for (int j = 1; j <= kp; ++j)
        reals[static_cast<std::size_t>(j + i - 2)] = b.real_leaf_vertex(j) + va;

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(pa + pb));
    for (int j = 1; j <= pa; ++j)
        pairs.emplace_back(a.pair_plus_vertex(j), a.pair_minus_vertex(j));
    for (int j = 1; j <= pb; ++j)
        pairs.emplace_back(b.pair_plus_vertex(j) + va, b.pair_minus_vertex(j) + va);

    return RealStableTree::make(va + b.vertex_count(), std::move(edges), std::move(inv),
                                std::move(reals), std::move(pairs));
}

RealStableTree glue_real_complex(const RealStableTree& a, int i, const ComplexStableTree& b) {
    const int ra = a.real_count(), pa = a.pair_count();
    const int lb = b.leaf_count() - 1;
    if (lb < 2) throw DomainError("real-complex gluing needs a complex factor of arity >= 2");
    const int glueable_pairs = ra == 0 ? pa - 1 : pa;
    if (ra >= 1 && (ra - 1) + pa < 2)
        throw DomainError("real-complex gluing needs operadic arity >= 2 on the real factor");
    if (i < 1 || i > glueable_pairs)
        throw DomainError("pair slot " + std::to_string(i) + " out of range [1," +
                          std::to_string(glueable_pairs) + "]");

    const int va = a.vertex_count();
    const int vb = b.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) {
        edges.emplace_back(u + va, v + va);
        edges.emplace_back(u + va + vb, v + va + vb);
    }
    edges.emplace_back(a.pair_plus_vertex(i), b.leaf_vertex(lb + 1) + va);
    edges.emplace_back(a.pair_minus_vertex(i), b.leaf_vertex(lb + 1) + va + vb);

    std::vector<int> inv;
    inv.reserve(static_cast<std::size_t>(va + 2 * vb));
    for (int v = 0; v < va; ++v) inv.push_back(a.involution(v));
    for (int v = 0; v < vb; ++v) inv.push_back(v + va + vb);  // plus copy -> minus copy
    for (int v = 0; v < vb; ++v) inv.push_back(v + va);

    std::vector<int> reals;
    reals.reserve(static_cast<std::size_t>(ra));
    for (int j = 1; j <= ra; ++j) reals.push_back(a.real_leaf_vertex(j));

    std::vector<std::pair<int, int>> pairs(static_cast<std::size_t>(pa - 1 + lb), {-1, -1});
    for (int j = 1; j <= pa; ++j) {
        if (j == i) continue;
        int target = j < i ? j : j + lb - 1;
        pairs[static_cast<std::size_t>(target - 1)] = {a.pair_plus_vertex(j),
                                                       a.pair_minus_vertex(j)};
    }
    for (int t = 1; t <= lb; ++t)
        pairs[static_cast<std::size_t>(t + i - 2)] = {b.leaf_vertex(t) + va,
                                                      b.leaf_vertex(t) + va + vb};

    return RealStableTree::make(va + 2 * vb, std::move(edges), std::move(inv), std::move(reals),
                                std::move(pairs));
}

// ---------------------------------------------------------------------------
// Forgetting marked points

ComplexStableTree forget_stabilize(const ComplexStableTree& t, const LabelVec& keep) {
    LabelVec s = keep;
    std::sort(s.begin(), s.end());
    if (s.size() < 3) throw DomainError("forgetting must keep at least 3 marked points");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > t.leaf_count())
            throw DomainError("kept label out of range");
        if (i && s[i] == s[i - 1]) throw DomainError("kept labels must be distinct");
    }

    struct Vert {
        std::vector<int> leaves;
        bool alive = true;
    };
    std::vector<Vert> verts(static_cast<std::size_t>(t.vertex_count()));
    for (std::size_t i = 0; i < s.size(); ++i)
        verts[static_cast<std::size_t>(t.leaf_vertex(s[i]))].leaves.push_back(
            static_cast<int>(i) + 1);
    std::vector<std::pair<int, int>> edges = t.edges();

    for (;;) {
        std::vector<int> valence(verts.size(), 0);
        for (auto [u, v] : edges) {
            ++valence[static_cast<std::size_t>(u)];
            ++valence[static_cast<std::size_t>(v)];
        }
        int bad = -1;
        for (std::size_t v = 0; v < verts.size(); ++v)
            if (verts[v].alive &&
                valence[v] + static_cast<int>(verts[v].leaves.size()) < 3) {
                bad = static_cast<int>(v);
                break;
            }
        if (bad < 0) break;
        // contract one incident edge, merging the unstable vertex into its neighbor
        int other = -1;
        std::size_t which = 0;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (edges[e].first == bad) { other = edges[e].second; which = e; break; }
            if (edges[e].second == bad) { other = edges[e].first; which = e; break; }
        }
        if (other < 0) break;  // a lone vertex keeps >= 3 leaves, nothing to contract
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(which));
        for (auto& [u, v] : edges) {
            if (u == bad) u = other;
            if (v == bad) v = other;
        }
        auto& moved = verts[static_cast<std::size_t>(bad)].leaves;
        auto& into = verts[static_cast<std::size_t>(other)].leaves;
        into.insert(into.end(), moved.begin(), moved.end());
        moved.clear();
        verts[static_cast<std::size_t>(bad)].alive = false;
    }

    std::vector<int> old_to_new(verts.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < verts.size(); ++v)
        if (verts[v].alive) old_to_new[v] = next++;
    std::vector<std::pair<int, int>> new_edges;
    new_edges.reserve(edges.size());
    for (auto [u, v] : edges)
        new_edges.emplace_back(old_to_new[static_cast<std::size_t>(u)],
                               old_to_new[static_cast<std::size_t>(v)]);
    std::vector<int> leaves(s.size(), -1);
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (int label : verts[v].leaves)
            leaves[static_cast<std::size_t>(label - 1)] = old_to_new[v];
    return ComplexStableTree::make(static_cast<int>(s.size()), next, std::move(new_edges),
                                   std::move(leaves));
}

std::vector<Partition2> edge_partitions(const ComplexStableTree& t) {
    std::vector<Partition2> out;
    out.reserve(t.edges().size());
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
        auto [cu, cv] = t.edges()[e];
        // collect the vertices on cu's side of the removed edge
        std::vector<char> side(static_cast<std::size_t>(t.vertex_count()), 0);
        std::queue<int> bfs;
        bfs.push(cu);
        side[static_cast<std::size_t>(cu)] = 1;
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (std::size_t f = 0; f < t.edges().size(); ++f) {
                if (f == e) continue;
                auto [x, y] = t.edges()[f];
                int w = -1;
                if (x == v) w = y;
                else if (y == v) w = x;
                if (w >= 0 && !side[static_cast<std::size_t>(w)]) {
                    side[static_cast<std::size_t>(w)] = 1;
                    bfs.push(w);
                }
            }
        }
        LabelVec block;
        for (int j = 1; j <= t.leaf_count(); ++j)
            if (side[static_cast<std::size_t>(t.leaf_vertex(j))]) block.push_back(j);
        out.push_back(Partition2::make(t.leaf_count(), std::move(block), true));
    }
    return out;
}

}  // namespace moduli
