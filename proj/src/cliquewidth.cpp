#include "muig/cliquewidth.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "muig/error.hpp"

namespace muig {

std::size_t CwdExpression::add(ExprNode node) {
    for (std::size_t child : {node.left, node.right})
        if (child != ExprNode::none && child >= nodes_.size()) throw ValidationError("expression child out of range");
    nodes_.push_back(node);
    root_ = nodes_.size() - 1;
    return root_;
}

std::size_t CwdExpression::vertex(Label label, VertexId id) {
    ExprNode n;
    n.kind = ExprKind::Vertex;
    n.a = label;
    n.vertex = id;
    return add(n);
}

std::size_t CwdExpression::unite(std::size_t x, std::size_t y) {
    ExprNode n;
    n.kind = ExprKind::Union;
    n.left = x;
    n.right = y;
    return add(n);
}

std::size_t CwdExpression::relabel(Label from, Label to, std::size_t x) {
    ExprNode n;
    n.kind = ExprKind::Relabel;
    n.a = from;
    n.b = to;
    n.left = x;
    return add(n);
}

std::size_t CwdExpression::connect(Label i, Label j, std::size_t x) {
    ExprNode n;
    n.kind = ExprKind::Connect;
    n.a = i;
    n.b = j;
    n.left = x;
    return add(n);
}

std::size_t CwdExpression::root() const {
    if (nodes_.empty()) throw ValidationError("empty expression");
    return root_;
}

void CwdExpression::set_root(std::size_t node) {
    if (node >= nodes_.size()) throw ValidationError("root out of range");
    root_ = node;
}

std::size_t CwdExpression::width() const {
    std::set<Label> labels;
    for (const auto& n : nodes_) {
        if (n.kind == ExprKind::Union) continue;
        labels.insert(n.a);
        if (n.kind != ExprKind::Vertex) labels.insert(n.b);
    }
    return labels.size();
}

EvalResult eval_expression(const CwdExpression& expr) {
    const auto& nodes = expr.nodes();
    const std::size_t root = expr.root();

    std::vector<std::size_t> parents(nodes.size(), 0);
    for (const auto& n : nodes)
        for (std::size_t child : {n.left, n.right})
            if (child != ExprNode::none) ++parents[child];
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (parents[i] != (i == root ? 0u : 1u)) throw ValidationError("expression nodes do not form a single tree");

    using LabelMap = std::map<Label, std::vector<VertexId>>;
    std::vector<LabelMap> state(nodes.size());
    std::unordered_set<VertexId> seen;
    std::vector<VertexId> ids;
    std::vector<Edge> edges;

    auto move_into = [](std::vector<VertexId>& into, std::vector<VertexId>& from) {
        if (into.size() < from.size()) std::swap(into, from);
        into.insert(into.end(), from.begin(), from.end());
        from.clear();
    };

    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const ExprNode& n = nodes[i];
        switch (n.kind) {
        case ExprKind::Vertex:
            if (!seen.insert(n.vertex).second)
                throw ValidationError("vertex id " + std::to_string(n.vertex) + " created twice");
            ids.push_back(n.vertex);
            state[i][n.a].push_back(n.vertex);
            break;
        case ExprKind::Union: {
            LabelMap a = std::move(state[n.left]);
            LabelMap b = std::move(state[n.right]);
            if (a.size() < b.size()) std::swap(a, b);
            for (auto& [label, vs] : b) move_into(a[label], vs);
            state[i] = std::move(a);
            break;
        }
        case ExprKind::Relabel: {
            LabelMap m = std::move(state[n.left]);
            if (n.a != n.b) {
                auto it = m.find(n.a);
                if (it != m.end()) {
                    std::vector<VertexId> moved = std::move(it->second);
                    m.erase(it);
                    move_into(m[n.b], moved);
                }
            }
            state[i] = std::move(m);
            break;
        }
        case ExprKind::Connect: {
            if (n.a == n.b) throw ValidationError("connect needs two different labels");
            LabelMap m = std::move(state[n.left]);
            auto x = m.find(n.a);
            auto y = m.find(n.b);
            if (x != m.end() && y != m.end())
                for (VertexId u : x->second)
                    for (VertexId v : y->second) edges.push_back(make_edge(u, v));
            state[i] = std::move(m);
            break;
        }
        }
    }
    return EvalResult{Graph(std::move(ids), std::move(edges)), expr.width()};
}

CwdExpression diamond_expression() {
    CwdExpression e;
    std::size_t t = e.unite(e.unite(e.vertex(1, 1), e.vertex(2, 2)), e.vertex(2, 3));
    t = e.relabel(2, 1, e.connect(1, 2, t));
    t = e.unite(t, e.vertex(2, 4));
    e.connect(1, 2, t);
    return e;
}

namespace {

constexpr std::array<Quadrant, 4> kColumnOrder = {Quadrant::MM, Quadrant::PM, Quadrant::MP, Quadrant::PP};
constexpr std::array<Quadrant, 4> kGroupOrder = {Quadrant::PP, Quadrant::PM, Quadrant::MP, Quadrant::MM};

std::vector<VertexId> sorted_ids(const std::vector<VertexId>& ids) {
    std::vector<VertexId> out = ids;
    std::sort(out.begin(), out.end());
    return out;
}

// Appends a fresh vertex to the running expression.
struct Builder {
    CwdExpression expr;
    std::size_t acc = ExprNode::none;
    std::map<Label, std::size_t> count;

    void add_vertex(Label label, VertexId id) {
        const std::size_t leaf = expr.vertex(label, id);
        acc = acc == ExprNode::none ? leaf : expr.unite(acc, leaf);
        ++count[label];
    }
    void connect(Label a, Label b) {
        if (count[a] && count[b]) acc = expr.connect(a, b, acc);
    }
    void relabel(Label from, Label to) {
        if (!count[from] || from == to) return;
        acc = expr.relabel(from, to, acc);
        count[to] += count[from];
        count[from] = 0;
    }
};

// Index of the group of a vertex in bubble (i, j): vertices of column j have
// nested neighbourhoods in column j+1, so the neighbourhood size identifies it.
class GroupKeys {
public:
    explicit GroupKeys(const UBubbleModel& model) : model_(model) {
        prefix_.resize(model.columns.size());
        for (std::size_t j = 0; j < model.columns.size(); ++j) {
            prefix_[j].assign(model.columns[j].size() + 1, 0);
            for (std::size_t i = 0; i < model.columns[j].size(); ++i)
                prefix_[j][i + 1] = prefix_[j][i] + model.columns[j][i].size();
        }
    }

    std::size_t key(std::size_t j, std::size_t i, Quadrant q) const {
        if (j + 1 >= model_.columns.size()) return 0;
        const Column& next = model_.columns[j + 1];
        const std::size_t above = prefix_[j + 1][std::min(i, next.size())];
        const bool level = kind_of(q).right_closed && i < next.size();
        return above + (level ? next[i].left_closed_size() : 0);
    }

private:
    const UBubbleModel& model_;
    std::vector<std::vector<std::size_t>> prefix_;
};

} // namespace

CwdExpression build_expr_columns(const UBubbleModel& model) {
    const std::size_t k = model.columns.size();
    const auto kl = static_cast<Label>(k);
    Builder b;
    Label l1 = kl + 1, l2 = kl + 2;
    const Label l3 = kl + 3;
    const std::size_t rows = model.row_count();

    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i >= model.columns[j].size()) continue;
            const Bubble& bubble = model.columns[j][i];
            const auto col = static_cast<Label>(j + 1);
            for (Quadrant q : kColumnOrder)
                for (VertexId v : sorted_ids(bubble[q])) {
                    b.add_vertex(l3, v);
                    b.connect(l3, col);
                    if (j + 1 < k) b.connect(l3, col + 1);
                    b.connect(l3, l2);
                    if (kind_of(q).left_closed) b.connect(l3, l1);
                    b.relabel(l3, kind_of(q).right_closed ? l2 : col);
                }
            // Level neighbours of the previous bubble are complete now.
            b.relabel(l1, col - 1);
            if (j + 1 < k && i < model.columns[j + 1].size())
                std::swap(l1, l2);
            else
                b.relabel(l2, col);
        }
    return std::move(b.expr);
}

GroupStructure group_structure(const UBubbleModel& model) {
    const GroupKeys keys(model);
    const std::size_t k = model.columns.size();
    GroupStructure gs;
    gs.groups.resize(k);

    // (column, key) -> global group index
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
    std::map<VertexId, std::size_t> group_of;
    for (std::size_t j = 0; j < k; ++j) {
        std::map<std::size_t, std::vector<VertexId>> by_key;
        for (std::size_t i = 0; i < model.columns[j].size(); ++i)
            for (Quadrant q : kAllQuadrants)
                for (VertexId v : model.columns[j][i][q]) {
                    const std::size_t key = keys.key(j, i, q);
                    auto [it, fresh] = index.try_emplace({j, key}, index.size());
                    group_of[v] = it->second;
                    by_key[key].push_back(v);
                }
        for (auto& [key, members] : by_key) {
            std::sort(members.begin(), members.end());
            gs.groups[j].push_back(std::move(members));
        }
    }

    for (std::size_t j = 0; j < k; ++j) {
        const Column& col = model.columns[j];
        for (std::size_t i = 0; i < col.size(); ++i) {
            // Groups met by column j-1 below row i and column j above row i;
            // all of these vertices are neighbours of any v in B_{i,j}.
            std::set<std::size_t> base;
            if (j > 0)
                for (std::size_t r = i + 1; r < model.columns[j - 1].size(); ++r)
                    for (const auto& quad : model.columns[j - 1][r].quadrants)
                        for (VertexId u : quad) base.insert(group_of[u]);
            for (std::size_t r = 0; r < i; ++r)
                for (const auto& quad : col[r].quadrants)
                    for (VertexId u : quad) base.insert(group_of[u]);

            const Bubble& here = col[i];
            for (Quadrant q : kAllQuadrants)
                for (VertexId v : here[q]) {
                    std::set<std::size_t> a1 = base, a2 = base;
                    if (j > 0 && i < model.columns[j - 1].size() && kind_of(q).left_closed)
                        for (Quadrant p : {Quadrant::PP, Quadrant::MP})
                            for (VertexId u : model.columns[j - 1][i][p]) a1.insert(group_of[u]);
                    for (Quadrant p : kAllQuadrants)
                        for (VertexId u : here[p]) {
                            if (u == v) continue;
                            a2.insert(group_of[u]);
                            if (kind_of(p).left_closed) a1.insert(group_of[u]);
                        }
                    const std::size_t g = std::max(a1.size(), a2.size());
                    gs.group_number.emplace_back(v, g);
                    gs.phi = std::max(gs.phi, g);
                }
        }
    }
    std::sort(gs.group_number.begin(), gs.group_number.end());
    return gs;
}

CwdExpression build_expr_groups(const UBubbleModel& model) {
    const GroupKeys keys(model);
    const std::size_t k = model.columns.size();
    Builder b;
    constexpr Label kDead = 1;

    struct Group {
        Placement where;  // any member; all members agree on later columns
        Label label = 0;  // 0 until the first member arrives
    };
    std::map<std::pair<std::size_t, std::size_t>, Group> groups;
    std::vector<std::pair<std::size_t, std::size_t>> live;  // keys of live groups, in creation order
    std::set<Label> used;

    auto free_label = [&used] {
        Label l = 2;
        while (used.count(l)) ++l;
        return l;
    };

    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < model.columns[j].size(); ++i)
            for (Quadrant q : kGroupOrder)
                for (VertexId v : sorted_ids(model.columns[j][i][q])) {
                    const Placement here{j, i, q};
                    std::vector<std::pair<std::size_t, std::size_t>> keep;
                    for (const auto& gk : live) {
                        Group& g = groups[gk];
                        if (model_adjacent(g.where, here)) {
                            keep.push_back(gk);
                        } else {
                            b.relabel(g.label, kDead);
                            used.erase(g.label);
                        }
                    }
                    live = std::move(keep);

                    const std::pair<std::size_t, std::size_t> mine{j, keys.key(j, i, q)};
                    auto [it, fresh] = groups.try_emplace(mine, Group{here, 0});
                    Group& g = it->second;
                    if (fresh) {
                        g.label = free_label();
                        used.insert(g.label);
                        b.add_vertex(g.label, v);
                        for (const auto& gk : live) b.connect(g.label, groups[gk].label);
                        live.push_back(mine);
                    } else {
                        const Label scratch = free_label();
                        b.add_vertex(scratch, v);
                        for (const auto& gk : live) b.connect(scratch, groups[gk].label);
                        b.relabel(scratch, g.label);
                    }
                }
    return std::move(b.expr);
}

BoundsReport cwd_upper_bounds(const UBubbleModel& model) {
    BoundsReport r;
    r.k = model.column_count();
    r.r = model.row_count();
    r.alpha = compute_alpha(model_to_intervals(model));
    r.omega = max_clique(model);
    r.phi = group_structure(model).phi;
    r.columns_bound = r.k + 3;
    r.rows_bound = 2 * r.r + 2;
    r.alpha_bound = 2 * r.alpha + 3;
    r.groups_bound = r.phi + 2;
    r.clique_bound = r.omega + 1;
    r.best = std::min({r.columns_bound, r.rows_bound, r.alpha_bound, r.groups_bound, r.clique_bound});
    return r;
}

} // namespace muig
