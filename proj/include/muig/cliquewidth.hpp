#ifndef MUIG_CLIQUEWIDTH_HPP
#define MUIG_CLIQUEWIDTH_HPP

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "muig/bubble.hpp"
#include "muig/graph.hpp"
#include "muig/model.hpp"

namespace muig {

using Label = std::uint32_t;

enum class ExprKind { Vertex, Union, Relabel, Connect };

struct ExprNode {
    static constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

    ExprKind kind = ExprKind::Vertex;
    Label a = 0;          // Vertex: label; Relabel: from; Connect: i
    Label b = 0;          // Relabel: to; Connect: j
    VertexId vertex = 0;  // Vertex only
    std::size_t left = none;   // child (Relabel/Connect) or first operand (Union)
    std::size_t right = none;  // second operand (Union)
};

// Clique-width expression stored as an arena. Children are always created
// before their parents, so node indices are a valid bottom-up order; the root
// is the last node added unless set explicitly.
class CwdExpression {
public:
    std::size_t vertex(Label label, VertexId id);
    std::size_t unite(std::size_t x, std::size_t y);
    std::size_t relabel(Label from, Label to, std::size_t x);
    std::size_t connect(Label i, Label j, std::size_t x);

    bool empty() const { return nodes_.empty(); }
    std::size_t size() const { return nodes_.size(); }
    std::size_t root() const;
    void set_root(std::size_t node);
    const std::vector<ExprNode>& nodes() const { return nodes_; }

    // Number of distinct labels mentioned anywhere in the expression.
    std::size_t width() const;

private:
    std::size_t add(ExprNode node);

    std::vector<ExprNode> nodes_;
    std::size_t root_ = ExprNode::none;
};

struct EvalResult {
    Graph graph;
    std::size_t width = 0;
};

// Labeled-graph semantics, labels dropped at the end. Throws ValidationError
// on a repeated vertex id, on connect with i == j, and on nodes that are not
// part of a single tree.
EvalResult eval_expression(const CwdExpression& expr);

// expr := (v <label> <id>) | (union e e) | (relabel i j e) | (connect i j e)
std::string to_sexpr(const CwdExpression& expr);
CwdExpression parse_sexpr(std::string_view text);

// The four-vertex diamond built with two labels (ids 1..4 for u, v, w, x).
CwdExpression diamond_expression();

// Expression with labels 1..k for columns and k+1..k+3 as scratch labels,
// vertices added row by row.
CwdExpression build_expr_columns(const UBubbleModel& model);

struct GroupStructure {
    // groups[j] lists the groups of column j (each sorted by id), ordered by
    // their nested next-column neighbourhoods, smallest first.
    std::vector<std::vector<std::vector<VertexId>>> groups;
    // (vertex id, g(v)) sorted by id.
    std::vector<std::pair<VertexId, std::size_t>> group_number;
    std::size_t phi = 0;
};

GroupStructure group_structure(const UBubbleModel& model);

// Expression adding vertices column by column, one label per live group plus
// label 1 for vertices without future neighbours and one scratch label.
CwdExpression build_expr_groups(const UBubbleModel& model);

BoundsReport cwd_upper_bounds(const UBubbleModel& model);

} // namespace muig

#endif // MUIG_CLIQUEWIDTH_HPP
