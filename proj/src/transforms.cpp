#include "shiftlab/transforms.hpp"

#include "shiftlab/shift_spec.hpp"

namespace shiftlab {

GraphGen tensor_product(const GraphGen& g1, const GraphGen& g2) {
    GraphGen g;
    g.family = "product:(" + g1.family + "," + g2.family + ")";
    g.alphabet = pair_alphabet(g1.alphabet, g2.alphabet);
    g.root = VertexId::pair(g1.root, g2.root);
    auto out1 = g1.out_edges;
    auto out2 = g2.out_edges;
    int right_size = g2.alphabet.size();
    g.out_edges = [out1, out2, right_size](const VertexId& v) {
        const auto* pv = std::get_if<PairV>(&v.v);
        if (!pv)
            throw input_error("foreign vertex passed to a tensor product");
        auto e1 = out1(*pv->left);
        auto e2 = out2(*pv->right);
        std::vector<LabeledEdge> out;
        out.reserve(e1.size() * e2.size());
        for (const auto& a : e1)
            for (const auto& b : e2)
                out.push_back({v, a.label * right_size + b.label,
                               VertexId::pair(a.dst, b.dst)});
        return out;
    };
    return g;
}

GraphGen star_graph(const GraphGen& base) {
    GraphGen g;
    g.family = "star:(" + base.family + ")";
    g.alphabet = star_alphabet(base.alphabet);
    g.root = VertexId::star(base.root, false);
    auto out = base.out_edges;
    Symbol star = star_symbol(g.alphabet);
    g.out_edges = [out, star](const VertexId& v) {
        const auto* sv = std::get_if<StarV>(&v.v);
        if (!sv)
            throw input_error("foreign vertex passed to a star graph");
        std::vector<LabeledEdge> edges;
        for (const auto& e : out(*sv->base))
            edges.push_back({v, e.label, VertexId::star(e.dst, false)});
        if (!sv->starred)
            edges.push_back({v, star, VertexId::star(*sv->base, true)});
        return edges;
    };
    return g;
}

BipartiteGraphGen subdivide_bipartite(const GraphGen& base) {
    BipartiteGraphGen bg;
    bg.enter = base.alphabet;
    bg.leave = Alphabet({"/"});

    GraphGen g;
    g.family = "subdiv:(" + base.family + ")";
    {
        std::vector<std::string> names;
        for (int i = 0; i < base.alphabet.size(); ++i)
            names.push_back(base.alphabet.name(i));
        names.emplace_back("/");
        g.alphabet = Alphabet(std::move(names));
    }
    g.root = VertexId::original(base.root);
    auto out = base.out_edges;
    Symbol leave_code = base.alphabet.size();
    g.out_edges = [out, leave_code](const VertexId& v) {
        std::vector<LabeledEdge> edges;
        if (const auto* ov = std::get_if<OriginalV>(&v.v)) {
            for (const auto& e : out(*ov->base))
                edges.push_back({v, e.label, VertexId::midpoint(*ov->base, e.label)});
            return edges;
        }
        if (const auto* mv = std::get_if<MidpointV>(&v.v)) {
            // the midpoint of (src, a) has the single leaving edge to dst
            for (const auto& e : out(*mv->src))
                if (e.label == mv->label) {
                    edges.push_back({v, leave_code, VertexId::original(e.dst)});
                    return edges;
                }
            throw input_error("midpoint of a nonexistent edge");
        }
        throw input_error("foreign vertex passed to a subdivided graph");
    };
    bg.graph = std::move(g);
    bg.color = [](const VertexId& v) {
        if (std::holds_alternative<OriginalV>(v.v))
            return 0;
        if (std::holds_alternative<MidpointV>(v.v))
            return 1;
        throw input_error("vertex without a color in a two-colored graph");
    };
    return bg;
}

std::pair<GraphGen, GraphGen> induced_pair(const BipartiteGraphGen& bg) {
    auto out = bg.graph.out_edges;
    auto color = bg.color;
    const int enter_size = bg.enter.size();
    const int leave_size = bg.leave.size();

    // labels in the combined subdivided alphabet: entering codes are
    // [0, enter_size), leaving codes are enter_size + [0, leave_size)
    auto check_cross = [color](const LabeledEdge& e) {
        if (color(e.src) == color(e.dst))
            throw input_error("edge does not cross the bipartition");
    };

    GraphGen first;
    first.family = "induced1:(" + bg.graph.family + ")";
    first.alphabet = pair_alphabet(bg.enter, bg.leave);
    first.root = bg.graph.root;
    first.out_edges = [out, color, check_cross, enter_size,
                       leave_size](const VertexId& v) {
        if (color(v) != 0)
            throw input_error("vertex on the wrong side of the bipartition");
        std::vector<LabeledEdge> edges;
        for (const auto& e1 : out(v)) {
            check_cross(e1);
            for (const auto& e2 : out(e1.dst)) {
                check_cross(e2);
                int c = e1.label;
                int d = e2.label - enter_size;
                if (c >= enter_size || d < 0)
                    throw input_error("labels do not respect the bipartition");
                edges.push_back({v, c * leave_size + d, e2.dst});
            }
        }
        return edges;
    };

    // deterministic second root: the first midpoint out of the first root
    auto root_edges = out(bg.graph.root);
    if (root_edges.empty())
        throw input_error("root has no outgoing edges");
    GraphGen second;
    second.family = "induced2:(" + bg.graph.family + ")";
    second.alphabet = pair_alphabet(bg.leave, bg.enter);
    second.root = root_edges.front().dst;
    second.out_edges = [out, color, check_cross, enter_size](const VertexId& v) {
        if (color(v) != 1)
            throw input_error("vertex on the wrong side of the bipartition");
        std::vector<LabeledEdge> edges;
        for (const auto& e1 : out(v)) {
            check_cross(e1);
            for (const auto& e2 : out(e1.dst)) {
                check_cross(e2);
                int d = e1.label - enter_size;
                int c = e2.label;
                if (d < 0 || c >= enter_size)
                    throw input_error("labels do not respect the bipartition");
                edges.push_back({v, d * enter_size + c, e2.dst});
            }
        }
        return edges;
    };
    return {std::move(first), std::move(second)};
}

}  // namespace shiftlab
