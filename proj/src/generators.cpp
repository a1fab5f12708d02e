#include "shiftlab/generators.hpp"

#include "shiftlab/transforms.hpp"

namespace shiftlab {

GraphGen dyck_fischer(int n) {
    if (n < 2)
        throw input_error("Dyck cover requires n >= 2");
    GraphGen g;
    g.family = "dyck:" + std::to_string(n);
    g.alphabet = dyck_alphabet(n);
    g.root = VertexId::dyck_stack({});
    g.out_edges = [n](const VertexId& v) {
        const auto* dv = std::get_if<DyckStackV>(&v.v);
        if (!dv)
            throw input_error("foreign vertex passed to the Dyck cover");
        std::vector<LabeledEdge> out;
        const auto& stack = dv->stack;
        for (int i = 1; i <= n; ++i) {
            // push edge, label code 2i-2
            auto pushed = stack;
            pushed.push_back(i);
            out.push_back({v, dyck_opener(i), VertexId::dyck_stack(std::move(pushed))});
            if (stack.empty()) {
                // closers are self-loops at the root
                out.push_back({v, dyck_closer(i), v});
            } else if (stack.back() == i) {
                auto popped = stack;
                popped.pop_back();
                out.push_back({v, dyck_closer(i), VertexId::dyck_stack(std::move(popped))});
            }
        }
        // codes interleave opener/closer, so this is label order already
        return out;
    };
    return g;
}

GraphGen sgap_fischer(const GapSet& gaps) {
    GraphGen g;
    g.family = "sgap:" + gaps.describe();
    g.alphabet = digit_alphabet(2);
    g.root = VertexId::sgap_index(0);
    g.out_edges = [gaps](const VertexId& v) {
        const auto* sv = std::get_if<SGapIndexV>(&v.v);
        if (!sv)
            throw input_error("foreign vertex passed to the S-gap cover");
        std::vector<LabeledEdge> out;
        if (gaps.contains(static_cast<std::uint64_t>(sv->n)))
            out.push_back({v, 0, VertexId::sgap_index(0)});
        out.push_back({v, 1, VertexId::sgap_index(sv->n + 1)});
        return out;
    };
    return g;
}

GraphGen beta_fischer(const DigitStream& digits) {
    GraphGen g;
    g.family = "beta:" + digits.describe();
    g.alphabet = digit_alphabet(digits.alphabet_size());
    g.root = VertexId::beta_index(-1);
    g.out_edges = [digits](const VertexId& v) {
        const auto* bv = std::get_if<BetaIndexV>(&v.v);
        if (!bv || bv->n < -1)
            throw input_error("foreign vertex passed to the beta cover");
        int d = digits.digit(static_cast<std::uint64_t>(bv->n + 1));
        std::vector<LabeledEdge> out;
        for (int i = 0; i < d; ++i)
            out.push_back({v, i, VertexId::beta_index(-1)});
        out.push_back({v, d, VertexId::beta_index(bv->n + 1)});
        return out;
    };
    return g;
}

GraphGen fischer_of(const SpecPtr& spec) {
    if (!spec)
        throw input_error("null spec");
    return std::visit(
        [&](const auto& fam) -> GraphGen {
            using T = std::decay_t<decltype(fam)>;
            if constexpr (std::is_same_v<T, DyckSpec>) {
                return dyck_fischer(fam.n);
            } else if constexpr (std::is_same_v<T, SGapSpec>) {
                return sgap_fischer(fam.gaps);
            } else if constexpr (std::is_same_v<T, BetaSpec>) {
                return beta_fischer(fam.digits);
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                return tensor_product(fischer_of(fam.left), fischer_of(fam.right));
            } else if constexpr (std::is_same_v<T, StarSpec>) {
                return star_graph(fischer_of(fam.inner));
            } else {
                throw input_error("no builtin cover generator for SFT specs");
            }
        },
        spec->family);
}

}  // namespace shiftlab
