#include "shiftlab/witness.hpp"

#include "shiftlab/generators.hpp"

#include <algorithm>

namespace shiftlab {

FinitePath cycle_through(const GraphGen& g, const LabeledEdge& first, int cap) {
    // BFS back to the source; parents chosen in label order, so the
    // reconstructed cycle is the lexicographically least shortest one.
    GraphCache gc(g);
    int home = gc.id_of(first.src);
    int start = gc.id_of(first.dst);
    if (start == home)
        return {first};

    std::unordered_map<int, std::pair<int, Symbol>> parent;  // dst -> (src, label)
    std::vector<int> frontier{start};
    parent.emplace(start, std::make_pair(-1, Symbol{0}));
    bool found = false;
    for (int d = 0; d < cap - 1 && !found && !frontier.empty(); ++d) {
        std::vector<int> next;
        for (int u : frontier) {
            for (const auto& a : gc.out(u)) {
                if (parent.emplace(a.dst, std::make_pair(u, a.label)).second) {
                    next.push_back(a.dst);
                    if (a.dst == home) {
                        found = true;
                        break;
                    }
                }
            }
            if (found)
                break;
        }
        frontier = std::move(next);
    }
    if (!parent.count(home))
        throw input_error("no return cycle within " + std::to_string(cap) + " steps");

    FinitePath back;
    int cur = home;
    while (cur != start) {
        auto [p, lbl] = parent.at(cur);
        back.push_back({gc.vertex(p), lbl, gc.vertex(cur)});
        cur = p;
    }
    std::reverse(back.begin(), back.end());
    FinitePath cycle{first};
    cycle.insert(cycle.end(), back.begin(), back.end());
    return cycle;
}

namespace {

LabeledEdge pair_edge(const LabeledEdge& a, const LabeledEdge& b, int right_size) {
    return {VertexId::pair(a.src, b.src), a.label * right_size + b.label,
            VertexId::pair(a.dst, b.dst)};
}

}  // namespace

RayPair product_witness(const GraphGen& gy, const GraphGen& gz, const VertexId& v,
                        const LabeledEdge& e1, const LabeledEdge& e2, int horizon,
                        int cycle_cap) {
    if (horizon < 1)
        throw input_error("witness horizon must be >= 1");
    if (e1 == e2)
        throw input_error("the two branching edges must differ");
    if (!(e1.src == v) || !(e2.src == v))
        throw input_error("branching edges must leave the designated vertex");

    FinitePath w1 = cycle_through(gz, e1, cycle_cap);
    FinitePath w2 = cycle_through(gz, e2, cycle_cap);

    FinitePath u1 = w1, u2 = w2;
    u1.insert(u1.end(), w2.begin(), w2.end());
    u2.insert(u2.end(), w1.begin(), w1.end());

    // z1 = u1 repeated; z2 = u1 u2 u1 u1 u2 u1 u1 u1 u2 ...
    FinitePath z1, z2;
    while (static_cast<int>(z1.size()) < horizon)
        z1.insert(z1.end(), u1.begin(), u1.end());
    z1.resize(static_cast<size_t>(horizon));
    for (int reps = 1; static_cast<int>(z2.size()) < horizon; ++reps) {
        for (int i = 0; i < reps && static_cast<int>(z2.size()) < horizon; ++i)
            z2.insert(z2.end(), u1.begin(), u1.end());
        if (static_cast<int>(z2.size()) < horizon)
            z2.insert(z2.end(), u2.begin(), u2.end());
    }
    z2.resize(static_cast<size_t>(horizon));

    auto y = first_geodesic_ray(gy, gy.root, horizon);
    if (!y)
        throw input_error("no geodesic ray of the requested length on the first factor");

    int right_size = gz.alphabet.size();
    RayPair pair;
    for (int i = 0; i < horizon; ++i) {
        pair.x.push_back(pair_edge((*y)[static_cast<size_t>(i)],
                                   z1[static_cast<size_t>(i)], right_size));
        pair.y.push_back(pair_edge((*y)[static_cast<size_t>(i)],
                                   z2[static_cast<size_t>(i)], right_size));
    }
    return pair;
}

RayPair product_witness_auto(const GraphGen& gy, const GraphGen& gz, int horizon) {
    GraphFragment frag = explore(gz, 4);
    for (const auto& v : frag.vertices) {
        auto edges = gz.out_edges(v);
        if (edges.size() >= 2) {
            try {
                return product_witness(gy, gz, v, edges[0], edges[1], horizon);
            } catch (const input_error&) {
                continue;  // no cycles through this vertex; try the next
            }
        }
    }
    throw input_error("no branching vertex with return cycles found");
}

const char* primeness_verdict_name(PrimenessVerdict v) {
    switch (v) {
        case PrimenessVerdict::CriterionSatisfiedAtBound:
            return "criterion-satisfied-at-bound";
        case PrimenessVerdict::WitnessCandidateFound:
            return "witness-candidate-found";
        case PrimenessVerdict::NoFixedPoint:
            return "no-fixed-point";
        default:
            return "inconclusive";
    }
}

PrimenessReport primeness_report(const SpecPtr& spec, const Bounds& bounds,
                                 int witness_horizon) {
    if (!spec)
        throw input_error("null spec");
    bounds.validate();

    PrimenessReport rep;
    rep.spec_name = spec_describe(*spec);
    rep.fixed_symbol = fixed_point(*spec);

    if (const auto* prod = std::get_if<ProductSpec>(&spec->family)) {
        rep.route = "product-construction";
        GraphGen gy = fischer_of(prod->left);
        GraphGen gz = fischer_of(prod->right);
        GraphGen product = tensor_product(gy, gz);
        RayPair pair = product_witness_auto(gy, gz, witness_horizon);
        rep.scan = verify_strict_proximal_prefix(product, pair, bounds);
        rep.verdict = rep.scan.status == ProximalStatus::WitnessFound
                          ? PrimenessVerdict::WitnessCandidateFound
                          : PrimenessVerdict::Inconclusive;
        return rep;
    }

    rep.route = "scan";
    GraphGen g = fischer_of(spec);
    rep.scan = proximal_witness_search(g, bounds);
    switch (rep.scan.status) {
        case ProximalStatus::WitnessFound:
            rep.verdict = PrimenessVerdict::WitnessCandidateFound;
            break;
        case ProximalStatus::NoWitnessUpToBound:
            rep.verdict = rep.fixed_symbol ? PrimenessVerdict::CriterionSatisfiedAtBound
                                           : PrimenessVerdict::NoFixedPoint;
            break;
        default:
            rep.verdict = PrimenessVerdict::Inconclusive;
    }
    return rep;
}

}  // namespace shiftlab
