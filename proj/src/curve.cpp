#include "canonlab/curve.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "canonlab/errors.hpp"

namespace canonlab {

NodalCurve::NodalCurve(std::vector<Component> components, std::vector<Node> nodes)
    : components_(std::move(components)), nodes_(std::move(nodes)) {}

int NodalCurve::component_index(const std::string& id) const {
    for (size_t i = 0; i < components_.size(); ++i)
        if (components_[i].id == id) return static_cast<int>(i);
    return -1;
}

std::vector<Violation> NodalCurve::validate() const {
    std::vector<Violation> out;
    const int c = component_count();

    auto check_branch = [&](const Node& n, const BranchPoint& bp) {
        if (bp.component < 0 || bp.component >= c) {
            out.push_back({Violation::Kind::DanglingBranch,
                           "node " + n.id + " references a missing component"});
            return false;
        }
        return true;
    };

    // Branch params per component must be pairwise distinct.
    std::vector<std::vector<std::pair<Param, std::string>>> per_comp(static_cast<size_t>(c));
    for (const Node& n : nodes_) {
        bool ok_a = check_branch(n, n.a);
        bool ok_b = check_branch(n, n.b);
        if (ok_a) per_comp[static_cast<size_t>(n.a.component)].push_back({n.a.param, n.id});
        if (ok_b) per_comp[static_cast<size_t>(n.b.component)].push_back({n.b.param, n.id});
    }
    for (int i = 0; i < c; ++i) {
        auto& v = per_comp[static_cast<size_t>(i)];
        for (size_t x = 0; x < v.size(); ++x)
            for (size_t y = x + 1; y < v.size(); ++y)
                if (v[x].first == v[y].first)
                    out.push_back({Violation::Kind::DuplicateBranch,
                                   "component " + components_[static_cast<size_t>(i)].id +
                                       " carries branch parameter " + param_to_string(v[x].first) +
                                       " in nodes " + v[x].second + " and " + v[y].second});
    }

    if (!connected())
        out.push_back({Violation::Kind::Disconnected, "dual graph is not connected"});
    return out;
}

std::vector<Param> NodalCurve::branch_params_on(int comp) const {
    std::vector<Param> out;
    for (const Node& n : nodes_) {
        if (n.a.component == comp) out.push_back(n.a.param);
        if (n.b.component == comp) out.push_back(n.b.param);
    }
    return out;
}

std::vector<int> NodalCurve::nodes_on(int comp) const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].a.component == comp || nodes_[i].b.component == comp)
            out.push_back(static_cast<int>(i));
    return out;
}

namespace {

int count_pieces(int c, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<int>& verts) {
    if (verts.empty()) return 0;
    std::map<int, int> rep;  // union-find over the given vertex set
    for (int v : verts) rep[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    for (auto [a, b] : edges) {
        if (!rep.count(a) || !rep.count(b)) continue;
        rep[find(a)] = find(b);
    }
    std::set<int> roots;
    for (int v : verts) roots.insert(find(v));
    (void)c;
    return static_cast<int>(roots.size());
}

}  // namespace

bool NodalCurve::connected() const {
    if (components_.empty()) return false;
    std::vector<std::pair<int, int>> edges;
    for (const Node& n : nodes_) edges.push_back({n.a.component, n.b.component});
    std::vector<int> verts(components_.size());
    for (size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<int>(i);
    return count_pieces(component_count(), edges, verts) == 1;
}

int NodalCurve::genus() const {
    std::vector<std::pair<int, int>> edges;
    for (const Node& n : nodes_) edges.push_back({n.a.component, n.b.component});
    std::vector<int> verts(components_.size());
    for (size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<int>(i);
    int pieces = count_pieces(component_count(), edges, verts);
    return node_count() - component_count() + pieces;
}

uint64_t NodalCurve::hash() const {
    // FNV-1a over a canonical textual form.
    std::ostringstream os;
    for (const Component& comp : components_) os << "C:" << comp.id << ";";
    for (const Node& n : nodes_)
        os << "N:" << n.id << ":" << n.a.component << ":" << param_to_string(n.a.param) << ":"
           << n.b.component << ":" << param_to_string(n.b.param) << ";";
    uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : os.str()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

// ---------------------------------------------------------------------------

Subcurve::Subcurve(const NodalCurve* parent, std::vector<int> comps)
    : parent_(parent), comps_(std::move(comps)) {
    std::sort(comps_.begin(), comps_.end());
    comps_.erase(std::unique(comps_.begin(), comps_.end()), comps_.end());
    if (comps_.empty()) throw Error(ErrorCode::EmptySide, "subcurve needs at least one component");
    for (int c : comps_)
        if (c < 0 || c >= parent_->component_count())
            throw Error(ErrorCode::DanglingBranch, "subcurve references a missing component");
}

Subcurve Subcurve::whole(const NodalCurve& curve) {
    std::vector<int> all(static_cast<size_t>(curve.component_count()));
    for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
    return Subcurve(&curve, std::move(all));
}

bool Subcurve::contains(int comp) const {
    return std::binary_search(comps_.begin(), comps_.end(), comp);
}

std::vector<int> Subcurve::internal_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < parent_->node_count(); ++i) {
        const Node& n = parent_->node(i);
        if (contains(n.a.component) && contains(n.b.component)) out.push_back(i);
    }
    return out;
}

std::vector<int> Subcurve::boundary_nodes() const {
    std::vector<int> out;
    for (int i = 0; i < parent_->node_count(); ++i) {
        const Node& n = parent_->node(i);
        if (contains(n.a.component) != contains(n.b.component)) out.push_back(i);
    }
    return out;
}

std::vector<Param> Subcurve::internal_branch_params_on(int comp) const {
    std::vector<Param> out;
    for (int i : internal_nodes()) {
        const Node& n = parent_->node(i);
        if (n.a.component == comp) out.push_back(n.a.param);
        if (n.b.component == comp) out.push_back(n.b.param);
    }
    return out;
}

bool Subcurve::connected() const {
    std::vector<std::pair<int, int>> edges;
    for (int i : internal_nodes()) {
        const Node& n = parent_->node(i);
        edges.push_back({n.a.component, n.b.component});
    }
    return count_pieces(parent_->component_count(), edges, comps_) == 1;
}

int Subcurve::genus() const {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> internal = internal_nodes();
    for (int i : internal) {
        const Node& n = parent_->node(i);
        edges.push_back({n.a.component, n.b.component});
    }
    int pieces = count_pieces(parent_->component_count(), edges, comps_);
    return static_cast<int>(internal.size()) - component_count() + pieces;
}

Subcurve Subcurve::complement() const {
    std::vector<int> rest;
    for (int i = 0; i < parent_->component_count(); ++i)
        if (!contains(i)) rest.push_back(i);
    return Subcurve(parent_, std::move(rest));
}

std::string Subcurve::label() const {
    std::string out;
    for (size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ",";
        out += parent_->component(comps_[i]).id;
    }
    return out;
}

// ---------------------------------------------------------------------------

Decomposition decompose(const NodalCurve& curve, const std::vector<int>& u_comps) {
    if (u_comps.empty()) throw Error(ErrorCode::EmptySide, "decomposition side U is empty");
    Subcurve U(&curve, u_comps);
    if (U.component_count() == curve.component_count())
        throw Error(ErrorCode::EmptySide, "decomposition side V is empty");
    Decomposition d;
    d.U = U;
    d.V = U.complement();
    d.boundary_node_indices = U.boundary_nodes();
    d.delta = static_cast<int>(d.boundary_node_indices.size());
    d.u_connected = d.U.connected();
    d.v_connected = d.V.connected();
    return d;
}

ConnectivityResult connectivity(const NodalCurve& curve, int max_components) {
    const int c = curve.component_count();
    ConnectivityResult res;
    if (c <= 1) {
        res.infinite = true;
        return res;
    }
    if (c > max_components)
        throw Error(ErrorCode::TooManyComponents,
                    "decomposition enumeration capped at " + std::to_string(max_components) +
                        " components");
    // Canonical side of each split contains component 0; subsets in
    // increasing mask order, ties resolved by lexicographic subset order.
    std::optional<std::vector<int>> best_subset;
    int best_delta = -1;
    for (uint32_t mask = 1; mask < (1u << (c - 1)); ++mask) {
        std::vector<int> subset = {0};
        for (int i = 1; i < c; ++i)
            if (mask & (1u << (i - 1))) subset.push_back(i);
        if (static_cast<int>(subset.size()) == c) continue;
        Subcurve U(&curve, subset);
        int delta = static_cast<int>(U.boundary_nodes().size());
        if (best_delta < 0 || delta < best_delta ||
            (delta == best_delta && subset < *best_subset)) {
            best_delta = delta;
            best_subset = subset;
        }
    }
    res.m_max = best_delta;
    res.witness = decompose(curve, *best_subset);
    return res;
}

int numerical_connectivity(const NodalCurve& curve, int max_components) {
    const int c = curve.component_count();
    if (c <= 1) return std::numeric_limits<int>::max();
    if (c > max_components)
        throw Error(ErrorCode::TooManyComponents,
                    "decomposition enumeration capped at " + std::to_string(max_components) +
                        " components");
    std::optional<int> best;
    for (uint32_t mask = 1; mask < (1u << (c - 1)); ++mask) {
        std::vector<int> subset = {0};
        for (int i = 1; i < c; ++i)
            if (mask & (1u << (i - 1))) subset.push_back(i);
        if (static_cast<int>(subset.size()) == c) continue;
        Decomposition d = decompose(curve, subset);
        // deg(omega_X|_U) = 2 p_a(U) - 2 + delta by adjunction; deg(omega_U)
        // = 2 p_a(U) - 2 with the chi-additive genus.
        int gU = d.U.genus();
        int deg_restricted = 2 * gU - 2 + d.delta;
        int deg_own = 2 * gU - 2;
        int margin = deg_restricted - deg_own;
        if (!best || margin < *best) best = margin;
    }
    return *best;
}

}  // namespace canonlab
