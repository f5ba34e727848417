#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canonlab/rational.hpp"

namespace canonlab {

// One of the two preimages of a node on a component's normalization P^1.
struct BranchPoint {
    int component = -1;  // index into NodalCurve::components
    Param param;

    bool operator==(const BranchPoint& o) const {
        return component == o.component && param == o.param;
    }
};

struct Node {
    std::string id;
    BranchPoint a;
    BranchPoint b;

    bool is_self_node() const { return a.component == b.component; }
};

struct Component {
    std::string id;
    std::string label;
};

struct Violation {
    enum class Kind { DuplicateBranch, DanglingBranch, Disconnected };
    Kind kind;
    std::string detail;
};

// Reduced connected nodal curve: rational components glued at ordinary
// nodes. Positive-genus components are realized through self-nodes.
// Immutable once built; all services are const.
class NodalCurve {
  public:
    NodalCurve() = default;
    NodalCurve(std::vector<Component> components, std::vector<Node> nodes);

    const std::vector<Component>& components() const { return components_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    int component_index(const std::string& id) const;  // -1 when absent
    const Component& component(int i) const { return components_[static_cast<size_t>(i)]; }
    const Node& node(int i) const { return nodes_[static_cast<size_t>(i)]; }

    std::vector<Violation> validate() const;
    bool is_valid() const { return validate().empty(); }

    // Node-branch parameters sitting on a component (both branches of
    // self-nodes), in node order.
    std::vector<Param> branch_params_on(int comp) const;
    // Indices of nodes touching a component.
    std::vector<int> nodes_on(int comp) const;

    bool connected() const;
    // p_a = #nodes - #components + #connected pieces; equals
    // #nodes - #components + 1 when connected.
    int genus() const;

    // Stable hash of the combinatorial data; seeds samplers.
    uint64_t hash() const;

  private:
    std::vector<Component> components_;
    std::vector<Node> nodes_;
};

// A nonempty set of components of a parent curve, with the induced nodal
// structure: internal nodes have both branches inside, boundary nodes
// exactly one.
class Subcurve {
  public:
    Subcurve() = default;
    Subcurve(const NodalCurve* parent, std::vector<int> comps);
    static Subcurve whole(const NodalCurve& curve);

    const NodalCurve& curve() const { return *parent_; }
    const std::vector<int>& comps() const { return comps_; }
    int component_count() const { return static_cast<int>(comps_.size()); }
    bool contains(int comp) const;
    bool is_whole() const { return component_count() == parent_->component_count(); }

    std::vector<int> internal_nodes() const;
    std::vector<int> boundary_nodes() const;
    // Branch params on `comp` coming from internal nodes only.
    std::vector<Param> internal_branch_params_on(int comp) const;

    bool connected() const;
    int genus() const;  // chi-additive: internal nodes - comps + pieces

    Subcurve complement() const;

    std::string label() const;  // comma-joined component ids

    bool operator==(const Subcurve& o) const {
        return parent_ == o.parent_ && comps_ == o.comps_;
    }

  private:
    const NodalCurve* parent_ = nullptr;
    std::vector<int> comps_;  // sorted ascending
};

struct Decomposition {
    Subcurve U;
    Subcurve V;
    std::vector<int> boundary_node_indices;
    int delta = 0;
    bool u_connected = false;
    bool v_connected = false;
};

// Splits the curve along a proper nonempty component subset.
Decomposition decompose(const NodalCurve& curve, const std::vector<int>& u_comps);

struct ConnectivityResult {
    bool infinite = false;  // single-component curves
    int m_max = 0;
    std::optional<Decomposition> witness;
};

// m_max = min over all 2^(c-1)-1 decompositions of delta; ties broken by
// the lexicographically smallest witness subset.
ConnectivityResult connectivity(const NodalCurve& curve, int max_components = 16);

// min over decompositions of deg(omega_X|_U) - deg(omega_U), computed from
// the degree bookkeeping of both bundles (equals m_max on nodal curves).
int numerical_connectivity(const NodalCurve& curve, int max_components = 16);

}  // namespace canonlab
