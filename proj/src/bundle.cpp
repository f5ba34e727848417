#include "canonlab/bundle.hpp"

#include <sstream>

#include "canonlab/errors.hpp"

namespace canonlab {

void TwistDivisor::add(int component, const Param& point, int mult) {
    if (mult == 0) return;
    auto key = std::make_pair(component, point);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(key, mult);
    } else {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

int TwistDivisor::degree() const {
    int d = 0;
    for (const auto& [key, m] : entries_) d += m;
    return d;
}

int TwistDivisor::degree_on(int component) const {
    int d = 0;
    for (const auto& [key, m] : entries_)
        if (key.first == component) d += m;
    return d;
}

bool TwistDivisor::effective() const {
    for (const auto& [key, m] : entries_)
        if (m < 0) return false;
    return true;
}

TwistDivisor TwistDivisor::plus(const TwistDivisor& o) const {
    TwistDivisor out = *this;
    for (const auto& [key, m] : o.entries_) out.add(key.first, key.second, m);
    return out;
}

TwistDivisor TwistDivisor::minus(const TwistDivisor& o) const {
    TwistDivisor out = *this;
    for (const auto& [key, m] : o.entries_) out.add(key.first, key.second, -m);
    return out;
}

TwistDivisor TwistDivisor::negated() const {
    TwistDivisor out;
    for (const auto& [key, m] : entries_) out.add(key.first, key.second, -m);
    return out;
}

TwistDivisor TwistDivisor::scaled(int k) const {
    TwistDivisor out;
    if (k == 0) return out;
    for (const auto& [key, m] : entries_) out.add(key.first, key.second, k * m);
    return out;
}

int BundleSpec::degree_on(int component) const {
    int delta = static_cast<int>(Z.internal_branch_params_on(component).size());
    return k * (delta - 2) + twist.degree_on(component);
}

int BundleSpec::degree() const {
    int d = 0;
    for (int c : Z.comps()) d += degree_on(c);
    return d;
}

BundleSpec BundleSpec::tensor(const BundleSpec& o) const {
    if (!(Z == o.Z)) throw Error(ErrorCode::BundleMismatch, "tensor of bundles on different subcurves");
    return BundleSpec{Z, k + o.k, twist.plus(o.twist)};
}

BundleSpec BundleSpec::tensor_dual(const BundleSpec& o) const {
    if (!(Z == o.Z)) throw Error(ErrorCode::BundleMismatch, "tensor of bundles on different subcurves");
    if (k < o.k)
        throw Error(ErrorCode::InvalidBundle, "dual twist would need a negative omega power");
    return BundleSpec{Z, k - o.k, twist.minus(o.twist)};
}

std::string BundleSpec::label() const {
    std::ostringstream os;
    os << "omega^" << k << "(";
    bool first = true;
    for (const auto& [key, m] : twist.entries()) {
        if (!first) os << " + ";
        os << m << "*" << Z.curve().component(key.first).id << ":" << param_to_string(key.second);
        first = false;
    }
    os << ") on " << Z.label();
    return os.str();
}

BundleSpec trivial_bundle(const Subcurve& Z) { return BundleSpec{Z, 0, {}}; }

BundleSpec omega_power(const Subcurve& Z, int k) { return BundleSpec{Z, k, {}}; }

BundleSpec restrict_bundle(const NodalCurve& curve, const Subcurve& Z, int k,
                           const TwistDivisor& extra_twist) {
    if (k < 0) throw Error(ErrorCode::InvalidBundle, "omega power must be nonnegative");
    BundleSpec out;
    out.Z = Z;
    out.k = k;
    for (int ni : Z.boundary_nodes()) {
        const Node& n = curve.node(ni);
        const BranchPoint& inside = Z.contains(n.a.component) ? n.a : n.b;
        out.twist.add(inside.component, inside.param, k);
    }
    for (const auto& [key, m] : extra_twist.entries()) {
        auto [comp, point] = key;
        if (!Z.contains(comp))
            throw Error(ErrorCode::InvalidBundle, "twist point outside the subcurve");
        for (const Param& p : curve.branch_params_on(comp)) {
            if (p == point)
                throw Error(ErrorCode::TwistOnNode,
                            "twist at " + curve.component(comp).id + ":" + param_to_string(point) +
                                " collides with a node branch");
        }
        out.twist.add(comp, point, m);
    }
    return out;
}

}  // namespace canonlab
