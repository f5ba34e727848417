#pragma once

#include <map>
#include <string>
#include <vector>

#include "canonlab/curve.hpp"
#include "canonlab/rational.hpp"

namespace canonlab {

// Divisor supported at smooth points of a subcurve, with signed
// multiplicities. Negative multiplicities impose vanishing; positive ones
// allow poles (used for the adjunction twist at boundary nodes and for
// ideal-sheaf twists I_S x L).
class TwistDivisor {
  public:
    TwistDivisor() = default;

    void add(int component, const Param& point, int mult);
    const std::map<std::pair<int, Param>, int>& entries() const { return entries_; }

    int degree() const;
    int degree_on(int component) const;
    bool effective() const;  // all multiplicities >= 0
    bool empty() const { return entries_.empty(); }

    TwistDivisor plus(const TwistDivisor& o) const;
    TwistDivisor minus(const TwistDivisor& o) const;
    TwistDivisor negated() const;
    TwistDivisor scaled(int k) const;

    bool operator==(const TwistDivisor& o) const { return entries_ == o.entries_; }

  private:
    // Keyed by (component, point); zero entries are erased.
    std::map<std::pair<int, Param>, int> entries_;
};

// omega_Z^k(T) on a subcurve Z. Ambient restrictions arrive here
// post-adjunction: omega_X^k|_Z is stored as omega_Z^k(k * D_Z) with D_Z
// the boundary nodes viewed as smooth points of Z.
struct BundleSpec {
    Subcurve Z;
    int k = 1;
    TwistDivisor twist;

    int degree_on(int component) const;  // k(delta_C - 2) + twist multiplicities
    int degree() const;

    BundleSpec tensor(const BundleSpec& o) const;
    // this (x) o^{-1}; requires k_this >= k_o (only omega^k(T) with k >= 0
    // is representable).
    BundleSpec tensor_dual(const BundleSpec& o) const;

    std::string label() const;
    bool same_space(const BundleSpec& o) const { return Z == o.Z && k == o.k && twist == o.twist; }
};

BundleSpec trivial_bundle(const Subcurve& Z);
BundleSpec omega_power(const Subcurve& Z, int k);

// omega_Z^k(k*D_Z + extra_twist) for Z inside `curve`. Throws TwistOnNode
// when the extra twist collides with any node branch parameter.
BundleSpec restrict_bundle(const NodalCurve& curve, const Subcurve& Z, int k,
                           const TwistDivisor& extra_twist = {});

}  // namespace canonlab
