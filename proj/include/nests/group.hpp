#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nests/finite_core.hpp"
#include "nests/topology.hpp"

namespace nests {

/// A finite group given by its Cayley table: table[a][b] = a * b.
class FiniteGroup {
public:
    /// Validates totality, associativity, a two-sided identity and inverses
    /// (InvalidInstance otherwise).
    static FiniteGroup from_table(std::vector<std::vector<int>> table, std::string name = "custom");

    /// Z_n under addition mod n.
    static FiniteGroup cyclic(int n);
    /// Z_2 x Z_2, elements encoded as 2a + b.
    static FiniteGroup klein();
    /// S_3 as permutations of {0,1,2} in lexicographic order; composition (p*q)(i) = p(q(i)).
    static FiniteGroup symmetric3();
    /// D_4 as r^k s^f, encoded 4f + k.
    static FiniteGroup dihedral4();

    /// "Z<n>", "Z2xZ2", "S3" or "D4"; throws Unsupported for anything else.
    static FiniteGroup builtin(const std::string& name);

    int order() const { return static_cast<int>(table_.size()); }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<int>>& table() const { return table_; }
    int op(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int identity() const { return identity_; }
    int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    bool is_abelian() const;
    Universe universe() const { return Universe(order()); }

private:
    FiniteGroup() = default;
    std::string name_;
    std::vector<std::vector<int>> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
};

enum class Side { left, right };

/// g * s (left) or s * g (right).
Subset translate(int g, Subset s, Side side, const FiniteGroup& grp);

/// {x^-1 : x in s}.
Subset inverse_set(Subset s, const FiniteGroup& grp);

/// {x * y : x in a, y in b}.
Subset product_set(Subset a, Subset b, const FiniteGroup& grp);

struct Compatibility {
    bool compatible = false;
    /// The standing hypothesis of the compatibility definition; reported, not enforced.
    bool t0_separating = false;
    /// (a, b, g) breaking one of the two biconditionals.
    std::optional<std::array<int, 3>> witness;
};

/// For all a, b, g: a < b iff a*g < b*g, and a < b iff g*a < g*b.
Compatibility order_compatibility(const FiniteGroup& grp, const Nest& n);
inline bool order_compatible(const FiniteGroup& grp, const Nest& n) { return order_compatibility(grp, n).compatible; }

/// g * L and L * g are members for every g and every member L.
bool prop51_premise(const FiniteGroup& grp, const Nest& n);

struct ContinuityCheck {
    bool premise = false;
    bool conclusion = false;
};

/// Premise: L^-1 in r for L in l, and R^-1 in l for R in r. Conclusion:
/// inversion is continuous for the topology generated by l u r.
ContinuityCheck inversion_continuity_check(const FiniteGroup& grp, const SetFamily& l, const SetFamily& r);

/// Premise: whenever x*y lies in a member L of l, some Lx, Ly in l contain x,
/// y with Lx*Ly inside L; likewise for r. Conclusion: multiplication is
/// continuous from the product of the topology generated by l u r with itself.
/// Needs order^2 <= 64.
ContinuityCheck multiplication_continuity_check(const FiniteGroup& grp, const SetFamily& l, const SetFamily& r);

/// Topology generated by l u r on the group.
Topology group_topology(const SetFamily& l, const SetFamily& r);

}  // namespace nests
