#pragma once

#include "jsrlab/radcal/expr.hpp"

#include <string>
#include <vector>

namespace jsrlab::radcal {

/// Derived properties of a radical-valued expression.
///
/// `conv_idem` / `comp_idem` license the rewrites P * P -> P and P o P -> P;
/// full radicals carry both, the one-sided classes (`utr` = closed for the
/// join-side calculus, `otr` = closed for the meet-side calculus) do not.
struct Attributes {
    bool preradical = true;
    bool utr = false;
    bool otr = false;
    bool radical = false;
    bool hereditary = false;
    bool bw = false; // Berger-Wang property: joint and Berger-Wang radii agree
    bool conv_idem = false;
    bool comp_idem = false;
};

/// Canonical form. Deterministic and idempotent:
///   - centralization unfolds to convolution with the commutator-ideal map,
///   - convolution / superposition chains re-associate to the right and
///     collapse adjacent idempotent duplicates,
///   - joins (meets) of operands that are all join-side (meet-side) closed
///     rewrite to the star (circ) closure of the corresponding chain,
///   - closures of already-idempotent operands disappear, nested closures
///     of the same kind collapse,
///   - join/meet/family operand lists are flattened, sorted, deduplicated,
///     and singletons unwrap.
ExprPtr normalize(const ExprPtr& e);

/// Attributes of the normalized form, including knowledge-base overlays and
/// the bound-implies-Berger-Wang rule (a full radical dominated by the
/// Berger-Wang radical inherits the bw property).
Attributes infer_attributes(const ExprPtr& e);

enum class Verdict { Yes, No, Unknown };

struct ProofResult {
    Verdict verdict = Verdict::Unknown;
    std::vector<std::string> steps; // human-readable trace for Yes/No
};

/// Bounded derivability of "a <= b" (pointwise domination of the induced
/// ideal maps) from the built-in fact base plus structural rules. `No` is
/// returned only with positive evidence (a strict reverse chain); otherwise
/// an unprovable goal reports `Unknown`.
ProofResult prove_leq(const ExprPtr& a, const ExprPtr& b);

/// Equality via antisymmetry: both directions of prove_leq, or syntactic
/// agreement of normal forms.
ProofResult prove_eq(const ExprPtr& a, const ExprPtr& b);

/// Questions the fact base deliberately leaves open; the prover must answer
/// Unknown on each (regression-tested so nobody "proves" them by accident).
struct OpenGoal {
    std::string name;
    std::string statement;
    std::string lhs, rhs; // prove_leq(lhs, rhs) must be Unknown
};

const std::vector<OpenGoal>& open_goals();

} // namespace jsrlab::radcal
