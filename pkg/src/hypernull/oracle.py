"""Brute-force decomposition of the null equations, for cross-validation.

Works directly from the defining equations of the n-edge 3-path: every
degree-one monomial x_i x_j forces x_i = 0 or x_j = 0, so branch on both.
After substituting a branch's zeros, a surviving binomial p_a may degenerate
to a single monomial (one of its two products already vanishes); such
monomials are branched on in turn until every remaining binomial has both
products alive.  The leaves are candidate ideals; pruning the ones whose
variety sits strictly inside another's leaves exactly the irreducible
components, which must agree with the structured enumeration.

Containment is decided syntactically: a variable vanishes on a candidate's
variety iff it is forced there, and a binomial vanishes iff it is a generator
or both of its products contain a forced variable.  That rule is sound and,
on candidates of this shape, complete; nothing is claimed for arbitrary
variable/binomial ideals.

Cost is exponential (2^(n+2) cover branches before the degeneracy splits),
hence the small default bound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .hyperpath import build_hyperpath, link_monomial_edges
from .nullvariety import Component, odd_interior_indices

DEFAULT_BOUND = 8


@dataclass(frozen=True)
class CandidateIdeal:
    """Variables forced to zero plus the binomials not already forced."""

    n: int
    variables: frozenset[int]
    binomials: frozenset[int]


def _sorted_pairs(n: int) -> list[tuple[int, int]]:
    path = build_hyperpath(n, 3)
    return sorted(tuple(sorted(e)) for e in link_monomial_edges(path))


def cover_choice_unions(n: int) -> list[frozenset[int]]:
    """Distinct unions of one chosen endpoint per degree-one monomial."""
    unions = {
        frozenset(choice) for choice in itertools.product(*_sorted_pairs(n))
    }
    return sorted(unions, key=lambda u: (len(u), sorted(u)))


def _killed(a: int, forced: frozenset[int]) -> tuple[bool, bool]:
    # whether each product of p_a contains a forced variable
    return (a - 2 in forced or a - 1 in forced, a + 1 in forced or a + 2 in forced)


def enumerate_candidates(n: int) -> list[CandidateIdeal]:
    """All deduplicated leaf candidates of the branching expansion."""
    pairs = _sorted_pairs(n)
    interior = list(odd_interior_indices(n))
    leaves = set()
    seen = set()
    stack: list[frozenset[int]] = [frozenset()]
    while stack:
        forced = stack.pop()
        if forced in seen:
            continue
        seen.add(forced)
        branch = next(
            (p for p in pairs if p[0] not in forced and p[1] not in forced), None
        )
        if branch is None:
            for a in interior:
                low_dead, high_dead = _killed(a, forced)
                if low_dead != high_dead:
                    branch = (a + 1, a + 2) if low_dead else (a - 2, a - 1)
                    break
        if branch is not None:
            stack.append(forced | {branch[0]})
            stack.append(forced | {branch[1]})
            continue
        alive = frozenset(a for a in interior if _killed(a, forced) == (False, False))
        leaves.add((forced, alive))
    return [
        CandidateIdeal(n, variables, binomials)
        for variables, binomials in sorted(
            leaves, key=lambda vb: (sorted(vb[0]), sorted(vb[1]))
        )
    ]


def variety_contains(first: CandidateIdeal, second: CandidateIdeal) -> bool:
    """True iff every generator of `second` vanishes on the variety of `first`
    (i.e. the variety of `first` is contained in the variety of `second`)."""
    if first.n != second.n:
        raise ValueError("candidates must belong to the same hyperpath")
    if not second.variables <= first.variables:
        return False
    return all(
        a in first.binomials or _killed(a, first.variables) == (True, True)
        for a in second.binomials
    )


def brute_force_components(n: int, bound: int = DEFAULT_BOUND) -> list[CandidateIdeal]:
    """Candidates surviving containment pruning: the irreducible components."""
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if n > bound:
        raise ValueError(
            f"n={n} exceeds the brute-force bound {bound} (2^(n+2) branches)"
        )
    candidates = enumerate_candidates(n)
    survivors = []
    for cand in candidates:
        dominated = any(
            other is not cand
            and variety_contains(cand, other)
            and not variety_contains(other, cand)
            for other in candidates
        )
        if not dominated:
            survivors.append(cand)
    return survivors


def candidate_from_component(component: Component) -> CandidateIdeal:
    """The (variables, binomials) view of a structured component."""
    gens = component.generator_set.generators
    return CandidateIdeal(
        component.generator_set.n,
        frozenset(g.index for g in gens if g.kind == "x"),
        frozenset(g.index for g in gens if g.kind == "p"),
    )
