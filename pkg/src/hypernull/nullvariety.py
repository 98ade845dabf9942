"""Irreducible components of the zero-eigenvector variety of loose 3-hyperpaths.

For n edges the zero-eigenvector equations are one quadratic monomial per
degree-one vertex plus, for every interior shared vertex a (odd, 3 <= a <=
2n-1), the binomial

    p_a = x_{a-2} x_{a-1} + x_{a+1} x_{a+2}.

Components of the solution variety are indexed by *fibonacci subsets* of the
interior index set {3, 5, ..., 2n-1}: subsets containing at least one of
every two consecutive odd indices.  Each subset S determines one, two or four
admissible generator sets (variables plus binomials).  These sets are
triangular with respect to the elimination order

    x_1 < x_3 < ... < x_{2n+1} < x_2 < x_4 < ... < x_{2n}

(hence irredundant, and each cuts out an irreducible variety).  The variety
of an admissible set is inclusion-maximal exactly when S contains no maximal
run of consecutive odd indices of odd length >= 3, so those sets are the
irreducible components.  A component with generator count c has dimension
2n+1-c, and the geometric multiplicity of the zero eigenvalue is the sum of
dim * 2^(dim-1) over all components.

n = 1 and n = 2 do not fit the general machinery (the two boundary rules need
three distinct interior indices) and are fixed special cases here.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


def odd_interior_indices(n: int) -> range:
    """Indices of the shared (degree-two) vertices of the n-edge 3-path."""
    return range(3, 2 * n, 2)


def inner_indices(n: int) -> range:
    """The interior index set with its two boundary elements removed."""
    return range(5, 2 * n - 2, 2)


@dataclass(frozen=True, slots=True)
class Generator:
    """One generator: the variable x_i (kind "x") or the binomial p_a (kind "p")."""

    kind: str
    index: int

    def __post_init__(self) -> None:
        if self.kind not in ("x", "p"):
            raise ValueError(f"generator kind must be 'x' or 'p', got {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"generator index must be positive, got {self.index}")

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def variable(i: int) -> Generator:
    return Generator("x", i)


def binomial(a: int) -> Generator:
    return Generator("p", a)


def parse_generator(text: str) -> Generator:
    kind, index = text[:1], text[1:]
    if kind not in ("x", "p") or not index.isdigit():
        raise ValueError(f"cannot parse generator {text!r}")
    return Generator(kind, int(index))


def _order_key(i: int) -> tuple[bool, int]:
    # elimination order: odd-indexed variables first, then even, each ascending
    return (i % 2 == 0, i)


def main_variable(gen: Generator) -> int:
    """The largest variable of the generator under the elimination order."""
    if gen.kind == "x":
        return gen.index
    a = gen.index
    return max((a - 2, a - 1, a + 1, a + 2), key=_order_key)


@dataclass(frozen=True)
class FibonacciSubset:
    """Subset of the odd interior indices hitting every consecutive pair."""

    n: int
    members: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"hyperpath length must be >= 1, got {self.n}")
        if list(self.members) != sorted(set(self.members)):
            raise ValueError("members must be strictly increasing")
        allowed = set(odd_interior_indices(self.n))
        if not set(self.members) <= allowed:
            raise ValueError(f"members must lie in {sorted(allowed)}")
        present = set(self.members)
        for k in range(1, self.n - 1):
            if 2 * k + 1 not in present and 2 * k + 3 not in present:
                raise ValueError(
                    f"indices {2 * k + 1} and {2 * k + 3} are both absent"
                )


@dataclass(frozen=True)
class GeneratorSet:
    """An admissible generator set built from a fibonacci subset."""

    n: int
    source: FibonacciSubset
    generators: frozenset[Generator]


@dataclass(frozen=True)
class Component:
    """An irreducible component of the zero-eigenvector variety."""

    generator_set: GeneratorSet

    @property
    def codim(self) -> int:
        return len(self.generator_set.generators)

    @property
    def dim(self) -> int:
        return 2 * self.generator_set.n + 1 - self.codim


def _iter_member_tuples(n, maximal_only):
    # Walk the interior indices from 2n-1 down to 3, absent branch first; this
    # fixes the enumeration order.  A branch dies when two consecutive indices
    # are absent, and (for maximal_only) when a finished run of consecutive
    # present indices has odd length >= 3.
    def bad_run(run_len):
        return maximal_only and run_len >= 3 and run_len % 2 == 1

    def walk(a, prev_in, run_len, acc):
        if a < 3:
            if not bad_run(run_len):
                yield tuple(sorted(acc))
            return
        if prev_in is not False and not bad_run(run_len):
            yield from walk(a - 2, False, 0, acc)
        acc.append(a)
        yield from walk(a - 2, True, (run_len + 1) if prev_in else 1, acc)
        acc.pop()

    yield from walk(2 * n - 1, None, 0, [])


def enumerate_fibonacci_subsets(n: int) -> list[FibonacciSubset]:
    """All fibonacci subsets for n >= 3, in a fixed deterministic order."""
    if n < 3:
        raise ValueError(f"enumeration needs n >= 3, got {n}")
    return [FibonacciSubset(n, t) for t in _iter_member_tuples(n, False)]


def is_maximal(subset: FibonacciSubset) -> bool:
    """Whether the subset's admissible sets cut out inclusion-maximal varieties.

    True unless some maximal run of consecutive odd indices inside the subset
    has odd length >= 3.
    """
    if subset.n < 3:
        raise ValueError("maximality criterion applies for n >= 3")
    run = 0
    prev = None
    for a in subset.members:
        if prev is not None and a == prev + 2:
            run += 1
        else:
            if run >= 3 and run % 2 == 1:
                return False
            run = 1
        prev = a
    return not (run >= 3 and run % 2 == 1)


def admissible_sets(subset: FibonacciSubset) -> list[GeneratorSet]:
    """All admissible generator sets of the subset (one, two, or four).

    The core is the variables x_i, i in S.  At the low boundary: both x_1 and
    x_2 if 3 is absent, a free choice of x_1 or x_2 if 3 and 5 are both
    present, and p_3 if 3 is present but 5 is not; symmetrically at the high
    boundary with x_{2n}, x_{2n+1} and p_{2n-1}.  Every interior index a with
    a neighbor-of-neighbor missing contributes the even variable adjacent to
    its present side, or p_a when both a-2 and a+2 are absent.
    """
    n = subset.n
    if n < 3:
        raise ValueError("admissible sets are defined for n >= 3")
    s = set(subset.members)
    core = [variable(i) for i in subset.members]

    if 3 not in s:
        low_options = [(variable(1), variable(2))]
    elif 5 in s:
        low_options = [(variable(1),), (variable(2),)]
    else:
        low_options = [(binomial(3),)]

    if 2 * n - 1 not in s:
        high_options = [(variable(2 * n), variable(2 * n + 1))]
    elif 2 * n - 3 in s:
        high_options = [(variable(2 * n),), (variable(2 * n + 1),)]
    else:
        high_options = [(binomial(2 * n - 1),)]

    middle = []
    for a in inner_indices(n):
        below, above = a - 2 in s, a + 2 in s
        if below and above:
            continue
        if below:
            middle.append(variable(a + 1))
        elif above:
            middle.append(variable(a - 1))
        else:
            middle.append(binomial(a))

    sets = []
    for low, high in itertools.product(low_options, high_options):
        gens = frozenset(core) | set(low) | set(high) | set(middle)
        sets.append(GeneratorSet(n=n, source=subset, generators=gens))
    return sets


def codim(subset: FibonacciSubset) -> int:
    """Generator count shared by all admissible sets of the subset.

    Equals |S restricted to the inner indices| + n + 1 minus the number of
    members whose member-plus-4 is also a member.
    """
    n = subset.n
    if n < 3:
        raise ValueError("codimension formula applies for n >= 3")
    s = set(subset.members)
    inner = sum(1 for a in subset.members if 3 < a < 2 * n - 1)
    plus4 = sum(1 for a in subset.members if a + 4 in s)
    return inner + n + 1 - plus4


def component_multiplicity(subset: FibonacciSubset) -> int:
    """Number of components arising from a maximal subset (1, 2 or 4).

    Doubles once for each boundary pair fully contained in the subset.  For
    n = 3 the two boundary pairs coincide, so the count is taken directly
    from the admissible sets (it is still 4 when S = {3, 5}: the two boundary
    choices stay independent).
    """
    n = subset.n
    if not is_maximal(subset):
        raise ValueError("multiplicity is defined for maximal subsets")
    if n == 3:
        return len(admissible_sets(subset))
    s = set(subset.members)
    doublings = ({3, 5} <= s) + ({2 * n - 3, 2 * n - 1} <= s)
    return 1 << doublings


def components(n: int) -> list[Component]:
    """All irreducible components for the n-edge path, deterministically ordered.

    Materializes one Component per admissible set of each maximal subset; the
    count grows exponentially, so use component_dimension_counts for large n.
    """
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if n == 1:
        empty = FibonacciSubset(1, ())
        return [
            Component(GeneratorSet(1, empty, frozenset({variable(i), variable(j)})))
            for i, j in ((1, 2), (1, 3), (2, 3))
        ]
    if n == 2:
        return [
            Component(
                GeneratorSet(
                    2,
                    FibonacciSubset(2, ()),
                    frozenset({variable(1), variable(2), variable(4), variable(5)}),
                )
            ),
            Component(
                GeneratorSet(
                    2, FibonacciSubset(2, (3,)), frozenset({variable(3), binomial(3)})
                )
            ),
        ]
    out: list[Component] = []
    for subset in enumerate_fibonacci_subsets(n):
        if is_maximal(subset):
            out.extend(Component(gs) for gs in admissible_sets(subset))
    return out


def _dim_counts_fast(n: int) -> Counter[int]:
    # Same walk as the subset enumeration, but carrying the codimension
    # bookkeeping so each maximal subset costs O(1): the inner-index count,
    # the member/member+4 pair count, and the two boundary-pair flags.
    counts: Counter[int] = Counter()
    top = 2 * n - 1
    base = n + 1

    def walk(a, prev_in, prev2_in, run_len, inner, plus4, top_pair):
        if a < 3:
            if run_len >= 3 and run_len % 2 == 1:
                return
            bottom_pair = prev_in and prev2_in
            dim = 2 * n + 1 - (inner + base - plus4)
            counts[dim] += 1 << (int(top_pair) + int(bottom_pair))
            return
        if a == top or prev_in:
            if not (run_len >= 3 and run_len % 2 == 1):
                walk(a - 2, False, prev_in, 0, inner, plus4, top_pair)
        walk(
            a - 2,
            True,
            prev_in,
            (run_len + 1) if prev_in else 1,
            inner + (3 < a < top),
            plus4 + prev2_in,
            top_pair or (a == top - 2 and prev_in),
        )

    walk(top, False, False, 0, 0, 0, False)
    return counts


@lru_cache(maxsize=None)
def _dim_count_items(n: int) -> tuple[tuple[int, int], ...]:
    if n < 1:
        raise ValueError(f"edge count must be >= 1, got {n}")
    if n == 1:
        return ((1, 3),)
    if n == 2:
        return ((1, 1), (3, 1))
    if n == 3:
        counts = Counter(comp.dim for comp in components(3))
    else:
        counts = _dim_counts_fast(n)
    return tuple(sorted(counts.items()))


def component_dimension_counts(n: int) -> dict[int, int]:
    """Component count per dimension (multiplicities included), without
    materializing generator sets."""
    return dict(_dim_count_items(n))


def gm_zero(n: int) -> int:
    """Geometric multiplicity of the zero eigenvalue, by direct enumeration."""
    return sum(c * d * (1 << (d - 1)) for d, c in _dim_count_items(n))


def sorted_generators(gens: frozenset[Generator]) -> list[Generator]:
    """Canonical listing: variables by index, then binomials by index."""
    return sorted(gens, key=lambda g: (g.kind != "x", g.index))


def render_ideal(component: Component) -> str:
    """Canonical text form, e.g. "<x1,x2,x5,x9,p5,p9>"."""
    gens = component.generator_set.generators
    if not gens:
        raise ValueError("component has an empty generator set")
    return "<" + ",".join(str(g) for g in sorted_generators(gens)) + ">"


def components_payload(n: int) -> dict:
    """JSON-ready component listing: {n, count, components: [...]}."""
    comps = components(n)
    return {
        "n": n,
        "count": len(comps),
        "components": [
            {
                "S": list(c.generator_set.source.members),
                "generators": [
                    str(g) for g in sorted_generators(c.generator_set.generators)
                ],
                "codim": c.codim,
                "dim": c.dim,
            }
            for c in comps
        ],
    }


def components_from_payload(payload: dict) -> list[Component]:
    """Rebuild Component objects from a serialized listing, validating it."""
    n = payload["n"]
    comps = []
    for item in payload["components"]:
        source = FibonacciSubset(n, tuple(item["S"]))
        gens = frozenset(parse_generator(t) for t in item["generators"])
        comp = Component(GeneratorSet(n, source, gens))
        if comp.codim != item["codim"] or comp.dim != item["dim"]:
            raise ValueError(f"inconsistent dimensions in entry for S={item['S']}")
        comps.append(comp)
    if payload["count"] != len(comps):
        raise ValueError("count does not match the number of entries")
    return comps
