"""Exact counting sequences and series for the component enumeration.

Components for n edges are graded by generator count (codimension), so each n
yields a counting polynomial: coefficient of y^c = number of maximal
fibonacci subsets whose admissible sets have c generators.  Three coupled
sequences make the count recursive: the full count, the count restricted to
subsets containing the top boundary pair {2n-3, 2n-1}, and the count
restricted to subsets containing 2n-1 but not 2n-3.  For n >= 5 they satisfy

    full_n = 2 y^2 full_{n-2} + y^4 pair_{n-3} + y^2 (y^2 - 1) only_{n-2}
    pair_n =   y^2 full_{n-2} - y^2 only_{n-2}
    only_n =   y^2 pair_{n-2} + y^2 only_{n-2}

with fixed seed polynomials through n = 5 (the n = 5 seeds are also recomputed
through the recurrence and any disagreement is a hard error).  The primed
variants additionally require the bottom boundary pair {3, 5}; their seeds are
not tabulated anywhere, so they are derived here by direct constrained
enumeration (provenance "derived-seed").

Reindexing exponents c -> 2n+1-c turns codimension into dimension, and
weighting a dimension-d count by d * 2^(d-1) gives the per-n coefficients of
two series: one counting each subset once, and the true geometric
multiplicity of zero, which counts each subset with its component
multiplicity via full + 2*primed_full + primed_pair and overrides n = 1, 2
with the special-case values 3 and 13.

All arithmetic is exact; polynomials are exponent -> count maps, and the
closed rational forms for these series are used only as test oracles.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import nullvariety

Poly = dict[int, int]


def _shift(p: Poly, k: int) -> Poly:
    return {e + k: c for e, c in p.items()}


def _scale(p: Poly, m: int) -> Poly:
    return {e: m * c for e, c in p.items()} if m else {}


def _add(*polys: Poly) -> Poly:
    out: Poly = {}
    for p in polys:
        for e, c in p.items():
            out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def _sub(a: Poly, b: Poly) -> Poly:
    return _add(a, _scale(b, -1))


@dataclass(frozen=True)
class SequencePoly:
    """Counting polynomial for one n: exponent (codim or dim) -> count."""

    n: int
    coeffs: Poly
    provenance: str = field(default="recurrence", compare=False)

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.coeffs.values()):
            raise ValueError("counts must be non-negative")


@dataclass(frozen=True)
class CountSequences:
    """The three coupled sequences, each indexed by n (index 0 unused seed)."""

    full: tuple[SequencePoly, ...]
    top_pair: tuple[SequencePoly, ...]
    top_only: tuple[SequencePoly, ...]


_FULL_SEED = ({1: 1}, {2: 1}, {3: 2}, {4: 3}, {4: 1, 6: 3}, {6: 5, 8: 1})
_PAIR_SEED = ({}, {}, {}, {4: 1}, {6: 1}, {6: 2})
_ONLY_SEED = ({}, {}, {}, {4: 1}, {4: 1}, {6: 2})


def codim_counts_by_enumeration(
    n: int, mode: str = "full", require_bottom_pair: bool = False
) -> Poly:
    """Codimension counts by walking the maximal subsets one by one.

    Deliberately independent of the recurrences: the exponent comes from the
    size of an actually constructed admissible set.  mode selects the
    top-boundary condition ("full", "top-pair", "top-only").
    """
    if mode not in ("full", "top-pair", "top-only"):
        raise ValueError(f"unknown mode {mode!r}")
    if n < 3:
        return {}
    top, below = 2 * n - 1, 2 * n - 3
    out: Poly = {}
    for subset in nullvariety.enumerate_fibonacci_subsets(n):
        if not nullvariety.is_maximal(subset):
            continue
        s = set(subset.members)
        if require_bottom_pair and not {3, 5} <= s:
            continue
        if mode == "top-pair" and not {below, top} <= s:
            continue
        if mode == "top-only" and not (top in s and below not in s):
            continue
        size = len(nullvariety.admissible_sets(subset)[0].generators)
        out[size] = out.get(size, 0) + 1
    return out


def _advance(full2: Poly, pair2: Poly, only2: Poly, pair3: Poly) -> tuple[Poly, Poly, Poly]:
    full_n = _add(
        _scale(_shift(full2, 2), 2),
        _shift(pair3, 4),
        _sub(_shift(only2, 4), _shift(only2, 2)),
    )
    pair_n = _sub(_shift(full2, 2), _shift(only2, 2))
    only_n = _add(_shift(pair2, 2), _shift(only2, 2))
    return full_n, pair_n, only_n


def count_sequences(n_max: int, require_bottom_pair: bool = False) -> CountSequences:
    """The three sequences up to n_max (primed variants via require_bottom_pair)."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    if require_bottom_pair:
        seed_label = "derived-seed"
        seed_stop = 4
        fulls = [codim_counts_by_enumeration(i, "full", True) for i in range(5)]
        pairs = [codim_counts_by_enumeration(i, "top-pair", True) for i in range(5)]
        onlys = [codim_counts_by_enumeration(i, "top-only", True) for i in range(5)]
    else:
        seed_label = "fixed-seed"
        seed_stop = 5
        fulls = [dict(p) for p in _FULL_SEED]
        pairs = [dict(p) for p in _PAIR_SEED]
        onlys = [dict(p) for p in _ONLY_SEED]

    for n in range(5, n_max + 1):
        full_n, pair_n, only_n = _advance(
            fulls[n - 2], pairs[n - 2], onlys[n - 2], pairs[n - 3]
        )
        if n < len(fulls):
            # n = 5 of the fixed-seed run: the tabulated values are
            # authoritative, and the recurrence must reproduce them exactly
            if (full_n, pair_n, only_n) != (fulls[n], pairs[n], onlys[n]):
                raise RuntimeError(
                    "recurrence output disagrees with the fixed n=5 seed values"
                )
        else:
            fulls.append(full_n)
            pairs.append(pair_n)
            onlys.append(only_n)

    def wrap(values: list[Poly]) -> tuple[SequencePoly, ...]:
        return tuple(
            SequencePoly(
                n=i,
                coeffs=values[i],
                provenance=seed_label if i <= seed_stop else "recurrence",
            )
            for i in range(n_max + 1)
        )

    return CountSequences(wrap(fulls), wrap(pairs), wrap(onlys))


def dimension_transform(seq: SequencePoly, n: int) -> SequencePoly:
    """Reindex exponents e -> 2n+1-e (codimension to dimension); an involution."""
    top = 2 * n + 1
    if any(not 0 <= e <= top for e in seq.coeffs):
        raise ValueError(f"exponent out of range [0, {top}]")
    return SequencePoly(
        n=seq.n, coeffs={top - e: c for e, c in seq.coeffs.items()},
        provenance=seq.provenance,
    )


def _dim_map(p: Poly, n: int) -> Poly:
    top = 2 * n + 1
    if any(not 0 <= e <= top for e in p):
        raise ValueError(f"exponent out of range [0, {top}]")
    return {top - e: c for e, c in p.items()}


def _gm_weight(dim_counts: Poly) -> int:
    return sum(c * d * (1 << (d - 1)) for d, c in dim_counts.items() if d > 0)


@dataclass(frozen=True)
class GmSeries:
    """Per-n series coefficients, index = n.

    per_subset counts every maximal subset once (a lower bound on gm); gm is
    the true geometric multiplicity, with n = 1, 2 fixed to 3 and 13.
    """

    per_subset: tuple[int, ...]
    gm: tuple[int, ...]


def gm_series(n_max: int) -> GmSeries:
    """Both series up to n_max through the recurrences (linear in n_max)."""
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    plain = count_sequences(n_max)
    primed = count_sequences(n_max, require_bottom_pair=True) if n_max >= 3 else None
    per, gm = [0], [0]
    for n in range(1, n_max + 1):
        g_n = plain.full[n].coeffs
        per.append(_gm_weight(_dim_map(g_n, n)))
        if n == 1:
            gm.append(3)
        elif n == 2:
            gm.append(13)
        else:
            weighted = _add(
                g_n,
                _scale(primed.full[n].coeffs, 2),
                primed.top_pair[n].coeffs,
            )
            gm.append(_gm_weight(_dim_map(weighted, n)))
    return GmSeries(per_subset=tuple(per), gm=tuple(gm))


def _fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fibonacci_bound_check(n: int) -> bool:
    """Exact check that the per-subset coefficient is at most F_n (n+1) 2^n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return gm_series(n).per_subset[n] <= _fibonacci(n) * (n + 1) * 2**n
