"""Core permutation values and constructors.

A permutation is a tuple of distinct integers read left to right; its
domain is the set of entries.  User-facing permutations contain strictly
positive integers only.  The value 0 is reserved as an internal sentinel
that conjugation maps may prepend or append, so most functions here accept
it but ``parse_perm`` and ``as_perm`` reject it by default.

Besides relabeling (standardization), this module provides the space
labeling of the gaps of a permutation, insertion of a new maximum into a
labeled space, and deterministic constructors for permutations with a
prescribed descent set or left-peak profile.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from .errors import InfeasibleProfileError

Perm = tuple[int, ...]


def as_perm(values: Iterable[int], *, allow_zero: bool = False) -> Perm:
    """Validate and freeze a sequence of distinct integers as a permutation.

    >>> as_perm([2, 1, 5])
    (2, 1, 5)
    """
    pi = tuple(values)
    for v in pi:
        if not isinstance(v, int) or isinstance(v, bool):
            raise ValueError(f"permutation entries must be integers, got {v!r}")
        if v < 0 or (v == 0 and not allow_zero):
            raise ValueError(f"permutation entries must be positive, got {v}")
    if len(set(pi)) != len(pi):
        raise ValueError(f"permutation entries must be distinct: {pi}")
    return pi


def parse_perm(text: str) -> Perm:
    """Parse the comma-separated text form, e.g. ``"2,1,5,7,3,6,4"``.

    Whitespace is ignored; the empty string denotes the empty permutation.
    """
    stripped = text.strip()
    if not stripped:
        return ()
    try:
        values = [int(part.strip()) for part in stripped.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse permutation from {text!r}") from None
    return as_perm(values)


def format_perm(pi: Sequence[int]) -> str:
    return ",".join(str(v) for v in pi)


def domain(pi: Sequence[int]) -> frozenset[int]:
    return frozenset(pi)


def standardize(pi: Perm, target: Iterable[int]) -> Perm:
    """Relabel ``pi`` onto ``target`` by the unique increasing bijection.

    The i-th smallest entry of ``pi`` becomes the i-th smallest element of
    ``target``; relative order is preserved.

    >>> standardize((3, 9, 2), (1, 7, 8))
    (7, 8, 1)
    """
    tgt = sorted(set(target))
    if len(tgt) != len(pi):
        raise ValueError(
            f"target size {len(tgt)} does not match permutation length {len(pi)}"
        )
    if tgt and tgt[0] < 1:
        raise ValueError("standardization targets must be positive integers")
    mapping = dict(zip(sorted(pi), tgt))
    return tuple(mapping[v] for v in pi)


def standardize_unit(pi: Perm) -> Perm:
    """Relabel onto {1, ..., m}; two permutations agree here iff they have
    the same relative order."""
    return standardize(pi, range(1, len(pi) + 1))


def descent_positions(pi: Sequence[int]) -> list[int]:
    """1-based positions i with pi[i] > pi[i+1] (helper; see stats.des_set)."""
    return [i for i in range(1, len(pi)) if pi[i - 1] > pi[i]]


def space_labels(pi: Perm) -> tuple[int, ...]:
    """Label the m+1 gaps of ``pi`` with 0..m.

    Entry g of the result labels the gap after position g (g = 0 is the gap
    before the first entry, g = m the final gap).  The final gap gets 0,
    gaps at descents get 1..k right to left, and the remaining gaps get
    k+1..m left to right.  The defining property is that inserting a new
    maximum into the gap labeled x raises the major index by exactly x.

    >>> space_labels((2, 6, 5, 7, 8, 1))
    (3, 4, 2, 5, 6, 1, 0)
    """
    m = len(pi)
    if m == 0:
        raise ValueError("space labeling requires a nonempty permutation")
    labels: list[int | None] = [None] * (m + 1)
    labels[m] = 0
    descents = descent_positions(pi)
    for rank, d in enumerate(sorted(descents, reverse=True), start=1):
        labels[d] = rank
    nxt = len(descents) + 1
    for g in range(m):
        if labels[g] is None:
            labels[g] = nxt
            nxt += 1
    return tuple(labels)  # type: ignore[arg-type]


def insert_in_space(pi: Perm, v: int, label: int) -> Perm:
    """Insert ``v`` (a new maximum) into the gap of ``pi`` carrying ``label``.

    Raises the major index by exactly ``label``.
    """
    if pi and v <= max(pi):
        raise ValueError(f"inserted value {v} must exceed max entry {max(pi)}")
    if v <= 0:
        raise ValueError("inserted value must be positive")
    if not 0 <= label <= len(pi):
        raise ValueError(f"space label {label} out of range 0..{len(pi)}")
    if not pi:
        return (v,)
    gap = space_labels(pi).index(label)
    return pi[:gap] + (v,) + pi[gap:]


def perm_with_descent_set(ground: Iterable[int], descents: Iterable[int]) -> Perm:
    """Deterministic permutation of ``ground`` whose descent set is ``descents``.

    Builds the weight word w_i = #{d in descents : d >= i} and standardizes
    it to the ground set, breaking ties left to right, so equal weights
    receive increasing ground elements.

    >>> perm_with_descent_set([1, 2, 3], {2})
    (2, 3, 1)
    """
    g = sorted(set(ground))
    m = len(g)
    dset = set(descents)
    if not dset <= set(range(1, m)):
        raise ValueError(f"descent set {sorted(dset)} not within 1..{m - 1}")
    weights = [sum(1 for d in dset if d >= i) for i in range(1, m + 1)]
    order = sorted(range(m), key=lambda p: (weights[p], p))
    result = [0] * m
    for rank, p in enumerate(order):
        result[p] = g[rank]
    return tuple(result)


def perm_with_left_peak_profile(m: int, left_peaks: Iterable[int], chi_plus: int) -> Perm:
    """Deterministic permutation of [m] with the given left-peak set and
    final-ascent indicator.

    Left peaks are exactly the starts of maximal descent runs, so the
    construction chooses the descent set: each requested left peak starts a
    run, and when ``chi_plus`` is 0 the last run is extended to position
    m-1.  Infeasible profiles (adjacent left peaks, a final ascent demanded
    together with a left peak at m-1, or no left peak available to kill the
    final ascent) raise :class:`InfeasibleProfileError`.
    """
    lset = set(left_peaks)
    if chi_plus not in (0, 1):
        raise ValueError(f"chi_plus must be 0 or 1, got {chi_plus!r}")
    if m < 0:
        raise ValueError("length must be nonnegative")
    if not lset <= set(range(1, m)):
        raise InfeasibleProfileError(f"left peaks {sorted(lset)} not within 1..{m - 1}")
    if any(j + 1 in lset for j in lset):
        raise InfeasibleProfileError(f"adjacent left peaks in {sorted(lset)}")
    if m <= 1:
        if lset or chi_plus != 0:
            raise InfeasibleProfileError(
                f"length {m} admits only the empty profile with chi_plus=0"
            )
        return tuple(range(1, m + 1))
    if chi_plus == 1:
        if m - 1 in lset:
            raise InfeasibleProfileError(
                f"left peak at {m - 1} forces a final descent; chi_plus=1 infeasible"
            )
        dset = lset
    else:
        if not lset:
            raise InfeasibleProfileError(
                "chi_plus=0 with no left peaks is infeasible for length >= 2"
            )
        dset = lset | set(range(max(lset), m))
    return perm_with_descent_set(range(1, m + 1), dset)
