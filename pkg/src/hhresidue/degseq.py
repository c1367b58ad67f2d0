"""Degree-sequence arithmetic: the largest-term reduction, graphicality
tests, and the residue.

A sequence here is any iterable of nonnegative ints; functions normalize to
nonincreasing tuples, and every observable sequence (inputs echoed in
traces, step results) is nonincreasing. Two independent graphicality tests
are provided: the reduction itself and the Erdos-Gallai inequalities.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

ALL_ZERO = "all_zero"
NEGATIVE_TERM = "negative_term"
STEP_IMPOSSIBLE = "step_impossible"


def _normalized(seq: Iterable[int]) -> tuple[int, ...]:
    terms = tuple(sorted(seq, reverse=True))
    for t in terms:
        if not isinstance(t, int) or isinstance(t, bool):
            raise ValueError(f"term {t!r} is not an integer")
        if t < 0:
            raise ValueError(f"term {t} is negative")
    return terms


def hh_step(seq: Iterable[int]) -> tuple[int, ...]:
    """One reduction step: remove a largest term t, subtract 1 from the t
    largest remaining terms, re-sort.

    Ties are broken by subtracting from the earliest positions in sorted
    order; the result multiset does not depend on this choice. Raises if
    the sequence is empty or t exceeds the number of remaining terms; a
    step whose result contains a negative term is returned as-is (the
    caller decides what a negative term means).
    """
    d = _normalized(seq)
    if not d:
        raise ValueError("cannot reduce an empty sequence")
    t = d[0]
    rest = list(d[1:])
    if t > len(rest):
        raise ValueError(
            f"largest term {t} exceeds the {len(rest)} remaining terms"
        )
    for i in range(t):
        rest[i] -= 1
    rest.sort(reverse=True)
    return tuple(rest)


@dataclass(frozen=True)
class ReductionTrace:
    """Record of a full reduction run.

    steps holds the sequences d^0, d^1, ..., each one term shorter than the
    last; outcome is ALL_ZERO when the run ended at a list of zeros,
    NEGATIVE_TERM when a step produced a negative term (that step is the
    last entry), or STEP_IMPOSSIBLE when the largest term exceeded the
    remaining length (the stuck sequence is the last entry).
    """

    steps: tuple[tuple[int, ...], ...]
    outcome: str

    @property
    def is_graphical(self) -> bool:
        return self.outcome == ALL_ZERO

    @property
    def residue(self) -> int:
        """Number of zeros in the terminal sequence; graphical runs only."""
        if not self.is_graphical:
            raise ValueError("residue is defined for graphical sequences only")
        return len(self.steps[-1])


def hh_reduce(seq: Iterable[int]) -> ReductionTrace:
    """Iterate :func:`hh_step` until a list of zeros, a negative term, or a
    step that cannot be applied. Failures are encoded in the trace outcome,
    never raised."""
    d = _normalized(seq)
    steps = [d]
    while True:
        if not d or d[0] == 0:
            return ReductionTrace(tuple(steps), ALL_ZERO)
        if d[0] > len(d) - 1:
            return ReductionTrace(tuple(steps), STEP_IMPOSSIBLE)
        d = hh_step(d)
        steps.append(d)
        if d and d[-1] < 0:
            return ReductionTrace(tuple(steps), NEGATIVE_TERM)


def is_graphical(seq: Iterable[int]) -> bool:
    """True iff the reduction terminates at a list of zeros."""
    return hh_reduce(seq).is_graphical


def is_graphical_erdos_gallai(seq: Iterable[int]) -> bool:
    """Independent graphicality test: even sum plus the k-prefix
    inequalities sum(d_1..d_k) <= k(k-1) + sum(min(d_i, k) for i > k)."""
    d = _normalized(seq)
    if sum(d) % 2:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        if prefix > k * (k - 1) + sum(min(x, k) for x in d[k:]):
            return False
    return True


def residue(seq: Iterable[int]) -> int:
    """Number of zeros remaining when the reduction terminates; raises
    ValueError on non-graphical input."""
    trace = hh_reduce(seq)
    if not trace.is_graphical:
        raise ValueError(f"sequence {trace.steps[0]} is not graphical")
    return trace.residue
