"""The gcd analogue of the discrete Toda lattice.

A state holds the diagonal q and subdiagonal e of a lower bidiagonal
matrix over a PID.  One time step replaces min by gcd and addition by
multiplication in the ultradiscrete Toda recurrence:

    a_0 = q_0,   a_n = a_{n-1} * q_n / q'_{n-1}        (exact division)
    q'_n = gcd(e_n, a_n)  for n < N-1,   q'_{N-1} = canonical(a_{N-1})
    e'_n = e_n * q_{n+1} / q'_n

All divisions are exact for states reachable from a bidiagonal matrix,
and every output entry is a canonical associate.  Iterating the step
sorts the diagonal into the invariant factors of the matrix: evolution
stops once consecutive diagonal entries divide each other and each
diagonal entry divides the subdiagonal entry next to it.

The map also conserves N quantities: the gcd over products of l pairwise
non-adjacent entries of the interleaved word (q_0, e_0, q_1, ..., q_{N-1}),
which are exactly the determinantal divisors of the bidiagonal matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ring import (
    Ring,
    RingValue,
    canonical,
    divides,
    exact_div,
    gcd,
)
from .ud_toda import UdTodaState


class IterationLimitError(RuntimeError):
    """The step cap was reached before the termination test fired.

    Carries the trace walked so far, seed included, for diagnostics.
    """

    def __init__(self, limit: int, trace: tuple["GcdTodaState", ...]):
        super().__init__(
            f"no termination within {limit} steps; "
            f"last diagonal {[str(v) for v in trace[-1].diagonal]}"
        )
        self.limit = limit
        self.trace = trace


@dataclass(frozen=True, slots=True)
class GcdTodaState:
    """Diagonal and subdiagonal of a lower bidiagonal matrix."""

    diagonal: tuple[RingValue, ...]
    subdiagonal: tuple[RingValue, ...]

    def __post_init__(self):
        object.__setattr__(self, "diagonal", tuple(self.diagonal))
        object.__setattr__(self, "subdiagonal", tuple(self.subdiagonal))
        if not self.diagonal:
            raise ValueError("a state needs at least one diagonal entry")
        if len(self.subdiagonal) != len(self.diagonal) - 1:
            raise ValueError(
                f"{len(self.diagonal)} diagonal entries need "
                f"{len(self.diagonal) - 1} subdiagonal ones, "
                f"got {len(self.subdiagonal)}"
            )
        for v in self.diagonal + self.subdiagonal:
            if not isinstance(v, RingValue):
                raise TypeError(f"entries must be ring values, got {v!r}")
        ring = self.diagonal[0].ring
        for v in self.diagonal + self.subdiagonal:
            if v.ring != ring:
                raise ValueError("entries must all live in the same ring")

    @property
    def n(self) -> int:
        return len(self.diagonal)

    @property
    def ring(self) -> Ring:
        return self.diagonal[0].ring


@dataclass(frozen=True, slots=True)
class TodaRun:
    """Outcome of iterating gcd_step to termination."""

    factors: tuple[RingValue, ...]
    trace: tuple[GcdTodaState, ...]

    @property
    def iterations(self) -> int:
        return len(self.trace) - 1

    @property
    def final(self) -> GcdTodaState:
        return self.trace[-1]


def gcd_step(state: GcdTodaState) -> GcdTodaState:
    """Advance one time step; raises ExactDivisionError off the reachable set."""
    q, e = state.diagonal, state.subdiagonal
    n = state.n
    new_q: list[RingValue] = []
    a = q[0]
    for i in range(n):
        if i:
            a = exact_div(a * q[i], new_q[i - 1])
        new_q.append(gcd(e[i], a) if i < n - 1 else canonical(a))
    new_e = tuple(
        canonical(exact_div(e[i] * q[i + 1], new_q[i])) for i in range(n - 1)
    )
    return GcdTodaState(tuple(new_q), new_e)


def terminated(state: GcdTodaState) -> bool:
    """Whether the diagonal divides along itself and into the subdiagonal."""
    q, e = state.diagonal, state.subdiagonal
    for i in range(state.n - 1):
        if not divides(q[i], q[i + 1]):
            return False
        if not divides(q[i], e[i]):
            return False
    return True


def default_max_iters(state: GcdTodaState) -> int:
    """Step cap scaling with the seed: N times the total entry size."""
    ring = state.ring
    total = sum(
        ring.size(v.payload) for v in state.diagonal + state.subdiagonal
    )
    return max(64, state.n * total)


def _check_interior(state: GcdTodaState) -> None:
    for v in state.diagonal[:-1]:
        if v.is_zero():
            raise ValueError(
                "interior diagonal entries must be nonzero; only the last "
                "may vanish"
            )


def run(state: GcdTodaState, max_iters: int | None = None) -> TodaRun:
    """Iterate gcd_step until the termination test fires.

    At least one step is always taken, so the returned diagonal is made of
    canonical associates even when the seed already passes the test.  The
    trace contains the seed followed by every state visited.
    """
    _check_interior(state)
    if max_iters is None:
        max_iters = default_max_iters(state)
    if max_iters < 1:
        raise ValueError("max_iters must be at least 1")
    trace = [state]
    cur = state
    for _ in range(max_iters):
        cur = gcd_step(cur)
        trace.append(cur)
        if terminated(cur):
            return TodaRun(factors=cur.diagonal, trace=tuple(trace))
    raise IterationLimitError(max_iters, tuple(trace))


def interleaved(state: GcdTodaState) -> tuple[RingValue, ...]:
    """The word (q_0, e_0, q_1, e_1, ..., q_{N-1})."""
    out = [state.diagonal[0]]
    for i in range(state.n - 1):
        out.append(state.subdiagonal[i])
        out.append(state.diagonal[i + 1])
    return tuple(out)


def determinantal_divisors(state: GcdTodaState) -> tuple[RingValue, ...]:
    """Gcd over products of l pairwise non-adjacent word entries, l=1..N.

    This is the gcd/product analogue of the min-plus conserved quantities
    and is invariant under gcd_step; entry l-1 equals the gcd of all l by l
    minors of the bidiagonal matrix.  A None slot marks an infeasible
    choice, the absorbing element for gcd.
    """
    ring = state.ring
    word = interleaved(state)
    n = state.n
    base: list[RingValue | None] = [ring.one] + [None] * n
    dp_prev2 = base[:]
    dp_prev = base[:]
    for w in word:
        cur: list[RingValue | None] = [ring.one]
        for l in range(1, n + 1):
            best = dp_prev[l]
            if dp_prev2[l - 1] is not None:
                prod = dp_prev2[l - 1] * w
                best = prod if best is None else gcd(best, prod)
            cur.append(best)
        dp_prev2, dp_prev = dp_prev, cur
    return tuple(canonical(v) for v in dp_prev[1:])


def exponent_lift(state: GcdTodaState, base: RingValue) -> UdTodaState:
    """Valuations of all entries at a prime base, as a min-plus state.

    Every entry must be a unit times a power of base; taking valuations
    turns gcd into min and multiplication into addition, so gcd_step on
    the state commutes with ud_step on the lift.
    """
    if base.is_zero() or base.is_unit():
        raise ValueError("base must be a nonzero non-unit")

    def lift(v: RingValue) -> int:
        if v.is_zero():
            raise ValueError("zero entry has no finite valuation")
        k = 0
        while divides(base, v):
            v = exact_div(v, base)
            k += 1
        if not v.is_unit():
            raise ValueError(
                f"entry {v} is not a unit multiple of a power of {base}"
            )
        return k

    return UdTodaState(
        tuple(lift(v) for v in state.diagonal),
        tuple(lift(v) for v in state.subdiagonal),
    )
