"""Escalator enumeration of new tight T(n)-universal vectors.

Search nodes are sorted prefixes Q of a hypothetical new tight vector b.  For
a prefix with last entry L, every later entry of b is >= L, so some values are
*forced*: if the truant t of the current multiset cannot be written using the
multiset plus any number of extra entries in [L, t-1], then b must contain t
itself (an entry e > t contributes either 0 or more than t).  Repeating this
gives the closure F of Q, with Q <= F <= b.  Then:

* if a forced value is < L, no completion exists (dead branch);
* if F is tight, b = F is the only candidate in the subtree (b new, F tight,
  F <= b);
* otherwise the next entry c of b satisfies L <= c <= min(F - Q) and c <= t(F),
  since b - F must contain a value <= t(F).

Taking Q = (n) as the root, this reaches every new tight vector: a_1 = n is
forced by the minimum, and the run (n, ..., 2n-1) and the x_n / y_n dichotomy
appear automatically as forced values.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .polygonal import GonalSet
from .sieve import FormVector, add_variable, holes, sieve_bits, truant
from .universality import (
    NewnessReport,
    Verdict,
    is_new,
    necessary_conditions,
    run_vector,
    verify_tight,
    x_vector,
    y_vector,
)


class OutOfCatalog(LookupError):
    """The requested (family, n) is not classified by the known results."""


class DepthCapHit(RuntimeError):
    def __init__(self, frontier):
        super().__init__(f"search truncated at depth cap; {len(frontier)} open branch(es)")
        self.frontier = frontier


TABLE1 = [(3, 3, 4, 5), (3, 4, 4, 5, 6), (3, 4, 5, 5, 6)] + [
    (3, 4, 5, 6, a5) for a5 in range(6, 17) if a5 not in (14, 15)
]


def expected_results(S: GonalSet, n: int) -> list[FormVector]:
    """Known complete list of new tight T(n)-universal vectors for S, sorted."""
    S = S.canonical()
    m = S.m
    if S == GonalSet(3) and n == 3:
        vecs = [FormVector(v) for v in TABLE1]
    elif S == GonalSet(3) and n >= 4:
        vecs = [x_vector(n), y_vector(n)]
    elif S == GonalSet(5, True) and n >= 7:
        vecs = [FormVector(run_vector(n))]
    elif S == GonalSet(7, True) and n >= 11:
        vecs = [x_vector(n), y_vector(n)]
    elif S.generalized and m >= 8 and n >= 2 * m - 5:
        vecs = [x_vector(n), y_vector(n)]
    elif not S.generalized and n >= 2 * m + 3:
        vecs = [x_vector(n), y_vector(n)]
    else:
        raise OutOfCatalog(f"no classification on record for {S} with n={n}")
    return sorted(vecs)


def in_catalog(S: GonalSet, n: int) -> bool:
    try:
        expected_results(S, n)
    except OutOfCatalog:
        return False
    return True


@dataclass(frozen=True)
class Entry:
    vector: FormVector
    verdict: Verdict
    newness: NewnessReport

    def to_dict(self) -> dict:
        return {
            "vector": list(self.vector),
            "verdict": self.verdict.to_dict(),
            "newness": self.newness.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> Entry:
        return cls(FormVector(d["vector"]), Verdict.from_dict(d["verdict"]), NewnessReport.from_dict(d["newness"]))


@dataclass
class ClassificationReport:
    m: int
    generalized: bool
    n: int
    bound: int
    depth_cap: int
    vectors: list[Entry] = field(default_factory=list)
    frontier: list[FormVector] = field(default_factory=list)
    stats: dict[str, int] = field(default_factory=dict)
    classified_by_paper: bool = False

    @property
    def complete(self) -> bool:
        return not self.frontier

    @property
    def S(self) -> GonalSet:
        return GonalSet(self.m, self.generalized)

    def raise_if_truncated(self) -> None:
        if self.frontier:
            raise DepthCapHit(self.frontier)

    def vector_list(self) -> list[FormVector]:
        return [e.vector for e in self.vectors]

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "generalized": self.generalized,
            "n": self.n,
            "bound": self.bound,
            "depth_cap": self.depth_cap,
            "complete": self.complete,
            "classified_by_paper": self.classified_by_paper,
            "vectors": [e.to_dict() for e in self.vectors],
            "frontier": [list(v) for v in self.frontier],
            "stats": dict(sorted(self.stats.items())),
        }

    @classmethod
    def from_dict(cls, d: dict) -> ClassificationReport:
        return cls(
            m=d["m"],
            generalized=d["generalized"],
            n=d["n"],
            bound=d["bound"],
            depth_cap=d["depth_cap"],
            vectors=[Entry.from_dict(e) for e in d["vectors"]],
            frontier=[FormVector(v) for v in d["frontier"]],
            stats=dict(d["stats"]),
            classified_by_paper=d["classified_by_paper"],
        )


class _Search:
    def __init__(self, S: GonalSet, n: int, bound: int, depth_cap: int):
        self.S = S
        self.n = n
        self.bound = bound
        self.depth_cap = depth_cap
        self._truants: dict[FormVector, int | None] = {}

    def truant(self, a: FormVector) -> int | None:
        if a not in self._truants:
            self._truants[a] = truant(a, self.S, self.n, self.bound)
        return self._truants[a]

    def _reachable(self, F: FormVector, lo: int, t: int) -> bool:
        """Is t in V_S(F + any extra entries from [lo, t-1])?"""
        bits = sieve_bits(F, self.S, t)
        for d in range(lo, t):
            for _ in range(t // d):
                bits = add_variable(bits, d, self.S, t)
            if bits >> t & 1:
                return True
        return bool(bits >> t & 1)

    def closure(self, Q: FormVector) -> tuple[FormVector | None, int | None]:
        """(F, truant of F); F is None for a dead branch."""
        L = Q[-1]
        F = Q
        while True:
            t = self.truant(F)
            if t is None or self._reachable(F, L, t):
                return F, t
            if t < L:
                return None, None
            F = F.with_(t)

    def step(self, Q: FormVector, out: dict) -> list[FormVector]:
        """Process node Q; return its children."""
        out["nodes"] += 1
        F, t = self.closure(Q)
        if F is None:
            out["dead"] += 1
            return []
        if t is None:
            out["frontier" if len(F) > self.depth_cap else "candidates"].add(F)
            return []
        if len(F) >= self.depth_cap:
            out["frontier"].add(Q)
            return []
        pending = F.coefficients[len(Q):]  # F - Q, all >= last entry of Q
        cmax = min(pending[0], t) if pending else t
        return [Q.with_(c) for c in range(Q[-1], cmax + 1)]

    def expand(self, Q: FormVector, out: dict) -> None:
        stack = [Q]
        while stack:
            stack.extend(reversed(self.step(stack.pop(), out)))


def _empty_sink() -> dict:
    return {"nodes": 0, "dead": 0, "candidates": set(), "frontier": set()}


def enumerate_new(
    S: GonalSet,
    n: int,
    bound: int = 10**5,
    depth_cap: int | None = None,
    threads: int = 1,
) -> ClassificationReport:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if bound < 2 * n:
        raise ValueError(f"bound must be >= 2n = {2 * n}, got {bound}")
    depth_cap = 2 * n + 4 if depth_cap is None else depth_cap
    if depth_cap < n + 2:
        raise ValueError(f"depth_cap must be >= n+2 = {n + 2}, got {depth_cap}")

    search = _Search(S, n, bound, depth_cap)
    sink = _empty_sink()
    subtrees = search.step(FormVector([n]), sink)

    def run(Q: FormVector) -> dict:
        out = _empty_sink()
        search.expand(Q, out)
        return out

    if threads > 1 and len(subtrees) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, subtrees))
    else:
        results = [run(Q) for Q in subtrees]

    for r in results:
        sink["nodes"] += r["nodes"]
        sink["dead"] += r["dead"]
        sink["candidates"] |= r["candidates"]
        sink["frontier"] |= r["frontier"]

    entries = []
    not_new = 0
    for F in sorted(sink["candidates"]):
        newness = is_new(F, S, n, bound)
        if not newness.is_new:
            not_new += 1
            continue
        verdict = verify_tight(F, S, n, bound)
        assert verdict.ok and necessary_conditions(F, S, n).passed, F
        entries.append(Entry(F, verdict, newness))

    return ClassificationReport(
        m=S.m,
        generalized=S.generalized,
        n=n,
        bound=bound,
        depth_cap=depth_cap,
        vectors=entries,
        frontier=sorted(sink["frontier"]),
        stats={
            "nodes": sink["nodes"],
            "pruned_dead": sink["dead"],
            "tight_candidates": len(sink["candidates"]),
            "tight_not_new": not_new,
        },
        classified_by_paper=in_catalog(S, n),
    )


def diff_expected(report: ClassificationReport) -> tuple[list[FormVector], list[FormVector]]:
    """(missing from report, unexpected in report) relative to expected_results."""
    expected = set(expected_results(report.S, report.n))
    got = set(report.vector_list())
    return sorted(expected - got), sorted(got - expected)


def exhaustive_scan(
    S: GonalSet, n: int, bound: int, max_entry: int, max_len: int
) -> list[FormVector]:
    """New tight T(n)-universal vectors among all sorted vectors with entries in
    [1, max_entry] and length <= max_len, by brute force over every vector.

    Does not use the escalator; newness is decided against the scanned table.
    """
    tight: set[tuple[int, ...]] = set()
    window = holes(0, 1, bound)  # bits 1..bound

    def walk(prefix: tuple[int, ...], bits: int) -> None:
        if prefix and (bits & window) == holes(0, n, bound):
            tight.add(prefix)
        if len(prefix) == max_len:
            return
        for c in range(prefix[-1] if prefix else 1, max_entry + 1):
            walk(prefix + (c,), add_variable(bits, c, S, bound))

    walk((), 1)
    new = []
    for vec in tight:
        subs = {vec[:i] + vec[i + 1:] for i in range(len(vec))}
        if not any(s in tight for s in subs if s):
            new.append(FormVector(vec))
    return sorted(new)


def escalate_bound_stable(S: GonalSet, n: int, bound: int, factor: int = 10, **kw) -> bool:
    """Does re-running at factor * bound give the same vector list?"""
    a = enumerate_new(S, n, bound, **kw).vector_list()
    b = enumerate_new(S, n, bound * factor, **kw).vector_list()
    return a == b


__all__ = [
    "ClassificationReport",
    "DepthCapHit",
    "Entry",
    "OutOfCatalog",
    "TABLE1",
    "diff_expected",
    "enumerate_new",
    "escalate_bound_stable",
    "exhaustive_scan",
    "expected_results",
    "in_catalog",
]
