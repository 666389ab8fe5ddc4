"""Tight T(n)-universality: necessary conditions, bounded verdicts, certificates, newness.

T(n) is the set of integers >= n.  A vector a is tight T(n)-universal with
respect to S when the nonzero values it represents are exactly T(n).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .polygonal import GonalSet, check_bound
from .sieve import FormVector, holes, lowest_bit, sieve_bits, truant

DEFAULT_BOUND = 10**5
DEFAULT_BASE_BOUND = 10**6


class HypothesisNotVerified(ValueError):
    """The base vector 1^e1 2^e2 3^e3 misses a value in [0, B0]."""


class RangeViolation(ValueError):
    """n < 2*e3 + 3."""


def run_vector(n: int) -> tuple[int, ...]:
    """(n, n+1, ..., 2n-1)."""
    return tuple(range(n, 2 * n))


def x_vector(n: int) -> FormVector:
    """(n, n, n+1, ..., 2n-1)."""
    return FormVector((n,) + run_vector(n))


def y_vector(n: int) -> FormVector:
    """(n, n+1, ..., 2n)."""
    return FormVector(run_vector(n) + (2 * n,))


def lemma123_vector(e1: int, e2: int, n: int) -> FormVector:
    return FormVector.from_powers([(n, e1)] + [(v, 1) for v in range(n + 1, 2 * n)] + [(2 * n, e2)])


def lemma123_base(e1: int, e2: int, e3: int) -> FormVector:
    return FormVector.from_powers([(1, e1), (2, e2), (3, e3)])


@dataclass(frozen=True)
class NecessaryReport:
    passed: bool
    patterns: tuple[str, ...] = ()
    reason: str | None = None


def necessary_conditions(a: FormVector, S: GonalSet, n: int) -> NecessaryReport:
    """Shape every tight T(n)-universal vector must have.

    a_1 = n and (n, ..., 2n-1) is a sub-multiset of a; if 2 is not in S,
    a also contains (n, n, n+1, ..., 2n-1) or (n, n+1, ..., 2n).
    """
    if a.min != n:
        return NecessaryReport(False, reason=f"minimum {a.min} != {n}")
    for v in run_vector(n):
        if v not in a.coefficients:
            return NecessaryReport(False, reason=f"{v} missing from ({n},...,{2 * n - 1})")
    matched = tuple(
        name for name, vec in (("x_n", x_vector(n)), ("y_n", y_vector(n))) if vec.issubvector(a)
    )
    if 2 in S:
        return NecessaryReport(True, matched or ("prefix",))
    if not matched:
        return NecessaryReport(False, reason=f"neither x_{n} nor y_{n} embeds (2 not in {S})")
    return NecessaryReport(True, matched)


class Status(str, enum.Enum):
    VERIFIED = "VerifiedUpTo"
    FAILED = "FailedAt"
    CERTIFIED = "Certified"


@dataclass(frozen=True)
class Certificate:
    kind: str  # "BoundedCheck" or "Lemma123"
    m: int
    generalized: bool
    n: int
    vector: FormVector
    bound: int | None = None
    e1: int | None = None
    e2: int | None = None
    e3: int | None = None
    base_bound: int | None = None

    @property
    def S(self) -> GonalSet:
        return GonalSet(self.m, self.generalized)

    def to_dict(self) -> dict:
        d = {
            "kind": self.kind,
            "m": self.m,
            "generalized": self.generalized,
            "n": self.n,
            "vector": list(self.vector),
        }
        if self.kind == "Lemma123":
            d.update(e1=self.e1, e2=self.e2, e3=self.e3, base_bound=self.base_bound)
        else:
            d["bound"] = self.bound
        return d

    @classmethod
    def from_dict(cls, d: dict) -> Certificate:
        keys = ("bound", "e1", "e2", "e3", "base_bound")
        return cls(
            kind=d["kind"],
            m=d["m"],
            generalized=d["generalized"],
            n=d["n"],
            vector=FormVector(d["vector"]),
            **{k: d.get(k) for k in keys},
        )


def validate_certificate(cert: Certificate) -> bool:
    """Re-check a certificate from scratch."""
    S = cert.S
    if cert.kind == "BoundedCheck":
        return _bounded_failure(cert.vector, S, cert.n, cert.bound) is None
    if cert.kind != "Lemma123":
        return False
    e1, e2, e3 = cert.e1, cert.e2, cert.e3
    if e1 is None or e1 < 1 or e2 is None or e2 < 0 or e3 is None or e3 < 0:
        return False
    if cert.n < 2 * e3 + 3:
        return False
    if cert.vector != lemma123_vector(e1, e2, cert.n):
        return False
    base = lemma123_base(e1, e2, e3)
    return holes(sieve_bits(base, S, cert.base_bound), 0, cert.base_bound) == 0


def construct_lemma123(
    e1: int, e2: int, e3: int, S: GonalSet, n: int, base_bound: int = DEFAULT_BASE_BOUND
) -> tuple[FormVector, Certificate]:
    """Vector n^e1 (n+1) ... (2n-1) (2n)^e2, certified by universality of 1^e1 2^e2 3^e3 on [0, B0]."""
    if e1 < 1 or e2 < 0 or e3 < 0:
        raise ValueError(f"need e1 >= 1 and e2, e3 >= 0, got {(e1, e2, e3)}")
    if n < 2 * e3 + 3:
        raise RangeViolation(f"n={n} < 2*e3+3={2 * e3 + 3}")
    check_bound("base_bound", base_bound)
    base = lemma123_base(e1, e2, e3)
    t = truant(base, S, 1, base_bound) if base_bound >= 1 else None
    if t is not None:
        raise HypothesisNotVerified(f"{base} misses {t} with respect to {S}")
    vec = lemma123_vector(e1, e2, n)
    cert = Certificate("Lemma123", S.m, S.generalized, n, vec, e1=e1, e2=e2, e3=e3, base_bound=base_bound)
    return vec, cert


def lemma123_shape(a: FormVector, n: int) -> tuple[int, int] | None:
    """(e1, e2) if a = n^e1 (n+1) ... (2n-1) (2n)^e2, else None."""
    e1, e2 = a.count(n), a.count(2 * n)
    if e1 < 1 or len(a) != e1 + e2 + (n - 1):
        return None
    if a != lemma123_vector(e1, e2, n):
        return None
    return e1, e2


def find_lemma123_certificate(
    a: FormVector, S: GonalSet, n: int, base_bound: int = DEFAULT_BASE_BOUND
) -> Certificate | None:
    """Smallest e3 whose base hypothesis holds up to base_bound, if a has the right shape."""
    shape = lemma123_shape(a, n)
    if shape is None:
        return None
    e1, e2 = shape
    for e3 in range(0, (n - 3) // 2 + 1):
        try:
            return construct_lemma123(e1, e2, e3, S, n, base_bound)[1]
        except HypothesisNotVerified:
            continue
    return None


@dataclass(frozen=True)
class Verdict:
    coeffs: FormVector
    m: int
    generalized: bool
    n: int
    status: Status
    bound: int
    truant: int | None = None
    below_min: bool = False
    certificate: Certificate | None = None

    @property
    def ok(self) -> bool:
        return self.status is not Status.FAILED

    def to_dict(self) -> dict:
        return {
            "coeffs": list(self.coeffs),
            "m": self.m,
            "generalized": self.generalized,
            "n": self.n,
            "status": self.status.value,
            "bound": self.bound,
            "truant": self.truant,
            "below_min": self.below_min,
            "certificate": self.certificate.to_dict() if self.certificate else None,
        }

    @classmethod
    def from_dict(cls, d: dict) -> Verdict:
        cert = d.get("certificate")
        return cls(
            coeffs=FormVector(d["coeffs"]),
            m=d["m"],
            generalized=d["generalized"],
            n=d["n"],
            status=Status(d["status"]),
            bound=d["bound"],
            truant=d.get("truant"),
            below_min=d.get("below_min", False),
            certificate=Certificate.from_dict(cert) if cert else None,
        )


def _bounded_failure(a: FormVector, S: GonalSet, n: int, bound: int) -> tuple[int, bool] | None:
    """(smallest violating value, whether it lies below n), or None on success."""
    if n > 1:
        below = lowest_bit(sieve_bits(a, S, n - 1) & ~1)
        if below is not None:
            return below, True
    t = truant(a, S, n, bound)
    return None if t is None else (t, False)


def verify_tight(
    a: FormVector,
    S: GonalSet,
    n: int,
    bound: int = DEFAULT_BOUND,
    certify: bool = False,
    base_bound: int = DEFAULT_BASE_BOUND,
) -> Verdict:
    """Check V'_S(a) = T(n) on [1, bound]."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if bound < 2 * n:
        raise ValueError(f"bound must be >= 2n = {2 * n}, got {bound}")
    failure = _bounded_failure(a, S, n, bound)
    if failure is not None:
        t, below = failure
        return Verdict(a, S.m, S.generalized, n, Status.FAILED, bound, truant=t, below_min=below)
    cert = find_lemma123_certificate(a, S, n, base_bound) if certify else None
    if cert is not None:
        return Verdict(a, S.m, S.generalized, n, Status.CERTIFIED, bound, certificate=cert)
    return Verdict(a, S.m, S.generalized, n, Status.VERIFIED, bound)


@dataclass(frozen=True)
class Removal:
    index: int
    value: int
    evidence: str  # "truant", "min_changed" or "still_tight"
    truant: int | None = None

    def to_dict(self) -> dict:
        return {"index": self.index, "value": self.value, "evidence": self.evidence, "truant": self.truant}

    @classmethod
    def from_dict(cls, d: dict) -> Removal:
        return cls(d["index"], d["value"], d["evidence"], d.get("truant"))


@dataclass(frozen=True)
class NewnessReport:
    is_new: bool
    removals: tuple[Removal, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"is_new": self.is_new, "removals": [r.to_dict() for r in self.removals]}

    @classmethod
    def from_dict(cls, d: dict) -> NewnessReport:
        return cls(d["is_new"], tuple(Removal.from_dict(r) for r in d["removals"]))


def is_new(a: FormVector, S: GonalSet, n: int, bound: int = DEFAULT_BOUND) -> NewnessReport:
    """Does every one-element removal from a fail to be tight T(n)-universal up to bound?

    One-deletions suffice: every proper sub-multiset sits inside one of them.
    """
    by_value: dict[int, tuple[str, int | None]] = {}
    removals = []
    for i, c in enumerate(a):
        if c not in by_value:
            b = a.without(i)
            if b is None or b.min != n:
                # n itself is no longer represented
                by_value[c] = ("min_changed", n)
            else:
                t = truant(b, S, n, bound)
                by_value[c] = ("still_tight", None) if t is None else ("truant", t)
        kind, t = by_value[c]
        removals.append(Removal(i, c, kind, t))
    return NewnessReport(all(r.evidence != "still_tight" for r in removals), tuple(removals))
