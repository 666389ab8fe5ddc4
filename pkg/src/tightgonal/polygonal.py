"""m-gonal and generalized m-gonal number sets."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

# Bounds are materialized as bit tables; refuse anything that would not fit in memory.
MAX_BOUND = 10**9


class LimitError(ValueError):
    """An input exceeds the supported arithmetic or memory range."""

    def __init__(self, param: str, value: int, limit: int):
        super().__init__(f"{param}={value} exceeds the supported limit {limit}")
        self.param = param
        self.value = value
        self.limit = limit


def check_bound(name: str, value: int, limit: int = MAX_BOUND) -> int:
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    if value > limit:
        raise LimitError(name, value, limit)
    return value


def gonal_value(m: int, x: int) -> int:
    """P_m(x) = ((m-2)x^2 - (m-4)x) / 2."""
    if m < 3:
        raise ValueError(f"m must be >= 3, got {m}")
    num = (m - 2) * x * x - (m - 4) * x
    # (m-2)x^2 - (m-4)x = (m-2)x(x-1) + 2x, so the numerator is even; it is >= 0 for m >= 3
    assert num >= 0 and num % 2 == 0
    return num // 2


@dataclass(frozen=True)
class GonalSet:
    """The set of m-gonal numbers (x >= 0) or generalized m-gonal numbers (x in Z)."""

    m: int
    generalized: bool = False

    def __post_init__(self):
        if self.m < 3:
            raise ValueError(f"m must be >= 3, got {self.m}")

    @property
    def name(self) -> str:
        return f"{'GP' if self.generalized else 'P'}{self.m}"

    def canonical(self) -> GonalSet:
        """Smallest description of the same value set (GP3 = GP6 = P3, GP4 = P4)."""
        if self.m in (3, 6) and (self.generalized or self.m == 3):
            return GonalSet(3, False)
        if self.m == 4:
            return GonalSet(4, False)
        return self

    def same_values(self, other: GonalSet) -> bool:
        return self.canonical() == other.canonical()

    def values_up_to(self, bound: int) -> list[int]:
        return values_up_to(self, bound)

    def is_member(self, value: int) -> tuple[bool, int | None]:
        return is_member(self, value)

    def __contains__(self, value: int) -> bool:
        return is_member(self, value)[0]

    def __str__(self) -> str:
        return self.name


def _indices(m: int, generalized: bool, bound: int):
    x = 0
    while gonal_value(m, x) <= bound:
        yield x
        x += 1
    if generalized:
        x = -1
        while gonal_value(m, x) <= bound:
            yield x
            x -= 1


def values_up_to(S: GonalSet, bound: int) -> list[int]:
    """Members of S that are <= bound, ascending and deduplicated."""
    check_bound("bound", bound)
    return sorted({gonal_value(S.m, x) for x in _indices(S.m, S.generalized, bound)})


def index_of(S: GonalSet, value: int) -> int | None:
    """An index x with P_m(x) = value, preferring the smallest |x| and then x >= 0."""
    if value < 0:
        return None
    m = S.m
    # (m-2)x^2 - (m-4)x - 2N = 0  =>  x = ((m-4) +- sqrt(D)) / (2(m-2))
    disc = (m - 4) ** 2 + 8 * (m - 2) * value
    r = isqrt(disc)
    if r * r != disc:
        return None
    den = 2 * (m - 2)
    found = [num // den for num in ((m - 4) + r, (m - 4) - r) if num % den == 0]
    if not S.generalized:
        found = [x for x in found if x >= 0]
    if not found:
        return None
    return min(found, key=lambda x: (abs(x), x < 0))


def is_member(S: GonalSet, value: int) -> tuple[bool, int | None]:
    x = index_of(S, value)
    return (x is not None), x
