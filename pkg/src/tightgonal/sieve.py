"""Exact bounded representation sets V_S(a) for weighted sums of gonal numbers.

A representable set on [0, B] is held as a Python int used as a bitset: bit g
is set iff g = a_1 s_1 + ... + a_k s_k with every s_i in S.  Each coefficient
contributes exactly one term (possibly 0), so the set is built one variable at
a time by OR-ing shifted copies of the partial table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .polygonal import GonalSet, check_bound, index_of, values_up_to


@dataclass(frozen=True, order=True)
class FormVector:
    """Coefficient vector a = (a_1 <= ... <= a_k), compared as a multiset."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients: Iterable[int]):
        coeffs = tuple(sorted(int(c) for c in coefficients))
        if not coeffs:
            raise ValueError("a form vector needs at least one coefficient")
        if coeffs[0] < 1:
            raise ValueError(f"coefficients must be positive, got {coeffs}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def parse(cls, text: str) -> FormVector:
        """Parse '3,3,4,5' (also accepts '3^2,4,5' for repeated entries)."""
        out: list[int] = []
        for part in text.replace(" ", "").split(","):
            if not part:
                continue
            if "^" in part:
                base, exp = part.split("^")
                out.extend([int(base)] * int(exp))
            else:
                out.append(int(part))
        return cls(out)

    @classmethod
    def from_powers(cls, powers: Iterable[tuple[int, int]]) -> FormVector:
        """Build n_1^{e_1} n_2^{e_2} ...: each value repeated its exponent times."""
        return cls([v for v, e in powers for _ in range(e)])

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]

    @property
    def min(self) -> int:
        return self.coefficients[0]

    def count(self, value: int) -> int:
        return self.coefficients.count(value)

    def issubvector(self, other: FormVector) -> bool:
        """self is a sub-multiset of other (the subsequence order on sorted vectors)."""
        it = iter(other.coefficients)
        return all(any(c == d for d in it) for c in self.coefficients)

    def without(self, index: int) -> FormVector | None:
        rest = self.coefficients[:index] + self.coefficients[index + 1:]
        return FormVector(rest) if rest else None

    def with_(self, *extra: int) -> FormVector:
        return FormVector(self.coefficients + extra)

    def one_deletions(self) -> list[tuple[int, FormVector | None]]:
        """(index, vector) for each distinct one-element removal, first index of each value."""
        seen: set[int] = set()
        out = []
        for i, c in enumerate(self.coefficients):
            if c not in seen:
                seen.add(c)
                out.append((i, self.without(i)))
        return out

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.coefficients)) + ")"


@dataclass(frozen=True)
class Witness:
    """Indices x_i with sum a_i P_m(x_i) = value."""

    assignment: tuple[int, ...]
    value: int

    def evaluate(self, a: FormVector, S: GonalSet) -> int:
        from .polygonal import gonal_value

        return sum(c * gonal_value(S.m, x) for c, x in zip(a, self.assignment))

    def check(self, a: FormVector, S: GonalSet) -> bool:
        if len(self.assignment) != len(a):
            return False
        if not S.generalized and any(x < 0 for x in self.assignment):
            return False
        return self.evaluate(a, S) == self.value


@lru_cache(maxsize=256)
def _gonal_values(S: GonalSet, bound: int) -> tuple[int, ...]:
    return tuple(values_up_to(S, bound))


def _mask(bound: int) -> int:
    return (1 << (bound + 1)) - 1


def add_variable(bits: int, coefficient: int, S: GonalSet, bound: int) -> int:
    """Table for V_S(b, c) from the table for V_S(b): OR of bits << c*s over s in S."""
    acc = 0
    for s in _gonal_values(S, bound // coefficient):
        acc |= bits << (coefficient * s)
    return acc & _mask(bound)


def sieve_bits(coeffs: Sequence[int], S: GonalSet, bound: int, start: int = 1) -> int:
    """Bitset of V_S(coeffs) on [0, bound]; `start` seeds the table (1 = {0})."""
    check_bound("bound", bound)
    bits = start & _mask(bound)
    for c in coeffs:
        bits = add_variable(bits, c, S, bound)
    return bits


def holes(bits: int, lo: int, hi: int) -> int:
    """Bitset of values in [lo, hi] missing from `bits`."""
    if hi < lo:
        return 0
    window = _mask(hi) ^ ((1 << lo) - 1)
    return ~bits & window


def bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def lowest_bit(bits: int) -> int | None:
    if not bits:
        return None
    return (bits & -bits).bit_length() - 1


@dataclass(frozen=True)
class ReprSet:
    """V_S(a) on [0, bound] with optional witnesses."""

    coeffs: FormVector
    S: GonalSet
    bound: int
    bits: int
    witnesses: dict[int, Witness] | None = None

    def __contains__(self, value: int) -> bool:
        return 0 <= value <= self.bound and bool(self.bits >> value & 1)

    @property
    def members(self) -> list[int]:
        return bits_to_list(self.bits)

    def missing(self, lo: int = 0, hi: int | None = None) -> list[int]:
        hi = self.bound if hi is None else min(hi, self.bound)
        return bits_to_list(holes(self.bits, lo, hi))

    def issubset(self, other: ReprSet) -> bool:
        lo = min(self.bound, other.bound)
        return (self.bits & _mask(lo)) & ~other.bits == 0

    def __len__(self) -> int:
        return self.bits.bit_count()


def _suffix_tables(a: FormVector, S: GonalSet, bound: int) -> list[int]:
    """suffix[i] = V_S(a_i, ..., a_k) on [0, bound]; suffix[k] = {0}."""
    k = len(a)
    suffix = [0] * (k + 1)
    suffix[k] = 1
    for i in range(k - 1, -1, -1):
        suffix[i] = add_variable(suffix[i + 1], a[i], S, bound)
    return suffix


def _greedy_witness(a: FormVector, S: GonalSet, target: int, suffix: list[int]) -> Witness | None:
    # variables left to right, candidate values ascending; suffix tables make this backtrack-free
    if not suffix[0] >> target & 1:
        return None
    rest = target
    xs = []
    for i, c in enumerate(a):
        for s in _gonal_values(S, rest // c):
            r = rest - c * s
            if suffix[i + 1] >> r & 1:
                xs.append(index_of(S, s))
                rest = r
                break
    assert rest == 0
    return Witness(tuple(xs), target)


def repr_set(a: FormVector, S: GonalSet, bound: int, want_witnesses: bool = False) -> ReprSet:
    check_bound("bound", bound)
    if not want_witnesses:
        return ReprSet(a, S, bound, sieve_bits(a, S, bound))
    suffix = _suffix_tables(a, S, bound)
    wit = {g: _greedy_witness(a, S, g, suffix) for g in bits_to_list(suffix[0])}
    return ReprSet(a, S, bound, suffix[0], wit)


def find_witness(a: FormVector, S: GonalSet, target: int) -> Witness | None:
    """Lexicographically smallest (s_1, ..., s_k) with sum a_i s_i = target, as indices."""
    if target < 0:
        return None
    check_bound("target", target)
    return _greedy_witness(a, S, target, _suffix_tables(a, S, target))


def truant(a: FormVector, S: GonalSet, n: int, bound: int) -> int | None:
    """Smallest t in [n, bound] not represented by a (0 excluded), or None."""
    if bound < n:
        raise ValueError(f"bound {bound} < n {n}")
    check_bound("bound", bound)
    # a missing value below the cap is final, so try cheap small tables first
    b = min(bound, max(4 * n, 1024))
    while True:
        t = lowest_bit(holes(sieve_bits(a, S, b), n, b))
        if t is not None or b == bound:
            return t
        b = min(bound, 8 * b)


def odd_square_repr(d: Sequence[int], u: int) -> tuple[bool, tuple[int, ...] | None]:
    """Is u = sum d_i x_i^2 with every x_i odd?  Exhaustive; returns the smallest positive witness."""
    d = list(d)
    k = len(d)
    # each remaining term contributes at least d_j (x_j = +-1)
    tail = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        tail[i] = tail[i + 1] + d[i]

    xs: list[int] = []

    def search(i: int, rest: int) -> bool:
        if i == k:
            return rest == 0
        if rest < tail[i]:
            return False
        x = 1
        while d[i] * x * x + tail[i + 1] <= rest:
            xs.append(x)
            if search(i + 1, rest - d[i] * x * x):
                return True
            xs.pop()
            x += 2
        return False

    if search(0, u):
        return True, tuple(xs)
    return False, None


def shift_equiv(a: FormVector, g: int) -> bool:
    """g is represented by the triangular form p_3(a) iff 8g + sum(a) is a sum of a_i x_i^2, x_i odd."""
    direct = find_witness(a, GonalSet(3), g) is not None
    lifted, _ = odd_square_repr(a.coefficients, 8 * g + sum(a))
    return direct == lifted
