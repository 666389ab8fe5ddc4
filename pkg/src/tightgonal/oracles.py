"""Brute-force checks of the concrete number-theoretic facts behind the triangular classification.

Everything here works from explicit enumeration with numpy boolean tables and
does not call into the sieve module, so it can serve as an independent check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Callable, Sequence

import numpy as np

MAX_ORACLE_BOUND = 10**7


class HypothesisFailed(ValueError):
    """x^2 + k y^2 = p has no integer solution."""


class UnknownIdentity(KeyError):
    pass


def _term_values(d: int, mode: str, bound: int) -> np.ndarray:
    if mode == "plain":
        xs = np.arange(0, isqrt(bound // d) + 1, dtype=np.int64)
        return d * xs * xs
    if mode == "odd":
        xs = np.arange(1, isqrt(bound // d) + 1, 2, dtype=np.int64)
        return d * xs * xs
    if mode == "triangular":
        xs = np.arange(0, isqrt(2 * bound // d) + 2, dtype=np.int64)
        vals = d * (xs * (xs + 1) // 2)
        return vals[vals <= bound]
    raise ValueError(f"unknown mode {mode!r}")


def representable(coeffs: Sequence[int], mode: str, bound: int) -> np.ndarray:
    """Boolean table over [0, bound]: value = sum of one term per coefficient.

    mode "plain": d x^2 with x in Z; "odd": d x^2 with x odd; "triangular": d x(x+1)/2.
    """
    if not 0 <= bound <= MAX_ORACLE_BOUND:
        raise ValueError(f"bound must lie in [0, {MAX_ORACLE_BOUND}], got {bound}")
    table = np.zeros(bound + 1, dtype=bool)
    table[0] = True
    for d in coeffs:
        nxt = np.zeros_like(table)
        for v in _term_values(d, mode, bound):
            nxt[v:] |= table[: bound + 1 - v]
        table = nxt
    return table


@dataclass(frozen=True)
class ResidueClaim:
    """Every integer in [1, bound] satisfying `predicate` is represented by `coeffs` in `mode`."""

    name: str
    coeffs: tuple[int, ...]
    mode: str
    predicate: Callable[[int], bool]
    bound: int
    description: str = ""


def in_A(u: int) -> bool:
    return u % 3 == 1 or u % 9 in (3, 6)


def in_B(u: int) -> bool:
    return u % 8 == 2 and u >= 10


PRESETS: dict[str, tuple[tuple[int, ...], str, Callable[[int], bool], str]] = {
    "p113": ((1, 1, 3), "triangular", lambda g: g % 3 != 2, "p3(1,1,3) represents every g not = 2 mod 3"),
    "p223": ((2, 2, 3), "triangular", lambda g: g % 3 != 1, "p3(2,2,3) represents every g not = 1 mod 3"),
    "p334AB": ((3, 3, 4), "odd", lambda v: in_A(v) and in_B(v), "every v in A and B is 3x^2+3y^2+4z^2 with x,y,z odd"),
}


def preset_claim(name: str, bound: int) -> ResidueClaim:
    try:
        coeffs, mode, pred, desc = PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None
    return ResidueClaim(name, coeffs, mode, pred, bound, desc)


def check_residue_claim(claim: ResidueClaim) -> list[int]:
    """Integers in [0, bound] meeting the predicate but not represented."""
    table = representable(claim.coeffs, claim.mode, claim.bound)
    return [g for g in range(claim.bound + 1) if claim.predicate(g) and not table[g]]


def in_346_hypothesis(g: int) -> bool:
    return g > 0 and g % 8 == 5 and (g % 3 == 1 or g % 9 == 0)


def check_346(bound: int) -> list[int]:
    """g <= bound with g = 5 mod 8 and (g = 1 mod 3 or 9 | g) that are not 3x^2+4y^2+6z^2."""
    table = representable((3, 4, 6), "plain", bound)
    return [g for g in range(bound + 1) if in_346_hypothesis(g) and not table[g]]


def _is_odd_prime(p: int) -> bool:
    return p > 2 and p % 2 == 1 and all(p % q for q in range(3, isqrt(p) + 1, 2))


def _binary_solutions(k: int, limit: int):
    """(x, y, N) with x, y >= 0 and N = x^2 + k y^2 <= limit."""
    for y in range(isqrt(limit // k) + 1):
        for x in range(isqrt(limit - k * y * y) + 1):
            yield x, y, x * x + k * y * y


def _jones_hypothesis(k: int, p: int) -> None:
    if not _is_odd_prime(p):
        raise ValueError(f"p={p} is not an odd prime")
    if k < 1 or k % p == 0:
        raise ValueError(f"k={k} must be positive and not divisible by p={p}")
    if not any(N == p for _, _, N in _binary_solutions(k, p)):
        raise HypothesisFailed(f"x^2 + {k}y^2 = {p} has no integer solution")


def jones_check(k: int, p: int, N: int) -> bool:
    """If x^2 + k y^2 = N is solvable, is it solvable with gcd(x, y, p) = 1?"""
    _jones_hypothesis(k, p)
    sols = [(x, y) for x, y, v in _binary_solutions(k, N) if v == N]
    return not sols or any(gcd(gcd(x, y), p) == 1 for x, y in sols)


def jones_sweep(kmax: int, pmax: int, nmax: int) -> tuple[int, list[tuple[int, int, int]]]:
    """Check every valid (k <= kmax, p <= pmax) for all N in [1, nmax].

    Returns (number of (k, p) pairs checked, failures).
    """
    pairs = 0
    failures = []
    for k in range(1, kmax + 1):
        for p in range(3, pmax + 1, 2):
            try:
                _jones_hypothesis(k, p)
            except ValueError:
                continue
            pairs += 1
            solvable = np.zeros(nmax + 1, dtype=bool)
            coprime = np.zeros(nmax + 1, dtype=bool)
            for x, y, v in _binary_solutions(k, nmax):
                solvable[v] = True
                if gcd(gcd(x, y), p) == 1:
                    coprime[v] = True
            failures.extend((k, p, N) for N in range(1, nmax + 1) if solvable[N] and not coprime[N])
    return pairs, failures


def _sq(v):
    return v * v


IDENTITIES: dict[str, tuple[Callable, Callable]] = {
    # g = 0 mod 9 case: x1 = 3 x2, y1 = z1 - 3 y2
    "id-346-case9": (
        lambda x2, y2, z1: _sq(3 * x2) + 6 * _sq(z1 - 3 * y2) + 12 * _sq(z1),
        lambda x2, y2, z1: 3 * _sq(x2 + 2 * y2 - 2 * z1) + 4 * _sq(3 * y2) + 6 * _sq(x2 - y2 + z1),
    ),
    # g = 1 mod 3 case, rational form
    "id-346-case1": (
        lambda x, y, z: _sq(x) + 6 * _sq(y) + 12 * _sq(z),
        lambda x, y, z: 3 * _sq(Fraction(x - 2 * y - 4 * z, 3)) + 4 * _sq(y - z) + 6 * _sq(Fraction(x + y + 2 * z, 3)),
    ),
    "id-468": (
        lambda x1, y, z: 2 * _sq(y - 3 * x1) + 4 * _sq(y) + 24 * _sq(z),
        lambda x1, y, z: 4 * _sq(x1 + 2 * z) + 6 * _sq(x1 - y) + 8 * _sq(x1 - z),
    ),
}


def identity_check(name: str, trials: int = 10**4, seed: int = 0, span: int = 100) -> bool:
    """Evaluate both sides of a named identity at `trials` random integer points."""
    try:
        lhs, rhs = IDENTITIES[name]
    except KeyError:
        raise UnknownIdentity(name) from None
    rng = random.Random(seed)
    for _ in range(trials):
        pt = [rng.randint(-span, span) for _ in range(3)]
        if lhs(*pt) != rhs(*pt):
            return False
    return True


def x3_select(gp: int) -> int:
    """Odd d used to split g' = 8g + 15 for p3(3,3,4,5)."""
    if gp % 3 == 0 or gp % 9 in (2, 8):
        return 1
    if gp % 3 == 1:
        return 3
    if gp % 9 == 5:
        return 5
    raise AssertionError(f"no case for {gp}")


def y3_select(gp: int) -> int:
    """Odd d used to split g' = 8g + 18 for p3(3,4,5,6)."""
    if gp % 3 == 0 or gp % 9 == 5:
        return 1
    if gp % 3 == 1:
        return 3
    if gp % 9 == 8:
        return 5
    if gp % 9 == 2:
        return 7
    raise AssertionError(f"no case for {gp}")


def check_x3_table(bound: int) -> list[int]:
    """g' = 8g+15 <= bound, g >= 15, whose g' - 5d^2 falls outside A and B."""
    bad = []
    g = 15
    while 8 * g + 15 <= bound:
        gp = 8 * g + 15
        v = gp - 5 * x3_select(gp) ** 2
        if not (in_A(v) and in_B(v)):
            bad.append(gp)
        g += 1
    return bad


def check_y3_table(bound: int) -> list[int]:
    """g' = 8g+18 <= bound, g >= 30, whose g' - 5d^2 is not (1 mod 3 or 0 mod 9) and 5 mod 8."""
    bad = []
    g = 30
    while 8 * g + 18 <= bound:
        gp = 8 * g + 18
        v = gp - 5 * y3_select(gp) ** 2
        if not (v > 0 and (v % 3 == 1 or v % 9 == 0) and v % 8 == 5):
            bad.append(gp)
        g += 1
    return bad


def check_x5_shifts() -> list[int]:
    """Residues v mod 15 (v not 0, 5) with no listed p3(7,8) value a making g - a = 0 or 5 mod 15.

    Also fails if a listed value is not represented by p3(7,8) or is too large for g >= 236.
    """
    shifts = (31, 122, 48, 94, 80, 231, 7, 8, 24)
    table = representable((7, 8), "triangular", max(shifts))
    bad = [a for a in shifts if not table[a]]
    for v in range(15):
        if v in (0, 5):
            continue
        # g = 15u + v with g >= 236; need some a <= 236 with (v - a) mod 15 in {0, 5}
        if not any((v - a) % 15 in (0, 5) and a <= 236 for a in shifts):
            bad.append(v)
    return bad
