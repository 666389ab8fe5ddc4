from tightgonal.polygonal import GonalSet, gonal_value


def brute_values(coeffs, S: GonalSet, bound: int) -> set[int]:
    """Sums of one term a_i * P_m(x_i) per coefficient, by direct enumeration of indices."""
    xs = range(-bound - 1, bound + 2) if S.generalized else range(bound + 2)
    terms = {gonal_value(S.m, x) for x in xs if gonal_value(S.m, x) <= bound}
    acc = {0}
    for c in coeffs:
        acc = {a + c * t for a in acc for t in terms if a + c * t <= bound}
    return acc
