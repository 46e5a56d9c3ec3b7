"""Exact linear feasibility over the rationals via Fourier-Motzkin elimination.

Constraints are of the form ``coeffs . x < bound`` (strict) or ``<= bound``;
equalities enter as a pair of opposite non-strict constraints.  Everything is
done in ``fractions.Fraction``, so answers are exact and invariant under
scaling any constraint by a positive rational.  ``find_point`` recovers an
exact rational witness by back-substitution through the elimination stages.

The systems this library feeds in are tiny (difference constraints on at
most a handful of variables), so no effort is spent fighting the
combinatorial blowup general Fourier-Motzkin is famous for beyond keeping
only the tightest bound per normalized coefficient vector.
"""

from fractions import Fraction
from math import gcd
from typing import NamedTuple


class Constraint(NamedTuple):
    """coeffs . x < bound when strict, else coeffs . x <= bound."""

    coeffs: tuple
    bound: Fraction
    strict: bool


def less_than(coeffs, bound):
    return Constraint(tuple(Fraction(c) for c in coeffs), Fraction(bound), True)


def at_most(coeffs, bound):
    return Constraint(tuple(Fraction(c) for c in coeffs), Fraction(bound), False)


def equal_to(coeffs, bound):
    """An equality, encoded as the two opposite non-strict inequalities."""
    pos = at_most(coeffs, bound)
    neg = at_most((-c for c in coeffs), -Fraction(bound))
    return [pos, neg]


def _tighter(a, b):
    """Pick the tighter of two (bound, strict) pairs for one coeff vector."""
    if a[0] != b[0]:
        return a if a[0] < b[0] else b
    return a if a[1] else b


def _normalize(constraints):
    """Scale each constraint to a primitive integer coeff vector and dedupe.

    Returns None the moment a ground constraint (all-zero coefficients) is
    violated; otherwise the reduced constraint list.
    """
    best = {}
    for coeffs, bound, strict in constraints:
        if all(c == 0 for c in coeffs):
            if bound < 0 or (strict and bound == 0):
                return None
            continue
        denom_lcm = 1
        for c in coeffs:
            d = Fraction(c).denominator
            denom_lcm = denom_lcm * d // gcd(denom_lcm, d)
        ints = [int(c * denom_lcm) for c in coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        key = tuple(c // g for c in ints)
        scaled = (Fraction(bound) * denom_lcm / g, strict)
        best[key] = _tighter(best[key], scaled) if key in best else scaled
    return [
        Constraint(tuple(Fraction(c) for c in key), bound, strict)
        for key, (bound, strict) in best.items()
    ]


def _eliminate(constraints, var):
    """Project the system onto the coordinates other than `var`."""
    uppers, lowers, rest = [], [], []
    for con in constraints:
        c = con.coeffs[var]
        if c > 0:
            uppers.append(con)
        elif c < 0:
            lowers.append(con)
        else:
            rest.append(con)
    for lo in lowers:
        for up in uppers:
            a, b = -lo.coeffs[var], up.coeffs[var]
            coeffs = tuple(
                b * cl + a * cu for cl, cu in zip(lo.coeffs, up.coeffs)
            )
            rest.append(
                Constraint(
                    coeffs,
                    b * lo.bound + a * up.bound,
                    lo.strict or up.strict,
                )
            )
    return rest


def _stages(constraints, nvars):
    """Eliminate variables from the last down to the first.

    Returns the list of systems [over x_0..x_{nvars-1}, ..., over x_0], or
    None as soon as a contradiction shows up.
    """
    current = _normalize(constraints)
    if current is None:
        return None
    stages = [current]
    for var in range(nvars - 1, 0, -1):
        current = _normalize(_eliminate(current, var))
        if current is None:
            return None
        stages.append(current)
    if nvars >= 1 and _normalize(_eliminate(current, 0)) is None:
        return None
    stages.reverse()
    return stages


def satisfiable(constraints, nvars):
    """Exact feasibility of the open/closed polyhedron the constraints cut out."""
    return _stages(constraints, nvars) is not None


def _interval(constraints, var, point):
    """Bounds implied for x_var once x_0..x_{var-1} are fixed to `point`."""
    lo = hi = None
    for coeffs, bound, strict in constraints:
        a = coeffs[var]
        if a == 0:
            continue
        value = (bound - sum(c * p for c, p in zip(coeffs, point))) / a
        if a > 0:
            hi = (value, strict) if hi is None else _tighter(hi, (value, strict))
        elif (
            lo is None
            or value > lo[0]
            or (value == lo[0] and strict and not lo[1])
        ):
            lo = (value, strict)
    return lo, hi


def _pick(lo, hi):
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return hi[0] - 1
    if hi is None:
        return lo[0] + 1
    if lo[0] < hi[0]:
        return (lo[0] + hi[0]) / 2
    assert lo[0] == hi[0] and not lo[1] and not hi[1], "empty interval in witness"
    return lo[0]


def find_point(constraints, nvars):
    """An exact rational point satisfying the constraints, or None."""
    stages = _stages(constraints, nvars)
    if stages is None:
        return None
    point = []
    for var in range(nvars):
        lo, hi = _interval(stages[var], var, point)
        point.append(_pick(lo, hi))
    return tuple(point)
