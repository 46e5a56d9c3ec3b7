"""Regions of the Shi arrangement, Pak-Stanley labels, and boundedness.

The arrangement consists of the hyperplanes x_i - x_j = k for
1 <= i < j <= n and k in {0, 1}.  A region (open chamber) is encoded by its
sign vector: one + or - per hyperplane, + meaning x_i - x_j > k.  Starting
from the base chamber x_1 > x_2 > ... > x_n with all pairwise differences
below 1, labeled (1, ..., 1), a breadth-first walk across walls assigns each
region its Pak-Stanley label: crossing x_i = x_j away from the base chamber
adds 1 to coordinate i, crossing x_i = x_j + 1 adds 1 to coordinate j.  The
labels enumerate the parking functions, with prime parking functions on the
regions that are bounded modulo the all-equal line x_1 = ... = x_n.

All geometry runs in exact rational arithmetic: no floats anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .core import is_parking_function, is_prime_parking_function
from .enumeration import all_words
from .errors import check_guard
from .feasibility import at_most, equal_to, find_point, less_than, satisfiable


class Hyperplane(NamedTuple):
    """The hyperplane x_i - x_j = k (1-based, i < j, k in {0, 1})."""

    i: int
    j: int
    k: int


@lru_cache(maxsize=None)
def hyperplanes(n):
    """All 2*C(n,2) hyperplanes, ordered lexicographically by (i, j, k)."""
    if n < 2:
        raise ValueError("the arrangement needs n >= 2")
    return tuple(
        Hyperplane(i, j, k)
        for i in range(1, n)
        for j in range(i + 1, n + 1)
        for k in (0, 1)
    )


@dataclass(frozen=True)
class SignVector:
    """A total assignment of sides, one per hyperplane of the arrangement.

    ``signs[h]`` is +1 when the region lies on the x_i - x_j > k side of the
    h-th hyperplane of ``hyperplanes(n)`` and -1 otherwise.
    """

    n: int
    signs: tuple

    def __post_init__(self):
        if len(self.signs) != self.n * (self.n - 1):
            raise ValueError(
                f"expected {self.n * (self.n - 1)} signs, got {len(self.signs)}"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    def as_string(self):
        return "".join("+" if s > 0 else "-" for s in self.signs)

    @classmethod
    def from_string(cls, n, text):
        if set(text) - {"+", "-"}:
            raise ValueError("sign string may contain only + and -")
        return cls(n, tuple(1 if c == "+" else -1 for c in text))

    def flipped(self, index):
        signs = list(self.signs)
        signs[index] = -signs[index]
        return SignVector(self.n, tuple(signs))


def _unit_diff(n, i, j):
    """Coefficient vector of x_i - x_j (1-based indices)."""
    coeffs = [0] * n
    coeffs[i - 1] = 1
    coeffs[j - 1] = -1
    return tuple(coeffs)


def _region_constraints(sv):
    """The strict inequalities carving the region out of R^n."""
    out = []
    for hp, s in zip(hyperplanes(sv.n), sv.signs):
        if s > 0:  # x_i - x_j > k
            out.append(less_than(_unit_diff(sv.n, hp.j, hp.i), -hp.k))
        else:  # x_i - x_j < k
            out.append(less_than(_unit_diff(sv.n, hp.i, hp.j), hp.k))
    return out


def is_feasible(sv):
    """Whether the sign vector's open polyhedron is nonempty (exact)."""
    return satisfiable(_region_constraints(sv), sv.n)


def feasible_point(sv):
    """An exact rational point inside the region, or None if it is empty."""
    return find_point(_region_constraints(sv), sv.n)


def satisfies(sv, point):
    """Directly check that a rational point lies inside the region."""
    for hp, s in zip(hyperplanes(sv.n), sv.signs):
        value = Fraction(point[hp.i - 1]) - Fraction(point[hp.j - 1]) - hp.k
        if (value <= 0) if s > 0 else (value >= 0):
            return False
    return True


def base_region(n):
    """The chamber x_1 > x_2 > ... > x_n with every x_i - x_j below 1.

    Equivalently: sign + on every x_i = x_j hyperplane and sign - on every
    x_i = x_j + 1 hyperplane.  It carries the label (1, ..., 1) and contains
    the point with x_i = (n - i)/n.
    """
    return SignVector(n, tuple(1 if hp.k == 0 else -1 for hp in hyperplanes(n)))


@dataclass(frozen=True)
class Region:
    """A chamber with its Pak-Stanley label and boundedness flag.

    ``bfs_depth`` equals the number of hyperplanes separating the region
    from the base chamber, which is also ``sum(label) - n``.
    """

    sign_vector: SignVector
    label: tuple
    bounded: bool
    bfs_depth: int


def _cone_constraints(sv):
    """Recession cone of the region: each strict face relaxed to >= 0."""
    out = []
    for hp, s in zip(hyperplanes(sv.n), sv.signs):
        if s > 0:  # d_i - d_j >= 0
            out.append(at_most(_unit_diff(sv.n, hp.j, hp.i), 0))
        else:
            out.append(at_most(_unit_diff(sv.n, hp.i, hp.j), 0))
    return out


def is_bounded(region):
    """Whether the region is bounded modulo the line x_1 = ... = x_n.

    Every region recedes along (1, ..., 1); it is bounded in the quotient
    exactly when its recession cone contains nothing else, i.e. when for
    every ordered pair (p, q) the cone admits no direction with
    d_p - d_q = 1.  Each pair is settled by an exact feasibility check.
    """
    sv = region.sign_vector if isinstance(region, Region) else region
    cone = _cone_constraints(sv)
    for p in range(1, sv.n + 1):
        for q in range(1, sv.n + 1):
            if p == q:
                continue
            gap = equal_to(_unit_diff(sv.n, p, q), 1)
            if satisfiable(cone + gap, sv.n):
                return False
    return True


def enumerate_regions(n, force=False):
    """All regions of the arrangement, labeled, by breadth-first wall crossing.

    Neighbors are the feasible single-sign flips of a region; a flip is a
    crossing of exactly one hyperplane, and on first discovery the new
    region receives its parent's label with one coordinate bumped (the rule
    in the module docstring).  Levels are expanded in lexicographic order of
    the sign strings, so the output order is reproducible.  Guarded to
    n <= 5 (1296 regions already take tens of thousands of exact
    feasibility calls).
    """
    check_guard("enumerate_regions", n, 2, 5, force)
    hps = hyperplanes(n)
    base = base_region(n)
    assert is_feasible(base)

    discovered = {base.signs: ((1,) * n, 0)}  # signs -> (label, depth)
    order = [base.signs]
    dead = set()  # infeasible sign tuples, cached across the walk
    level = [base]
    depth = 0
    while level:
        found = {}
        for sv in level:
            label, _ = discovered[sv.signs]
            for idx, hp in enumerate(hps):
                neighbor = sv.flipped(idx)
                key = neighbor.signs
                if key in discovered or key in found or key in dead:
                    continue
                if not is_feasible(neighbor):
                    dead.add(key)
                    continue
                # First discovery is always a crossing away from the base
                # chamber; a crossing toward it would contradict minimality
                # of the BFS depth.
                assert sv.signs[idx] == base.signs[idx]
                coord = (hp.i if hp.k == 0 else hp.j) - 1
                bumped = label[:coord] + (label[coord] + 1,) + label[coord + 1:]
                found[key] = (neighbor, bumped)
        depth += 1
        level = []
        for key in sorted(found, key=lambda signs: SignVector(n, signs).as_string()):
            neighbor, bumped = found[key]
            discovered[key] = (bumped, depth)
            order.append(key)
            level.append(neighbor)

    regions = []
    for signs in order:
        label, d = discovered[signs]
        sv = SignVector(n, signs)
        regions.append(
            Region(sign_vector=sv, label=label, bounded=is_bounded(sv), bfs_depth=d)
        )
    return regions


def verify_pak_stanley(n, force=False):
    """Check the labeling against the word predicates, exhaustively.

    True iff the labels are pairwise distinct, the label set is exactly the
    parking functions of length n, and the labels of the bounded regions are
    exactly the prime parking functions.
    """
    check_guard("verify_pak_stanley", n, 2, 5, force)
    regions = enumerate_regions(n, force=force)
    labels = [r.label for r in regions]
    if len(set(labels)) != len(labels):
        return False
    parking = {w for w in all_words(n, n) if is_parking_function(w)}
    if set(labels) != parking:
        return False
    prime = {w for w in all_words(n - 1, n) if is_prime_parking_function(w)}
    return {r.label for r in regions if r.bounded} == prime
