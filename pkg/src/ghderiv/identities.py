"""Checkers for product identities on map triples.

Each identity kind fixes one or two equation templates relating f, g and h
through products in the algebra.  All templates are bilinear in the two
element arguments, so an identity holds on the whole algebra iff it holds
on every ordered basis pair; checkers scan pairs in lexicographic order
and report the first failure exactly as computed, never normalized.

The square identity D(a^2) = D(a)a + aD(a) is the one quadratic case; it
is checked on every basis vector together with its polarized form

    D(ab + ba) = D(a)b + aD(b) + D(b)a + bD(a)

on every pair i < j, which is exactly equivalent (expand D((a+b)^2)).
Nothing here divides by 2, so the checks are honest over rings with
2-torsion such as Z/4Z.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import AlgElement, StructureAlgebra, jordan_product
from .linmap import LinMap, MapTriple, left_mul_map

__all__ = [
    "IdentityKind",
    "CheckReport",
    "Counterexample",
    "PreconditionFailed",
    "check",
    "identity_sides",
    "sides_at_pair",
    "is_derivation",
    "is_jordan_derivation",
    "is_left_derivation",
    "is_gh_derivation",
    "is_left_gh_derivation",
    "is_jordan_left_gh_derivation",
    "is_left_centralizer",
    "is_right_centralizer",
    "LeftGHDecomposition",
    "decompose_left_gh",
    "audit_doubled_substitution",
]


class PreconditionFailed(ValueError):
    """The operation's precondition on its input triple does not hold."""


class IdentityKind(enum.Enum):
    """The supported identity classes; values double as CLI names."""

    DERIVATION = "derivation"
    JORDAN_DERIVATION = "jordan-derivation"
    LEFT_DERIVATION = "left-derivation"
    GH_DERIVATION = "gh-derivation"
    LEFT_GH = "left-gh"
    JORDAN_LEFT_GH = "jordan-left-gh"
    LEFT_CENTRALIZER = "left-centralizer"
    RIGHT_CENTRALIZER = "right-centralizer"

    @classmethod
    def from_name(cls, name: str) -> "IdentityKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown identity kind: {name!r}")


# Kinds whose templates only ever read the f component of a triple.
SINGLE_MAP_KINDS = frozenset(
    {
        IdentityKind.DERIVATION,
        IdentityKind.JORDAN_DERIVATION,
        IdentityKind.LEFT_DERIVATION,
        IdentityKind.LEFT_CENTRALIZER,
        IdentityKind.RIGHT_CENTRALIZER,
    }
)


@dataclass(frozen=True)
class Counterexample:
    """First failing ordered basis pair with both sides, exactly as computed."""

    i: int
    j: int
    lhs: AlgElement
    rhs: AlgElement

    def to_doc(self) -> dict:
        return {
            "i": self.i,
            "j": self.j,
            "lhs": [str(c) for c in self.lhs.coords],
            "rhs": [str(c) for c in self.rhs.coords],
        }


@dataclass(frozen=True)
class CheckReport:
    holds: bool
    counterexample: Counterexample | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_doc(self) -> dict:
        doc = {"holds": self.holds}
        if self.counterexample is not None:
            doc["counterexample"] = self.counterexample.to_doc()
        return doc


def identity_sides(
    kind: IdentityKind, t: MapTriple, a: AlgElement, b: AlgElement
) -> list[tuple[AlgElement, AlgElement]]:
    """All (lhs, rhs) instances of the identity at the ordered pair (a, b).

    One entry per equation template, in a fixed order.  For the square
    identity this is the polarized two-argument form; the checker applies
    the plain square form on the diagonal separately.
    """
    f, g, h = t.f, t.g, t.h
    if kind is IdentityKind.DERIVATION:
        return [(f(a * b), f(a) * b + a * f(b))]
    if kind is IdentityKind.JORDAN_DERIVATION:
        return [(f(jordan_product(a, b)), f(a) * b + a * f(b) + f(b) * a + b * f(a))]
    if kind is IdentityKind.LEFT_DERIVATION:
        return [(f(a * b), a * f(b) + b * f(a))]
    if kind is IdentityKind.GH_DERIVATION:
        ab = a * b
        return [
            (f(ab), g(a) * b + a * h(b)),
            (f(ab), h(a) * b + a * g(b)),
        ]
    if kind is IdentityKind.LEFT_GH:
        ab = a * b
        return [
            (f(ab), a * g(b) + b * h(a)),
            (f(ab), a * h(b) + b * g(a)),
        ]
    if kind is IdentityKind.JORDAN_LEFT_GH:
        # The factor 2 stays explicit: no division happens anywhere.
        return [(f(jordan_product(a, b)), (a * g(b) + b * h(a)).scale(2))]
    if kind is IdentityKind.LEFT_CENTRALIZER:
        return [(f(a * b), f(a) * b)]
    if kind is IdentityKind.RIGHT_CENTRALIZER:
        return [(f(a * b), a * f(b))]
    raise ValueError(f"unhandled identity kind: {kind}")


def _square_sides(t: MapTriple, a: AlgElement) -> tuple[AlgElement, AlgElement]:
    f = t.f
    return f(a * a), f(a) * a + a * f(a)


def sides_at_pair(
    kind: IdentityKind, t: MapTriple, i: int, j: int
) -> list[tuple[AlgElement, AlgElement]]:
    """The instances the checker evaluates at basis pair (i, j).

    Mirrors ``check`` exactly, including the square-identity convention:
    the plain square form on the diagonal, the polarized form for i < j,
    nothing for i > j.
    """
    alg = t.alg
    a, b = alg.basis_element(i), alg.basis_element(j)
    if kind is IdentityKind.JORDAN_DERIVATION:
        if i == j:
            return [_square_sides(t, a)]
        if i > j:
            return []
    return identity_sides(kind, t, a, b)


def check(kind: IdentityKind, t: MapTriple) -> CheckReport:
    """Scan all ordered basis pairs in lexicographic order; first failure wins."""
    alg = t.alg
    d = alg.dim
    for i in range(d):
        for j in range(d):
            for lhs, rhs in sides_at_pair(kind, t, i, j):
                if lhs.coords != rhs.coords:
                    return CheckReport(False, Counterexample(i, j, lhs, rhs))
    return CheckReport(True)


def _single(map_or_triple) -> MapTriple:
    if isinstance(map_or_triple, MapTriple):
        return map_or_triple
    if isinstance(map_or_triple, LinMap):
        return MapTriple(map_or_triple, map_or_triple, map_or_triple)
    raise TypeError(f"expected a map or triple, got {map_or_triple!r}")


def is_derivation(d: LinMap) -> CheckReport:
    """D(ab) = D(a)b + aD(b) on all ordered basis pairs."""
    return check(IdentityKind.DERIVATION, _single(d))


def is_jordan_derivation(d: LinMap) -> CheckReport:
    """D(a^2) = D(a)a + aD(a), via basis squares plus the polarized form."""
    return check(IdentityKind.JORDAN_DERIVATION, _single(d))


def is_left_derivation(d: LinMap) -> CheckReport:
    """D(ab) = aD(b) + bD(a) on all ordered basis pairs."""
    return check(IdentityKind.LEFT_DERIVATION, _single(d))


def is_gh_derivation(t: MapTriple) -> CheckReport:
    """f(ab) = g(a)b + ah(b) = h(a)b + ag(b), both equalities."""
    return check(IdentityKind.GH_DERIVATION, t)


def is_left_gh_derivation(t: MapTriple) -> CheckReport:
    """f(ab) = ag(b) + bh(a) = ah(b) + bg(a), both equalities."""
    return check(IdentityKind.LEFT_GH, t)


def is_jordan_left_gh_derivation(t: MapTriple) -> CheckReport:
    """f(ab + ba) = 2(ag(b) + bh(a)) with the factor 2 kept explicit."""
    return check(IdentityKind.JORDAN_LEFT_GH, t)


def is_left_centralizer(f: LinMap) -> CheckReport:
    """f(ab) = f(a)b on all ordered basis pairs."""
    return check(IdentityKind.LEFT_CENTRALIZER, _single(f))


def is_right_centralizer(f: LinMap) -> CheckReport:
    """f(ab) = af(b) on all ordered basis pairs."""
    return check(IdentityKind.RIGHT_CENTRALIZER, _single(f))


# ---------------------------------------------------------------------------
# structure of one-sided solutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LeftGHDecomposition:
    """f split as x -> lam * x + d(x) with lam = g(1) + h(1), d = f - L_lam."""

    lam: AlgElement
    lam_central: bool
    d: LinMap
    d_is_left_derivation: bool

    def to_doc(self) -> dict:
        return {
            "lambda": [str(c) for c in self.lam.coords],
            "lambda_central": self.lam_central,
            "d": [[str(c) for c in row] for row in self.d.mat],
            "d_is_left_derivation": self.d_is_left_derivation,
        }


def _is_central(x: AlgElement) -> bool:
    alg = x.alg
    for i in range(alg.dim):
        if alg.mul_vec_basis(x.coords, i) != alg.mul_basis_vec(i, x.coords):
            return False
    return True


def decompose_left_gh(t: MapTriple) -> LeftGHDecomposition:
    """Split a one-sided solution around the unity: lam = g(1) + h(1).

    Requires that the triple actually satisfies the one-sided identity
    (PreconditionFailed otherwise).  Centrality of lam and the left
    derivation property of the remainder d are reported as findings, not
    assumed: both can genuinely fail.
    """
    if not check(IdentityKind.LEFT_GH, t).holds:
        raise PreconditionFailed("triple does not satisfy the one-sided identity")
    one = t.alg.one()
    lam = t.g(one) + t.h(one)
    d = t.f - left_mul_map(lam)
    return LeftGHDecomposition(
        lam=lam,
        lam_central=_is_central(lam),
        d=d,
        d_is_left_derivation=is_left_derivation(d).holds,
    )


def audit_doubled_substitution(t: MapTriple) -> CheckReport:
    """Audit whether (f, g+h, g+h) satisfies the one-sided identity.

    The input must satisfy the two-sided identity (PreconditionFailed
    otherwise).  The substitution g, h -> g+h looks plausible but does
    not follow in general; this evaluates it and reports the outcome
    either way.  The result is a finding for inspection, never an
    assertion.
    """
    if not check(IdentityKind.JORDAN_LEFT_GH, t).holds:
        raise PreconditionFailed("triple does not satisfy the two-sided identity")
    s = t.g + t.h
    return check(IdentityKind.LEFT_GH, MapTriple(t.f, s, s))
