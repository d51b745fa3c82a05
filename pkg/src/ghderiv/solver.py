"""Exact linear solver for identity constraints on map triples.

Any identity kind compiles into a homogeneous linear system over the
3d^2 unknown matrix entries of (f, g, h).  Unknown order is fixed: the f
block, then g, then h; inside a block, column-major (all coordinates of
the image of e_0, then of e_1, ...).  Rows are emitted in the fixed order
(i, j, coordinate, template) over ordered basis pairs, followed by any
constraint rows.  With layout and pivot order fixed, the reduced echelon
form of the solution space is unique, so solution spaces can be compared
by comparing matrices.

Solving needs a field-like ring (Q or prime modulus): composite moduli
raise CompositeModulusUnsupported.  The identity checkers keep working
over composite moduli; only elimination is restricted.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import _linalg
from .ring import RingMismatch, Scalar
from .algebra import StructureAlgebra
from .linmap import LinMap, MapTriple
from . import identities
from .identities import IdentityKind

__all__ = [
    "Constraints",
    "LinearSystem",
    "SolutionSpace",
    "build_system",
    "nullspace",
    "solve",
    "verify_space",
    "space_equal",
    "space_contains",
    "space_member",
    "canonical_span",
    "project_gh_injectivity",
    "gh_collapse",
    "triple_to_vec",
    "vec_to_triple",
]


@dataclass(frozen=True)
class Constraints:
    """Optional extra linear conditions intersected with an identity system.

    ``force_g_eq_h`` ties the g and h blocks entrywise; ``force_f_zero``
    kills the whole f block; ``f_zero_basis`` kills f on the listed basis
    vectors only (columns of f).
    """

    force_g_eq_h: bool = False
    force_f_zero: bool = False
    f_zero_basis: tuple[int, ...] = ()

    def is_trivial(self) -> bool:
        return not (self.force_g_eq_h or self.force_f_zero or self.f_zero_basis)

    def describe(self) -> str:
        parts = []
        if self.force_g_eq_h:
            parts.append("g = h")
        if self.force_f_zero:
            parts.append("f = 0")
        if self.f_zero_basis:
            parts.append(f"f zero on basis {list(self.f_zero_basis)}")
        return ", ".join(parts) if parts else "none"


def _fcol(d: int, j: int, i: int) -> int:
    return j * d + i


def _gcol(d: int, j: int, i: int) -> int:
    return d * d + j * d + i


def _hcol(d: int, j: int, i: int) -> int:
    return 2 * d * d + j * d + i


def triple_to_vec(t: MapTriple) -> list[Scalar]:
    """Flatten a triple into the solver's unknown order."""
    d = t.alg.dim
    out = []
    for m in (t.f, t.g, t.h):
        for j in range(d):
            for i in range(d):
                out.append(m.mat[i][j])
    return out


def vec_to_triple(alg: StructureAlgebra, vec) -> MapTriple:
    d = alg.dim
    def block(off):
        return LinMap(
            alg,
            tuple(
                tuple(vec[off + j * d + i] for j in range(d)) for i in range(d)
            ),
        )
    return MapTriple(block(0), block(d * d), block(2 * d * d))


@dataclass(frozen=True)
class LinearSystem:
    """The compiled homogeneous system; rows are sparse {column: Scalar}."""

    alg: StructureAlgebra
    kind: IdentityKind
    constraints: Constraints
    rows: tuple
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def dense_rows(self):
        zero = self.alg.ring.zero()
        for row in self.rows:
            yield [row.get(c, zero) for c in range(self.ncols)]

    def to_doc(self) -> dict:
        return {
            "kind": self.kind.value,
            "constraints": self.constraints.describe(),
            "ncols": self.ncols,
            "rows": [[str(v) for v in row] for row in self.dense_rows()],
        }

    def evaluate(self, t: MapTriple) -> bool:
        """Substitution check: does the flattened triple kill every row?"""
        vec = triple_to_vec(t)
        zero = self.alg.ring.zero()
        for row in self.rows:
            acc = zero
            for c, v in row.items():
                acc = acc + v * vec[c]
            if not acc.is_zero():
                return False
        return True


def _emit_identity_rows(alg: StructureAlgebra, kind: IdentityKind):
    """Yield the identity rows in (i, j, coordinate, template) order.

    Each row states that one output coordinate of one template instance at
    one ordered basis pair vanishes.  The square identity emits its basis
    form on the diagonal and the polarized form for i < j only.
    """
    d = alg.dim
    ring = alg.ring
    zero = ring.zero()
    two = ring.scalar(2)
    table = alg._pair_table
    L = alg._left_action
    R = alg._right_action

    def add(row, col, val):
        cur = row.get(col, zero) + val
        if cur.is_zero():
            row.pop(col, None)
        else:
            row[col] = cur

    def f_term(row, pairs, m, sign=1):
        # f applied to a product with expansion ``pairs`` = [(k, c)].
        for k, c in pairs:
            add(row, _fcol(d, k, m), c if sign > 0 else -c)

    def action_term(row, action_row, colf, target, weight):
        # weight * (basis-multiplication of column ``target`` of map block).
        for l, c in action_row:
            add(row, colf(d, target, l), weight * c)

    K = IdentityKind
    for i in range(d):
        for j in range(d):
            jordan_pairs = None
            if kind in (K.JORDAN_LEFT_GH, K.JORDAN_DERIVATION):
                jordan_pairs = list(table[i][j]) + list(table[j][i])
            for m in range(d):
                if kind is K.DERIVATION:
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, R[j][m], _fcol, i, -ring.one())
                    action_term(row, L[i][m], _fcol, j, -ring.one())
                    yield row
                elif kind is K.JORDAN_DERIVATION:
                    if i == j:
                        row = {}
                        f_term(row, table[i][i], m)
                        action_term(row, R[i][m], _fcol, i, -ring.one())
                        action_term(row, L[i][m], _fcol, i, -ring.one())
                        yield row
                    elif i < j:
                        row = {}
                        f_term(row, jordan_pairs, m)
                        action_term(row, R[j][m], _fcol, i, -ring.one())
                        action_term(row, L[i][m], _fcol, j, -ring.one())
                        action_term(row, R[i][m], _fcol, j, -ring.one())
                        action_term(row, L[j][m], _fcol, i, -ring.one())
                        yield row
                elif kind is K.LEFT_DERIVATION:
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, L[i][m], _fcol, j, -ring.one())
                    action_term(row, L[j][m], _fcol, i, -ring.one())
                    yield row
                elif kind is K.GH_DERIVATION:
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, R[j][m], _gcol, i, -ring.one())
                    action_term(row, L[i][m], _hcol, j, -ring.one())
                    yield row
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, R[j][m], _hcol, i, -ring.one())
                    action_term(row, L[i][m], _gcol, j, -ring.one())
                    yield row
                elif kind is K.LEFT_GH:
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, L[i][m], _gcol, j, -ring.one())
                    action_term(row, L[j][m], _hcol, i, -ring.one())
                    yield row
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, L[i][m], _hcol, j, -ring.one())
                    action_term(row, L[j][m], _gcol, i, -ring.one())
                    yield row
                elif kind is K.JORDAN_LEFT_GH:
                    row = {}
                    f_term(row, jordan_pairs, m)
                    action_term(row, L[i][m], _gcol, j, -two)
                    action_term(row, L[j][m], _hcol, i, -two)
                    yield row
                elif kind is K.LEFT_CENTRALIZER:
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, R[j][m], _fcol, i, -ring.one())
                    yield row
                elif kind is K.RIGHT_CENTRALIZER:
                    row = {}
                    f_term(row, table[i][j], m)
                    action_term(row, L[i][m], _fcol, j, -ring.one())
                    yield row
                else:
                    raise ValueError(f"unhandled identity kind: {kind}")


def build_system(
    alg: StructureAlgebra,
    kind: IdentityKind,
    constraints: Constraints | None = None,
) -> LinearSystem:
    """Compile the identity (plus optional constraints) to a linear system."""
    cons = constraints if constraints is not None else Constraints()
    d = alg.dim
    one = alg.ring.one()
    rows = list(_emit_identity_rows(alg, kind))
    if cons.force_g_eq_h:
        for j in range(d):
            for i in range(d):
                rows.append({_gcol(d, j, i): one, _hcol(d, j, i): -one})
    if cons.force_f_zero:
        for j in range(d):
            for i in range(d):
                rows.append({_fcol(d, j, i): one})
    for c in cons.f_zero_basis:
        if not 0 <= c < d:
            raise ValueError(f"basis index {c} out of range")
        for m in range(d):
            rows.append({_fcol(d, c, m): one})
    return LinearSystem(
        alg=alg, kind=kind, constraints=cons, rows=tuple(rows), ncols=3 * d * d
    )


@dataclass(frozen=True)
class SolutionSpace:
    """The solution set of an identity system, in canonical form.

    ``canonical`` is the unique reduced echelon matrix spanning the space;
    ``basis`` holds the same rows reshaped into map triples.  ``rank`` is
    the rank of the defining system, kept so dim = 3d^2 - rank stays
    checkable later.
    """

    alg: StructureAlgebra
    kind: IdentityKind
    constraints: Constraints
    basis: tuple
    dim: int
    canonical: tuple
    rank: int

    def combination(self, coeffs) -> MapTriple:
        """The linear combination sum(coeffs[k] * basis[k])."""
        if len(coeffs) != self.dim:
            raise ValueError(f"need {self.dim} coefficients")
        t = MapTriple.zero(self.alg)
        for c, b in zip(coeffs, self.basis):
            t = t + b.scale(c)
        return t

    def to_doc(self) -> dict:
        return {
            "algebra_dim": self.alg.dim,
            "ring": self.alg.ring.to_doc(),
            "kind": self.kind.value,
            "constraints": self.constraints.describe(),
            "dim": self.dim,
            "basis": [
                {
                    "f": [[str(c) for c in row] for row in t.f.mat],
                    "g": [[str(c) for c in row] for row in t.g.mat],
                    "h": [[str(c) for c in row] for row in t.h.mat],
                }
                for t in self.basis
            ],
            "canonical": [[str(v) for v in row] for row in self.canonical],
        }


def _raw_rows(system: LinearSystem):
    for row in system.rows:
        raw = {c: v.value for c, v in row.items() if not v.is_zero()}
        if raw:
            yield raw


def nullspace(system: LinearSystem) -> SolutionSpace:
    """Exact solution space with a canonical reduced-echelon basis."""
    ring = system.alg.ring
    ops = _linalg.ops_for(ring)
    echelon, pivots = _linalg.rref(_raw_rows(system), ops)
    rank = len(echelon)
    ns = _linalg.nullspace(echelon, pivots, system.ncols, ops)
    canonical_raw, _ = _linalg.rref(ns, ops)
    zero = ring.zero()
    canonical = []
    basis = []
    for row in canonical_raw:
        vec = [zero] * system.ncols
        for c, v in row.items():
            vec[c] = Scalar(ring, v)
        canonical.append(tuple(vec))
        basis.append(vec_to_triple(system.alg, vec))
    return SolutionSpace(
        alg=system.alg,
        kind=system.kind,
        constraints=system.constraints,
        basis=tuple(basis),
        dim=len(basis),
        canonical=tuple(canonical),
        rank=rank,
    )


def solve(alg, kind, constraints=None) -> SolutionSpace:
    """Convenience: build the system and take its nullspace."""
    return nullspace(build_system(alg, kind, constraints))


# ---------------------------------------------------------------------------
# certificates and space predicates
# ---------------------------------------------------------------------------

_PERMUTATION_SEED = 9173


def _constraints_hold(space: SolutionSpace, t: MapTriple) -> bool:
    cons = space.constraints
    if cons.force_g_eq_h and t.g.mat != t.h.mat:
        return False
    if cons.force_f_zero and not t.f.is_zero():
        return False
    for c in cons.f_zero_basis:
        if any(not v.is_zero() for v in t.f.column(c)):
            return False
    return True


def verify_space(space: SolutionSpace) -> bool:
    """Three independent certificates for a computed solution space.

    1. substitution: every basis triple passes the identity checker (and
       the extra constraints) directly;
    2. rank-nullity: dim equals 3d^2 minus the rank of a freshly rebuilt
       and re-eliminated system;
    3. stability: re-eliminating under a seeded random row and column
       permutation reproduces the dimension.
    """
    system = build_system(space.alg, space.kind, space.constraints)
    for t in space.basis:
        if not identities.check(space.kind, t).holds:
            return False
        if not _constraints_hold(space, t):
            return False
        if not system.evaluate(t):
            return False
    ops = _linalg.ops_for(space.alg.ring)
    echelon, _ = _linalg.rref(_raw_rows(system), ops)
    if space.dim != system.ncols - len(echelon):
        return False
    if space.rank != len(echelon):
        return False
    rng = random.Random(_PERMUTATION_SEED)
    cols = list(range(system.ncols))
    rng.shuffle(cols)
    remap = {old: new for new, old in enumerate(cols)}
    raw = [{remap[c]: v for c, v in row.items()} for row in _raw_rows(system)]
    rng.shuffle(raw)
    echelon2, _ = _linalg.rref(raw, ops)
    return len(echelon2) == len(echelon)


def _require_comparable(s1: SolutionSpace, s2: SolutionSpace) -> None:
    if s1.alg.ring != s2.alg.ring:
        raise RingMismatch("solution spaces live over different rings")
    if s1.alg.dim != s2.alg.dim:
        raise ValueError("solution spaces live on algebras of different dimension")


def space_equal(s1: SolutionSpace, s2: SolutionSpace) -> bool:
    """Exact subspace equality via the unique canonical matrices."""
    _require_comparable(s1, s2)
    return s1.canonical == s2.canonical


def _canonical_echelon(space: SolutionSpace):
    echelon = []
    pivots = {}
    for row in space.canonical:
        raw = {c: v.value for c, v in enumerate(row) if not v.is_zero()}
        pivots[min(raw)] = len(echelon)
        echelon.append(raw)
    return echelon, pivots


def space_contains(s1: SolutionSpace, s2: SolutionSpace) -> bool:
    """True iff every generator of s2 eliminates to zero against s1."""
    _require_comparable(s1, s2)
    ops = _linalg.ops_for(s1.alg.ring)
    echelon, pivots = _canonical_echelon(s1)
    for row in s2.canonical:
        raw = {c: v.value for c, v in enumerate(row) if not v.is_zero()}
        if _linalg.residual(raw, echelon, pivots, ops):
            return False
    return True


def space_member(space: SolutionSpace, t: MapTriple) -> bool:
    """True iff the triple lies in the space (exact reduction to zero)."""
    if t.alg.ring != space.alg.ring:
        raise RingMismatch("triple and space live over different rings")
    if t.alg.dim != space.alg.dim:
        raise ValueError("triple and space live on algebras of different dimension")
    ops = _linalg.ops_for(space.alg.ring)
    echelon, pivots = _canonical_echelon(space)
    vec = triple_to_vec(t)
    raw = {c: v.value for c, v in enumerate(vec) if not v.is_zero()}
    return not _linalg.residual(raw, echelon, pivots, ops)


def canonical_span(alg: StructureAlgebra, triples) -> tuple:
    """Unique reduced-echelon matrix spanning the given triples.

    Output rows have the same shape as ``SolutionSpace.canonical``, so a
    closed-form family can be compared against a solved space directly.
    """
    ops = _linalg.ops_for(alg.ring)
    raw_rows = []
    for t in triples:
        if t.alg.ring != alg.ring:
            raise RingMismatch("triple lives over a different ring")
        vec = triple_to_vec(t)
        raw = {c: v.value for c, v in enumerate(vec) if not v.is_zero()}
        if raw:
            raw_rows.append(raw)
    echelon, _ = _linalg.rref(raw_rows, ops)
    ring = alg.ring
    zero = ring.zero()
    ncols = 3 * alg.dim ** 2
    out = []
    for row in echelon:
        vec = [zero] * ncols
        for c, v in row.items():
            vec[c] = Scalar(ring, v)
        out.append(tuple(vec))
    return tuple(out)


def project_gh_injectivity(space: SolutionSpace) -> bool:
    """Does (g, h) determine f on this space?

    Equivalent to: the projection of the space onto the (g, h) blocks has
    the same rank as the space itself, i.e. no nonzero solution has
    g = h = 0 but f != 0.
    """
    ops = _linalg.ops_for(space.alg.ring)
    d2 = space.alg.dim ** 2
    rows = []
    for row in space.canonical:
        raw = {
            c - d2: v.value
            for c, v in enumerate(row)
            if c >= d2 and not v.is_zero()
        }
        if raw:
            rows.append(raw)
    echelon, _ = _linalg.rref(rows, ops)
    return len(echelon) == space.dim


def gh_collapse(space: SolutionSpace) -> bool:
    """True iff g = h on every solution in the space."""
    d2 = space.alg.dim ** 2
    for row in space.canonical:
        for c in range(d2):
            if row[d2 + c] != row[2 * d2 + c]:
                return False
    return True
