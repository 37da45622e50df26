"""Finite-dimensional representations built from a small constructor language.

Descriptors::

    natural | adjoint | dual(D) | sum(D, D) | tensor(D, D)

``direct_sum`` is accepted as a synonym for ``sum``.  Every representation is
checked to be a homomorphism when it is built.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Sequence

from .algebra import LieAlgebra, derived_algebra
from .errors import InternalInvariantViolation, NaturalRequiresMatrixMode, ValidationError
from .linalg import ZERO, QMatrix, Vector, vector
from .matrix_jcd import is_nilpotent_matrix, is_semisimple_matrix


@dataclass(frozen=True)
class Representation:
    source: LieAlgebra
    target_dim: int
    images: tuple
    descriptor: str

    def apply(self, x: Sequence) -> QMatrix:
        if len(x) != self.source.dim:
            raise ValidationError(f"element has {len(x)} coordinates, algebra has dimension {self.source.dim}")
        n = self.target_dim
        acc = [[ZERO] * n for _ in range(n)]
        for c, m in zip(x, self.images):
            if c:
                for r, row in enumerate(m):
                    for col, a in enumerate(row):
                        if a:
                            acc[r][col] += c * a
        return QMatrix._raw(tuple(tuple(r) for r in acc), n)

    def is_homomorphism(self) -> bool:
        g = self.source
        c = g.structure_constants
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                if self.images[i].commutator(self.images[j]) != self.apply(c[i][j]):
                    return False
        return True


def apply(rep: Representation, x: Sequence) -> QMatrix:
    return rep.apply(x)


def _make(g: LieAlgebra, images: Sequence[QMatrix], descriptor: str, check: bool = True) -> Representation:
    images = tuple(images)
    n = images[0].rows if images else 0
    rep = Representation(g, n, images, descriptor)
    if check and not rep.is_homomorphism():
        raise InternalInvariantViolation(f"{descriptor} is not a homomorphism")
    return rep


def natural(g: LieAlgebra) -> Representation:
    if not g.is_matrix_mode:
        raise NaturalRequiresMatrixMode("the natural representation needs a matrix realization")
    return _make(g, g.realization, "natural")


def adjoint(g: LieAlgebra) -> Representation:
    return _make(g, [g.ad_basis(i) for i in range(g.dim)], "adjoint")


def dual(rep: Representation) -> Representation:
    return _make(rep.source, [-m.transpose() for m in rep.images], f"dual({rep.descriptor})")


def direct_sum(r1: Representation, r2: Representation) -> Representation:
    _same_source(r1, r2)
    images = [QMatrix.block_diag(a, b) for a, b in zip(r1.images, r2.images)]
    return _make(r1.source, images, f"sum({r1.descriptor},{r2.descriptor})")


def tensor(r1: Representation, r2: Representation) -> Representation:
    _same_source(r1, r2)
    i1, i2 = QMatrix.identity(r1.target_dim), QMatrix.identity(r2.target_dim)
    images = [a.kron(i2) + i1.kron(b) for a, b in zip(r1.images, r2.images)]
    return _make(r1.source, images, f"tensor({r1.descriptor},{r2.descriptor})")


def from_functional(g: LieAlgebra, functional: Sequence, matrix: QMatrix, descriptor: str) -> Representation:
    """``y ↦ λ(y) · matrix``; a homomorphism whenever λ vanishes on ``[g, g]``."""
    lam = vector(functional)
    return _make(g, [matrix.scale(c) for c in lam], descriptor)


def _same_source(r1: Representation, r2: Representation) -> None:
    if r1.source is not r2.source:
        raise ValidationError("representations of different algebras")


_TOKEN = re.compile(r"\s*([A-Za-z_]+|\(|\)|,)")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValidationError(f"cannot parse representation descriptor {text!r} at {pos}")
        out.append(m.group(1))
        pos = m.end()
    return out


def build_representation(g: LieAlgebra, descriptor: str) -> Representation:
    tokens = _tokenize(descriptor)
    pos = 0

    def parse() -> Representation:
        nonlocal pos
        if pos >= len(tokens):
            raise ValidationError(f"truncated descriptor {descriptor!r}")
        name = tokens[pos]
        pos += 1
        if name == "natural":
            return natural(g)
        if name == "adjoint":
            return adjoint(g)
        args = []
        if pos >= len(tokens) or tokens[pos] != "(":
            raise ValidationError(f"unknown representation {name!r} in {descriptor!r}")
        pos += 1
        args.append(parse())
        while pos < len(tokens) and tokens[pos] == ",":
            pos += 1
            args.append(parse())
        if pos >= len(tokens) or tokens[pos] != ")":
            raise ValidationError(f"missing ')' in {descriptor!r}")
        pos += 1
        if name == "dual" and len(args) == 1:
            return dual(args[0])
        if name in ("sum", "direct_sum") and len(args) == 2:
            return direct_sum(*args)
        if name == "tensor" and len(args) == 2:
            return tensor(*args)
        raise ValidationError(f"bad constructor {name!r} with {len(args)} argument(s)")

    rep = parse()
    if pos != len(tokens):
        raise ValidationError(f"trailing input in descriptor {descriptor!r}")
    return rep


def representation_family(g: LieAlgebra, max_dim: int = 16) -> list[Representation]:
    """Constructor trees of depth at most 2 with target dimension at most ``max_dim``."""
    leaves = []
    if g.is_matrix_mode:
        leaves.append(natural(g))
    leaves.append(adjoint(g))
    family = list(leaves)
    family += [dual(r) for r in leaves]
    for r1, r2 in itertools.combinations_with_replacement(leaves, 2):
        if r1.target_dim + r2.target_dim <= max_dim:
            family.append(direct_sum(r1, r2))
        if r1.target_dim * r2.target_dim <= max_dim:
            family.append(tensor(r1, r2))
    return [r for r in family if r.target_dim <= max_dim]


def check_compatibility(rep: Representation, x: Sequence, S: Sequence, N: Sequence) -> bool:
    """Whether ``rep(x) = rep(S) + rep(N)`` is the Jordan-Chevalley decomposition of ``rep(x)``."""
    px, ps, pn = rep.apply(x), rep.apply(S), rep.apply(N)
    if ps + pn != px:
        return False
    if ps @ pn != pn @ ps:
        return False
    return is_nilpotent_matrix(pn) and is_semisimple_matrix(ps)


@dataclass(frozen=True)
class NecessityWitness:
    """Two representations showing ``x`` has no abstract decomposition.

    ``character`` is the 1-dimensional representation ``y ↦ (λ(y))``, where
    ``λ`` kills ``[g, g]`` and ``λ(x) = 1``.  The other two send ``y`` to
    ``λ(y)`` times a fixed 2×2 matrix.  Under ``scalar`` every image is semisimple,
    forcing ``λ(n) = 0``; under ``nilpotent`` every image is nilpotent,
    forcing ``λ(s) = 0``; yet ``λ(s) + λ(n) = λ(x) = 1``.
    """

    functional: Vector
    character: Representation
    scalar: Representation
    nilpotent: Representation


def necessity_witness(g: LieAlgebra, x: Sequence) -> NecessityWitness:
    x = vector(x)
    d = derived_algebra(g).subspace
    if x in d:
        raise ValidationError("element lies in [g, g]; no obstruction exists")
    # some row of the annihilator of d is nonzero at x; rescale it to λ(x) = 1
    lam = next(row for row in d.annihilator() if sum(a * b for a, b in zip(row, x)))
    scale = sum(a * b for a, b in zip(lam, x))
    lam = tuple(a / scale for a in lam)
    char = from_functional(g, lam, QMatrix.identity(1), "character")
    scalar = from_functional(g, lam, QMatrix.identity(2), "character(identity)")
    nilp = from_functional(g, lam, QMatrix.unit(2, 0, 1), "character(E12)")
    return NecessityWitness(lam, char, scalar, nilp)
