"""Univariate polynomials over Q and the minimal polynomial of a matrix."""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import ValidationError
from .linalg import ONE, ZERO, QMatrix, as_matrix, rational, unit_vector


class QPoly:
    """Polynomial with rational coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [rational(x) for x in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs: list) -> "QPoly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        p = object.__new__(cls)
        p.coeffs = tuple(coeffs)
        return p

    @classmethod
    def monomial(cls, degree: int, c=1) -> "QPoly":
        return cls._raw([ZERO] * degree + [rational(c)])

    @classmethod
    def constant(cls, c) -> "QPoly":
        return cls._raw([rational(c)])

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self) -> "QPoly":
        if not self.coeffs:
            return self
        inv = ONE / self.coeffs[-1]
        return QPoly._raw([c * inv for c in self.coeffs])

    def __add__(self, other: "QPoly") -> "QPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return QPoly._raw(out)

    def __neg__(self) -> "QPoly":
        return QPoly._raw([-c for c in self.coeffs])

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other) -> "QPoly":
        if not isinstance(other, QPoly):
            c = rational(other)
            return QPoly._raw([c * a for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return QPoly()
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return QPoly._raw(out)

    __rmul__ = __mul__

    def __divmod__(self, other: "QPoly") -> tuple["QPoly", "QPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.coeffs
        dd = len(d) - 1
        inv = ONE / d[-1]
        if len(rem) <= dd:
            return QPoly(), QPoly._raw(rem)
        quot = [ZERO] * (len(rem) - dd)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k]
            if c:
                q = c * inv
                quot[k - dd] = q
                for i, y in enumerate(d):
                    if y:
                        rem[k - dd + i] -= q * y
        return QPoly._raw(quot), QPoly._raw(rem[:dd])

    def __floordiv__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "QPoly") -> "QPoly":
        return divmod(self, other)[1]

    def derivative(self) -> "QPoly":
        return QPoly._raw([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Evaluate at a scalar or, with Horner's rule, at a square matrix."""
        if isinstance(x, QMatrix):
            return evaluate_at_matrix(self, x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose_mod(self, inner: "QPoly", modulus: "QPoly") -> "QPoly":
        """``self(inner) mod modulus``."""
        acc = QPoly()
        for c in reversed(self.coeffs):
            acc = (acc * inner + QPoly._raw([c])) % modulus
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"QPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c) + ("*" if mono else "")
            terms.append(coef + mono)
        return " + ".join(terms).replace("+ -", "- ")


T = QPoly._raw([ZERO, ONE])


def evaluate_at_matrix(p: QPoly, a: QMatrix) -> QMatrix:
    a = as_matrix(a)
    if not a.is_square:
        raise ValidationError("polynomial evaluation needs a square matrix")
    n = a.rows
    acc = QMatrix.zeros(n)
    ident = QMatrix.identity(n)
    for c in reversed(p.coeffs):
        acc = acc @ a
        if c:
            acc = acc + ident.scale(c)
    return acc


def poly_gcd(a: QPoly, b: QPoly) -> QPoly:
    """Monic greatest common divisor (zero only if both inputs are zero)."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_xgcd(a: QPoly, b: QPoly) -> tuple[QPoly, QPoly, QPoly]:
    """Return ``(g, u, v)`` with ``u·a + v·b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = QPoly([1]), QPoly()
    t0, t1 = QPoly(), QPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    inv = ONE / r0.leading
    return r0 * inv, s0 * inv, t0 * inv


def poly_lcm(a: QPoly, b: QPoly) -> QPoly:
    if a.is_zero() or b.is_zero():
        return QPoly()
    return (a * b // poly_gcd(a, b)).monic()


def squarefree_part(p: QPoly) -> QPoly:
    """Monic ``p / gcd(p, p')``: same roots as ``p``, each simple."""
    if p.is_zero():
        raise ValidationError("squarefree part of the zero polynomial")
    if p.degree == 0:
        return QPoly([1])
    g = poly_gcd(p, p.derivative())
    return (p // g).monic()


def is_squarefree(p: QPoly) -> bool:
    return poly_gcd(p, p.derivative()).degree == 0


class _Echelon:
    """Incremental echelon basis that remembers how each row was produced.

    Each stored row is a combination of the vectors fed in; ``tags`` carry
    that combination as a polynomial so dependencies can be read back.
    """

    def __init__(self, n: int):
        self.n = n
        self.rows: list[tuple[int, list, QPoly]] = []

    def reduce(self, v: list, tag: QPoly) -> tuple[list, QPoly]:
        for p, row, rtag in self.rows:
            c = v[p]
            if c:
                for k in range(self.n):
                    if row[k]:
                        v[k] -= c * row[k]
                tag = tag - rtag * c
        return v, tag

    def add(self, v: list, tag: QPoly) -> None:
        p = next(i for i, x in enumerate(v) if x)
        inv = ONE / v[p]
        self.rows.append((p, [x * inv for x in v], tag * inv))


def _vector_min_poly(a: QMatrix, v: Sequence) -> tuple[QPoly, list[list]]:
    """Minimal polynomial of ``a`` relative to ``v`` and the Krylov vectors used."""
    ech = _Echelon(a.rows)
    krylov = []
    w = list(v)
    degree = 0
    while True:
        krylov.append(list(w))
        red, tag = ech.reduce(list(w), QPoly.monomial(degree))
        if not any(red):
            return tag.monic(), krylov[:-1]
        ech.add(red, tag)
        w = list(a.apply(w))
        degree += 1


def minimal_polynomial(a: QMatrix) -> QPoly:
    """Monic generator of ``{p : p(a) = 0}`` via Krylov sequences.

    For each standard basis vector not already in the span of earlier Krylov
    vectors, compute its local minimal polynomial; the answer is their lcm.
    A vector inside the sum of earlier cyclic subspaces is annihilated by the
    running lcm, so skipping it is safe.
    """
    a = as_matrix(a)
    if not a.is_square:
        raise ValidationError("minimal polynomial of a non-square matrix")
    n = a.rows
    if n == 0:
        return QPoly([1])
    span = _Echelon(n)
    result = QPoly([1])
    for i in range(n):
        e = list(unit_vector(n, i))
        red, _ = span.reduce(list(e), QPoly())
        if not any(red):
            continue
        p, vectors = _vector_min_poly(a, e)
        result = poly_lcm(result, p)
        for w in vectors:
            red, _ = span.reduce(list(w), QPoly())
            if any(red):
                span.add(red, QPoly())
        if result.degree == n:
            break
    return result
