"""Acceptance checks.

Each test prints one ``PASS``/``FAIL`` line (visible even under output
capture) and then asserts.  All comparisons are exact rational equality.
Shared decompositions are computed once per session in ``corpus``.
"""

import functools
import json
import random
from fractions import Fraction

import pytest

from liejcd import fixtures
from liejcd.cli import CommandRequest, run
from liejcd.decompose import Decomposer, abstract_jordan_chevalley
from liejcd.errors import NotInDerivedAlgebra
from liejcd.levi import check_levi_invariants, levi_decomposition
from liejcd.linalg import QMatrix, Subspace, kernel, linear_combination, subspace_sum
from liejcd.matrix_jcd import matrix_jordan_chevalley
from liejcd.poly import is_squarefree, minimal_polynomial
from liejcd.reps import adjoint, check_compatibility, natural, necessity_witness, representation_family
from liejcd.triangular import is_ut_diagonalizable, ut_diagonalize

from conftest import random_invertible
from jcd_blocks import random_block_pair

SAMPLES_PER_FIXTURE = 200
TRANSLATES_PER_FIXTURE = 50
SEED = 20261017
MATRIX_FIXTURES = [n for n in fixtures.NAMES if fixtures.load(n).is_matrix_mode]


def criterion(number, title):
    """Print a PASS/FAIL line for the wrapped check, then let the outcome propagate."""

    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            capsys = kwargs["capsys"]
            try:
                detail = fn(*args, **kwargs)
            except BaseException as exc:
                with capsys.disabled():
                    print(f"\nFAIL [{number:>2}] {title}: {type(exc).__name__}: {exc}")
                raise
            with capsys.disabled():
                print(f"\nPASS [{number:>2}] {title}" + (f" ({detail})" if detail else ""))

        return inner

    return wrap


# -- independent oracles ---------------------------------------------------

def nilpotent_by_powers(m: QMatrix) -> bool:
    """m^k = 0 for k = size, by plain repeated multiplication."""
    p = QMatrix.identity(m.rows)
    for _ in range(m.rows):
        p = p @ m
    return p.is_zero()


def semisimple_by_minpoly(m: QMatrix) -> bool:
    return is_squarefree(minimal_polynomial(m))


def random_rational(rng, bound=4):
    return Fraction(rng.randint(-bound, bound), rng.choice((1, 1, 1, 2, 3, 5)))


def random_in(sub: Subspace, rng) -> tuple:
    return linear_combination([random_rational(rng) for _ in sub.basis], sub.basis, sub.ambient_dim)


def sample_elements(dec: Decomposer, rng, count):
    """Random elements of [g, g]: half dense rational, half sparse integer (hits nilpotent cases)."""
    d = dec.levi.derived.subspace
    out = []
    for k in range(count):
        if k % 2 or not d.dim:
            out.append(random_in(d, rng))
        else:
            coeffs = [rng.choice((0, 0, 0, 1, -1, 2)) for _ in d.basis]
            out.append(linear_combination(coeffs, d.basis, d.ambient_dim))
    return out


class FixtureRun:
    def __init__(self, name, rng):
        self.name = name
        self.algebra = g = fixtures.load(name)
        self.decomposer = Decomposer(g)
        self.family = representation_family(g, max_dim=16)
        self.elements = sample_elements(self.decomposer, rng, SAMPLES_PER_FIXTURE)
        d = self.decomposer.levi.derived.subspace
        self.elements += [x for x in fixtures.elements(name).values() if x in d]
        self.pairs = [self.decomposer.decompose(x) for x in self.elements]


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(SEED)
    return {name: FixtureRun(name, rng) for name in fixtures.NAMES}


# -- criteria ----------------------------------------------------------------

@criterion(1, "every sampled x in [g,g] decomposes with exact invariants")
def test_decomposition_exists_with_invariants(corpus, capsys):
    total = 0
    for run_ in corpus.values():
        g = run_.algebra
        d = run_.decomposer.levi.derived.subspace
        ad = adjoint(g)
        for p in run_.pairs:
            x, s, n = p.element, p.semisimple, p.nilpotent
            assert tuple(a + b for a, b in zip(s, n)) == x
            assert not any(g.bracket(s, n)), (run_.name, x)
            assert s in d and n in d
            assert semisimple_by_minpoly(ad.apply(s)) and nilpotent_by_powers(ad.apply(n))
            if g.is_matrix_mode:
                assert semisimple_by_minpoly(g.realize(s)) and nilpotent_by_powers(g.realize(n))
            total += 1
    assert total >= SAMPLES_PER_FIXTURE * len(fixtures.NAMES)
    return f"{total} elements across {len(corpus)} fixtures"


@criterion(2, "matrix-mode decompositions equal the matrix Jordan-Chevalley parts")
def test_matrix_oracle_equivalence(corpus, capsys):
    total = 0
    for name in MATRIX_FIXTURES:
        run_ = corpus[name]
        g = run_.algebra
        for p in run_.pairs:
            oracle = matrix_jordan_chevalley(g.realize(p.element))
            assert (g.realize(p.semisimple), g.realize(p.nilpotent)) == oracle.as_tuple(), (name, p.element)
            total += 1
    return f"{total} elements across {len(MATRIX_FIXTURES)} matrix fixtures"


@criterion(3, "elements outside [g,g] are rejected and a character witnesses it")
def test_necessity(capsys, tmp_path):
    cases = [("gl2", (1, 0, 0, 1)), ("line_diag12", (1,))]
    for name, x in cases:
        g = fixtures.load(name)
        with pytest.raises(NotInDerivedAlgebra):
            abstract_jordan_chevalley(g, x)
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps([str(c) for c in x]))
        code, doc = run(CommandRequest("decompose", str(fixtures.fixture_path(name)), str(path)))
        assert code == 2 and doc is None

        w = necessity_witness(g, x)
        char = w.character
        assert char.target_dim == 1 and char.is_homomorphism()
        for i in range(g.dim):
            for j in range(g.dim):
                assert char.apply(g.bracket(g.basis_vector(i), g.basis_vector(j))).is_zero()
        assert char.apply(x) == QMatrix([[1]])
        # 2x2 companions: every image is semisimple (resp. nilpotent), yet x maps to a non-zero
        # scalar (resp. a non-zero nilpotent), so λ(S) = λ(N) = 0 contradicts λ(x) = 1
        assert w.scalar.apply(x) == QMatrix.identity(2)
        assert w.nilpotent.apply(x) == QMatrix.unit(2, 0, 1)
    return "gl2 identity, span{diag(1,2)} generator"


@criterion(4, "n + b is nilpotent in every family representation for random b in the nilradical")
def test_nilpotent_translates(corpus, capsys):
    rng = random.Random(SEED + 4)
    checks = 0
    for run_ in corpus.values():
        nil = run_.decomposer.levi.nilpotent_ideal.subspace
        for k in range(TRANSLATES_PER_FIXTURE):
            it = run_.pairs[k].internals
            y = tuple(a + b for a, b in zip(it.n, random_in(nil, rng)))
            for rep in run_.family:
                assert nilpotent_by_powers(rep.apply(y)), (run_.name, rep.descriptor, y)
                checks += 1
    return f"{checks} representation images"


@criterion(5, "s + b has squarefree minimal polynomial for random b in n*")
def test_semisimple_translates(corpus, capsys):
    rng = random.Random(SEED + 5)
    checks = 0
    for run_ in corpus.values():
        g = run_.algebra
        for k in range(TRANSLATES_PER_FIXTURE):
            it = run_.pairs[k].internals
            y = tuple(a + b for a, b in zip(it.s, random_in(it.nstar, rng)))
            images = [rep.apply(y) for rep in run_.family]
            if g.is_matrix_mode:
                images.append(g.realize(y))
            for m in images:
                assert semisimple_by_minpoly(m), (run_.name, y)
                checks += 1
    return f"{checks} images"


@criterion(6, "the commutator equation has a unique solution in n*")
def test_commutator_equation_unique(corpus, capsys):
    total = 0
    for run_ in corpus.values():
        g, dec = run_.algebra, run_.decomposer
        for p in run_.pairs:
            x, it = p.element, p.internals
            assert it.b in it.nstar
            assert g.bracket(x, it.b) == g.bracket(it.s, it.r)
            # uniqueness: b ↦ [x, b] is injective on n*
            if it.nstar.dim:
                cols = QMatrix.from_columns([g.bracket(x, w) for w in it.nstar.basis], g.dim)
                assert not kernel(cols).basis, (run_.name, x)
            op = dec.commutator_operator(x, it.n0, it.nstar)
            assert op.rows == it.nstar.dim
            assert op.rows == 0 or op.determinant() != 0
            total += 1
    return f"{total} elements"


@criterion(7, "triangular diagonalizability agrees with the squarefree test on 4x4 matrices")
def test_upper_triangular_diagonalization(capsys):
    rng = random.Random(SEED + 7)
    yes = 0
    for _ in range(100):
        diag = [rng.choice((0, 1, 2, Fraction(1, 2))) for _ in range(4)]
        a = QMatrix([[diag[i] if i == j else (random_rational(rng, 2) if j > i and rng.random() < 0.5 else 0)
                      for j in range(4)] for i in range(4)])
        expected = semisimple_by_minpoly(a)
        assert is_ut_diagonalizable(a) == expected, a
        if expected:
            yes += 1
            p, d = ut_diagonalize(a)
            assert p.is_upper_triangular() and p.determinant() != 0
            assert d.is_diagonal() and p.inverse() @ a @ p == d
    assert 0 < yes < 100
    return f"{yes} diagonalizable, {100 - yes} not"


@criterion(8, "every decomposition is compatible with every family representation")
def test_representation_compatibility(corpus, capsys):
    checks = 0
    for run_ in corpus.values():
        for p in run_.pairs:
            for rep in run_.family:
                assert check_compatibility(rep, p.element, p.semisimple, p.nilpotent), (
                    run_.name, rep.descriptor, p.element)
                checks += 1
    return f"{checks} (element, representation) pairs"


@criterion(9, "matrix Jordan-Chevalley worked examples and block-fixture properties")
def test_matrix_jcd_fixtures(capsys):
    q = QMatrix
    examples = [
        (q([[1, 1], [0, 1]]), (q.identity(2), q.unit(2, 0, 1))),
        (q([[0, 1], [-1, 0]]), (q([[0, 1], [-1, 0]]), q.zeros(2))),
        (q([[1, 1, 0], [0, 1, 0], [0, 0, 2]]), (q.diag([1, 1, 2]), q.unit(3, 0, 1))),
    ]
    for a, expected in examples:
        assert matrix_jordan_chevalley(a).as_tuple() == expected

    rng = random.Random(SEED + 9)
    for _ in range(100):
        s, n = random_block_pair(rng)
        size = s.rows
        m = random_invertible(rng, size)
        mi = m.inverse()
        a = m @ (s + n) @ mi
        pair = matrix_jordan_chevalley(a)
        # uniqueness: the known commuting semisimple + nilpotent split is the answer
        assert pair.as_tuple() == (m @ s @ mi, m @ n @ mi)
        h = random_invertible(rng, size)
        hi = h.inverse()
        assert matrix_jordan_chevalley(h @ a @ hi).as_tuple() == (h @ pair.semisimple @ hi, h @ pair.nilpotent @ hi)
        lam = random_rational(rng) or Fraction(-3, 2)
        assert matrix_jordan_chevalley(a.scale(lam)).as_tuple() == (pair.semisimple.scale(lam), pair.nilpotent.scale(lam))
    return "3 worked examples, 100 conjugated block fixtures"


@criterion(10, "Levi decomposition invariants and [g,g] = s + n bookkeeping")
def test_levi_invariants(capsys):
    # name: (dim of Levi factor, dim of radical, dim of nilpotent ideal [g, rad])
    expected = {"gl2": (3, 1, 0), "sl2_ltimes_q2": (3, 2, 2), "sl2_plus_heisenberg": (3, 3, 1), "sl3": (8, 0, 0)}
    for name, (ls, lr, ln) in expected.items():
        ld = levi_decomposition(fixtures.load(name))
        inv = check_levi_invariants(ld)
        assert all(inv.values()), (name, inv)
        assert (len(ld.levi_basis), ld.radical.dim, ld.nilpotent_ideal.dim) == (ls, lr, ln)
        levi = Subspace.span(ld.levi_basis, ld.algebra.dim)
        assert ld.derived.dim == levi.dim + ld.nilpotent_ideal.dim
        assert subspace_sum(levi, ld.nilpotent_ideal.subspace) == ld.derived.subspace
    return ", ".join(expected)


def test_structure_mode_twins_agree(corpus):
    """The same decompositions come out when the matrix realization is dropped."""
    for name in MATRIX_FIXTURES:
        run_ = corpus[name]
        twin = Decomposer(run_.algebra.without_realization())
        for p in run_.pairs[:20]:
            q = twin.decompose(p.element)
            assert (q.semisimple, q.nilpotent) == (p.semisimple, p.nilpotent)
    assert natural(corpus["sl2"].algebra).target_dim == 2
