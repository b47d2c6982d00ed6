"""Exact chain complexes and reduced homology over Z, Q, and prime fields.

Everything here is integer or rational arithmetic on Python ints and
Fractions; no floating point.  Integral homology goes through Smith normal
form with recorded unimodular transforms, field homology through Gaussian
elimination.  Chain complexes are augmented, so all homology is reduced and
the empty complex has its one-dimensional group in degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .complexes import Face, SimplicialComplex
from .errors import InternalError

# ----------------------------------------------------------------------
# coefficient systems


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Coefficients:
    """One of the integers, the rationals, or a prime field."""

    kind: str  # "Z", "Q", or "F"
    p: int = 0

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "F"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "F" and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.kind != "F" and self.p:
            raise ValueError("p is only meaningful for prime fields")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def label(self) -> str:
        return f"F{self.p}" if self.kind == "F" else self.kind

    @staticmethod
    def parse(text: str) -> "Coefficients":
        t = text.strip()
        if t in ("Z", "ZZ"):
            return INTEGERS
        if t in ("Q", "QQ"):
            return RATIONALS
        if t.startswith("F") and t[1:].isdigit():
            return GF(int(t[1:]))
        raise ValueError(f"cannot parse coefficients {text!r}")

    def __repr__(self) -> str:
        return f"Coefficients({self.label()!r})"


INTEGERS = Coefficients("Z")
RATIONALS = Coefficients("Q")


def GF(p: int) -> Coefficients:
    return Coefficients("F", p)


# ----------------------------------------------------------------------
# homology groups


def _smallest_prime_factor(q: int) -> int:
    f = 2
    while f * f <= q:
        if q % f == 0:
            return f
        f += 1
    return q


def _prime_power_split(d: int) -> list[int]:
    """Split an invariant factor into its prime-power elementary divisors."""
    out = []
    n, q = d, 2
    while q * q <= n:
        if n % q == 0:
            e = 1
            while n % (q ** (e + 1)) == 0:
                e += 1
            out.append(q ** e)
            n //= q ** e
        q += 1
    if n > 1:
        out.append(n)
    return out


@dataclass(frozen=True)
class HomologyGroups:
    """Per-degree free rank plus torsion, stored as elementary divisors.

    Torsion is canonicalized to a sorted tuple of prime powers so that direct
    sums compare exactly regardless of how the summands were grouped.
    """

    coefficients: Coefficients
    entries: tuple[tuple[int, int, tuple[int, ...]], ...]

    @classmethod
    def from_dict(cls, coefficients: Coefficients,
                  data: Mapping[int, tuple[int, Sequence[int]]]) -> "HomologyGroups":
        entries = []
        for deg in sorted(data):
            rank, torsion = data[deg]
            divisors: list[int] = []
            for t in torsion:
                divisors.extend(_prime_power_split(t))
            if rank or divisors:
                entries.append((deg, rank, tuple(sorted(divisors))))
        return cls(coefficients, tuple(entries))

    def rank(self, degree: int) -> int:
        for d, r, _ in self.entries:
            if d == degree:
                return r
        return 0

    def torsion(self, degree: int) -> tuple[int, ...]:
        for d, _, t in self.entries:
            if d == degree:
                return t
        return ()

    def invariant_factors(self, degree: int) -> tuple[int, ...]:
        """Torsion regrouped as a divisibility chain d_1 | d_2 | ... ."""
        by_prime: dict[int, list[int]] = {}
        for q in self.torsion(degree):
            p = _smallest_prime_factor(q)
            by_prime.setdefault(p, []).append(q)
        for powers in by_prime.values():
            powers.sort(reverse=True)
        chains: list[int] = []
        k = 0
        while any(len(v) > k for v in by_prime.values()):
            factor = 1
            for powers in by_prime.values():
                if len(powers) > k:
                    factor *= powers[k]
            chains.append(factor)
            k += 1
        return tuple(reversed(chains))

    def dimension(self, degree: int) -> int:
        """Vector-space dimension in a given degree (field coefficients)."""
        if not self.coefficients.is_field:
            raise ValueError("dimension is only defined over a field")
        return self.rank(degree)

    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _, _ in self.entries)

    @property
    def is_trivial(self) -> bool:
        return not self.entries

    @property
    def torsion_free(self) -> bool:
        return all(not t for _, _, t in self.entries)

    def total_dimension(self) -> int:
        return sum(r for _, r, _ in self.entries)

    def describe(self, degree: int) -> str:
        r, t = self.rank(degree), self.torsion(degree)
        parts = ["Z" if self.coefficients == INTEGERS else self.coefficients.label()] * r
        parts += [f"Z/{d}" for d in t]
        return " + ".join(parts) if parts else "0"


def direct_sum(groups: Iterable[HomologyGroups],
               coefficients: Coefficients,
               shifts: Iterable[int] | None = None) -> HomologyGroups:
    """Degreewise direct sum, each summand optionally shifted up in degree."""
    groups = list(groups)
    offs = list(shifts) if shifts is not None else [0] * len(groups)
    acc: dict[int, tuple[int, list[int]]] = {}
    for g, off in zip(groups, offs):
        for deg, rank, tors in g.entries:
            r, t = acc.get(deg + off, (0, []))
            acc[deg + off] = (r + rank, t + list(tors))
    return HomologyGroups.from_dict(coefficients, acc)


# ----------------------------------------------------------------------
# exact integer matrices: Smith normal form

Matrix = list[list[int]]


def _identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    cols = len(b[0])
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


@dataclass(eq=False)
class SmithNormalForm:
    """Diagonalization U*M*V = D with invertible integer transforms.

    ``diagonal`` lists the nonzero invariant factors d_1 | d_2 | ... | d_r.
    The inverse transforms are carried along so that re-multiplication
    recovers the input matrix exactly.
    """

    shape: tuple[int, int]
    diagonal: list[int]
    row_transform: Matrix
    row_transform_inv: Matrix
    col_transform: Matrix
    col_transform_inv: Matrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self) -> Matrix:
        r, c = self.shape
        d = [[0] * c for _ in range(r)]
        for i, v in enumerate(self.diagonal):
            d[i][i] = v
        return d

    def reconstruct(self) -> Matrix:
        return _mat_mul(self.row_transform_inv,
                        _mat_mul(self.diagonal_matrix(), self.col_transform_inv))

    def verify(self, original: Matrix) -> bool:
        r, c = self.shape
        if _mat_mul(self.row_transform, self.row_transform_inv) != _identity(r):
            return False
        if _mat_mul(self.col_transform, self.col_transform_inv) != _identity(c):
            return False
        if self.reconstruct() != [list(row) for row in original]:
            return False
        for a, b in zip(self.diagonal, self.diagonal[1:]):
            if a <= 0 or b % a:
                return False
        return True


def _snf_core(mat: Matrix, track: bool):
    a = [list(row) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    if track:
        u, uinv = _identity(rows), _identity(rows)
        v, vinv = _identity(cols), _identity(cols)
    else:
        u = uinv = v = vinv = None

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        if track:
            u[i], u[j] = u[j], u[i]
            for r in uinv:
                r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        if track:
            for r in v:
                r[i], r[j] = r[j], r[i]
            vinv[i], vinv[j] = vinv[j], vinv[i]

    def row_add(dst, src, q):
        # row dst -= q * row src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        if track:
            u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]
            for r in uinv:
                r[src] += q * r[dst]

    def col_add(dst, src, q):
        for r in a:
            r[dst] -= q * r[src]
        if track:
            for r in v:
                r[dst] -= q * r[src]
            vinv[src] = [x + q * y for x, y in zip(vinv[src], vinv[dst])]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        if track:
            u[i] = [-x for x in u[i]]
            for r in uinv:
                r[i] = -r[i]

    diag: list[int] = []
    t = 0
    while t < rows and t < cols:
        # smallest nonzero |entry| in the working submatrix; ties by index
        best = None
        for i in range(t, rows):
            ai = a[i]
            for j in range(t, cols):
                x = ai[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        if a[t][t] < 0:
            row_negate(t)

        while True:
            pivot = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // pivot
                    if q:
                        row_add(i, t, q)
                    if a[i][t]:
                        row_swap(t, i)
                        if a[t][t] < 0:
                            row_negate(t)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // pivot
                    if q:
                        col_add(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            # row and column cleared; force divisibility of the rest
            pivot = a[t][t]
            offender = None
            for i in range(t + 1, rows):
                ai = a[i]
                for j in range(t + 1, cols):
                    if ai[j] % pivot:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add(t, offender, -1)

        diag.append(a[t][t])
        t += 1

    return diag, u, uinv, v, vinv


def smith_normal_form(mat: Sequence[Sequence[int]]) -> SmithNormalForm:
    m = [list(row) for row in mat]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    diag, u, uinv, v, vinv = _snf_core(m, track=True)
    return SmithNormalForm((rows, cols), diag, u, uinv, v, vinv)


def snf_invariants(mat: Sequence[Sequence[int]]) -> tuple[int, list[int]]:
    """Rank and nonunit invariant factors, without transform tracking."""
    diag, *_ = _snf_core([list(row) for row in mat], track=False)
    return len(diag), [d for d in diag if d != 1]


# ----------------------------------------------------------------------
# generic field linear algebra


class PrimeFieldOps:
    def __init__(self, p: int):
        self.p = p

    def of_int(self, x: int):
        return x % self.p

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def inv(self, x):
        return pow(x % self.p, self.p - 2, self.p)

    def neg(self, x):
        return (-x) % self.p


class RationalOps:
    def of_int(self, x: int):
        return Fraction(x)

    def is_zero(self, x) -> bool:
        return x == 0

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def inv(self, x):
        return Fraction(1) / x

    def neg(self, x):
        return -x


def field_ops(coefficients: Coefficients):
    if coefficients.kind == "F":
        return PrimeFieldOps(coefficients.p)
    if coefficients.kind == "Q":
        return RationalOps()
    raise ValueError("field operations need field coefficients")


def rref(rows: list[list], ops) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    mat = [[ops.of_int(x) if isinstance(x, int) else x for x in row]
           for row in rows]
    pivots: list[int] = []
    r = 0
    ncols = len(mat[0]) if mat else 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not ops.is_zero(mat[i][c]):
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = ops.inv(mat[r][c])
        mat[r] = [ops.mul(x, inv) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not ops.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [ops.sub(x, ops.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def matrix_rank_field(mat: Sequence[Sequence[int]], ops) -> int:
    rows = [[ops.of_int(x) for x in row] for row in mat]
    if not rows:
        return 0
    return len(rref(rows, ops)[1])


def nullspace_field(mat: Sequence[Sequence[int]], ncols: int, ops) -> list[list]:
    """Basis of the kernel of the matrix acting on column vectors."""
    if ncols == 0:
        return []
    if not mat:
        basis = []
        for j in range(ncols):
            vec = [ops.of_int(0)] * ncols
            vec[j] = ops.of_int(1)
            basis.append(vec)
        return basis
    rows = [[ops.of_int(x) for x in row] for row in mat]
    red, pivots = rref(rows, ops)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    basis = []
    for j in free:
        vec = [ops.of_int(0)] * ncols
        vec[j] = ops.of_int(1)
        for r, pc in enumerate(pivots):
            vec[pc] = ops.neg(red[r][j])
        basis.append(vec)
    return basis


class SpanTracker:
    """Incrementally maintained row space for rank/extension questions."""

    def __init__(self, ops, width: int):
        self.ops = ops
        self.width = width
        self.rows: list[list] = []   # echelon rows
        self.pivots: list[int] = []

    def reduce(self, vec: Sequence) -> list:
        ops = self.ops
        v = [ops.of_int(x) if isinstance(x, int) else x for x in vec]
        for row, p in zip(self.rows, self.pivots):
            if not ops.is_zero(v[p]):
                f = v[p]
                v = [ops.sub(x, ops.mul(f, y)) for x, y in zip(v, row)]
        return v

    def add(self, vec: Sequence) -> bool:
        """Add a vector; True when it enlarged the span."""
        v = self.reduce(vec)
        for j in range(self.width):
            if not self.ops.is_zero(v[j]):
                inv = self.ops.inv(v[j])
                v = [self.ops.mul(x, inv) for x in v]
                self.rows.append(v)
                self.pivots.append(j)
                return True
        return False

    def contains(self, vec: Sequence) -> bool:
        v = self.reduce(vec)
        return all(self.ops.is_zero(x) for x in v)

    @property
    def rank(self) -> int:
        return len(self.rows)


# ----------------------------------------------------------------------
# chain complexes


@dataclass
class ChainData:
    """Cell bases per degree together with boundary matrices.

    ``boundary[n]`` is the matrix of the degree-n boundary map, rows indexed
    by ``cells[n-1]`` and columns by ``cells[n]``.
    """

    cells: dict[int, list[Hashable]]
    boundary: dict[int, Matrix]
    index: dict[int, dict[Hashable, int]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            self.index = {n: {c: i for i, c in enumerate(cs)}
                          for n, cs in self.cells.items()}

    def degrees(self) -> list[int]:
        return sorted(self.cells)

    def cell_count(self, n: int) -> int:
        return len(self.cells.get(n, ()))


def build_chain_data(cells_by_dim: dict[int, list],
                     boundary_of: Callable[[Hashable, int], list[tuple[Hashable, int]]]
                     ) -> ChainData:
    cells = {n: list(cs) for n, cs in cells_by_dim.items() if cs}
    index = {n: {c: i for i, c in enumerate(cs)} for n, cs in cells.items()}
    boundary: dict[int, Matrix] = {}
    for n, cs in cells.items():
        lower = cells.get(n - 1, [])
        mat = [[0] * len(cs) for _ in lower]
        if lower:
            low_idx = index[n - 1]
            for j, cell in enumerate(cs):
                for target, coef in boundary_of(cell, n):
                    mat[low_idx[target]][j] += coef
        boundary[n] = mat
    return ChainData(cells, boundary, index)


def _simplex_boundary_terms(f: Face) -> list[tuple[Face, int]]:
    # alternating signs over the sorted vertex order; points map to the
    # augmentation cell () with coefficient +1
    return [(f[:k] + f[k + 1:], (-1) ** k) for k in range(len(f))]


def simplicial_chain_data(K: SimplicialComplex) -> ChainData:
    """Augmented simplicial chain complex in the fixed face order."""
    if K.is_void:
        return ChainData({}, {})
    cells: dict[int, list] = {}
    for f in K.faces():
        cells.setdefault(len(f) - 1, []).append(f)
    return build_chain_data(cells, lambda cell, n: _simplex_boundary_terms(cell))


def check_boundary_squared(data: ChainData) -> bool:
    for n in data.degrees():
        upper = data.boundary.get(n)
        lower = data.boundary.get(n - 1)
        if upper and lower:
            prod = _mat_mul(lower, upper)
            if any(any(row) for row in prod):
                return False
    return True


@dataclass(frozen=True)
class BoundaryMatrix:
    """Boundary map in a fixed enumeration of faces of adjacent dimensions."""

    degree: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    entries: tuple[tuple[int, ...], ...]


def boundary_matrix(K: SimplicialComplex, k: int) -> BoundaryMatrix:
    data = simplicial_chain_data(K)
    rows = tuple(data.cells.get(k - 1, ()))
    cols = tuple(data.cells.get(k, ()))
    mat = data.boundary.get(k, [[0] * len(cols) for _ in rows])
    return BoundaryMatrix(k, rows, cols, tuple(tuple(r) for r in mat))


def homology_of_chain_data(data: ChainData, coefficients: Coefficients) -> HomologyGroups:
    degs = data.degrees()
    if not degs:
        return HomologyGroups(coefficients, ())
    out: dict[int, tuple[int, list[int]]] = {}
    if coefficients.is_field:
        ops = field_ops(coefficients)
        ranks = {n: matrix_rank_field(data.boundary[n], ops)
                 if data.boundary.get(n) else 0 for n in degs}
        for n in degs:
            cn = data.cell_count(n)
            dim = cn - ranks.get(n, 0) - ranks.get(n + 1, 0)
            out[n] = (dim, [])
    else:
        info = {}
        for n in degs:
            mat = data.boundary.get(n)
            info[n] = snf_invariants(mat) if mat else (0, [])
        for n in degs:
            cn = data.cell_count(n)
            rank_n = info.get(n, (0, []))[0]
            rank_up, torsion_up = info.get(n + 1, (0, []))
            out[n] = (cn - rank_n - rank_up, list(torsion_up))
    return HomologyGroups.from_dict(coefficients, out)


@lru_cache(maxsize=65536)
def reduced_homology(K: SimplicialComplex, coefficients: Coefficients = INTEGERS
                     ) -> HomologyGroups:
    """Reduced homology; all groups vanish for Void, and the empty complex
    has its coefficient group in degree -1."""
    return homology_of_chain_data(simplicial_chain_data(K), coefficients)


def is_acyclic(K: SimplicialComplex, coefficients: Coefficients = INTEGERS) -> bool:
    return reduced_homology(K, coefficients).is_trivial


# ----------------------------------------------------------------------
# chains and cycle bases


@dataclass(frozen=True)
class Chain:
    """A formal combination of faces of one fixed dimension."""

    degree: int
    terms: tuple[tuple[Face, int], ...]

    @classmethod
    def from_dict(cls, degree: int, coeffs: Mapping[Face, int]) -> "Chain":
        terms = tuple(sorted(((f, c) for f, c in coeffs.items() if c),
                             key=lambda t: t[0]))
        return cls(degree, terms)

    def as_dict(self) -> dict[Face, int]:
        return dict(self.terms)

    def coefficient(self, f: Face) -> int:
        return self.as_dict().get(f, 0)

    @property
    def support(self) -> tuple[Face, ...]:
        return tuple(f for f, _ in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def reduce_mod(self, p: int) -> "Chain":
        return Chain.from_dict(self.degree, {f: c % p for f, c in self.terms})

    def scale(self, a: int) -> "Chain":
        return Chain.from_dict(self.degree, {f: a * c for f, c in self.terms})

    def add(self, other: "Chain") -> "Chain":
        if other.degree != self.degree:
            raise ValueError("cannot add chains of different degrees")
        acc = self.as_dict()
        for f, c in other.terms:
            acc[f] = acc.get(f, 0) + c
        return Chain.from_dict(self.degree, acc)

    def boundary(self) -> "Chain":
        acc: dict[Face, int] = {}
        for f, c in self.terms:
            for g, s in _simplex_boundary_terms(f):
                acc[g] = acc.get(g, 0) + s * c
        return Chain.from_dict(self.degree - 1, acc)

    def restrict_to_vertex(self, v: int) -> "Chain":
        return Chain.from_dict(self.degree,
                               {f: c for f, c in self.terms if v in f})


def chain_is_cycle(K: SimplicialComplex, chain: Chain,
                   coefficients: Coefficients) -> bool:
    """A cycle of the augmented complex: its boundary vanishes, mod p over a
    prime field.  Also checks the support lies in the complex."""
    if any(f not in K or len(f) - 1 != chain.degree for f, _ in chain.terms):
        return False
    b = chain.boundary()
    if coefficients.kind == "F":
        b = b.reduce_mod(coefficients.p)
    return b.is_zero


def cycle_basis(data: ChainData, n: int, coefficients: Coefficients) -> list[list]:
    """Kernel basis vectors of the degree-n boundary map over a field."""
    ops = field_ops(coefficients)
    cn = data.cell_count(n)
    return nullspace_field(data.boundary.get(n, []), cn, ops)


def homology_basis(K: SimplicialComplex, n: int, p: int) -> list[Chain]:
    """Cycles over F_p whose classes form a basis of reduced homology in
    degree n.  Each vector is a verified cycle and the returned set is
    verified independent modulo boundaries."""
    coeff = GF(p)
    ops = field_ops(coeff)
    data = simplicial_chain_data(K)
    cn = data.cell_count(n)
    if cn == 0:
        return []
    kernel = cycle_basis(data, n, coeff)
    tracker = SpanTracker(ops, cn)
    upper = data.boundary.get(n + 1)
    if upper:
        for col in zip(*upper):
            tracker.add(list(col))
    chosen = []
    for vec in kernel:
        if tracker.add(vec):
            chosen.append(vec)
    cells = data.cells[n]
    chains = [Chain.from_dict(n, {cells[i]: int(x) for i, x in enumerate(vec) if x})
              for vec in chosen]
    for ch in chains:
        if not chain_is_cycle(K, ch, coeff):
            raise InternalError("homology basis produced a non-cycle")
    expected = reduced_homology(K, coeff).dimension(n)
    if len(chains) != expected:
        raise InternalError("homology basis has the wrong cardinality")
    return chains
