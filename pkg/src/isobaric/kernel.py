"""Which weight vectors give WIP sequences in the kernel of an operator.

For fixed ``(a, m)`` the map ``omega -> T(P_{n,omega})`` is linear, so the
condition "``P_{n,omega}`` is killed for every ``2 <= n <= N``" is a
homogeneous linear system in ``omega_1..omega_N``.  Its exact nullspace
over the rationals is the truncated kernel.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .io import rational_str
from .operators import OperatorSpec, apply_D, is_in_kernel
from .poly import as_rational, enumerate_partitions, multiply_by_variable, partial_derivative
from .weights import WeightVector, wip

__all__ = [
    "KernelReport",
    "KernelSystem",
    "build_kernel_system",
    "classify",
    "nullspace",
    "rational_nullspace",
    "scan",
]


def nullspace(rows, ncols):
    """Basis of ``{x : A x = 0}`` over the rationals by Gauss-Jordan elimination.

    Each basis vector is scaled so its first nonzero entry is 1.  The input
    rows are not modified.
    """
    m = [[Fraction(x) for x in row] for row in rows if any(row)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fc]
        lead = next(x for x in v if x)
        basis.append(tuple(x / lead for x in v))
    return basis


@lru_cache(maxsize=32)
def _operator_parts(k, N):
    """Per-basis-weight pieces of the operator, reused across specs.

    For each column ``i`` and degree ``n`` this stores ``D11 P``,
    ``t_j D2j P`` for each j, and ``D2 P`` where ``P = wip(n, k, e_i)``.
    """
    parts = {}
    for n in range(2, N + 1):
        for i in range(1, N + 1):
            if i > min(n, k):
                continue  # wip(n, k, e_i) is identically zero
            p = wip(n, k, WeightVector.basis(i, N))
            d2 = partial_derivative(p, 2)
            xs = tuple(
                multiply_by_variable(partial_derivative(d2, j), j) if j <= n - 2 else None
                for j in range(1, k + 1)
            )
            parts[n, i] = (apply_D(p, 1, 1), xs, d2)
    return parts


@dataclass(frozen=True)
class KernelSystem:
    """Linear system whose solutions are the truncated kernel weights.

    Rows are labelled ``(n, beta)``: the coefficient of ``t^beta`` (degree
    ``n - 2``) in ``T(P_{n,omega})``.  Extra constraint rows are labelled
    ``("zero", j)`` and force ``omega_j = 0``.
    """

    spec: OperatorSpec
    k: int
    N: int
    labels: tuple
    rows: tuple

    @property
    def ncols(self):
        return self.N

    def unconstrained(self):
        """1-based indices of weights ``omega_j`` with ``j > k``.

        No monomial in ``t_1..t_k`` carries them, so their columns are zero
        for every operator.  Weights that merely cancel out for a particular
        operator are not listed here; they show up as nullspace directions.
        """
        return list(range(self.k + 1, self.N + 1))


def build_kernel_system(spec, k, N, zero_weights=()):
    if spec.k != k:
        raise ValueError(f"operator has k={spec.k}, expected {k}")
    if N < 2:
        raise ValueError("N must be at least 2")
    parts = _operator_parts(k, N)
    labels, rows = [], []
    for n in range(2, N + 1):
        index = {beta: r for r, beta in enumerate(enumerate_partitions(n - 2, k))}
        block = [[Fraction(0)] * N for _ in index]
        for i in range(1, N + 1):
            if (n, i) not in parts:
                continue
            d11, xs, d2 = parts[n, i]
            col = i - 1
            for beta, c in d11:
                block[index[beta]][col] += c
            for aj, x in zip(spec.a, xs):
                if x is not None and aj:
                    for beta, c in x:
                        block[index[beta]][col] -= aj * c
            if spec.m:
                for beta, c in d2:
                    block[index[beta]][col] -= spec.m * c
        for beta, row in zip(index, block):
            labels.append((n, beta))
            rows.append(tuple(row))
    for j in zero_weights:
        if not 1 <= j <= N:
            raise ValueError(f"weight index {j} outside 1..{N}")
        labels.append(("zero", j))
        rows.append(tuple(Fraction(1 if c == j - 1 else 0) for c in range(N)))
    return KernelSystem(spec, k, N, tuple(labels), tuple(rows))


def rational_nullspace(system):
    """Nullspace of the system over ``omega_1..omega_min(k,N)``.

    Weights beyond ``k`` are left at 0 in every basis vector and reported
    separately via ``system.unconstrained()``.
    """
    free = set(system.unconstrained())
    cols = [c for c in range(system.N) if c + 1 not in free]
    sub = [[row[c] for c in cols] for row in system.rows]
    out = []
    for v in nullspace(sub, len(cols)):
        full = [Fraction(0)] * system.N
        for c, x in zip(cols, v):
            full[c] = x
        out.append(WeightVector(tuple(full)))
    return out


@dataclass(frozen=True)
class KernelReport:
    spec: OperatorSpec
    k: int
    N: int
    nullspace: tuple
    unconstrained: tuple
    classification: str
    zero_weights: tuple = field(default=())

    @property
    def nontrivial(self):
        return self.classification != "trivial"

    def to_dict(self):
        out = {
            "spec": self.spec.to_dict(),
            "nullspace": [v.to_list() for v in self.nullspace],
            "class": self.classification,
            "N": self.N,
            "k": self.k,
            "unconstrained": list(self.unconstrained),
        }
        if self.zero_weights:
            out["zero_weights"] = list(self.zero_weights)
        return out


def _classify_dims(dim, constrained):
    if dim == 0:
        return "trivial"
    if dim == 1:
        return "line"
    if dim == constrained - 1:
        return "codim1"
    return "other"


def classify(spec, k, N=8, zero_weights=()):
    """Nullspace plus a coarse label: trivial, line, codim1 or other.

    Dimensions are counted over ``omega_1..omega_min(k,N)``.  Every basis
    vector is pushed back through ``wip`` and the operator; a vector that is
    not killed for some ``2 <= n <= N`` raises RuntimeError.
    """
    if N < 3:
        raise ValueError("classification needs N >= 3")
    system = build_kernel_system(spec, k, N, zero_weights)
    basis = rational_nullspace(system)
    free = tuple(system.unconstrained())
    for v in basis:
        for n in range(2, N + 1):
            if not is_in_kernel(spec, wip(n, k, v)):
                raise RuntimeError(f"nullspace vector {v.to_list()} fails at degree {n} for {spec}")
    label = _classify_dims(len(basis), N - len(free))
    return KernelReport(spec, k, N, tuple(basis), free, label, tuple(zero_weights))


def _grid(a_values, k):
    a_values = list(a_values)
    if a_values and isinstance(a_values[0], (list, tuple)):
        if len(a_values) != k:
            raise ValueError(f"need one a-grid per coordinate (k={k}), got {len(a_values)}")
        return [[as_rational(x) for x in g] for g in a_values]
    return [[as_rational(x) for x in a_values]] * k


def scan(a_values, m_values, k, N=8, include_trivial=False):
    """Classify every operator on the grid ``a_values^k x m_values``.

    ``a_values`` is either one list shared by all coordinates or one list
    per coordinate.  Reports come back in grid order (``a`` lexicographic,
    then ``m``); trivial ones are dropped unless ``include_trivial``.
    """
    grids = _grid(a_values, k)
    ms = [as_rational(m) for m in m_values]
    out = []
    for a in product(*grids):
        for m in ms:
            report = classify(OperatorSpec(a, m), k, N)
            if include_trivial or report.nontrivial:
                out.append(report)
    return out


def format_vector(v):
    return "(" + ", ".join(rational_str(x) for x in v.entries) + ")"
