"""Test-problem generators and file ingestion.

Provides the four classical first-kind Fredholm discretizations (gravity,
foxgood, shaw, baart), Gaussian-RBF interpolation of Franke's bivariate test
function on a grid, Gaussian noise injection, and Matrix Market read/write.

Discretizations follow the standard midpoint / Galerkin box-function schemes;
the right-hand side of every Fredholm problem is defined as b = A @ x_true,
so the noise-free systems are consistent by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import MatrixMarketError
from .linalg import as_vector, norm2

FREDHOLM_NAMES = ("gravity", "foxgood", "shaw", "baart")


@dataclass
class TestProblem:
    """A linear system A x = b with optional known solution and metadata."""

    name: str
    A: np.ndarray
    b: np.ndarray
    x_true: np.ndarray | None = None
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class NoiseSpec:
    """Relative Gaussian noise level and the seed of its draw."""

    delta: float
    seed: int = 0

    def __post_init__(self):
        if not np.isfinite(self.delta) or self.delta < 0:
            raise ValueError("delta must be finite and >= 0")


def _grid_midpoints(a: float, b: float, n: int) -> np.ndarray:
    h = (b - a) / n
    return a + (np.arange(n) + 0.5) * h


def _shaw(n: int) -> tuple[np.ndarray, np.ndarray]:
    if n % 2:
        raise ValueError("shaw requires an even dimension")
    h = np.pi / n
    t = _grid_midpoints(-np.pi / 2, np.pi / 2, n)
    co = np.cos(t)
    ps = np.pi * np.sin(t)
    ss = ps[:, None] + ps[None, :]
    # np.sinc(x) = sin(pi x)/(pi x), so sin(ss)/ss = sinc(ss/pi) with the
    # ss -> 0 limit handled exactly on the antidiagonal.
    A = h * ((co[:, None] + co[None, :]) * np.sinc(ss / np.pi)) ** 2
    x = 2.0 * np.exp(-6.0 * (t - 0.8) ** 2) + np.exp(-2.0 * (t + 0.5) ** 2)
    return A, x


def _baart(n: int) -> tuple[np.ndarray, np.ndarray]:
    # Galerkin with orthonormal box functions: the s-integration over each
    # cell of [0, pi/2] is exact, the t-integration uses the midpoint value.
    hs = (np.pi / 2) / n
    ht = np.pi / n
    s_edges = np.arange(n + 1) * hs
    tau = _grid_midpoints(0.0, np.pi, n)
    c = np.cos(tau)
    # integral over s-cell i of exp(s*c_j) = exp(s_i*c_j) * (expm1(hs*c_j))/c_j
    z = hs * c
    small = np.abs(z) < 1e-8
    ratio = np.where(small, hs * (1.0 + z / 2.0), np.expm1(z) / np.where(c == 0, 1.0, c))
    A = np.sqrt(ht / hs) * np.exp(np.outer(s_edges[:-1], c)) * ratio[None, :]
    t_edges = np.arange(n + 1) * ht
    x = (np.cos(t_edges[:-1]) - np.cos(t_edges[1:])) / np.sqrt(ht)
    return A, x


def _foxgood(n: int) -> tuple[np.ndarray, np.ndarray]:
    h = 1.0 / n
    t = _grid_midpoints(0.0, 1.0, n)
    A = h * np.sqrt(t[:, None] ** 2 + t[None, :] ** 2)
    return A, t.copy()


def _gravity(n: int, depth: float = 0.25) -> tuple[np.ndarray, np.ndarray]:
    h = 1.0 / n
    t = _grid_midpoints(0.0, 1.0, n)
    diff = t[:, None] - t[None, :]
    A = h * depth / (depth**2 + diff**2) ** 1.5
    x = np.sin(np.pi * t) + 0.5 * np.sin(2.0 * np.pi * t)
    return A, x


def generate_fredholm(name: str, n: int) -> TestProblem:
    """Discretize one of the named first-kind Fredholm equations.

    Parameters
    ----------
    name : one of "gravity", "foxgood", "shaw", "baart"
    n : system dimension, at least 8 (shaw additionally requires even n)
    """
    key = name.lower()
    if key not in FREDHOLM_NAMES:
        raise ValueError(f"unsupported problem {name!r}; pick from {FREDHOLM_NAMES}")
    if n < 8:
        raise ValueError("dimension must be at least 8")
    if key == "shaw":
        A, x = _shaw(n)
    elif key == "baart":
        A, x = _baart(n)
    elif key == "foxgood":
        A, x = _foxgood(n)
    else:
        A, x = _gravity(n)
    b = A @ x
    return TestProblem(key, A, b, x, {"n": n})


def franke_function(x, y):
    """Franke's bivariate test function (standard four-term form)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    return (
        0.75 * np.exp(-((9 * x - 2) ** 2 + (9 * y - 2) ** 2) / 4.0)
        + 0.75 * np.exp(-((9 * x + 1) ** 2) / 49.0 - (9 * y + 1) / 10.0)
        + 0.5 * np.exp(-((9 * x - 7) ** 2 + (9 * y - 3) ** 2) / 4.0)
        - 0.2 * np.exp(-((9 * x - 4) ** 2) - (9 * y - 7) ** 2)
    )


def generate_franke_rbf(grid_n: int, shape: float = 1.0) -> TestProblem:
    """Gaussian-RBF interpolation system for Franke's function.

    Centers are the grid_n x grid_n equispaced points of the unit square
    (endpoints included); A_ij = exp(-shape^2 ||p_i - p_j||^2) and
    b_i = franke(p_i). The exact solution of the system is unknown, so
    ``x_true`` is absent.
    """
    if grid_n < 2:
        raise ValueError("grid_n must be at least 2")
    if shape <= 0:
        raise ValueError("shape must be positive")
    g = np.linspace(0.0, 1.0, grid_n)
    X, Y = np.meshgrid(g, g, indexing="ij")
    px = X.ravel()
    py = Y.ravel()
    d2 = (px[:, None] - px[None, :]) ** 2 + (py[:, None] - py[None, :]) ** 2
    A = np.exp(-(shape**2) * d2)
    b = franke_function(px, py)
    return TestProblem(
        "franke", A, b, None, {"grid_n": grid_n, "shape": shape}
    )


def add_noise(b, spec: NoiseSpec) -> np.ndarray:
    """Return b + (delta ||b|| / sqrt(N)) u with u standard normal.

    The draw uses NumPy's PCG64 generator seeded with ``spec.seed``, so the
    result is a deterministic function of (b, delta, seed) within one
    installation (bit-reproducibility across NumPy versions is not promised).
    """
    v = as_vector(b)
    if spec.delta == 0.0 or v.size == 0:
        return v
    scale = spec.delta * norm2(v) / np.sqrt(v.size)
    u = np.random.default_rng(spec.seed).standard_normal(v.size)
    return v + scale * u


# ---------------------------------------------------------------------------
# Matrix Market I/O (coordinate and array formats, real, general/symmetric)
# ---------------------------------------------------------------------------


def read_matrix_market(path) -> np.ndarray:
    """Read a real Matrix Market file into a dense array.

    Supports coordinate and array formats with general or symmetric storage.
    Malformed input raises :class:`MatrixMarketError` naming the line.
    """
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().splitlines()
    if not lines:
        raise MatrixMarketError("empty file", line=1)
    header = lines[0].split()
    if len(header) != 5 or header[0].lower() != "%%matrixmarket":
        raise MatrixMarketError("expected '%%MatrixMarket matrix <fmt> <field> <sym>'", line=1)
    _, obj, fmt, fieldkind, sym = (tok.lower() for tok in header)
    if obj != "matrix":
        raise MatrixMarketError(f"unsupported object {obj!r}", line=1)
    if fmt not in ("coordinate", "array"):
        raise MatrixMarketError(f"unsupported format {fmt!r}", line=1)
    if fieldkind not in ("real", "integer"):
        raise MatrixMarketError(f"unsupported field {fieldkind!r}", line=1)
    if sym not in ("general", "symmetric"):
        raise MatrixMarketError(f"unsupported symmetry {sym!r}", line=1)

    no = 1
    nlines = len(lines)
    while no < nlines and (not lines[no].strip() or lines[no].lstrip().startswith("%")):
        no += 1
    if no >= nlines:
        raise MatrixMarketError("missing size line", line=nlines)
    size_tok = lines[no].split()
    want = 3 if fmt == "coordinate" else 2
    if len(size_tok) != want:
        raise MatrixMarketError(f"size line needs {want} integers", line=no + 1)
    try:
        dims = [int(tok) for tok in size_tok]
    except ValueError:
        raise MatrixMarketError("size line is not integral", line=no + 1) from None
    rows, cols = dims[0], dims[1]
    if rows < 0 or cols < 0:
        raise MatrixMarketError("negative dimensions", line=no + 1)
    M = np.zeros((rows, cols))

    if fmt == "coordinate":
        nnz = dims[2]
        count = 0
        for k in range(no + 1, nlines):
            text = lines[k].strip()
            if not text or text.startswith("%"):
                continue
            tok = text.split()
            if len(tok) != 3:
                raise MatrixMarketError("coordinate entry needs 'i j value'", line=k + 1)
            try:
                i, j, val = int(tok[0]), int(tok[1]), float(tok[2])
            except ValueError:
                raise MatrixMarketError("bad coordinate entry", line=k + 1) from None
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise MatrixMarketError("index out of range", line=k + 1)
            M[i - 1, j - 1] = val
            if sym == "symmetric":
                M[j - 1, i - 1] = val
            count += 1
        if count != nnz:
            raise MatrixMarketError(
                f"expected {nnz} entries, found {count}", line=nlines
            )
    else:
        vals = []
        for k in range(no + 1, nlines):
            text = lines[k].strip()
            if not text or text.startswith("%"):
                continue
            try:
                vals.append(float(text.split()[0]))
            except ValueError:
                raise MatrixMarketError("bad array entry", line=k + 1) from None
        if sym == "symmetric":
            if rows != cols:
                raise MatrixMarketError("symmetric array must be square", line=no + 1)
            need = rows * (rows + 1) // 2
            if len(vals) != need:
                raise MatrixMarketError(
                    f"expected {need} entries, found {len(vals)}", line=nlines
                )
            it = iter(vals)
            for j in range(cols):
                for i in range(j, rows):
                    v = next(it)
                    M[i, j] = v
                    M[j, i] = v
        else:
            if len(vals) != rows * cols:
                raise MatrixMarketError(
                    f"expected {rows * cols} entries, found {len(vals)}", line=nlines
                )
            # array format stores columns contiguously
            M = np.asarray(vals).reshape((cols, rows)).T.copy()
    return M


def write_matrix_market(path, M, comment: str = "") -> None:
    """Write a dense matrix or vector in Matrix Market array format."""
    arr = np.asarray(M, dtype=np.float64)
    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)
    if arr.ndim != 2:
        raise ValueError("only matrices and vectors can be written")
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("%%MatrixMarket matrix array real general\n")
        if comment:
            for part in comment.splitlines():
                fh.write(f"%{part}\n")
        fh.write(f"{arr.shape[0]} {arr.shape[1]}\n")
        for j in range(arr.shape[1]):
            for i in range(arr.shape[0]):
                fh.write(f"{float(arr[i, j])!r}\n")


def load_matrix_market(path_A, path_b=None) -> TestProblem:
    """Build a TestProblem from Matrix Market files.

    When ``path_b`` is absent the right-hand side defaults to A @ ones.
    """
    A = read_matrix_market(path_A)
    if A.shape[0] != A.shape[1]:
        raise ValueError(f"coefficient matrix must be square, got {A.shape}")
    if path_b is not None:
        b = read_matrix_market(path_b).ravel()
        if b.size != A.shape[0]:
            raise ValueError(
                f"right-hand side has length {b.size}, matrix is {A.shape[0]}"
            )
    else:
        b = A @ np.ones(A.shape[0])
    return TestProblem("mtx", A, b, None, {"path_A": str(path_A)})
