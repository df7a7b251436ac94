"""Spectra and energies of graphs and their orientations.

The skew-symmetric matrix S of an orientation has purely imaginary
eigenvalues that pair up as +i*m and -i*m.  We represent that spectrum by
its imaginary parts: a descending list that is exactly antisymmetric
(values come in +/- pairs, with an exact 0.0 in the middle when the vertex
count is odd).  Exactness of the pairing is enforced structurally, not by
rounding: the eigenvalues of the symmetric positive semidefinite matrix
S S^T are the squared magnitudes, each nonzero one with even multiplicity,
so adjacent square roots are averaged into one magnitude per +/- pair.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotAntisymmetricError, NotRegularError, NotSymmetricError
from .graph import Graph, OrientedGraph, adjacency_matrix, skew_adjacency


@dataclass(frozen=True)
class Spectrum:
    """A real eigenvalue list in descending order."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(vals[i] < vals[i + 1] for i in range(len(vals) - 1)):
            raise ValueError("spectrum values must be in descending order")
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


def require_antisymmetric(sp: Spectrum) -> None:
    """Check that a spectrum pairs off exactly as +m, -m around zero.

    Raises :class:`NotAntisymmetricError` when values[i] + values[n-1-i]
    is not exactly 0.0 for some i (the middle of an odd-length list must
    be exactly 0.0).
    """
    k = len(sp)
    for i in range(k // 2 + 1):
        if sp.values[i] + sp.values[k - 1 - i] != 0.0:
            raise NotAntisymmetricError(
                "spectrum is not antisymmetric: "
                f"values[{i}] + values[{k - 1 - i}] != 0"
            )


def symmetric_eigenvalues(mat: np.ndarray) -> Spectrum:
    """Eigenvalues of a symmetric integer matrix, descending.

    Raises :class:`NotSymmetricError` when the matrix is not exactly
    symmetric; the check is on integers, so there is no tolerance.
    """
    a = np.asarray(mat)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetricError("matrix is not square")
    if not np.array_equal(a, a.T):
        raise NotSymmetricError("matrix is not symmetric")
    vals = np.linalg.eigvalsh(a.astype(np.float64))
    return Spectrum(tuple(vals[::-1].tolist()))


def adjacency_spectrum(g: Graph) -> Spectrum:
    """Eigenvalues of the adjacency matrix, descending."""
    return symmetric_eigenvalues(adjacency_matrix(g))


def skew_gram(og: OrientedGraph) -> np.ndarray:
    """S S^T over the integers, S the skew-symmetric matrix of ``og``.

    Computed by accumulating one outer product per vertex: column t of S
    is supported on the neighbors of t, so
    (S S^T)[i, j] = sum_t S[i, t] * S[j, t] touches only pairs of
    neighbors of t.  This keeps the work proportional to the sum of the
    squared degrees and stays in exact int64 arithmetic.
    """
    s = skew_adjacency(og)
    n = og.n
    gram = np.zeros((n, n), dtype=np.int64)
    for t in range(n):
        nbrs = np.asarray(og.graph.neighbors(t), dtype=np.intp)
        if nbrs.size == 0:
            continue
        col = s[nbrs, t]
        gram[np.ix_(nbrs, nbrs)] += np.outer(col, col)
    return gram


def _paired_spectrum(mags_desc, total: int) -> Spectrum:
    # mags_desc holds `total` nonnegative magnitudes sorted descending,
    # every nonzero value with exact even multiplicity.  Average each
    # adjacent pair so the emitted +/- values match to the bit; negate
    # without producing -0.0.
    half = total // 2
    pos = [(mags_desc[2 * i] + mags_desc[2 * i + 1]) / 2.0 for i in range(half)]
    mid = [0.0] if total % 2 else []
    neg = [(-v if v != 0.0 else 0.0) for v in reversed(pos)]
    return Spectrum(tuple(pos) + tuple(mid) + tuple(neg))


def skew_spectrum(og: OrientedGraph) -> Spectrum:
    """Imaginary parts of the eigenvalues of S, descending.

    The result is exactly antisymmetric: entry k and entry n-1-k sum to
    exactly 0.0, and the middle entry of an odd-length spectrum is 0.0.
    """
    n = og.n
    if n == 0:
        return Spectrum(())
    sq = np.linalg.eigvalsh(skew_gram(og).astype(np.float64))
    # Eigenvalues of S S^T below the solver's resolution are zeros of the
    # exact matrix; flooring them here matters because the square root
    # would otherwise turn an O(eps)-sized residue into an O(sqrt(eps))
    # magnitude, far above spectrum-comparison tolerances.
    floor = 64.0 * np.finfo(np.float64).eps * n * max(float(sq[-1]), 1.0)
    sq = np.where(sq > floor, sq, 0.0)
    mags = np.sqrt(sq)[::-1]
    return _paired_spectrum(mags, n)


def spectra_equal(a: Spectrum, b: Spectrum, tol: float = 1e-8) -> bool:
    """Whether two descending spectra agree entrywise.

    Comparison is |a[i] - b[i]| <= tol * max(1, |b[i]|), so the tolerance
    reads as relative above magnitude 1 and absolute below it.
    """
    if len(a) != len(b):
        return False
    return all(
        abs(x - y) <= tol * max(1.0, abs(y)) for x, y in zip(a.values, b.values)
    )


def spectrum_energy(sp: Spectrum) -> float:
    """Sum of absolute values of a spectrum."""
    return float(sum(abs(v) for v in sp.values))


def graph_energy(g: Graph) -> float:
    """Sum of absolute values of the adjacency eigenvalues."""
    return spectrum_energy(adjacency_spectrum(g))


@dataclass(frozen=True)
class EnergyReport:
    """Skew energy of an orientation against the regular-degree bound.

    ``bound`` is n * sqrt(degree), the ceiling for k-regular graphs.
    ``exact_certificate`` records the outcome of the integer test
    S S^T == degree * I; ``is_maximum`` holds exactly when that
    certificate does.  For a non-regular graph ``degree`` and ``bound``
    are None and both flags are False (no bound applies, so the test is
    skipped rather than failed).
    """

    energy: float
    degree: int | None
    bound: float | None
    is_maximum: bool
    exact_certificate: bool


def is_gram_scalar(og: OrientedGraph, k: int | None = None) -> bool:
    """Exact integer test of S S^T == k I.

    When ``k`` is omitted the graph must be regular (the diagonal of
    S S^T is the degree sequence, so no other k can work); a non-regular
    graph then raises :class:`NotRegularError`.
    """
    if k is None:
        k = og.graph.regular_degree()
        if k is None:
            raise NotRegularError("graph is not regular")
    return np.array_equal(skew_gram(og), k * np.eye(og.n, dtype=np.int64))


def skew_energy(og: OrientedGraph) -> EnergyReport:
    """Skew energy plus the exact maximality certificate."""
    energy = spectrum_energy(skew_spectrum(og))
    k = og.graph.regular_degree()
    if k is None:
        return EnergyReport(
            energy=energy,
            degree=None,
            bound=None,
            is_maximum=False,
            exact_certificate=False,
        )
    certified = is_gram_scalar(og, k)
    return EnergyReport(
        energy=energy,
        degree=k,
        bound=og.n * float(np.sqrt(k)),
        is_maximum=certified,
        exact_certificate=certified,
    )
