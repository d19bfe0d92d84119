"""P1 finite elements for the Laplace eigenproblem on triangle meshes.

Assembly produces the standard piecewise-linear stiffness and consistent
mass matrices.  The generalized eigenproblem is solved for the smallest
modes by shift-invert Lanczos with a direct sparse factorization: Dirichlet
degrees of freedom are eliminated by row/column deletion, and the pure
Neumann zero mode is handled by solving with K + sigma*M (sigma =
1e-3 trace(K)/trace(M)) and back-transforming.  Iteration starts from a
fixed deterministic vector, so repeated runs give bit-identical results.

Discrete eigenvalues of the conforming method approach the continuum from
above at rate O(h^2); the refinement drivers solve on meshes h, h/2, h/4
and Richardson-extrapolate assuming that exact order.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg
import scipy.sparse as sparse
from scipy.sparse.linalg import ArpackNoConvergence, LinearOperator, eigsh, splu

from . import geometry
from .geometry import DomainSpec, Mesh

DEFAULT_TOL = 1e-9
MAXITER_PER_EIG = 500
N_EIGS_MAX = 20
_DENSE_CUTOFF = 400


class NonConvergenceError(RuntimeError):
    """Eigensolver failed to converge or residuals exceeded the tolerance."""


def assemble(mesh: Mesh):
    """Stiffness K and consistent mass M as sparse symmetric matrices.

    K row sums vanish (constants lie in the kernel) before any boundary
    constraint is applied.  Raises on degenerate triangles
    (area <= 1e-14 h^2).
    """
    verts = mesh.vertices
    tris = mesh.triangles
    p = verts[tris]  # (nt, 3, 2)
    # cyclic edge differences give the barycentric gradients
    b = np.stack(
        [p[:, 1, 1] - p[:, 2, 1], p[:, 2, 1] - p[:, 0, 1], p[:, 0, 1] - p[:, 1, 1]],
        axis=1,
    )
    c = np.stack(
        [p[:, 2, 0] - p[:, 1, 0], p[:, 0, 0] - p[:, 2, 0], p[:, 1, 0] - p[:, 0, 0]],
        axis=1,
    )
    det = b[:, 0] * c[:, 1] - b[:, 1] * c[:, 0]  # signed, = 2*area for ccw
    area = 0.5 * det
    if np.any(area <= 1e-14 * mesh.h**2):
        raise ValueError("degenerate triangle in mesh (area <= 1e-14 h^2)")

    nv = len(verts)
    rows = []
    cols = []
    k_vals = []
    m_vals = []
    for i in range(3):
        for j in range(3):
            rows.append(tris[:, i])
            cols.append(tris[:, j])
            k_vals.append((b[:, i] * b[:, j] + c[:, i] * c[:, j]) / (4.0 * area))
            m_factor = 1.0 / 6.0 if i == j else 1.0 / 12.0
            m_vals.append(m_factor * area)
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    K = sparse.csr_matrix((np.concatenate(k_vals), (rows, cols)), shape=(nv, nv))
    M = sparse.csr_matrix((np.concatenate(m_vals), (rows, cols)), shape=(nv, nv))
    return K, M


def dirichlet_dofs(mesh: Mesh) -> np.ndarray:
    """Vertex indices lying on any Dirichlet-marked boundary edge."""
    marked = set()
    for (a, b), m in zip(mesh.boundary_edges, mesh.boundary_markers):
        if m == geometry.DIRICHLET:
            marked.add(int(a))
            marked.add(int(b))
    return np.array(sorted(marked), dtype=np.int64)


@dataclass
class EigResult:
    """Eigenvalues of the constrained pencil with solver diagnostics."""

    eigenvalues: np.ndarray
    residuals: np.ndarray
    h: float
    dof_count: int
    bc_summary: str

    def to_record(self, domain: str, k: int) -> dict:
        return {
            "domain": domain,
            "k": k,
            "h": self.h,
            "dofs": self.dof_count,
            "value": float(self.eigenvalues[k] if k < len(self.eigenvalues) else math.nan),
            "residual": float(self.residuals.max()),
            "error_estimate": None,  # single-mesh solve carries no extrapolation estimate
        }


def solve_smallest(
    K,
    M,
    constrained_dofs,
    n_eigs: int,
    tol: float = DEFAULT_TOL,
    *,
    h: float = math.nan,
    bc_summary: str = "",
) -> EigResult:
    """n_eigs smallest generalized eigenvalues of the constrained pencil.

    constrained_dofs are eliminated by row/column deletion; the remaining
    system is shifted by sigma = 1e-3 trace(K)/trace(M) to make the operator
    definite, solved by shift-invert about zero, and back-transformed.
    Residuals ||K u - mu M u|| / ||u||_M are computed for every pair and
    must not exceed tol.
    """
    if n_eigs < 1 or n_eigs > N_EIGS_MAX:
        raise ValueError(f"n_eigs must be 1..{N_EIGS_MAX}")
    n_full = K.shape[0]
    constrained = np.asarray(sorted(set(map(int, constrained_dofs))), dtype=np.int64)
    keep = np.setdiff1d(np.arange(n_full), constrained)
    if keep.size == 0:
        raise ValueError("constraint elimination left an empty system")
    if keep.size <= n_eigs:
        raise ValueError(
            f"system of dimension {keep.size} cannot deliver {n_eigs} eigenpairs"
        )
    Kc = K[keep][:, keep].tocsc()
    Mc = M[keep][:, keep].tocsc()

    trace_k = Kc.diagonal().sum()
    trace_m = Mc.diagonal().sum()
    sigma = 1e-3 * trace_k / trace_m
    A = (Kc + sigma * Mc).tocsc()

    dim = keep.size
    if dim <= _DENSE_CUTOFF:
        Ad = A.toarray()
        Md = Mc.toarray()
        dense_vals, dense_vecs = scipy.linalg.eigh(Ad, Md)
        vals = dense_vals[:n_eigs]
        vecs = dense_vecs[:, :n_eigs]
        solve = lambda rhs: scipy.linalg.solve(Ad, rhs, assume_a="sym")
        vals, vecs = _rayleigh_ritz_refine(solve, A, Mc, vals, vecs)
    else:
        try:
            lu = splu(A)
        except RuntimeError as exc:
            raise NonConvergenceError(f"sparse factorization failed: {exc}") from exc
        op_inv = LinearOperator(A.shape, matvec=lu.solve, dtype=float)
        v0 = np.linspace(1.0, 2.0, dim)  # fixed start vector: deterministic runs
        try:
            vals, vecs = eigsh(
                A,
                k=n_eigs,
                M=Mc,
                sigma=0.0,
                which="LM",
                v0=v0,
                OPinv=op_inv,
                maxiter=MAXITER_PER_EIG * n_eigs,
                tol=0.0,
            )
        except ArpackNoConvergence as exc:
            raise NonConvergenceError(f"shift-invert iteration failed: {exc}") from exc
        order = np.argsort(vals)
        vals = vals[order]
        vecs = vecs[:, order]
        vals, vecs = _rayleigh_ritz_refine(lu.solve, A, Mc, vals, vecs)

    mu = vals - sigma
    residuals = np.empty(n_eigs)
    for i in range(n_eigs):
        u = vecs[:, i]
        r = Kc @ u - mu[i] * (Mc @ u)
        residuals[i] = np.linalg.norm(r) / math.sqrt(abs(u @ (Mc @ u)))
    if np.any(residuals > tol):
        raise NonConvergenceError(
            f"eigenpair residual {residuals.max():.3e} exceeds tolerance {tol:.1e}"
        )
    return EigResult(
        eigenvalues=mu,
        residuals=residuals,
        h=h,
        dof_count=int(dim),
        bc_summary=bc_summary,
    )


def _rayleigh_ritz_refine(solve, A, Mc, vals, vecs):
    """One inverse-iteration pass on the Ritz basis, then a projected solve.

    `solve` applies A^{-1}; the step damps the basis toward the smallest
    pencil eigenvectors and cuts residuals well below the floor left by the
    mass-matrix conditioning on high-aspect meshes.
    """
    try:
        W = solve(np.asarray(Mc @ vecs))
        G = W.T @ (Mc @ W)
        H = W.T @ (A @ W)
        small_vals, Y = scipy.linalg.eigh(H, G)
        refined = W @ Y
        # normalize columns in the M inner product
        norms = np.sqrt(np.einsum("ij,ij->j", refined, np.asarray(Mc @ refined)))
        refined /= norms
        return small_vals, refined
    except (scipy.linalg.LinAlgError, np.linalg.LinAlgError, ValueError):
        return vals, vecs  # keep the unrefined pairs


def solve_mesh(mesh: Mesh, n_eigs: int, tol: float = DEFAULT_TOL) -> EigResult:
    """Assemble and solve one mesh, honoring its boundary markers."""
    K, M = assemble(mesh)
    constrained = dirichlet_dofs(mesh)
    n_d = len(constrained)
    bc = "dirichlet" if n_d and n_d == len(_boundary_vertices(mesh)) else (
        "mixed" if n_d else "neumann"
    )
    return solve_smallest(
        K, M, constrained, n_eigs, tol, h=mesh.h, bc_summary=bc
    )


def _boundary_vertices(mesh: Mesh):
    out = set()
    for a, b in mesh.boundary_edges:
        out.add(int(a))
        out.add(int(b))
    return out


@dataclass
class ExtrapolationResult:
    """Richardson-extrapolated eigenvalue over meshes h, h/2, h/4."""

    value: float
    error_estimate: float
    values: tuple
    hs: tuple
    dofs: tuple
    residual: float
    fitted_order: float
    monotone: bool
    bc_summary: str

    def __iter__(self):  # allows `value, err = mu_k(...)`
        return iter((self.value, self.error_estimate))

    def to_record(self, domain: str, k: int) -> dict:
        return {
            "domain": domain,
            "k": k,
            "h": self.hs[-1],
            "dofs": self.dofs[-1],
            "value": self.value,
            "residual": self.residual,
            "error_estimate": self.error_estimate,
        }


def _mesh_ladder(spec: DomainSpec, refinements: int, dirichlet_classes):
    if refinements < 2:
        raise ValueError("need at least 2 refinements for h, h/2, h/4 meshes")
    mesh = geometry.triangulate(spec, dirichlet_classes=dirichlet_classes)
    for _ in range(refinements - 2):
        mesh = geometry.refine_mesh(mesh)
    ladder = [mesh]
    for _ in range(2):
        ladder.append(geometry.refine_mesh(ladder[-1]))
    return ladder


def _extrapolate_ladder(spec, indices, n_eigs: int, refinements: int, dirichlet_classes, tol):
    ladder = _mesh_ladder(spec, refinements, dirichlet_classes)
    results = [solve_mesh(m, n_eigs, tol) for m in ladder]
    out = []
    for index in indices:
        vals = tuple(float(r.eigenvalues[index]) for r in results)
        v0, v1, v2 = vals
        extrapolated = v2 + (v2 - v1) / 3.0
        err = abs(extrapolated - v2)
        scale = max(abs(v) for v in vals) + 1e-300
        monotone = v0 >= v1 - 1e-9 * scale and v1 >= v2 - 1e-9 * scale
        num, den = v0 - v1, v1 - v2
        fitted = math.log2(num / den) if (num > 0 and den > 0) else math.nan
        out.append(
            ExtrapolationResult(
                value=extrapolated,
                error_estimate=err,
                values=vals,
                hs=tuple(m.h for m in ladder),
                dofs=tuple(r.dof_count for r in results),
                residual=max(float(r.residuals.max()) for r in results),
                fitted_order=fitted,
                monotone=monotone,
                bc_summary=results[-1].bc_summary,
            )
        )
    return out


def mu_k(
    spec: DomainSpec,
    k: int,
    refinements: int = 3,
    dirichlet_classes: Optional[frozenset] = None,
    tol: float = DEFAULT_TOL,
) -> ExtrapolationResult:
    """Extrapolated k-th eigenvalue (mu_0 = 0 for a pure Neumann boundary).

    With mixed markers (e.g. a Dirichlet base on a half rhombus) the k-th
    eigenvalue of the constrained problem is returned, indexed from k = 1.
    """
    if k < 0:
        raise ValueError("eigenvalue index must be >= 0")
    has_dirichlet = bool(dirichlet_classes) or (
        isinstance(spec, geometry.HalfRhombus) and spec.base_marker == "dirichlet"
    )
    if has_dirichlet:
        if k < 1:
            raise ValueError("constrained problems index eigenvalues from k = 1")
        index, n_eigs = k - 1, k
    else:
        index, n_eigs = k, k + 1
    return _extrapolate_ladder(spec, [index], n_eigs, refinements, dirichlet_classes, tol)[0]


def mu_spectrum(
    spec: DomainSpec,
    k_max: int,
    refinements: int = 3,
    dirichlet_classes: Optional[frozenset] = None,
    tol: float = DEFAULT_TOL,
) -> list:
    """Extrapolated mu_1..mu_k_max from a single mesh ladder (Neumann)."""
    if dirichlet_classes:
        raise ValueError("mu_spectrum is for the pure Neumann problem")
    results = _extrapolate_ladder(
        spec, list(range(1, k_max + 1)), k_max + 1, refinements, None, tol
    )
    return results


def dirichlet_lambda_k(
    spec: DomainSpec,
    k: int,
    refinements: int = 3,
    tol: float = DEFAULT_TOL,
) -> ExtrapolationResult:
    """Extrapolated k-th Dirichlet eigenvalue (k >= 1), all markers Dirichlet."""
    if k < 1:
        raise ValueError("Dirichlet eigenvalues index from k = 1")
    return _extrapolate_ladder(
        spec, [k - 1], k, refinements, frozenset({geometry.ALL_CLASSES}), tol
    )[0]


def dirichlet_spectrum(
    spec: DomainSpec,
    k_max: int,
    refinements: int = 3,
    tol: float = DEFAULT_TOL,
) -> list:
    """Extrapolated lambda_1..lambda_k_max from a single mesh ladder."""
    return _extrapolate_ladder(
        spec,
        list(range(0, k_max)),
        k_max,
        refinements,
        frozenset({geometry.ALL_CLASSES}),
        tol,
    )


def write_json_records(records, path) -> None:
    """Serialize eigenvalue records ({domain, k, h, dofs, value, residual,
    error_estimate}) as a JSON array."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        json.dump(list(records), fh, indent=2)
        fh.write("\n")
