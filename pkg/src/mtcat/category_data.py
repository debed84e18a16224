"""F/R symbol data, coherence residuals, gauge transforms, rigidity scalars.

Index layout, fixed once for the whole package
----------------------------------------------
``F[a, b, c, d]`` is the change of basis between the two fusion trees of
``a x b x c -> d``:

* rows ``(e, alpha, beta)``: right tree ``a (b c)``; ``e`` is the channel of
  ``b x c``, ``alpha`` in ``N[b,c,e]``, ``beta`` in ``N[a,e,d]``;
* columns ``(f, gamma, delta)``: left tree ``(a b) c``; ``f`` is the channel
  of ``a x b``, ``gamma`` in ``N[a,b,f]``, ``delta`` in ``N[f,c,d]``.

A right-tree basis vector expands as ``sum_{f,gamma,delta} F * `` left-tree
vectors.  ``R[a, b, c]`` is the ``N[a,b,c] x N[b,a,c]`` matrix of the
elementary braiding ``a x b -> b x a`` restricted to channel ``c``; the
double braiding (monodromy) on a channel is ``R[b,a,c] @ R[a,b,c]``.

Blocks are stored sparsely: a key is present exactly when every multiplicity
range in its shape is non-empty.  Multiplicity indices are 0-based in memory
(1-based in serialized files).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import IncompleteData, InputError, RigidityDegenerate
from .fusion_ring import UNIT, FusionRing

FKey = tuple[int, int, int, int, int, int]  # (a, b, c, d, e, f)
RKey = tuple[int, int, int]  # (a, b, c)

FSymbols = dict  # FKey -> complex ndarray (N[b,c,e], N[a,e,d], N[a,b,f], N[f,c,d])
RSymbols = dict  # RKey -> complex ndarray (N[a,b,c], N[b,a,c])


def f_block_shape(ring: FusionRing, a, b, c, d, e, f):
    N = ring.N
    return (int(N[b, c, e]), int(N[a, e, d]), int(N[a, b, f]), int(N[f, c, d]))


def admissible_f_keys(ring: FusionRing) -> list[FKey]:
    """All F keys whose four multiplicity ranges are non-empty, in lex order."""
    if getattr(ring, "_f_keys", None) is None:
        Nb = ring.N > 0
        mask = np.einsum("bce,aed,abf,fcd->abcdef", Nb, Nb, Nb, Nb, optimize=True)
        ring._f_keys = [tuple(int(x) for x in row) for row in np.argwhere(mask)]
    return ring._f_keys


def admissible_r_keys(ring: FusionRing) -> list[RKey]:
    if getattr(ring, "_r_keys", None) is None:
        mask = (ring.N > 0) & (ring.N.transpose(1, 0, 2) > 0)
        ring._r_keys = [tuple(int(x) for x in row) for row in np.argwhere(mask)]
    return ring._r_keys


def fusion_vertices(ring: FusionRing) -> list[RKey]:
    """All triples (a,b,c) with N[a,b,c] > 0."""
    return [tuple(int(x) for x in row) for row in np.argwhere(ring.N > 0)]


@dataclass
class CategoryData:
    """A fusion ring together with its F and R symbols and optional weights.

    Treat instances as immutable once validated: every operation here is pure,
    so shared data is safe to read concurrently.  Use :meth:`copy` before
    perturbing entries.
    """

    ring: FusionRing
    F: FSymbols
    R: RSymbols
    weights: np.ndarray | None = None  # per-label lowest conformal weight
    central_charge: float | None = None
    name: str = ""

    def __post_init__(self):
        if self.weights is not None:
            self.weights = np.asarray(self.weights, dtype=float)
            if self.weights.shape != (self.ring.size,):
                raise InputError("weights must give one value per label")

    def f_block(self, a, b, c, d, e, f) -> np.ndarray:
        try:
            return self.F[(a, b, c, d, e, f)]
        except KeyError:
            raise IncompleteData((a, b, c, d, e, f), kind="F") from None

    def r_block(self, a, b, c) -> np.ndarray:
        try:
            return self.R[(a, b, c)]
        except KeyError:
            raise IncompleteData((a, b, c), kind="R") from None

    def copy(self) -> "CategoryData":
        return CategoryData(
            ring=self.ring,
            F={k: v.copy() for k, v in self.F.items()},
            R={k: v.copy() for k, v in self.R.items()},
            weights=None if self.weights is None else self.weights.copy(),
            central_charge=self.central_charge,
            name=self.name,
        )


def validate_symbols(data: CategoryData, cond_tol: float = 1e-12) -> list[tuple]:
    """Check F/R key sets match admissibility, shapes, and invertibility.

    Returns a list of (kind, key, message) problems; empty means consistent.
    """
    problems = []
    ring = data.ring
    want_f = set(admissible_f_keys(ring))
    have_f = set(data.F)
    for key in sorted(want_f - have_f):
        problems.append(("missing-F", key, "admissible F entry absent"))
    for key in sorted(have_f - want_f):
        problems.append(("extra-F", key, "F entry present for inadmissible tuple"))
    for key in sorted(want_f & have_f):
        shape = f_block_shape(ring, *key)
        if data.F[key].shape != shape:
            problems.append(("shape-F", key, f"block shape {data.F[key].shape}, expected {shape}"))
    want_r = set(admissible_r_keys(ring))
    have_r = set(data.R)
    for key in sorted(want_r - have_r):
        problems.append(("missing-R", key, "admissible R entry absent"))
    for key in sorted(have_r - want_r):
        problems.append(("extra-R", key, "R entry present for inadmissible tuple"))
    for key in sorted(want_r & have_r):
        a, b, c = key
        shape = (int(ring.N[a, b, c]), int(ring.N[b, a, c]))
        block = data.R[key]
        if block.shape != shape:
            problems.append(("shape-R", key, f"block shape {block.shape}, expected {shape}"))
        elif shape[0] == shape[1] and shape[0] > 0:
            sv = np.linalg.svd(block, compute_uv=False)
            if sv[-1] <= cond_tol * max(sv[0], 1.0):
                problems.append(("singular-R", key, "braiding block is not invertible"))
    if not problems:
        for (a, b, c, d) in sorted({k[:4] for k in want_f}):
            mat = f_matrix(data, a, b, c, d).matrix
            sv = np.linalg.svd(mat, compute_uv=False)
            if sv[-1] <= cond_tol * max(sv[0], 1.0):
                problems.append(("singular-F", (a, b, c, d), "fusing matrix is not invertible"))
    return problems


@dataclass
class LabeledMatrix:
    """Dense matrix with the (channel, multiplicities) tuple naming each slot."""

    matrix: np.ndarray
    row_index: list[tuple]  # (e, alpha, beta)
    col_index: list[tuple]  # (f, gamma, delta)


def f_matrix(data: CategoryData, a, b, c, d) -> LabeledMatrix:
    """Dense fusing matrix for (a,b,c,d) over (e,alpha,beta) x (f,gamma,delta)."""
    ring = data.ring
    a, b, c, d = (ring.index(x) for x in (a, b, c, d))
    N = ring.N
    es = [e for e in range(ring.size) if N[b, c, e] and N[a, e, d]]
    fs = [f for f in range(ring.size) if N[a, b, f] and N[f, c, d]]
    if not es or not fs:
        raise InputError(
            f"tuple ({a},{b},{c},{d}) is inadmissible: "
            + ("right-tree fusion space is empty" if not es else "left-tree fusion space is empty")
        )
    rows = [(e, al, be) for e in es for al in range(N[b, c, e]) for be in range(N[a, e, d])]
    cols = [(f, ga, de) for f in fs for ga in range(N[a, b, f]) for de in range(N[f, c, d])]
    mat = np.zeros((len(rows), len(cols)), dtype=complex)
    rpos = 0
    for e in es:
        rcount = N[b, c, e] * N[a, e, d]
        cpos = 0
        for f in fs:
            ccount = N[a, b, f] * N[f, c, d]
            block = data.f_block(a, b, c, d, e, f)
            mat[rpos : rpos + rcount, cpos : cpos + ccount] = block.reshape(rcount, ccount)
            cpos += ccount
        rpos += rcount
    return LabeledMatrix(mat, rows, cols)


def rigidity_scalar(data: CategoryData, a, tol: float = 1e-12) -> complex:
    """Unit-to-unit element of the fusing matrix of (a, dual(a), a, a).

    This is the scalar by which the zig-zag duality composites act; it is
    nonzero for coherent data, and its reciprocal is the categorical
    dimension (a sign or phase times the positive Perron dimension).
    """
    ring = data.ring
    a = ring.index(a)
    lm = f_matrix(data, a, int(ring.dual[a]), a, a)
    try:
        i = lm.row_index.index((UNIT, 0, 0))
        j = lm.col_index.index((UNIT, 0, 0))
    except ValueError:
        raise RigidityDegenerate(f"label {a} has no unit channel with its dual") from None
    value = complex(lm.matrix[i, j])
    if abs(value) < tol:
        raise RigidityDegenerate(
            f"unit-channel fusing element for label {a} has modulus {abs(value):.3e}"
        )
    return value


def f_inverse_unit_check(data: CategoryData, a) -> float:
    """|(F^-1)_unit,unit - F_unit,unit| for the fusing matrix of (a, a', a, a).

    With dual-pairing bases matched, the inverse fusing matrix has the same
    unit-to-unit element; a nonzero value flags inconsistently scaled pairing
    vertices.
    """
    ring = data.ring
    a = ring.index(a)
    lm = f_matrix(data, a, int(ring.dual[a]), a, a)
    i = lm.row_index.index((UNIT, 0, 0))
    j = lm.col_index.index((UNIT, 0, 0))
    try:
        inv = np.linalg.inv(lm.matrix)
    except np.linalg.LinAlgError:
        raise InputError(f"fusing matrix of ({a}, dual, {a}, {a}) is singular") from None
    return float(abs(inv[j, i] - lm.matrix[i, j]))


# ---------------------------------------------------------------------------
# coherence residuals


def triangle_residual(data: CategoryData) -> float:
    """Max deviation of unit-label fusing matrices from the identity.

    Whenever one of (a, b, c) is the unit, the fusing matrix has a single
    (e, f) block and both unit isomorphism conventions demand it be exactly
    the identity in the canonical basis.
    """
    worst = 0.0
    for key, block in data.F.items():
        a, b, c, _, _, _ = key
        if UNIT not in (a, b, c):
            continue
        nr = block.shape[0] * block.shape[1]
        nc = block.shape[2] * block.shape[3]
        dev = np.abs(block.reshape(nr, nc) - np.eye(nr, nc)).max()
        worst = max(worst, float(dev))
    return worst


def pentagon_residual(data: CategoryData) -> tuple[float, tuple]:
    """Largest deviation between the two re-association routes on four factors.

    Returns ``(max_abs_residual, worst_tuple)``; the tuple is
    ``(a, b, c, d, w, q, p, r, s)`` naming the instance: w the total channel,
    q the (c,d) channel, p the (b,q) channel, r the (a,b) channel, s the
    (r,c) channel.  Ties resolve to the lexicographically smallest tuple.
    """
    if data.ring.is_multiplicity_free():
        return _pentagon_residual_fast(data)
    return _pentagon_residual_general(data)


def _pentagon_residual_general(data: CategoryData) -> tuple[float, tuple]:
    ring = data.ring
    N = ring.N
    m = ring.size
    worst = 0.0
    worst_tuple = ()
    for a in range(m):
        for b in range(m):
            for c in range(m):
                for d in range(m):
                    for w in range(m):
                        res, tup = _pentagon_group(data, N, m, a, b, c, d, w)
                        if res > worst:
                            worst, worst_tuple = res, tup
    return worst, worst_tuple


def _pentagon_group(data: CategoryData, N, m, a, b, c, d, w):
    """One (a,b,c,d,w) family of pentagon instances, blockwise."""
    worst = 0.0
    worst_tuple = ()
    for q in range(m):
        if not N[c, d, q]:
            continue
        for p in range(m):
            if not (N[b, q, p] and N[a, p, w]):
                continue
            for r in range(m):
                if not N[a, b, r]:
                    continue
                for s in range(m):
                    if not (N[r, c, s] and N[s, d, w]):
                        continue
                    if N[r, q, w]:
                        B1 = data.f_block(a, b, q, w, p, r)  # (j, i, g, x)
                        B2 = data.f_block(r, c, d, w, q, s)  # (m, x, s, t)
                        lhs = np.einsum("jigx,mxst->mjigst", B1, B2)
                    else:
                        lhs = None  # empty sum over the (r,q) channel
                    rhs = None
                    for t in range(m):
                        if not (N[b, c, t] and N[t, d, p] and N[a, t, s]):
                            continue
                        A = data.f_block(b, c, d, p, q, t)  # (m, j, l, k)
                        B = data.f_block(a, t, d, w, p, s)  # (k, i, u, t)
                        C = data.f_block(a, b, c, s, t, r)  # (l, u, g, s)
                        term = np.einsum("mjlk,kiut,lugs->mjigst", A, B, C)
                        rhs = term if rhs is None else rhs + term
                    if lhs is None and rhs is None:
                        continue
                    if lhs is None:
                        diff = np.abs(rhs).max()
                    elif rhs is None:
                        diff = np.abs(lhs).max()
                    else:
                        diff = np.abs(lhs - rhs).max()
                    if diff > worst:
                        worst = float(diff)
                        worst_tuple = (a, b, c, d, w, q, p, r, s)
    return worst, worst_tuple


def _pentagon_plan(ring: FusionRing) -> np.ndarray:
    """Admissible multiplicity-free pentagon instances as an index table.

    Columns: a b c d w q p r s.  Cached on the ring: gauge transforms and
    entry perturbations share the ring object, so repeated evaluations reuse
    the plan.
    """
    if ring._pentagon_plan is not None:
        return ring._pentagon_plan
    N = ring.N > 0
    m = ring.size
    idx = np.arange(m)
    c_, d_, w_, q_, p_, r_, s_ = np.meshgrid(*([idx] * 7), indexing="ij", sparse=True)
    rows = []
    for a in range(m):
        for b in range(m):
            mask = (
                N[c_, d_, q_]
                & N[b, q_, p_]
                & N[a, p_, w_]
                & N[a, b, r_]
                & N[r_, c_, s_]
                & N[s_, d_, w_]
            )
            hits = np.argwhere(mask)  # columns: c d w q p r s (lex order)
            if hits.size:
                ab = np.broadcast_to(np.array([a, b]), (hits.shape[0], 2))
                rows.append(np.hstack([ab, hits]))
    plan = np.vstack(rows) if rows else np.empty((0, 9), dtype=int)
    ring._pentagon_plan = plan
    return plan


def _dense_f6(data: CategoryData) -> np.ndarray:
    """Multiplicity-free F symbols as one dense (m,)*6 array."""
    m = data.ring.size
    F6 = np.zeros((m,) * 6, dtype=complex)
    for key in admissible_f_keys(data.ring):
        block = data.F.get(key)
        if block is None:
            raise IncompleteData(key, kind="F")
        F6[key] = block.reshape(())
    return F6


def _dense_r3(data: CategoryData) -> np.ndarray:
    m = data.ring.size
    R3 = np.zeros((m,) * 3, dtype=complex)
    for key in admissible_r_keys(data.ring):
        block = data.R.get(key)
        if block is None:
            raise IncompleteData(key, kind="R")
        R3[key] = block.reshape(())
    return R3


def _pentagon_residual_fast(data: CategoryData) -> tuple[float, tuple]:
    plan = _pentagon_plan(data.ring)
    if plan.shape[0] == 0:
        return 0.0, ()
    m = data.ring.size
    flat = _dense_f6(data).reshape(-1)
    a, b, c, d, w, q, p, r, s = plan.T
    lhs = flat[_ravel6(m, a, b, q, w, p, r)] * flat[_ravel6(m, r, c, d, w, q, s)]
    rhs = np.zeros_like(lhs)
    N = data.ring.N
    for t in range(m):
        ok = (N[b, c, t] > 0) & (N[t, d, p] > 0) & (N[a, t, s] > 0)
        if not ok.any():
            continue
        sel = np.nonzero(ok)[0]
        rhs[sel] += (
            flat[_ravel6(m, b[sel], c[sel], d[sel], p[sel], q[sel], t)]
            * flat[_ravel6(m, a[sel], t, d[sel], w[sel], p[sel], s[sel])]
            * flat[_ravel6(m, a[sel], b[sel], c[sel], s[sel], t, r[sel])]
        )
    resid = np.abs(lhs - rhs)
    k = int(np.argmax(resid))
    return float(resid[k]), tuple(int(x) for x in plan[k])


def _ravel6(m, *idx):
    out = np.asarray(idx[0])
    for nxt in idx[1:]:
        out = out * m + np.asarray(nxt)
    return out


def hexagon_residual(data: CategoryData, direction: str = "braid") -> tuple[float, tuple]:
    """Largest deviation of the braiding coherence identity (R-F-R vs F-R-F).

    ``direction="braid"`` uses the elementary braiding; ``"inverse_braid"``
    replaces each R[x,y,c] by the inverse of R[y,x,c].  Returns (residual,
    worst tuple (a, b, c, d, g, f)) with g the (c,a) channel and f the (a,b)
    channel of the instance.
    """
    if direction not in ("braid", "inverse_braid"):
        raise InputError(f"unknown hexagon direction {direction!r}")
    if data.ring.is_multiplicity_free():
        return _hexagon_residual_fast(data, direction)
    return _hexagon_residual_general(data, direction)


def _r_entry(data: CategoryData, direction: str, x, y, z) -> np.ndarray:
    if direction == "braid":
        return data.r_block(x, y, z)
    return np.linalg.inv(data.r_block(y, x, z))


def _hexagon_residual_fast(data: CategoryData, direction: str) -> tuple[float, tuple]:
    ring = data.ring
    N = (ring.N > 0).astype(np.int8)
    F6 = _dense_f6(data)
    R3 = _dense_r3(data)
    if direction == "inverse_braid":
        Rt = R3.transpose(1, 0, 2)
        R = np.divide(1.0, Rt, out=np.zeros_like(Rt), where=Rt != 0)
    else:
        R = R3
    lhs = np.einsum("bcadgh,ahd,abcdhf->abcdgf", F6, R, F6, optimize=True)
    rhs = np.einsum("acg,bacdgf,abf->abcdgf", R, F6, R, optimize=True)
    mask = np.einsum("cag,bgd,abf,fcd->abcdgf", N, N, N, N, optimize=True) > 0
    resid = np.where(mask, np.abs(lhs - rhs), 0.0)
    k = np.unravel_index(int(np.argmax(resid)), resid.shape)
    return float(resid[k]), tuple(int(x) for x in k)


def _hexagon_residual_general(data: CategoryData, direction: str) -> tuple[float, tuple]:
    ring = data.ring
    N = ring.N
    m = ring.size
    worst = 0.0
    worst_tuple = ()
    for a in range(m):
        for b in range(m):
            for c in range(m):
                for d in range(m):
                    gs = [g for g in range(m) if N[c, a, g] and N[b, g, d]]
                    fs = [f for f in range(m) if N[a, b, f] and N[f, c, d]]
                    for g in gs:
                        for f in fs:
                            lhs = None
                            for h in range(m):
                                if not (N[b, c, h] and N[h, a, d] and N[a, h, d]):
                                    continue
                                B1 = data.f_block(b, c, a, d, g, h)  # (p, t, s, k)
                                Rah = _r_entry(data, direction, a, h, d)  # (b, k)
                                B2 = data.f_block(a, b, c, d, h, f)  # (s, b, g, d)
                                term = np.einsum("ptsk,bk,sbgd->ptgd", B1, Rah, B2)
                                lhs = term if lhs is None else lhs + term
                            if not (N[a, c, g] and N[b, a, f]):
                                rhs = None
                            else:
                                Racg = _r_entry(data, direction, a, c, g)  # (l, p)
                                B3 = data.f_block(b, a, c, d, g, f)  # (l, t, m, d)
                                Rabf = _r_entry(data, direction, a, b, f)  # (g, m)
                                rhs = np.einsum("lp,ltmd,gm->ptgd", Racg, B3, Rabf)
                            if lhs is None and rhs is None:
                                continue
                            if lhs is None:
                                diff = np.abs(rhs).max()
                            elif rhs is None:
                                diff = np.abs(lhs).max()
                            else:
                                diff = np.abs(lhs - rhs).max()
                            if diff > worst:
                                worst = float(diff)
                                worst_tuple = (a, b, c, d, g, f)
    return worst, worst_tuple


# ---------------------------------------------------------------------------
# gauge transforms


@dataclass
class GaugeTransform:
    """Invertible basis change on each fusion multiplicity space.

    Maps (a, b, c) -> invertible N[a,b,c] x N[a,b,c] matrix.  Unit-containing
    triples (e,a,a), (a,e,a) and (a,dual(a),e) must carry the identity: those
    bases are pinned, which is what keeps the rigidity scalar and everything
    derived from it well defined.
    """

    ring: FusionRing
    matrices: dict = field(default_factory=dict)  # RKey -> ndarray

    def matrix(self, a, b, c) -> np.ndarray:
        g = self.matrices.get((a, b, c))
        if g is None:
            return np.eye(int(self.ring.N[a, b, c]), dtype=complex)
        return np.asarray(g, dtype=complex)

    def validate(self, cond_tol: float = 1e-12):
        ring = self.ring
        for (a, b, c), g in self.matrices.items():
            n = int(ring.N[a, b, c])
            if n == 0:
                raise InputError(f"gauge given on inadmissible triple ({a},{b},{c})")
            g = np.asarray(g, dtype=complex)
            if g.shape != (n, n):
                raise InputError(
                    f"gauge on ({a},{b},{c}) has shape {g.shape}, expected ({n},{n})"
                )
            sv = np.linalg.svd(g, compute_uv=False)
            if sv[-1] <= cond_tol * max(sv[0], 1.0):
                raise InputError(f"gauge matrix on ({a},{b},{c}) is not invertible")
            if _is_unit_triple(ring, a, b, c) and not np.allclose(g, np.eye(n), atol=1e-14):
                raise InputError(f"gauge on unit triple ({a},{b},{c}) must be the identity")


def _is_unit_triple(ring: FusionRing, a, b, c) -> bool:
    return a == UNIT or b == UNIT or (c == UNIT and b == ring.dual[a])


def random_gauge(ring: FusionRing, seed: int) -> GaugeTransform:
    """Seeded random admissible gauge: Haar unitary per non-unit triple."""
    rng = np.random.default_rng(seed)
    mats = {}
    for (a, b, c) in fusion_vertices(ring):
        if _is_unit_triple(ring, a, b, c):
            continue
        n = int(ring.N[a, b, c])
        z = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        qmat, rmat = np.linalg.qr(z)
        qmat = qmat * (np.diagonal(rmat) / np.abs(np.diagonal(rmat)))
        mats[(a, b, c)] = qmat
    return GaugeTransform(ring=ring, matrices=mats)


def gauge_transform(data: CategoryData, gauge: GaugeTransform) -> CategoryData:
    """Conjugate the symbol data by a basis change of the fusion spaces.

    Per block, F'[a,b,c,d] = (g[b,c,e] (x) g[a,e,d]) F (g[a,b,f] (x) g[f,c,d])^-1
    and R'[a,b,c] = inv(g[a,b,c])^T R[a,b,c] g[b,a,c]^T.  The ring object is
    shared, not copied.
    """
    if gauge.ring is not data.ring and gauge.ring != data.ring:
        raise InputError("gauge transform built for a different fusion ring")
    gauge.validate()
    ring = data.ring
    N = ring.N
    newF = {}
    for (a, b, c, d), keys in _f_keys_by_tuple(data).items():
        es = sorted({k[4] for k in keys})
        fs = sorted({k[5] for k in keys})
        lm = f_matrix(data, a, b, c, d)
        row_g = _block_diag(
            [np.kron(gauge.matrix(b, c, e), gauge.matrix(a, e, d)) for e in es]
        )
        col_g = _block_diag(
            [np.kron(gauge.matrix(a, b, f), gauge.matrix(f, c, d)) for f in fs]
        )
        new = row_g @ lm.matrix @ np.linalg.inv(col_g)
        rpos = 0
        for e in es:
            rcount = N[b, c, e] * N[a, e, d]
            cpos = 0
            for f in fs:
                ccount = N[a, b, f] * N[f, c, d]
                newF[(a, b, c, d, e, f)] = np.ascontiguousarray(
                    new[rpos : rpos + rcount, cpos : cpos + ccount].reshape(
                        N[b, c, e], N[a, e, d], N[a, b, f], N[f, c, d]
                    )
                )
                cpos += ccount
            rpos += rcount
    newR = {}
    for (a, b, c), block in data.R.items():
        g_ab = gauge.matrix(a, b, c)
        g_ba = gauge.matrix(b, a, c)
        newR[(a, b, c)] = np.linalg.inv(g_ab).T @ block @ g_ba.T
    return CategoryData(
        ring=ring,
        F=newF,
        R=newR,
        weights=None if data.weights is None else data.weights.copy(),
        central_charge=data.central_charge,
        name=data.name,
    )


def _f_keys_by_tuple(data: CategoryData) -> dict:
    grouped = {}
    for key in data.F:
        grouped.setdefault(key[:4], []).append(key)
    return grouped


def _block_diag(blocks):
    n = sum(b.shape[0] for b in blocks)
    k = sum(b.shape[1] for b in blocks)
    out = np.zeros((n, k), dtype=complex)
    i = j = 0
    for b in blocks:
        out[i : i + b.shape[0], j : j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out


def coherence_summary(data: CategoryData) -> dict:
    """All coherence residuals in one dict (pentagon, hexagons, triangle)."""
    pent, pent_at = pentagon_residual(data)
    hex1, hex1_at = hexagon_residual(data, "braid")
    hex2, hex2_at = hexagon_residual(data, "inverse_braid")
    return {
        "pentagon": pent,
        "pentagon_worst": pent_at,
        "hexagon_braid": hex1,
        "hexagon_braid_worst": hex1_at,
        "hexagon_inverse": hex2,
        "hexagon_inverse_worst": hex2_at,
        "triangle": triangle_residual(data),
    }
