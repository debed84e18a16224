"""Category file format (JSON, schema version 1) and report serialization.

File layout::

    {
      "schema_version": 1,
      "name": "fibonacci",
      "labels": ["1", "tau"],
      "dual": [0, 1],
      "fusion": [[a, b, c, N], ...],                 # nonzero entries only
      "f_symbols": [[a,b,c,d,e,f, alpha,beta,gamma,delta, re, im], ...],
      "r_symbols": [[a,b,c, alpha,beta, re, im], ...],
      "weights": [[a, h_a], ...],                    # optional
      "central_charge": c                            # optional
    }

Labels are referenced by index; multiplicity indices are 1-based in files
(0-based in memory).  Floats serialize via ``repr`` (shortest decimal that
round-trips the double, at most 17 significant digits), so save -> load is
exact and reports are byte-reproducible.
"""

from __future__ import annotations

import hashlib
import json

import numpy as np

from . import __version__
from .category_data import (
    CategoryData,
    f_block_shape,
    f_inverse_unit_check,
    hexagon_residual,
    pentagon_residual,
    rigidity_scalar,
    triangle_residual,
    validate_symbols,
)
from .errors import (
    InputError,
    ParseError,
    RigidityDegenerate,
    SchemaError,
    ValidationError,
)
from .fusion_ring import FusionRing, validate_ring
from .ribbon_modular import (
    COHERENCE_TOL,
    DET_TOL,
    check_modular,
    ribbon_residual,
    twist_weight_residual,
)

SCHEMA_VERSION = 1
RIGIDITY_FLOOR = 1e-6
CHECK_NAMES = ("pentagon", "hexagon", "triangle", "ribbon", "rigidity", "modularity")


# ---------------------------------------------------------------------------
# save


def category_to_dict(data: CategoryData) -> dict:
    ring = data.ring
    doc = {
        "schema_version": SCHEMA_VERSION,
        "name": data.name,
        "labels": list(ring.names),
        "dual": [int(x) for x in ring.dual],
        "fusion": [
            [int(a), int(b), int(c), int(ring.N[a, b, c])]
            for (a, b, c) in np.argwhere(ring.N > 0)
        ],
        "f_symbols": [],
        "r_symbols": [],
    }
    for key in sorted(data.F):
        a, b, c, d, e, f = key
        block = data.F[key]
        for (al, be, ga, de), value in np.ndenumerate(block):
            doc["f_symbols"].append(
                [a, b, c, d, e, f, al + 1, be + 1, ga + 1, de + 1,
                 float(value.real), float(value.imag)]
            )
    for key in sorted(data.R):
        a, b, c = key
        block = data.R[key]
        for (al, be), value in np.ndenumerate(block):
            doc["r_symbols"].append(
                [a, b, c, al + 1, be + 1, float(value.real), float(value.imag)]
            )
    if data.weights is not None:
        doc["weights"] = [[a, float(h)] for a, h in enumerate(data.weights)]
    if data.central_charge is not None:
        doc["central_charge"] = float(data.central_charge)
    return doc


def dumps(data: CategoryData) -> str:
    return json.dumps(category_to_dict(data), indent=1, sort_keys=True)


def save(data: CategoryData, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(data))
        fh.write("\n")


def content_hash(data: CategoryData) -> str:
    """sha256 of the canonical serialization; the report provenance key."""
    return hashlib.sha256(dumps(data).encode()).hexdigest()


# ---------------------------------------------------------------------------
# load


def load(path) -> CategoryData:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text)


def loads(text: str) -> CategoryData:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return category_from_dict(doc)


def category_from_dict(doc) -> CategoryData:
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise SchemaError(f"schema_version must be {SCHEMA_VERSION}")
    labels = _expect(doc, "labels", list)
    if not labels or not all(isinstance(x, str) for x in labels):
        raise SchemaError("labels must be a non-empty list of strings")
    if len(set(labels)) != len(labels):
        raise SchemaError("duplicate label names")
    m = len(labels)
    dual = [_as_int(x, "dual") for x in _expect(doc, "dual", list)]
    if sorted(dual) != list(range(m)):
        raise SchemaError("dual must be a permutation of 0..m-1")

    N = np.zeros((m, m, m), dtype=int)
    seen = set()
    for row in _expect(doc, "fusion", list):
        a, b, c, mult = _int_row(row, 4, "fusion")
        _check_range((a, b, c), m, "fusion")
        if (a, b, c) in seen:
            raise SchemaError(f"duplicate fusion key ({a},{b},{c})")
        seen.add((a, b, c))
        if mult < 0:
            raise SchemaError(f"fusion multiplicity at ({a},{b},{c}) is negative")
        N[a, b, c] = mult

    ring = FusionRing(labels, dual, N)
    report = validate_ring(ring)
    if not report.ok:
        raise ValidationError(
            "fusion ring invariants violated:\n" + str(report), report.violations
        )

    F = {}
    for row in _expect(doc, "f_symbols", list):
        if not isinstance(row, list) or len(row) != 12:
            raise SchemaError(f"f_symbols row must have 12 entries, got {row!r}")
        a, b, c, d, e, f = (_as_int(x, "f_symbols") for x in row[:6])
        al, be, ga, de = (_as_int(x, "f_symbols") for x in row[6:10])
        _check_range((a, b, c, d, e, f), m, "f_symbols")
        shape = f_block_shape(ring, a, b, c, d, e, f)
        if 0 in shape:
            raise SchemaError(f"f_symbols entry for inadmissible tuple ({a},{b},{c},{d},{e},{f})")
        key = (a, b, c, d, e, f)
        if key not in F:
            F[key] = np.full(shape, np.nan, dtype=complex)
        idx = (al - 1, be - 1, ga - 1, de - 1)
        if not all(0 <= i < n for i, n in zip(idx, shape)):
            raise SchemaError(
                f"multiplicity index ({al},{be},{ga},{de}) out of range for {key}"
            )
        if not np.isnan(F[key][idx].real):
            raise SchemaError(f"duplicate f_symbols key {key + (al, be, ga, de)}")
        F[key][idx] = complex(_as_number(row[10], "f_symbols"), _as_number(row[11], "f_symbols"))
    for key, block in F.items():
        if np.isnan(block.real).any():
            raise SchemaError(f"f_symbols block {key} is only partially specified")

    R = {}
    for row in _expect(doc, "r_symbols", list):
        if not isinstance(row, list) or len(row) != 7:
            raise SchemaError(f"r_symbols row must have 7 entries, got {row!r}")
        a, b, c = (_as_int(x, "r_symbols") for x in row[:3])
        al, be = (_as_int(x, "r_symbols") for x in row[3:5])
        _check_range((a, b, c), m, "r_symbols")
        shape = (int(N[a, b, c]), int(N[b, a, c]))
        if 0 in shape:
            raise SchemaError(f"r_symbols entry for inadmissible tuple ({a},{b},{c})")
        key = (a, b, c)
        if key not in R:
            R[key] = np.full(shape, np.nan, dtype=complex)
        idx = (al - 1, be - 1)
        if not all(0 <= i < n for i, n in zip(idx, shape)):
            raise SchemaError(f"multiplicity index ({al},{be}) out of range for {key}")
        if not np.isnan(R[key][idx].real):
            raise SchemaError(f"duplicate r_symbols key {key + (al, be)}")
        R[key][idx] = complex(_as_number(row[5], "r_symbols"), _as_number(row[6], "r_symbols"))
    for key, block in R.items():
        if np.isnan(block.real).any():
            raise SchemaError(f"r_symbols block {key} is only partially specified")

    weights = None
    if "weights" in doc:
        weights = np.zeros(m)
        got = set()
        for row in doc["weights"]:
            if not isinstance(row, list) or len(row) != 2:
                raise SchemaError(f"weights row must be [label, h], got {row!r}")
            a = _as_int(row[0], "weights")
            _check_range((a,), m, "weights")
            if a in got:
                raise SchemaError(f"duplicate weight for label {a}")
            got.add(a)
            weights[a] = _as_number(row[1], "weights")
        if got != set(range(m)):
            raise SchemaError("weights must cover every label when present")

    central = doc.get("central_charge")
    if central is not None and not isinstance(central, (int, float)):
        raise SchemaError("central_charge must be a number")

    data = CategoryData(
        ring=ring,
        F=F,
        R=R,
        weights=weights,
        central_charge=None if central is None else float(central),
        name=str(doc.get("name", "")),
    )
    problems = validate_symbols(data)
    if problems:
        lines = [f"{kind} {key}: {msg}" for kind, key, msg in problems]
        raise ValidationError("symbol data invalid:\n" + "\n".join(lines))
    return data


def _expect(doc, key, typ):
    if key not in doc:
        raise SchemaError(f"missing required key {key!r}")
    if not isinstance(doc[key], typ):
        raise SchemaError(f"key {key!r} must be a {typ.__name__}")
    return doc[key]


def _as_int(x, where):
    if isinstance(x, bool) or not isinstance(x, int):
        raise SchemaError(f"{where}: expected integer, got {x!r}")
    return x


def _as_number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise SchemaError(f"{where}: expected number, got {x!r}")
    return float(x)


def _int_row(row, n, where):
    if not isinstance(row, list) or len(row) != n:
        raise SchemaError(f"{where} row must have {n} integers, got {row!r}")
    return tuple(_as_int(x, where) for x in row)


def _check_range(indices, m, where):
    for i in indices:
        if not 0 <= i < m:
            raise SchemaError(f"{where}: label index {i} out of range 0..{m - 1}")


# ---------------------------------------------------------------------------
# reports


def run_report(data: CategoryData, checks=None, tolerance: float = 1e-9) -> dict:
    """Evaluate the requested checks and assemble the report document.

    ``checks`` defaults to all of them.  Pass/fail per check uses
    ``tolerance``; the overall verdict always comes from the full pipeline
    with its own pinned thresholds (coherence 1e-7, determinant 1e-8
    relative), so the verdict is stable under tolerance tweaks.
    """
    if checks is None:
        checks = CHECK_NAMES
    checks = list(checks)
    for c in checks:
        if c not in CHECK_NAMES:
            raise InputError(f"unknown check {c!r}; known: {', '.join(CHECK_NAMES)}")

    rep = check_modular(data)
    entries = {}
    for c in checks:
        entries[c] = _one_check(data, rep, c, tolerance)

    def cplx(z):
        return [float(np.real(z)), float(np.imag(z))]

    def cmat(M):
        return [[cplx(z) for z in row] for row in np.asarray(M)]

    def cvec(v):
        return [cplx(z) for z in np.asarray(v)]

    matrices = {
        "dims": cvec(rep.dims),
        "fp_dims": [float(x) for x in rep.fp_dims],
        "twists": cvec(rep.twists),
        "s_tilde": cmat(rep.s_tilde.entries),
        "s_norm": None if rep.s_norm is None else cmat(rep.s_norm.entries),
        "t": None if rep.t_diag is None else cvec(rep.t_diag),
    }
    report = {
        "schema_version": SCHEMA_VERSION,
        "name": data.name,
        "checks": entries,
        "verdict": rep.verdict,
        "residuals": {k: _finite(v) for k, v in sorted(rep.residuals.items())},
        "global_dim_sq": rep.global_dim_sq,
        "gauss_sums": {
            "plus": cplx(rep.gauss_sums[0]),
            "minus": cplx(rep.gauss_sums[1]),
        },
        "matrices": matrices,
        "provenance": {
            "input_sha256": content_hash(data),
            "tool_version": __version__,
            "tolerance": tolerance,
            "coherence_tol": COHERENCE_TOL,
            "det_tol": DET_TOL,
            "rigidity_floor": RIGIDITY_FLOOR,
        },
    }
    return report


def _one_check(data, rep, name, tol):
    if name == "pentagon":
        residual = rep.residuals.get("pentagon", pentagon_residual(data)[0])
        return _entry(residual, tol)
    if name == "hexagon":
        residual = max(
            rep.residuals.get("hexagon_braid", hexagon_residual(data, "braid")[0]),
            rep.residuals.get(
                "hexagon_inverse", hexagon_residual(data, "inverse_braid")[0]
            ),
        )
        return _entry(residual, tol)
    if name == "triangle":
        return _entry(rep.residuals.get("triangle", triangle_residual(data)), tol)
    if name == "ribbon":
        residual = max(
            rep.residuals.get("ribbon", ribbon_residual(data)),
            rep.residuals.get("twist_weights", twist_weight_residual(data)),
        )
        return _entry(residual, tol)
    if name == "rigidity":
        worst = 0.0
        for a in range(data.ring.size):
            try:
                value = rigidity_scalar(data, a)
            except RigidityDegenerate:
                return _entry(float("inf"), tol)
            if abs(value) <= RIGIDITY_FLOOR:
                return _entry(float("inf"), tol)
            worst = max(worst, f_inverse_unit_check(data, a))
        return _entry(worst, tol)
    # modularity: invertibility margin of S~, plus the pipeline verdict
    s = rep.s_tilde.entries
    if s.size == 0:
        return {"residual": None, "threshold": DET_TOL, "pass": False}
    sv = np.linalg.svd(s, compute_uv=False)
    margin = float(sv[-1] / sv[0]) if sv[0] > 0 else 0.0
    return {
        "residual": margin,  # invertibility margin: pass needs it above threshold
        "threshold": DET_TOL,
        "pass": rep.verdict == "modular",
    }


def _entry(residual, tol):
    return {"residual": _finite(residual), "threshold": tol, "pass": residual < tol}


def _finite(x):
    return float(x) if np.isfinite(x) else None


def report_to_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def report_to_text(report: dict) -> str:
    lines = []
    name = report["name"] or "(unnamed)"
    lines.append(f"category: {name}")
    lines.append(f"verdict:  {report['verdict']}")
    lines.append("")
    lines.append(f"{'check':<12} {'residual':>12} {'threshold':>12}  result")
    for cname, entry in report["checks"].items():
        res = entry["residual"]
        res_s = "inf" if res is None else f"{res:.3e}"
        verdict = "pass" if entry["pass"] else "FAIL"
        lines.append(f"{cname:<12} {res_s:>12} {entry['threshold']:>12.1e}  {verdict}")
    lines.append("")
    dims = report["matrices"]["dims"]
    fp = report["matrices"]["fp_dims"]
    tw = report["matrices"]["twists"]
    lines.append(f"{'label':<10} {'dim':>22} {'fp_dim':>12} {'twist':>24}")
    for i in range(len(dims)):
        d = complex(*dims[i])
        t = complex(*tw[i])
        lines.append(f"{i:<10} {_fmt_c(d):>22} {fp[i]:>12.8f} {_fmt_c(t):>24}")
    return "\n".join(lines)


def _fmt_c(z: complex) -> str:
    if abs(z.imag) < 5e-13:
        return f"{z.real:.8f}"
    return f"{z.real:.6f}{z.imag:+.6f}i"


def all_pass(report: dict) -> bool:
    return all(entry["pass"] for entry in report["checks"].values())
