"""JSON wire formats.

Every matrix artifact uses the row-major schema
``{"rows": R, "cols": C, "entries": [...]}`` where entries are ``[re, im]``
pairs for numeric matrices, ``"p/q"`` strings for exact rational matrices and
``{"r": "p/q", "s": "p/q"}`` objects for r + s/pi matrices.  Rationals travel
as strings so exactness survives the round trip.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from pathlib import Path

import numpy as np

from .linalg import Scenario
from .measures import MeasureSpec, measure_from_json
from .montecarlo import MeanEstimate
from .oracle import OracleResult
from .spectral import SymbolicMatrix, substitute_v


def complex_matrix_to_json(mat: np.ndarray) -> dict:
    mat = np.asarray(mat, dtype=complex)
    return {
        "rows": mat.shape[0],
        "cols": mat.shape[1],
        "entries": [[x.real, x.imag] for x in mat.ravel()],
    }


def complex_matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = obj["rows"], obj["cols"]
    entries = obj["entries"]
    if len(entries) != rows * cols:
        raise ValueError("entry count does not match rows * cols")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(rows, cols)


def rational_matrix_to_json(mat: np.ndarray) -> dict:
    return {
        "rows": mat.shape[0],
        "cols": mat.shape[1],
        "entries": [str(Fraction(x)) for x in mat.ravel()],
    }


def rational_matrix_from_json(obj: dict) -> np.ndarray:
    rows, cols = obj["rows"], obj["cols"]
    flat = np.array([Fraction(s) for s in obj["entries"]], dtype=object)
    return flat.reshape(rows, cols)


def symbolic_matrix_to_json(sym: SymbolicMatrix) -> dict:
    n = sym.dim
    return {
        "rows": n,
        "cols": n,
        "entries": [
            {"r": str(sym.rpart[i, j]), "s": str(sym.spart[i, j])}
            for i in range(n)
            for j in range(n)
        ],
    }


def symbolic_matrix_from_json(obj: dict) -> SymbolicMatrix:
    rows, cols = obj["rows"], obj["cols"]
    rp = np.array([Fraction(e["r"]) for e in obj["entries"]], dtype=object).reshape(rows, cols)
    sp = np.array([Fraction(e["s"]) for e in obj["entries"]], dtype=object).reshape(rows, cols)
    return SymbolicMatrix(rp, sp)


def matrix_kind(obj: dict) -> str:
    """Classify a matrix JSON object as complex, rational or symbolic."""
    e = obj["entries"][0] if obj["entries"] else [0, 0]
    if isinstance(e, str):
        return "rational"
    if isinstance(e, dict):
        return "symbolic"
    return "complex"


def any_matrix_to_float(obj: dict, v: float | None = None) -> np.ndarray:
    """Load any matrix schema as a float/complex array (symbolic at pi or v)."""
    kind = matrix_kind(obj)
    if kind == "complex":
        return complex_matrix_from_json(obj)
    if kind == "rational":
        return rational_matrix_from_json(obj).astype(np.float64)
    return substitute_v(symbolic_matrix_from_json(obj), math.pi if v is None else v)


# ---------------------------------------------------------------------------
# permutations in cycle notation (1-based), e.g. "(12)(34)"; identity is "()"
# ---------------------------------------------------------------------------


def perm_to_cycles(sigma: tuple[int, ...]) -> str:
    m = len(sigma)
    seen = [False] * m
    parts = []
    for start in range(m):
        if seen[start] or sigma[start] == start:
            seen[start] = True
            continue
        cyc = []
        j = start
        while not seen[j]:
            seen[j] = True
            cyc.append(j + 1)
            j = sigma[j]
        parts.append("(" + "".join(str(x) for x in cyc) + ")")
    return "".join(parts) if parts else "()"


def cycles_to_perm(text: str, m: int) -> tuple[int, ...]:
    perm = list(range(m))
    body = text.strip()
    if body in ("()", ""):
        return tuple(perm)
    for chunk in body.replace(")(", ")|(").split("|"):
        digits = [int(ch) - 1 for ch in chunk.strip("()")]
        for a, b in zip(digits, digits[1:] + digits[:1]):
            perm[a] = b
    return tuple(perm)


def oracle_result_to_json(result: OracleResult) -> dict:
    out = {
        "factors": list(result.scenario.factors),
        "m": result.scenario.power,
        "q": [[str(x) for x in qs] for qs in result.q],
        "matrix": rational_matrix_to_json(result.mean),
    }
    if result.coefficients is not None:
        out["coefficients"] = {
            perm_to_cycles(sigma): str(c) for sigma, c in sorted(result.coefficients.items())
        }
    if result.factor_spectra is not None:
        out["factor_spectra"] = [
            [[str(v), mult] for v, mult in spec] for spec in result.factor_spectra
        ]
    return out


def oracle_result_from_json(obj: dict) -> OracleResult:
    factors = tuple(obj["factors"])
    m = obj["m"]
    coeffs = None
    if "coefficients" in obj:
        coeffs = {
            cycles_to_perm(k, m): Fraction(v) for k, v in obj["coefficients"].items()
        }
    factor_spectra = None
    if "factor_spectra" in obj:
        factor_spectra = tuple(
            tuple((Fraction(v), mult) for v, mult in spec) for spec in obj["factor_spectra"]
        )
    return OracleResult(
        mean=rational_matrix_from_json(obj["matrix"]),
        coefficients=coeffs,
        scenario=Scenario(factors=factors, power=m),
        q=tuple(tuple(Fraction(x) for x in qs) for qs in obj["q"]),
        factor_spectra=factor_spectra,
    )


def estimate_to_json(est: MeanEstimate) -> dict:
    return {
        "matrix": complex_matrix_to_json(est.mean),
        "stderr": [[float(x) for x in row] for row in est.stderr],
        "stderr_real": [[float(x) for x in row] for row in est.stderr_real],
        "stderr_imag": [[float(x) for x in row] for row in est.stderr_imag],
        "stderr_max": est.stderr_max,
        "n_samples": est.n_samples,
        "seed": est.seed,
        "workers": est.workers,
        "measure": est.measure.to_json(),
        "m": est.scenario.power,
        "factors": list(est.scenario.factors),
    }


def estimate_from_json(obj: dict) -> MeanEstimate:
    measure: MeasureSpec = measure_from_json(obj["measure"])
    return MeanEstimate(
        mean=complex_matrix_from_json(obj["matrix"]),
        n_samples=obj["n_samples"],
        stderr=np.array(obj["stderr"], dtype=float),
        stderr_real=np.array(obj["stderr_real"], dtype=float),
        stderr_imag=np.array(obj["stderr_imag"], dtype=float),
        measure=measure,
        scenario=Scenario(factors=tuple(obj["factors"]), power=obj["m"]),
        seed=obj["seed"],
        workers=obj["workers"],
    )


def dump_json(obj: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")


def load_json(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def parse_measure_arg(text: str) -> MeasureSpec:
    """CLI --measure: inline JSON (starts with '{') or a file path."""
    text = text.strip()
    if text.startswith("{"):
        return measure_from_json(json.loads(text))
    return measure_from_json(load_json(text))
