"""Machine-readable state and report files.

JSON numbers carry 17 significant digits (round-trip exact for IEEE
doubles) and key order is fixed, so identical inputs give byte-identical
files.  Complex values are [re, im] pairs.  CSV uses '.' as the decimal
separator, ',' as the field separator and a mandatory header row.
"""

import io
import json
import math

import numpy as np

from .chessboard import INDEX_CONVENTION, CanonicalParams, RawParams

FLOAT_FORMAT = ".17g"


def format_float(x):
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x}")
    return format(x, FLOAT_FORMAT)


def dumps(obj):
    """Deterministic JSON text (insertion-ordered keys, 17-digit floats)."""
    out = io.StringIO()
    _emit(obj, out)
    return out.getvalue()


def _emit(obj, out):
    if obj is None:
        out.write("null")
    elif obj is True:
        out.write("true")
    elif obj is False:
        out.write("false")
    elif isinstance(obj, str):
        out.write(json.dumps(obj))
    elif isinstance(obj, (int, np.integer)):
        out.write(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.write(format_float(obj))
    elif isinstance(obj, dict):
        out.write("{")
        for k, (key, value) in enumerate(obj.items()):
            if k:
                out.write(", ")
            out.write(json.dumps(str(key)))
            out.write(": ")
            _emit(value, out)
        out.write("}")
    elif isinstance(obj, (list, tuple, np.ndarray)):
        out.write("[")
        for k, value in enumerate(obj):
            if k:
                out.write(", ")
            _emit(value, out)
        out.write("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def complex_pair(z):
    z = complex(z)
    return [z.real, z.imag]


def params_to_dict(params):
    if isinstance(params, CanonicalParams):
        return {
            "kind": "canonical",
            "a": params.a, "b": params.b, "c": params.c, "d": params.d,
            "m": params.m, "n": params.n,
            "s": complex_pair(params.s), "t": complex_pair(params.t),
        }
    if isinstance(params, RawParams):
        d = {"kind": "raw"}
        for name in ("a", "b", "c", "d", "m", "n", "s", "t"):
            d[name] = complex_pair(getattr(params, name))
        return d
    raise TypeError(f"unsupported parameter type {type(params).__name__}")


def params_from_dict(d):
    kind = d.get("kind")
    names = ("a", "b", "c", "d", "m", "n", "s", "t")
    if kind == "canonical":
        reals = [float(d[x]) for x in names[:6]]
        s = complex(*d["s"])
        t = complex(*d["t"])
        return CanonicalParams(*reals, s, t)
    if kind == "raw":
        return RawParams(*(complex(*d[x]) for x in names))
    raise ValueError(f"unknown params kind {kind!r}")


def matrix_to_pairs(m):
    m = np.asarray(m, dtype=complex)
    return [[[z.real, z.imag] for z in row] for row in m]


def matrix_from_pairs(rows):
    return np.array([[complex(re, im) for re, im in row] for row in rows])


def state_to_json(state):
    return dumps({
        "params": params_to_dict(state.params),
        "norm_constant": state.norm_constant,
        "matrix": matrix_to_pairs(state.rho),
        "index_convention": INDEX_CONVENTION,
    }) + "\n"


def state_from_json(text):
    """Parse a state file; returns (params, norm_constant, matrix)."""
    doc = json.loads(text)
    params = params_from_dict(doc["params"])
    matrix = matrix_from_pairs(doc["matrix"])
    if matrix.shape != (9, 9):
        raise ValueError(f"state matrix must be 9x9, got {matrix.shape}")
    return params, float(doc["norm_constant"]), matrix


def report_to_json(report):
    doc = {
        "params": params_to_dict(report.params),
        "spectrum": [float(x) for x in report.spectrum],
        "pt_min_eigenvalue": report.pt_min_eigenvalue,
        "sigma_equals_rho": report.sigma_equals_rho,
        "analytic_range": report.analytic_range.value,
        "search_residual": report.search_residual,
        "witness": (None if report.witness is None
                    else [complex_pair(z) for z in report.witness]),
        "verdict": report.verdict.value,
        "reason": report.reason,
        "search_config": {
            "restarts": report.search_config.restarts,
            "max_iters": report.search_config.max_iters,
            "tol_converge": report.search_config.tol_converge,
            "seed": report.search_config.seed,
        },
    }
    return dumps(doc) + "\n"


def csv_text(header, rows):
    """CSV with a mandatory header; cells are already formatted strings."""
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"
