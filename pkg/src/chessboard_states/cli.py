"""Command-line front end.

Exit codes follow a scriptable contract: 0 for success (certify: a
definite verdict), 2 for invalid input of any kind, 3 for an
Inconclusive certification, so shell pipelines can split verdicts.
"""

from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import click
import numpy as np

from . import sampling, serialize
from .chessboard import CanonicalParams, RawParams, build_rho, family_a, family_b
from .criteria import RangeSearchConfig, Verdict, certify
from .tolerances import PT_NEGATIVITY_TOL

SWEEP_VARIABLES = ("a", "b", "c", "d", "m", "n", "phi_s", "phi_t", "|s|", "|t|")
SWEEP_ALIASES = {"abs_s": "|s|", "abs_t": "|t|"}


def _fail(message):
    raise click.UsageError(message)


def _parse_floats(text, count, what):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        _fail(f"{what} needs {count} comma-separated values, got {len(parts)}")
    try:
        return [float(p) for p in parts]
    except ValueError as exc:
        _fail(f"could not parse {what}: {exc}")


def _parse_complexes(text, count, what):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != count:
        _fail(f"{what} needs {count} comma-separated values, got {len(parts)}")
    try:
        return [complex(p) for p in parts]
    except ValueError as exc:
        _fail(f"could not parse {what}: {exc}")


def _params_from_options(family, params_text, phases_text):
    if params_text is None:
        _fail("--params is required unless --input is given")
    if family == "a":
        values = _parse_floats(params_text, 6, "--params for family a")
        try:
            return family_a(*values)
        except ValueError as exc:
            _fail(str(exc))
    elif family == "b":
        values = _parse_floats(params_text, 6, "--params for family b")
        phases = _parse_floats(phases_text or "0,0", 2, "--phases")
        try:
            return family_b(*values, phases[0], phases[1])
        except ValueError as exc:
            _fail(str(exc))
    elif family == "raw":
        values = _parse_complexes(params_text, 8, "--params for family raw")
        try:
            return RawParams(*values)
        except ValueError as exc:
            _fail(str(exc))
    else:
        _fail(f"unknown family {family!r}")


def _write_output(path, text):
    if path == "-":
        click.echo(text, nl=False)
    else:
        try:
            Path(path).write_text(text)
        except OSError as exc:
            _fail(f"cannot write {path}: {exc}")


def _search_config(restarts, seed):
    try:
        return RangeSearchConfig(restarts=restarts, seed=seed)
    except ValueError as exc:
        _fail(str(exc))


@click.group()
def main():
    """Construct, inspect and certify chessboard states."""


@main.command()
@click.option("--family", type=click.Choice(["a", "b", "raw"]), default="a",
              show_default=True, help="Parameter family to construct from.")
@click.option("--params", "params_text", metavar="LIST",
              help="Comma-separated parameters: a,b,c,d,m,n for families "
                   "a/b; eight complex values a,...,t for raw.")
@click.option("--phases", "phases_text", metavar="PHI_S,PHI_T",
              help="Phases of s and t (family b only).")
@click.option("--output", default="-", show_default=True,
              help="Output path, '-' for stdout.")
def construct(family, params_text, phases_text, output):
    """Build a state and write it as JSON."""
    params = _params_from_options(family, params_text, phases_text)
    try:
        state = build_rho(params)
    except ValueError as exc:
        _fail(str(exc))
    _write_output(output, serialize.state_to_json(state))


def _load_state_params(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        _fail(f"cannot read {path}: {exc}")
    try:
        params, _, matrix = serialize.state_from_json(text)
    except (ValueError, KeyError, TypeError) as exc:
        _fail(f"malformed state file {path}: {exc}")
    rebuilt = build_rho(params)
    if float(np.max(np.abs(rebuilt.rho - matrix))) > 1e-8:
        _fail(f"state file {path}: matrix is inconsistent with its parameters")
    return params


@main.command("certify")
@click.option("--input", "input_path", metavar="FILE",
              help="State file produced by 'construct'.")
@click.option("--family", type=click.Choice(["a", "b", "raw"]), default="a",
              show_default=True)
@click.option("--params", "params_text", metavar="LIST")
@click.option("--phases", "phases_text", metavar="PHI_S,PHI_T")
@click.option("--restarts", default=200, show_default=True,
              help="Random restarts for the product-vector search.")
@click.option("--seed", default=0, show_default=True,
              help="Seed for the search restarts.")
@click.option("--tol-psd", default=PT_NEGATIVITY_TOL, show_default=True,
              help="Negativity threshold for the PPT test.")
@click.option("--output", default="-", show_default=True)
@click.pass_context
def certify_cmd(ctx, input_path, family, params_text, phases_text,
                restarts, seed, tol_psd, output):
    """Certify a state; exit 0 on a definite verdict, 3 on Inconclusive."""
    if input_path is not None:
        params = _load_state_params(input_path)
    else:
        params = _params_from_options(family, params_text, phases_text)
    cfg = _search_config(restarts, seed)
    report = certify(params, cfg, tol_psd=tol_psd)
    _write_output(output, serialize.report_to_json(report))
    if report.verdict is Verdict.INCONCLUSIVE:
        ctx.exit(3)


def _param_columns(family):
    if family == "a":
        return ["a", "b", "c", "d", "m", "n"]
    if family == "b":
        return ["a", "b", "c", "d", "m", "n", "phi_s", "phi_t"]
    cols = []
    for name in ("a", "b", "c", "d", "m", "n", "s", "t"):
        cols += [f"{name}_re", f"{name}_im"]
    return cols


def _param_values(family, params, rng_phases):
    fl = serialize.format_float
    if family == "a":
        return [fl(getattr(params, x)) for x in ("a", "b", "c", "d", "m", "n")]
    if family == "b":
        mags = [fl(getattr(params, x)) for x in ("a", "b", "c", "d", "m", "n")]
        return mags + [fl(p) for p in rng_phases]
    out = []
    for name in ("a", "b", "c", "d", "m", "n", "s", "t"):
        z = complex(getattr(params, name))
        out += [fl(z.real), fl(z.imag)]
    return out


def _sample_row(task):
    master, index, family, restarts, tol_psd = task
    rng = sampling.rng_for(master, index)
    if family == "b":
        mags = sampling.draw_magnitudes(rng, 6)
        phases = sampling.draw_phases(rng, 2)
        params = family_b(*mags, phases[0], phases[1])
    else:
        params = sampling.DRAWERS[family](rng)
        phases = ()
    cfg = RangeSearchConfig(restarts=restarts,
                            seed=sampling.search_seed(master, index))
    report = certify(params, cfg, tol_psd=tol_psd)
    fl = serialize.format_float
    return ([str(index), str(sampling.child_seed(master, index))]
            + _param_values(family, params, phases)
            + [fl(report.pt_min_eigenvalue),
               "true" if report.sigma_equals_rho else "false",
               report.analytic_range.value,
               fl(report.search_residual),
               report.verdict.value])


@main.command()
@click.option("--family", type=click.Choice(["a", "b", "raw"]), default="b",
              show_default=True)
@click.option("--count", default=100, show_default=True)
@click.option("--seed", default=0, show_default=True,
              help="Master seed; row i is derived from (seed, i).")
@click.option("--restarts", default=200, show_default=True)
@click.option("--tol-psd", default=PT_NEGATIVITY_TOL, show_default=True)
@click.option("--workers", default=1, show_default=True,
              help="Worker processes; output does not depend on this.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--output", default="-", show_default=True)
def sample(family, count, seed, restarts, tol_psd, workers, fmt, output):
    """Certify seeded random draws and emit one row per sample."""
    if count < 1:
        _fail("--count must be at least 1")
    _search_config(restarts, 0)  # validate the restart budget up front
    header = (["index", "seed"] + _param_columns(family)
              + ["pt_min_eigenvalue", "sigma_equals_rho", "analytic_range",
                 "search_residual", "verdict"])
    tasks = [(seed, i, family, restarts, tol_psd) for i in range(count)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_sample_row, tasks, chunksize=8))
    else:
        rows = [_sample_row(t) for t in tasks]
    _write_output(output, _tabulate(header, rows, fmt))


def _tabulate(header, rows, fmt):
    if fmt == "csv":
        return serialize.csv_text(header, rows)
    return serialize.dumps(
        {"rows": [dict(zip(header, row)) for row in rows]}) + "\n"


@main.command()
@click.option("--base", "base_text", metavar="A,B,C,D,M,N", required=True,
              help="Base magnitudes; s and t follow the family-b rule.")
@click.option("--phases", "phases_text", metavar="PHI_S,PHI_T", default="0,0",
              show_default=True)
@click.option("--var", "variable", metavar="NAME", required=True,
              help="One of a,b,c,d,m,n,phi_s,phi_t,|s|,|t| "
                   "(abs_s/abs_t accepted).")
@click.option("--lo", type=float, required=True)
@click.option("--hi", type=float, required=True)
@click.option("--steps", default=11, show_default=True)
@click.option("--seed", default=0, show_default=True)
@click.option("--restarts", default=200, show_default=True)
@click.option("--tol-psd", default=PT_NEGATIVITY_TOL, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]),
              default="csv", show_default=True)
@click.option("--output", default="-", show_default=True)
def sweep(base_text, phases_text, variable, lo, hi, steps, seed, restarts,
          tol_psd, fmt, output):
    """Certify states along a one-parameter grid."""
    variable = SWEEP_ALIASES.get(variable, variable)
    if variable not in SWEEP_VARIABLES:
        _fail(f"unknown sweep variable {variable!r}; choose from "
              + ", ".join(SWEEP_VARIABLES))
    if steps < 2:
        _fail("--steps must be at least 2")
    base = _parse_floats(base_text, 6, "--base")
    phases = _parse_floats(phases_text, 2, "--phases")
    fl = serialize.format_float
    rows = []
    for i, value in enumerate(np.linspace(lo, hi, steps)):
        try:
            params = _sweep_point(base, phases, variable, float(value))
        except ValueError as exc:
            _fail(f"sweep value {value}: {exc}")
        cfg = _search_config(restarts, sampling.search_seed(seed, i))
        report = certify(params, cfg, tol_psd=tol_psd)
        rows.append([fl(value), fl(report.pt_min_eigenvalue),
                     fl(report.search_residual), report.verdict.value])
    header = ["value", "pt_min_eigenvalue", "search_residual", "verdict"]
    _write_output(output, _tabulate(header, rows, fmt))


def _sweep_point(base, phases, variable, value):
    mags = dict(zip(("a", "b", "c", "d", "m", "n"), base))
    phi_s, phi_t = phases
    if variable in mags:
        mags[variable] = value
    elif variable == "phi_s":
        phi_s = value
    elif variable == "phi_t":
        phi_t = value
    params = family_b(mags["a"], mags["b"], mags["c"], mags["d"],
                      mags["m"], mags["n"], phi_s, phi_t)
    if variable in ("|s|", "|t|"):
        if value < 0:
            raise ValueError("a modulus cannot be negative")
        s, t = params.s, params.t
        if variable == "|s|":
            s = value * np.exp(1j * phi_s)
        else:
            t = value * np.exp(1j * phi_t)
        params = CanonicalParams(a=params.a, b=params.b, c=params.c,
                                 d=params.d, m=params.m, n=params.n,
                                 s=complex(s), t=complex(t))
    return params


if __name__ == "__main__":
    main()
