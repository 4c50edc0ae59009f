"""Command-line front door.

One subcommand per activity: generate sequences, check subtractions,
solve positions, Grundy values, sum advice, matrix and fractal emission,
claim verification, and the HTTP service.  Exit codes: 0 success, 1
domain error, 2 usage error, 3 verification failure.
"""

from __future__ import annotations

import json
import sys

import click

from . import fractal, grundy, matrices, oracle, rules, sequences


def _vec(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise click.UsageError(f"expected a comma-separated integer vector, got {text!r}")


def _fmt(v) -> str:
    return ",".join(str(c) for c in v)


def _fail(message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(1)


@click.group()
def main():
    """Exact engine for d-heap rat games."""


@main.command()
@click.option("--d", type=int, required=True, help="number of heaps")
@click.option("--n", type=int, default=None, help="index of one rat vector")
@click.option("--bound", type=int, default=None, help="split-check integers 1..bound")
@click.option("--json", "as_json", is_flag=True)
def gen(d, n, bound, as_json):
    """Emit rat vectors or check the splitting property."""
    if (n is None) == (bound is None):
        raise click.UsageError("pass exactly one of --n or --bound")
    try:
        if n is not None:
            if n < 1:
                _fail("--n must be >= 1")
            v = sequences.rat_vector(d, n)
            click.echo(json.dumps({"d": d, "n": n, "vector": list(v)}) if as_json else _fmt(v))
            return
        report = sequences.split_check(d, bound)
    except ValueError as e:
        _fail(str(e))
    if as_json:
        click.echo(json.dumps({
            "d": d, "bound": bound, "covered": report.covered,
            "duplicates": report.duplicates, "missing": report.missing,
        }))
    elif report.covered:
        click.echo(f"split ok: every integer in 1..{bound} appears exactly once")
    else:
        click.echo(f"split BROKEN: {len(report.duplicates)} duplicates, "
                   f"{len(report.missing)} missing")
    if not report.covered:
        sys.exit(1)


@main.command()
@click.option("--d", type=int, required=True)
@click.option("--sub", required=True, help="subtraction vector, x_1 first")
@click.option("--pos", default=None, help="position to subtract from (optional)")
@click.option("--json", "as_json", is_flag=True)
def check(d, sub, pos, as_json):
    """Classify a subtraction: Allowed, ForbiddenA, ForbiddenB, ForbiddenZero."""
    s = _vec(sub)
    try:
        if pos is not None:
            x = sequences.check_vector(_vec(pos), d)
            sequences.check_vector(s, d)
            if any(a < b for a, b in zip(x, s)):
                raise rules.NegativeSubtraction(f"subtraction {s} exceeds position {x}")
        verdict = rules.classify_subtraction(d, s)
    except (ValueError, rules.NegativeSubtraction) as e:
        _fail(str(e))
    if as_json:
        click.echo(json.dumps({
            "status": str(verdict.status),
            "allowed": verdict.allowed,
            "witness": list(verdict.witness),
        }))
    else:
        click.echo(str(verdict.status))


@main.command()
@click.option("--d", type=int, required=True)
@click.option("--pos", required=True)
@click.option("--json", "as_json", is_flag=True)
def solve(d, pos, as_json):
    """P/N status of a position and a winning move when one exists."""
    x = _vec(pos)
    try:
        sequences.check_vector(x, d)
        found = rules.winning_move(x)
    except ValueError as e:
        _fail(str(e))
    if as_json:
        payload = {"position": list(x), "status": "P" if found is None else "N"}
        if found is not None:
            payload.update(target=list(found.target),
                           subtraction=list(found.subtraction),
                           rat_index=found.rat_index)
        click.echo(json.dumps(payload))
    elif found is None:
        click.echo("P; every move loses")
    else:
        click.echo(f"N; move to {_fmt(found.target)} (subtract {_fmt(found.subtraction)})")


@main.command("grundy")
@click.option("--d", type=int, required=True)
@click.option("--pos", required=True)
@click.option("--oracle", "use_oracle", is_flag=True, help="mex recursion instead of the closed form")
@click.option("--json", "as_json", is_flag=True)
def grundy_cmd(d, pos, use_oracle, as_json):
    """Grundy value of a position."""
    x = _vec(pos)
    try:
        sequences.check_vector(x, d)
        if use_oracle:
            table = oracle.mex_grundy(oracle.Box(x))
            value, method, box = int(table.grundy_at(x)), "mex-oracle", x
        else:
            report = grundy.grundy_fast(x)
            value, method, box = report.value, report.method, report.checked_box
    except ValueError as e:
        _fail(str(e))
    if as_json:
        click.echo(json.dumps({"position": list(x), "value": value, "method": method,
                               "checked_box": list(box) if box else None}))
    else:
        click.echo(str(value))


@main.command()
@click.argument("components", nargs=-1, required=True)
@click.option("--json", "as_json", is_flag=True)
def advise(components, as_json):
    """Winning move in a sum of games.

    Components are nim:HEAP or rat:X1,X2,... e.g.
    `advise nim:1 nim:2 nim:5 nim:8 rat:3,4,5,6`.
    """
    parsed = []
    for text in components:
        kind, _, payload = text.partition(":")
        if kind == "nim" and payload:
            try:
                parsed.append(grundy.SumComponent.nim(int(payload)))
            except ValueError as e:
                _fail(str(e))
        elif kind == "rat" and payload:
            try:
                parsed.append(grundy.SumComponent.rat(_vec(payload)))
            except ValueError as e:
                _fail(str(e))
        else:
            raise click.UsageError(f"component {text!r} is not nim:HEAP or rat:VECTOR")
    try:
        move = grundy.sum_advisor(parsed)
    except grundy.UnreachableTarget as e:
        _fail(str(e))
    if as_json:
        payload = {"values": [c.value for c in parsed],
                   "status": "P" if move is None else "N"}
        if move is not None:
            payload.update(component=move.component, kind=move.kind,
                           target=list(move.target), subtraction=list(move.subtraction))
        click.echo(json.dumps(payload))
    elif move is None:
        click.echo("P; XOR of component values is 0")
    else:
        c = parsed[move.component]
        before = c.position[0] if c.kind == "nim" else _fmt(c.position)
        after = move.target[0] if move.kind == "nim" else _fmt(move.target)
        click.echo(f"N; move component {move.component + 1} ({c.kind} {before}) to {after}")


@main.command()
@click.option("--d", type=int, required=True)
@click.option("--kind", type=click.Choice(["rat", "shortcut", "difference"]), default="rat")
@click.option("--format", "fmt", type=click.Choice(["text", "csv", "json"]), default="text")
@click.option("--json", "as_json", is_flag=True)
def matrix(d, kind, fmt, as_json):
    """Emit the binary rat matrix, the ternary shortcut matrix, or the
    difference-word matrix."""
    if as_json:
        fmt = "json"
    try:
        if kind == "difference":
            if fmt == "json":
                click.echo(json.dumps({"d": d, "rows": [list(w) for w in matrices.difference_matrix(d)]}))
            else:
                click.echo(matrices.difference_matrix_csv(d), nl=False)
            return
        built = matrices.build_rat_matrix(d) if kind == "rat" else matrices.build_shortcut_matrix(d)
    except ValueError as e:
        _fail(str(e))
    if fmt == "json":
        click.echo(built.to_json())
    elif fmt == "csv":
        click.echo(built.to_csv(), nl=False)
    else:
        for row in built.rows:
            click.echo("  ".join(f"{cell:>12s}" for cell in row.cells()))


@main.command("fractal")
@click.option("--d", type=int, required=True)
@click.option("--profile", "mode", flag_value="profile", default=True)
@click.option("--sigma", "mode", flag_value="sigma")
@click.option("--tau", "mode", flag_value="tau")
@click.option("--gaps", "mode", flag_value="gaps")
@click.option("--scatter", "mode", flag_value="scatter")
@click.option("--reverse-lex", is_flag=True, help="alternative plain-lexicographic row order")
@click.option("--format", "fmt", type=click.Choice(["text", "json", "csv", "svg"]), default="text")
@click.option("--json", "as_json", is_flag=True)
def fractal_cmd(d, mode, reverse_lex, fmt, as_json):
    """Difference profiles, sigma vectors, tau sets, baseline gaps, scatters."""
    if as_json:
        fmt = "json"
    try:
        if mode == "sigma":
            if d <= fractal.PROFILE_MAX:
                report = fractal.sigma_report(d)
            else:
                report = {"d": d, "sigma": list(fractal.sigma(d)), "oracle": None, "match": None}
            if fmt == "json":
                click.echo(json.dumps(report))
            else:
                click.echo(_fmt(report["sigma"]))
                if report["match"] is not None:
                    click.echo(f"oracle match: {report['match']}")
        elif mode == "tau":
            report = fractal.tau_check(d)
            if fmt == "json":
                click.echo(json.dumps(report.as_dict()))
            else:
                click.echo(_fmt(report.values))
                click.echo(f"profile match: {report.matches}"
                           + (f" (missing {_fmt(report.missing)})" if report.missing else "")
                           + (f" (extra {_fmt(report.extra)})" if report.extra else ""))
        elif mode == "gaps":
            gaps = fractal.baseline_gaps(d)
            click.echo(json.dumps(gaps) if fmt == "json" else _fmt(gaps))
        elif mode == "scatter":
            if fmt not in ("csv", "svg"):
                raise click.UsageError("--scatter needs --format csv or svg")
            click.echo(fractal.emit_scatter(d, fmt), nl=False)
        else:
            profile = fractal.diff_profile(d, reverse_lex=reverse_lex)
            if fmt == "json":
                click.echo(json.dumps({
                    "d": d, "reverse_lex": reverse_lex,
                    "distinct": list(profile.distinct), "counts": list(profile.counts),
                    "xi": len(profile.distinct), "lo": profile.lo, "hi": profile.hi,
                }))
            else:
                click.echo(f"distinct ({len(profile.distinct)}): {_fmt(profile.distinct)}")
                click.echo(f"counts: {_fmt(profile.counts)}")
                click.echo(f"range: {profile.lo}..{profile.hi}")
    except ValueError as e:
        _fail(str(e))


@main.command()
@click.option("--claim", default=None, help="one registered claim name")
@click.option("--all", "run_all", is_flag=True, help="run the registered desk suite")
@click.option("--desk", is_flag=True, help="full desk-scale bounds (slower)")
@click.option("--d", type=int, default=None)
@click.option("--bound", type=int, default=None)
@click.option("--count", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--dmax", type=int, default=None)
@click.option("--periods", type=int, default=None)
@click.option("--cap", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
def verify(claim, run_all, desk, d, bound, count, seed, dmax, periods, cap, as_json):
    """Check named claims against the brute-force oracles."""
    if (claim is None) == (not run_all):
        raise click.UsageError("pass exactly one of --claim or --all")
    if run_all:
        reports = oracle.verify_all(desk=desk)
    else:
        params = {k: v for k, v in [("d", d), ("bound", bound), ("count", count),
                                    ("seed", seed), ("dmax", dmax), ("periods", periods),
                                    ("cap", cap)] if v is not None}
        try:
            reports = [oracle.verify(claim, **params)]
        except ValueError as e:
            _fail(str(e))
    if as_json:
        click.echo(json.dumps(reports if run_all else reports[0]))
    else:
        for r in reports:
            line = "pass" if r["pass"] else "FAIL"
            if run_all:
                line += f"  {r['claim']} {r['params']} ({r['runtime_ms']} ms)"
            click.echo(line)
            if not r["pass"]:
                for ce in r["counterexamples"]:
                    click.echo(f"  counterexample: {ce}")
    if not all(r["pass"] for r in reports):
        sys.exit(3)


@main.command()
@click.option("--port", type=int, default=8777)
@click.option("--host", default="127.0.0.1")
@click.option("--log", "log_path", default=None, help="append-only JSON-lines event log")
def serve(port, host, log_path):
    """Run the HTTP game service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(event_log=log_path), host=host, port=port)


if __name__ == "__main__":
    main()
