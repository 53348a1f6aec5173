"""Command-line toolkit: property checks, constructions, bounds, SAT search,
dice verification, the game advisor, and the serve API.

Exit codes: 0 success, 1 property false / nothing found, 2 usage error,
3 search gave up on its budget.  Machine output via --json; report-style
commands can also render matplotlib figures next to their delimited
output.
"""

from __future__ import annotations

import csv as csv_mod
import json
import sys
from fractions import Fraction
from pathlib import Path

import click

from . import bounds as bounds_mod
from .cnf import SymmetryOptions, encode, parse_model, to_dimacs
from .constructions import FillPolicy, combine as combine_op, rotational_set
from .dice import (
    DiceSet,
    NoDominatingChoiceError,
    UnknownLabelError,
    advise as advise_op,
    min_edge_win,
    realized_relations,
    relations_are_sk,
    simulate as simulate_op,
    win_odds,
)
from .dice_search import SearchSpace, search_multiroll
from .exact import decode, exists_sk_set, f_exact
from .files import (
    FileFormatError,
    dumps_tournament_set,
    export_dot,
    fixture_dir,
    list_fixture_sets,
    load_dice_set,
    load_tournament_set,
    save_tournament_set,
    tournament_set_to_obj,
)
from .solver import Budget, SolverConfig
from .tournament import TournamentSet, is_sk, paley as paley_op, undominated_witness

EXIT_FALSE = 1
EXIT_UNKNOWN = 3


def _load_set(path: str) -> TournamentSet:
    try:
        return load_tournament_set(path)
    except (OSError, FileFormatError) as exc:
        raise click.UsageError(f"cannot read tournament set {path}: {exc}")


def _load_dice(set_name: str | None, file: str | None) -> DiceSet:
    if (set_name is None) == (file is None):
        raise click.UsageError("give exactly one of --set or --file")
    if file is not None:
        try:
            return load_dice_set(file)
        except (OSError, FileFormatError) as exc:
            raise click.UsageError(f"cannot read dice set {file}: {exc}")
    sets = list_fixture_sets()
    if set_name not in sets:
        known = ", ".join(sorted(sets)) or "(none)"
        raise click.UsageError(f"unknown dice set {set_name!r}; fixtures: {known}")
    return sets[set_name]


def _frac(x: Fraction) -> dict:
    return {"num": str(x.numerator), "den": str(x.denominator), "float": float(x)}


def _maybe_plot_set(tau: TournamentSet, png: str | None, title: str) -> None:
    if png:
        from . import plots

        plots.save(plots.tournament_set_figure(tau, suptitle=title), png)
        click.echo(f"figure written to {png}")


@click.group()
@click.version_option(package_name="schuette")
def main() -> None:
    """Dominating-vertex tournament toolkit and unfair-dice game engine."""


@main.command("check-sk")
@click.option("--file", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--json", "as_json", is_flag=True)
def check_sk(path: str, k: int, as_json: bool) -> None:
    """Check whether a tournament-set file has the S_k property."""
    tau = _load_set(path)
    ok = is_sk(tau, k)
    if as_json:
        click.echo(json.dumps({"n": tau.n, "m": tau.m, "k": k, "s_k": ok}))
    else:
        click.echo(f"S_{k}: {'true' if ok else 'false'} (order {tau.n}, {tau.m} member(s))")
    if not ok:
        sys.exit(EXIT_FALSE)


@main.command()
@click.option("--file", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--json", "as_json", is_flag=True)
def witness(path: str, k: int, as_json: bool) -> None:
    """Print the least undominated k-subset, if one exists."""
    tau = _load_set(path)
    if k > tau.n:
        raise click.UsageError(f"k = {k} exceeds the vertex count {tau.n}")
    w = undominated_witness(tau, k)
    if as_json:
        click.echo(json.dumps({"k": k, "witness": list(w) if w else None}))
    else:
        click.echo("no undominated subset" if w is None else f"undominated: {list(w)}")
    if w is None:
        sys.exit(EXIT_FALSE)


@main.command()
@click.option("--p", required=True, type=int)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--dot", type=click.Path(dir_okay=False))
@click.option("--png", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def paley(p: int, out: str | None, dot: str | None, png: str | None, as_json: bool) -> None:
    """Quadratic-residue tournament on p vertices (p prime, p = 3 mod 4)."""
    try:
        t = paley_op(p)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    tau = TournamentSet((t,))
    if out:
        save_tournament_set(tau, out)
        click.echo(f"written to {out}")
    if dot:
        Path(dot).write_text(export_dot(tau))
        click.echo(f"DOT written to {dot}")
    _maybe_plot_set(tau, png, f"order-{p} quadratic-residue tournament")
    if as_json:
        click.echo(json.dumps(tournament_set_to_obj(tau)))
    elif not out:
        click.echo(dumps_tournament_set(tau), nl=False)


def _fill_from(fill: str, seed: int | None) -> FillPolicy:
    if fill == "low":
        return FillPolicy.low_beats_high()
    return FillPolicy.seeded(seed if seed is not None else 0)


@main.command()
@click.option("--file", "paths", multiple=True, required=True,
              type=click.Path(exists=True, dir_okay=False),
              help="Two tournament-set files (repeat the option).")
@click.option("--fill", type=click.Choice(["low", "random"]), default="low")
@click.option("--seed", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--png", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def combine(paths: tuple[str, ...], fill: str, seed: int | None, out: str | None,
            png: str | None, as_json: bool) -> None:
    """Block-combine two sets into an S_(k1+k2+1) set on the disjoint union."""
    if len(paths) != 2:
        raise click.UsageError("need exactly two --file options")
    tau = combine_op(_load_set(paths[0]), _load_set(paths[1]), _fill_from(fill, seed))
    if out:
        save_tournament_set(tau, out)
        click.echo(f"written to {out} (order {tau.n}, {tau.m} members)")
    _maybe_plot_set(tau, png, "combined set")
    if as_json:
        click.echo(json.dumps(tournament_set_to_obj(tau)))
    elif not out:
        click.echo(dumps_tournament_set(tau), nl=False)


@main.command()
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--fill", type=click.Choice(["low", "random"]), default="low")
@click.option("--seed", type=int, default=None)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--png", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def rotational(k: int, fill: str, seed: int | None, out: str | None, png: str | None,
               as_json: bool) -> None:
    """The (k+1)-set of order k+1 where member i is dominated by vertex i."""
    tau = rotational_set(k, _fill_from(fill, seed))
    if out:
        save_tournament_set(tau, out)
        click.echo(f"written to {out}")
    _maybe_plot_set(tau, png, f"rotational S_{k} set")
    if as_json:
        click.echo(json.dumps(tournament_set_to_obj(tau)))
    elif not out:
        click.echo(dumps_tournament_set(tau), nl=False)


@main.command()
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--json", "as_json", is_flag=True)
def bound(m: int, k: int, as_json: bool) -> None:
    """Every applicable bound for the least order of an S_k m-set."""
    rows: dict[str, int | None] = {}
    try:
        rows["closed_form_upper"] = bounds_mod.closed_form_upper(m, k)
    except (bounds_mod.KOutOfRangeError, bounds_mod.BaseTableExhaustedError):
        rows["closed_form_upper"] = None
    try:
        entry = bounds_mod.split_dp_upper(m, k)
        rows["split_dp_upper"] = entry.upper
    except bounds_mod.BaseTableExhaustedError:
        rows["split_dp_upper"] = None
    try:
        rows["coarse_upper"] = bounds_mod.coarse_upper(m, k)
    except (bounds_mod.KOutOfRangeError, bounds_mod.BaseTableExhaustedError):
        rows["coarse_upper"] = None
    rows["trivial_lower"] = k + 1
    if m == 1:
        rows["erdos_upper"] = bounds_mod.erdos_upper(k) if k >= 1 else None
        rows["erdos_lower"] = bounds_mod.erdos_lower(k) if k >= 1 else None
        rows["szekeres_lower"] = bounds_mod.szekeres_lower(k) if k > 2 else None
    if as_json:
        click.echo(json.dumps({"m": m, "k": k, "bounds": rows}))
    else:
        for name, value in rows.items():
            click.echo(f"{name:18s} {'-' if value is None else value}")


@main.command()
@click.option("--m-max", default=5, type=click.IntRange(min=1))
@click.option("--k-max", default=8, type=click.IntRange(min=0))
@click.option("--csv", "csv_path", type=click.Path(dir_okay=False))
@click.option("--png", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def table(m_max: int, k_max: int, csv_path: str | None, png: str | None,
          as_json: bool) -> None:
    """Upper-bound table for the least order of an S_k m-set."""
    entries = bounds_mod.bounds_table(m_max, k_max)
    populated = [e for e in entries if not e.redundant]
    if csv_path:
        with open(csv_path, "w", newline="") as fh:
            w = csv_mod.writer(fh)
            w.writerow(["m", "k", "upper", "exact", "provenance"])
            for e in populated:
                w.writerow([e.m, e.k, e.upper, e.exact, e.provenance])
        click.echo(f"CSV written to {csv_path}")
    if png:
        from . import plots

        plots.save(plots.bounds_table_figure(entries, m_max, k_max), png)
        click.echo(f"figure written to {png}")
    if as_json:
        click.echo(json.dumps({
            "entries": [
                {"m": e.m, "k": e.k, "upper": e.upper, "exact": e.exact,
                 "redundant": e.redundant, "provenance": e.provenance}
                for e in entries
            ]
        }))
        return
    by_cell = {(e.m, e.k): e for e in populated}
    head = "k\\m " + "".join(f"{m:>7d}" for m in range(1, m_max + 1))
    click.echo(head)
    for k in range(k_max + 1):
        cells = []
        for m in range(1, m_max + 1):
            e = by_cell.get((m, k))
            cells.append("" if e is None else (f"{e.upper}*" if e.exact else str(e.upper)))
        click.echo(f"{k:<4d}" + "".join(f"{c:>7s}" for c in cells))
    click.echo(f"({len(populated)} populated entries; * = known exact)")


def _sym_options(no_fix_edge: bool, no_lex_members: bool, no_vertex_lex: bool) -> SymmetryOptions:
    return SymmetryOptions(
        fix_first_edge=not no_fix_edge,
        lex_members=not no_lex_members,
        vertex_lex=not no_vertex_lex,
    )


@main.command("sat-find")
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--n", type=click.IntRange(min=1), help="Fixed order; omit with --exact.")
@click.option("--exact", is_flag=True, help="Scan upward for the least satisfiable order.")
@click.option("--n-max", type=int, default=None)
@click.option("--max-seconds", type=float, default=None)
@click.option("--max-decisions", type=int, default=None)
@click.option("--max-conflicts", type=int, default=None)
@click.option("--no-fix-edge", is_flag=True)
@click.option("--no-lex-members", is_flag=True)
@click.option("--no-vertex-lex", is_flag=True)
@click.option("--plain", is_flag=True, help="Chronological backtracking, no learning.")
@click.option("--model", "model_path", type=click.Path(exists=True, dir_okay=False),
              help="Verify an external DIMACS model instead of solving.")
@click.option("--out", type=click.Path(dir_okay=False), help="Write the certificate set here.")
@click.option("--png", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def sat_find(m: int, k: int, n: int | None, exact: bool, n_max: int | None,
             max_seconds: float | None, max_decisions: int | None,
             max_conflicts: int | None, no_fix_edge: bool, no_lex_members: bool,
             no_vertex_lex: bool, plain: bool, model_path: str | None,
             out: str | None, png: str | None, as_json: bool) -> None:
    """Search for an S_k m-set by SAT: one order, or the exact minimum."""
    sym = _sym_options(no_fix_edge, no_lex_members, no_vertex_lex)
    budget = Budget(max_seconds=max_seconds, max_decisions=max_decisions,
                    max_conflicts=max_conflicts)
    config = SolverConfig(learn=not plain)

    if model_path is not None:
        if n is None:
            raise click.UsageError("--model needs --n")
        _, vm = encode(m, k, n, sym)
        assignment = parse_model(Path(model_path).read_text())
        try:
            tau = decode(assignment, vm)
        except ValueError as exc:
            click.echo(f"external model rejected: {exc}", err=True)
            sys.exit(EXIT_FALSE)
        if not is_sk(tau, k):
            click.echo("external model decodes but fails the S_k check", err=True)
            sys.exit(EXIT_FALSE)
        if out:
            save_tournament_set(tau, out)
        click.echo(json.dumps({"verified": True, "m": m, "k": k, "n": n})
                   if as_json else f"external model verified: S_{k} set of order {n}")
        return

    if exact:
        try:
            report = f_exact(m, k, n_max=n_max, budget=budget, sym=sym, config=config)
        except ValueError as exc:
            raise click.UsageError(str(exc))
        payload = {
            "m": m, "k": k, "value": report.value, "exact": report.exact,
            "unknown_orders": report.unknown_orders,
            "refuted_orders": [a.n for a in report.attestations],
            "bracket": report.bracket(),
            "elapsed": round(report.elapsed, 3),
        }
        if report.certificate and out:
            save_tournament_set(report.certificate, out)
        if report.certificate:
            _maybe_plot_set(report.certificate, png, f"S_{k} {m}-set of order {report.value}")
        if as_json:
            click.echo(json.dumps(payload))
        else:
            if report.exact:
                click.echo(f"least order: {report.value} "
                           f"(refuted {payload['refuted_orders']}, {report.elapsed:.2f}s)")
            else:
                click.echo(f"bracket: {report.bracket()} unknown at {report.unknown_orders}")
        if not report.exact:
            sys.exit(EXIT_UNKNOWN)
        return

    if n is None:
        raise click.UsageError("give --n, or use --exact")
    try:
        verdict = exists_sk_set(m, k, n, sym, budget, config)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if verdict.status == "SAT" and verdict.certificate is not None:
        if out:
            save_tournament_set(verdict.certificate, out)
        _maybe_plot_set(verdict.certificate, png, f"S_{k} {m}-set of order {n}")
    if as_json:
        click.echo(json.dumps({
            "m": m, "k": k, "n": n, "status": verdict.status,
            "certificate": tournament_set_to_obj(verdict.certificate)
            if verdict.certificate else None,
            "decisions": verdict.stats.decisions,
            "conflicts": verdict.stats.conflicts,
            "config_hash": verdict.config_hash,
        }))
    else:
        click.echo(f"({m},{k},{n}): {verdict.status} "
                   f"[{verdict.stats.conflicts} conflicts, {verdict.stats.elapsed:.2f}s]")
    if verdict.status == "UNSAT":
        sys.exit(EXIT_FALSE)
    if verdict.status == "UNKNOWN":
        sys.exit(EXIT_UNKNOWN)


@main.command("export-cnf")
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--n", required=True, type=click.IntRange(min=1))
@click.option("--no-fix-edge", is_flag=True)
@click.option("--no-lex-members", is_flag=True)
@click.option("--no-vertex-lex", is_flag=True)
@click.option("--out", required=True, type=click.Path(dir_okay=False))
def export_cnf(m: int, k: int, n: int, no_fix_edge: bool, no_lex_members: bool,
               no_vertex_lex: bool, out: str) -> None:
    """Write the existence formula as DIMACS CNF for an external solver."""
    try:
        f, _ = encode(m, k, n, _sym_options(no_fix_edge, no_lex_members, no_vertex_lex))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    Path(out).write_text(to_dimacs(f))
    click.echo(f"p cnf {f.var_count} {len(f.clauses)} -> {out}")


@main.command("dice-verify")
@click.option("--set", "set_name", default=None)
@click.option("--file", "file", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--k", required=True, type=click.IntRange(min=0))
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--png-dir", type=click.Path(file_okay=False))
@click.option("--json", "as_json", is_flag=True)
def dice_verify(set_name: str | None, file: str | None, k: int, m: int,
                png_dir: str | None, as_json: bool) -> None:
    """Verify the strict-win digraphs a dice set realizes at 1..m rolls are S_k."""
    ds = _load_dice(set_name, file)
    relations = realized_relations(ds, m)
    ok = relations_are_sk(relations, k)
    lowest = min_edge_win(ds, m)
    unresolved = {
        g.r: [[ds.labels[i], ds.labels[j]] for i, j in g.unresolved]
        for g in relations if not g.complete
    }
    if png_dir:
        from . import plots

        for r in range(1, m + 1):
            plots.save(plots.odds_heatmap_figure(ds, r), Path(png_dir) / f"odds-r{r}.png")
        click.echo(f"heatmaps written to {png_dir}")
    if as_json:
        click.echo(json.dumps({
            "set": ds.name, "m": m, "k": k, "s_k": ok,
            "min_edge_win": _frac(lowest), "unresolved": unresolved,
        }))
    else:
        click.echo(f"S_{k}: {'true' if ok else 'false'} "
                   f"(lowest winning edge probability {lowest} = {float(lowest):.4f})")
        for r, pairs in unresolved.items():
            click.echo(f"  note: no strict winner at r={r} for {pairs}")
    if not ok:
        sys.exit(EXIT_FALSE)


@main.command("dice-tournaments")
@click.option("--set", "set_name", default=None)
@click.option("--file", "file", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--out", type=click.Path(dir_okay=False), help="Tournament-set JSON output.")
@click.option("--dot", type=click.Path(dir_okay=False))
@click.option("--png", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def dice_tournaments(set_name: str | None, file: str | None, m: int, out: str | None,
                     dot: str | None, png: str | None, as_json: bool) -> None:
    """Extract the tournaments (strict-win digraphs) realized at rolls 1..m."""
    ds = _load_dice(set_name, file)
    relations = realized_relations(ds, m)
    complete = all(g.complete for g in relations)
    if (out or dot) and not complete:
        g = next(g for g in relations if not g.complete)
        click.echo(
            f"cannot export as a tournament set: no strict winner for pair "
            f"{g.unresolved[0]} at r={g.r}", err=True)
        sys.exit(EXIT_FALSE)
    if out or dot:
        tau = TournamentSet(tuple(g.to_tournament() for g in relations))
        if out:
            save_tournament_set(tau, out)
            click.echo(f"written to {out}")
        if dot:
            Path(dot).write_text(export_dot(tau))
            click.echo(f"DOT written to {dot}")
    if png:
        from . import plots

        plots.save(
            plots.relations_figure(
                relations, labels=list(ds.labels),
                suptitle=f"expected-win relations of {ds.name!r}",
            ),
            png,
        )
        click.echo(f"figure written to {png}")
    if as_json:
        click.echo(json.dumps({
            "labels": list(ds.labels),
            "relations": [
                {
                    "r": g.r,
                    "edges": [[i, j] for i, j in sorted(g.edges())],
                    "unresolved": [[i, j] for i, j in g.unresolved],
                }
                for g in relations
            ],
        }))
    elif not out:
        for g in relations:
            wins = [f"{ds.labels[i]}>{ds.labels[j]}" for i, j in sorted(g.edges())]
            line = f"r={g.r}: " + ", ".join(wins)
            if g.unresolved:
                line += "  (no strict winner: " + ", ".join(
                    f"{ds.labels[i]}~{ds.labels[j]}" for i, j in g.unresolved) + ")"
            click.echo(line)


@main.command()
@click.option("--set", "set_name", default=None)
@click.option("--file", "file", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--opponent", "opponents", multiple=True, required=True)
@click.option("--m", required=True, type=click.IntRange(min=1))
@click.option("--json", "as_json", is_flag=True)
def advise(set_name: str | None, file: str | None, opponents: tuple[str, ...], m: int,
           as_json: bool) -> None:
    """Recommend the die and roll count that beat every opponent."""
    ds = _load_dice(set_name, file)
    try:
        advice = advise_op(ds, list(opponents), m)
    except UnknownLabelError as exc:
        raise click.UsageError(str(exc))
    except NoDominatingChoiceError as exc:
        click.echo(str(exc), err=True)
        sys.exit(EXIT_FALSE)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    if as_json:
        click.echo(json.dumps({
            "die": advice.label, "rolls": advice.rolls,
            "opponents": list(opponents),
            "odds": [_frac(o.win) for o in advice.odds],
        }))
    else:
        parts = ", ".join(
            f"{o.win} vs {label}" for o, label in zip(advice.odds, opponents)
        )
        click.echo(f"play {advice.label} at {advice.rolls} roll(s): wins {parts}")


@main.command()
@click.option("--set", "set_name", default=None)
@click.option("--file", "file", default=None, type=click.Path(exists=True, dir_okay=False))
@click.option("--a", required=True)
@click.option("--b", required=True)
@click.option("--r", default=1, type=click.IntRange(min=1, max=64))
@click.option("--trials", default=10000, type=click.IntRange(min=1))
@click.option("--seed", default=0, type=int)
@click.option("--json", "as_json", is_flag=True)
def simulate(set_name: str | None, file: str | None, a: str, b: str, r: int,
             trials: int, seed: int, as_json: bool) -> None:
    """Seeded roll-off tally between two dice; exact odds shown for reference."""
    ds = _load_dice(set_name, file)
    try:
        da, db = ds[ds.index_of(a)], ds[ds.index_of(b)]
    except UnknownLabelError as exc:
        raise click.UsageError(str(exc))
    tally = simulate_op(da, db, r, trials, seed)
    exact = win_odds(da, db, r)
    if as_json:
        click.echo(json.dumps({
            "a": a, "b": b, "r": r, "trials": trials, "seed": seed,
            "wins": tally.wins, "ties": tally.ties, "losses": tally.losses,
            "exact_win": _frac(exact.win),
        }))
    else:
        click.echo(f"{a} vs {b} at {r} roll(s), {trials} trials (seed {seed}): "
                   f"{tally.wins} wins, {tally.ties} ties, {tally.losses} losses "
                   f"(exact win {exact.win} = {float(exact.win):.4f})")


@main.command("dice-search")
@click.option("--target", required=True, type=click.Path(exists=True, dir_okay=False),
              help="Tournament-set file; one member per roll count to realize.")
@click.option("--faces", required=True, type=click.IntRange(min=1))
@click.option("--max-face", required=True, type=click.IntRange(min=0))
@click.option("--allowed-faces", default=None,
              help="Comma-separated face values to restrict the space.")
@click.option("--max-nodes", type=int, default=None)
@click.option("--max-seconds", type=float, default=None)
@click.option("--out", type=click.Path(dir_okay=False))
@click.option("--json", "as_json", is_flag=True)
def dice_search(target: str, faces: int, max_face: int, allowed_faces: str | None,
                max_nodes: int | None, max_seconds: float | None, out: str | None,
                as_json: bool) -> None:
    """Search for dice realizing the target tournaments at rolls 1..m."""
    targets = _load_set(target)
    allowed = None
    if allowed_faces:
        try:
            allowed = tuple(int(tok) for tok in allowed_faces.split(","))
        except ValueError:
            raise click.UsageError("--allowed-faces must be comma-separated integers")
    try:
        space = SearchSpace(faces, max_face, allowed_faces=allowed,
                            max_nodes=max_nodes, max_seconds=max_seconds)
    except ValueError as exc:
        raise click.UsageError(str(exc))
    result = search_multiroll(targets, space)
    if result.status == "found" and out and result.dice is not None:
        from .files import save_dice_set

        save_dice_set(result.dice, out)
        if not as_json:
            click.echo(f"written to {out}")
    if as_json:
        payload = {
            "status": result.status, "nodes": result.nodes,
            "elapsed": round(result.elapsed, 3),
            "dice": None if result.dice is None else
            [{"label": d.label, "faces": list(d.faces)} for d in result.dice.dice],
        }
        click.echo(json.dumps(payload))
    elif result.status == "found":
        assert result.dice is not None
        for d in result.dice.dice:
            click.echo(f"{d.label}: {list(d.faces)}")
    else:
        click.echo(f"{result.status} after {result.nodes} nodes")
    if result.status == "exhausted":
        sys.exit(EXIT_FALSE)
    if result.status == "unknown":
        sys.exit(EXIT_UNKNOWN)


@main.command()
@click.option("--host", default="127.0.0.1")
@click.option("--port", default=8607, type=int)
@click.option("--fixtures", type=click.Path(file_okay=False), default=None,
              help="Dice-set directory (default: shipped fixtures or env override).")
@click.option("--ui", "ui_dir", type=click.Path(file_okay=False), default=None,
              help="Built game-UI directory to serve at /.")
def serve(host: str, port: int, fixtures: str | None, ui_dir: str | None) -> None:
    """Run the JSON API (and optionally the game UI) for live play."""
    import uvicorn

    from .server import create_app

    app = create_app(
        Path(fixtures) if fixtures else fixture_dir(),
        Path(ui_dir) if ui_dir else None,
    )
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
