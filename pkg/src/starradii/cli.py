"""Command-line interface.

Usage:
    starradii table --class pi1 --format csv
    starradii table --class all --alpha 0,0.5 --format md --out radii.md
    starradii verify --all --out report.json
    starradii plot --class pi1 --target cardioid --out plots/

Flags override values from ``--config FILE`` (an INI file with a
``[starradii]`` section using the flag names as keys), which override the
built-in defaults.

Exit codes: 0 pass, 2 verification or solver failure, 3 I/O failure, 4 bad arguments.
"""

from __future__ import annotations

import configparser
import csv
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import click

from starradii import __version__
from starradii.errors import DomainError, NoSignChangeError
from starradii.kernel import EXTREMAL, ClassId, eval_logderiv
from starradii.radii import RadiusResult, closed_form_radius, radius_result
from starradii.regions import RegionKind, TargetRegion, boundary_points, region_from_name
from starradii.verify import (
    DEFAULT_SAMPLES,
    MIN_SAMPLES,
    TOL_INSIDE,
    TOL_RADIUS,
    TOL_TOUCH,
    check_function_containment,
    cross_validate,
    sample_circle,
)

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_IO = 3
EXIT_ARGS = 4

FORMATS = ("csv", "json", "md")
TABLE_COLUMNS = ("class", "target", "alpha", "closed_form", "solved", "abs_diff", "sharp", "equation")
TARGET_NAMES = tuple(k.value for k in RegionKind)

DEFAULTS = {
    "class": "all",
    "target": "all",
    "alpha": "0",
    "samples": str(DEFAULT_SAMPLES),
    "tol": "",
    "format": "",
    "out": "",
    "seed": "0",
}


class ConfigError(ValueError):
    pass


def fmt_float(x: float) -> str:
    return f"{x:.17g}"


@dataclass
class RunConfig:
    classes: list[ClassId]
    targets: list[str]
    alphas: list[float]
    samples: int = DEFAULT_SAMPLES
    tol: float | None = None
    fmt: str = "csv"
    out: str | None = None
    seed: int = 0
    plot: bool = False

    def __post_init__(self):
        if self.samples < MIN_SAMPLES:
            raise ConfigError(f"--samples must be at least {MIN_SAMPLES}")
        if self.tol is not None and not self.tol > 0:
            raise ConfigError("--tol must be positive")
        if self.fmt not in FORMATS:
            raise ConfigError(f"--format must be one of {', '.join(FORMATS)}")

    def regions(self) -> list[TargetRegion]:
        out = []
        for name in self.targets:
            if name == RegionKind.HALF_PLANE.value:
                out.extend(TargetRegion.half_plane(a) for a in self.alphas)
            else:
                out.append(region_from_name(name))
        return out

    def selections(self) -> list[tuple[ClassId, TargetRegion]]:
        return [(cls, region) for cls in self.classes for region in self.regions()]


def _parse_list(text: str, kind, flag: str) -> list:
    try:
        return [kind(part) for part in text.replace(" ", "").split(",") if part]
    except ValueError as exc:
        raise ConfigError(f"bad value for {flag}: {text!r}") from exc


def read_config_file(path: str | None) -> dict[str, str]:
    if not path:
        return {}
    parser = configparser.ConfigParser()
    try:
        with open(path) as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc
    except configparser.Error as exc:
        raise ConfigError(f"malformed config file {path}: {exc}") from exc
    if not parser.has_section("starradii"):
        return {}
    values = dict(parser.items("starradii"))
    unknown = set(values) - set(DEFAULTS)
    if unknown:
        raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
    return values


def build_config(flags: dict, config_path: str | None, default_format: str) -> RunConfig:
    merged = dict(DEFAULTS)
    merged.update(read_config_file(config_path))
    merged.update({k: str(v) for k, v in flags.items() if v is not None})

    cls_text = merged["class"].lower()
    if cls_text == "all":
        classes = list(ClassId)
    else:
        try:
            classes = [ClassId(c) for c in _parse_list(cls_text, str, "--class")]
        except ValueError as exc:
            raise ConfigError(f"unknown class {cls_text!r}") from exc

    tgt_text = merged["target"].lower()
    if tgt_text == "all":
        targets = list(TARGET_NAMES)
    else:
        targets = _parse_list(tgt_text, str, "--target")
        bad = [t for t in targets if t not in TARGET_NAMES]
        if bad:
            raise ConfigError(f"unknown target(s): {', '.join(bad)}")

    alphas = _parse_list(merged["alpha"], float, "--alpha")
    if not alphas or any(not (0.0 <= a < 1.0) for a in alphas):
        raise ConfigError("--alpha values must lie in [0, 1)")
    try:
        samples = int(merged["samples"])
        seed = int(merged["seed"])
        tol = float(merged["tol"]) if merged["tol"] else None
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return RunConfig(
        classes=classes,
        targets=targets,
        alphas=alphas,
        samples=samples,
        tol=tol,
        fmt=(merged["format"] or default_format).lower(),
        out=merged["out"] or None,
        seed=seed,
    )


def _emit(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
        return
    path = Path(out)
    if path.parent and not path.parent.exists():
        path.parent.mkdir(parents=True)
    path.write_text(text, encoding="utf-8")


# ---------------------------------------------------------------------------
# table


def table_row(res: RadiusResult) -> dict:
    return {
        "class": res.cls.value,
        "target": res.region.label,
        "alpha": fmt_float(res.region.alpha) if res.region.kind is RegionKind.HALF_PLANE else "",
        "closed_form": fmt_float(res.closed_form),
        "solved": fmt_float(res.solved),
        "abs_diff": fmt_float(res.abs_diff),
        "sharp": "true" if res.sharp else "false",
        "equation": res.equation,
    }


def render_table(rows: list[dict], fmt: str, meta: dict) -> str:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    if fmt == "json":
        return json.dumps({"metadata": meta, "rows": rows}, indent=2) + "\n"
    lines = ["| " + " | ".join(TABLE_COLUMNS) + " |", "|" + "---|" * len(TABLE_COLUMNS)]
    lines += ["| " + " | ".join(row[c] for c in TABLE_COLUMNS) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def cmd_table(config: RunConfig) -> int:
    tol = config.tol if config.tol is not None else TOL_RADIUS
    try:
        results = [radius_result(cls, region) for cls, region in config.selections()]
    except (NoSignChangeError, DomainError) as exc:
        click.echo(f"solver failure: {exc}", err=True)
        return EXIT_FAIL
    meta = {"version": __version__, "seed": config.seed, "tolerances": {"abs_diff": tol}}
    text = render_table([table_row(r) for r in results], config.fmt, meta)
    try:
        _emit(text, config.out)
    except OSError as exc:
        click.echo(f"cannot write output: {exc}", err=True)
        return EXIT_IO
    return EXIT_OK if all(r.abs_diff <= tol for r in results) else EXIT_FAIL


# ---------------------------------------------------------------------------
# verify


def render_reports(reports, fmt: str, meta: dict) -> str:
    dicts = [r.to_dict() for r in reports]
    if fmt == "json":
        return json.dumps({"metadata": meta, "reports": dicts}, indent=2) + "\n"
    cols = ("class", "target", "alpha", "radius", "verdict", "min_margin", "passed")
    rows = [
        {
            "class": d["cls"],
            "target": d["region"]["label"],
            "alpha": fmt_float(d["region"]["alpha"]) if d["region"]["kind"] == "halfplane" else "",
            "radius": fmt_float(d["radius_tested"]),
            "verdict": d["verdict"],
            "min_margin": fmt_float(d["min_margin"]),
            "passed": "true" if d["passed"] else "false",
        }
        for d in dicts
    ]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buf.getvalue()
    lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
    lines += ["| " + " | ".join(row[c] for c in cols) + " |" for row in rows]
    return "\n".join(lines) + "\n"


def cmd_verify(config: RunConfig) -> int:
    tol_touch = config.tol if config.tol is not None else TOL_TOUCH
    reports = []
    failed = False
    for cls, region in config.selections():
        try:
            rep = cross_validate(cls, region, n=config.samples, tol_touch=tol_touch)
        except Exception as exc:
            click.echo(f"{cls.value}/{region}: {type(exc).__name__}: {exc}", err=True)
            failed = True
            break
        reports.append(rep)
        failed = failed or not rep.passed
    meta = {
        "version": __version__,
        "seed": config.seed,
        "samples": config.samples,
        "tolerances": {"tol_inside": TOL_INSIDE, "tol_touch": tol_touch, "tol_radius": TOL_RADIUS},
    }
    try:
        _emit(render_reports(reports, config.fmt, meta), config.out)
    except OSError as exc:
        click.echo(f"cannot write output: {exc}", err=True)
        return EXIT_IO
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# plot


def _plot_file(cls: ClassId, region: TargetRegion) -> str:
    stem = f"{cls.value}_{region.kind.value}"
    if region.kind is RegionKind.HALF_PLANE:
        stem += f"_a{region.alpha:g}"
    return stem + ".svg"


def render_plot(cls: ClassId, region: TargetRegion, samples: int, path: Path) -> None:
    import matplotlib

    matplotlib.use("svg")
    import matplotlib.pyplot as plt

    matplotlib.rcParams["svg.hashsalt"] = "starradii"
    R = closed_form_radius(cls, region)
    fid = EXTREMAL[cls]
    boundary = boundary_points(region, max(samples, 512))
    fig, ax = plt.subplots(figsize=(6, 5))
    ax.plot(boundary.real, boundary.imag, color="black", lw=1.0, label=f"boundary of {region.label}")
    for frac, style in ((0.5, "--"), (1.0, "-")):
        rep = check_function_containment(fid, region, frac * R, samples, cls=cls)
        w = eval_logderiv(fid, sample_circle(frac * R, samples))
        ax.plot(
            list(w.real) + [w[0].real],
            list(w.imag) + [w[0].imag],
            style,
            lw=1.2,
            label=f"z{fid.value}'/{fid.value} on |z| = {frac:g}R",
        )
        if frac == 1.0:
            ax.plot([rep.argmin_w.real], [rep.argmin_w.imag], "o", color="red", ms=5, label="closest approach")
    ax.set_aspect("equal")
    if region.kind in (RegionKind.HALF_PLANE, RegionKind.PARABOLIC):
        ax.set_xlim(min(region.alpha, 0.0) - 0.5, 3.0)
        ax.set_ylim(-2.0, 2.0)
    ax.set_xlabel("Re w")
    ax.set_ylabel("Im w")
    ax.set_title(f"{cls.value.upper()} / {region.label} ({region}): R = {R:.10f}")
    ax.legend(fontsize=7, loc="upper right")
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def cmd_plot(config: RunConfig) -> int:
    selections = config.selections()
    out = config.out or "."
    try:
        if out.endswith(".svg") and len(selections) == 1:
            targets = [Path(out)]
        else:
            Path(out).mkdir(parents=True, exist_ok=True)
            targets = [Path(out) / _plot_file(cls, region) for cls, region in selections]
        for (cls, region), path in zip(selections, targets):
            render_plot(cls, region, config.samples, path)
            click.echo(str(path))
    except OSError as exc:
        click.echo(f"cannot write plot: {exc}", err=True)
        return EXIT_IO
    return EXIT_OK


# ---------------------------------------------------------------------------
# click wiring


def run_options(fn):
    opts = [
        click.option("--class", "cls_name", default=None, help="pi1, pi2 or all"),
        click.option("--target", default=None, help=f"{', '.join(TARGET_NAMES)} or all"),
        click.option("--alpha", default=None, help="comma-separated half-plane orders in [0, 1)"),
        click.option("--samples", default=None, type=int, help="points on |z| = r"),
        click.option("--tol", default=None, type=float, help="table: abs_diff limit; verify: touch tolerance"),
        click.option("--format", "fmt", default=None, type=click.Choice(FORMATS)),
        click.option("--out", default=None, help="output path (stdout when omitted)"),
        click.option("--seed", default=None, type=int, help="recorded in report metadata"),
        click.option("--config", "config_path", default=None, help="INI file with a [starradii] section"),
    ]
    for opt in reversed(opts):
        fn = opt(fn)
    return fn


def _config_from(kwargs: dict, default_format: str) -> RunConfig:
    flags = {
        "class": kwargs.get("cls_name"),
        "target": kwargs.get("target"),
        "alpha": kwargs.get("alpha"),
        "samples": kwargs.get("samples"),
        "tol": kwargs.get("tol"),
        "format": kwargs.get("fmt"),
        "out": kwargs.get("out"),
        "seed": kwargs.get("seed"),
    }
    try:
        return build_config(flags, kwargs.get("config_path"), default_format)
    except ConfigError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.version_option(__version__)
def cli():
    """Radius constants for the classes PI1 and PI2 and their verification."""


@cli.command("table")
@run_options
def table_command(**kwargs):
    """Closed-form and bisection radii side by side."""
    return cmd_table(_config_from(kwargs, "csv"))


@cli.command("verify")
@run_options
@click.option("--all", "select_all", is_flag=True, help="every class and target")
def verify_command(select_all, **kwargs):
    """Cross-validate radii against the extremal functions."""
    if select_all:
        kwargs["cls_name"] = "all"
        kwargs["target"] = "all"
    return cmd_verify(_config_from(kwargs, "json"))


@cli.command("plot")
@run_options
def plot_command(**kwargs):
    """SVG of a region boundary with image curves of the extremal function."""
    config = _config_from(kwargs, "csv")
    config.plot = True
    return cmd_plot(config)


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="starradii", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        exc.show()
        return EXIT_ARGS
    except click.Abort:
        return EXIT_ARGS
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
