"""Command-line front end: mix, recover, and serve.

Exit codes: 0 on success, 2 for argument or domain errors, 3 when a
recovery solver fails to converge.  Error details go to stderr; stdout
carries only the requested output so it pipes cleanly.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, NonConvergenceError, SpectraMixError
from .pipeline import (
    DEFAULT_ALGORITHM,
    MIX_ALGORITHMS,
    MixOutcome,
    MixRequest,
    load_active_catalog,
    perform_mix,
    perform_recover,
    ppm_strip_bytes,
)
from .recovery import ALGORITHMS

__all__ = ["main", "build_parser"]


def _split_colors(text: str) -> list[str]:
    colors = [c.strip() for c in text.split(",") if c.strip()]
    if not colors:
        raise DomainError("--colors must list at least one hex color")
    return colors


def _split_parts(text: str | None, count: int) -> list[float]:
    if text is None:
        return [1.0] * count
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise DomainError(f"--parts must be comma-separated numbers, got {text!r}") from None
    if len(parts) != count:
        raise DomainError(f"got {count} colors but {len(parts)} parts")
    return parts


def _write_mix_text(outcome: MixOutcome, out) -> None:
    print(outcome.result_hex, file=out)
    if outcome.path is not None:
        for swatch in outcome.path:
            print(f"path {swatch.parts[0]}:{swatch.parts[1]} {swatch.hex}", file=out)


def _write_mix_csv(outcome: MixOutcome, out) -> None:
    def row(kind: str, label: str, hex_: str, rho) -> str:
        return ",".join([kind, label, hex_] + [repr(float(v)) for v in rho])

    print(row("result", "mix", outcome.result_hex, outcome.result_reflectance), file=out)
    for k, report in enumerate(outcome.inputs):
        label = report.matched_name or str(k)
        print(row("input", label, report.hex, report.reflectance), file=out)
    if outcome.path is not None:
        for swatch in outcome.path:
            label = f"{swatch.parts[0]}:{swatch.parts[1]}"
            print(row("path", label, swatch.hex, swatch.reflectance), file=out)


def _cmd_mix(args: argparse.Namespace) -> int:
    colors = _split_colors(args.colors)
    parts = _split_parts(args.parts, len(colors))
    request = MixRequest(
        colors=tuple(zip(colors, parts)),
        algorithm=args.algorithm,
        steps=args.steps,
        metric=args.metric,
    )
    catalog = None
    if args.algorithm == "catalog":
        catalog = load_active_catalog(args.catalog)
    outcome = perform_mix(request, catalog=catalog)

    if outcome.clipped:
        print("note: mixed color fell outside the srgb gamut and was clipped", file=sys.stderr)
    if args.format == "text":
        _write_mix_text(outcome, sys.stdout)
    elif args.format == "csv":
        _write_mix_csv(outcome, sys.stdout)
    else:  # ppm
        if outcome.path is None:
            raise DomainError("ppm output needs a two-color mixing path")
        data = ppm_strip_bytes([s.hex for s in outcome.path])
        if args.out:
            with open(args.out, "wb") as handle:
                handle.write(data)
        else:
            sys.stdout.buffer.write(data)
    return 0


def _cmd_recover(args: argparse.Namespace) -> int:
    outcome = perform_recover(args.color, algorithm=args.algorithm)
    print(",".join(repr(float(v)) for v in outcome.reflectance))
    print(
        f"algorithm={outcome.algorithm} inner_iterations={outcome.inner_iterations} "
        f"outer_iterations={outcome.outer_iterations} "
        f"converged={str(outcome.converged).lower()} round_trip={outcome.round_trip_hex}",
        file=sys.stderr,
    )
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(catalog_path=args.catalog, static_dir=args.ui)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spectramix",
        description="Mix colors like paint: recover reflectance curves from "
        "sRGB, blend them by weighted geometric mean, convert back.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    mix = sub.add_parser("mix", help="mix two or more hex colors")
    mix.add_argument("--colors", required=True, help="comma-separated hex colors, e.g. FFFF00,0000FF")
    mix.add_argument("--parts", default=None, help="comma-separated parts, default all 1")
    mix.add_argument("--algorithm", default=DEFAULT_ALGORITHM, choices=MIX_ALGORITHMS)
    mix.add_argument("--steps", type=int, default=None, help="interior path steps for two-color mixes (default 9)")
    mix.add_argument("--metric", default="lab", choices=("lab", "srgb"), help="catalog matching metric")
    mix.add_argument("--catalog", default=None, help="catalog CSV path (default: $SPECTRAMIX_CATALOG or bundled sample)")
    mix.add_argument("--format", default="text", choices=("text", "csv", "ppm"))
    mix.add_argument("--out", default=None, help="output file for --format ppm (default stdout)")
    mix.set_defaults(func=_cmd_mix)

    rec = sub.add_parser("recover", help="recover a reflectance curve for one hex color")
    rec.add_argument("--color", required=True, help="hex color, e.g. 3264C8")
    rec.add_argument("--algorithm", default=DEFAULT_ALGORITHM, choices=ALGORITHMS)
    rec.set_defaults(func=_cmd_recover)

    serve = sub.add_parser("serve", help="run the HTTP service and web UI")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.add_argument("--catalog", default=None, help="catalog CSV path")
    serve.add_argument("--ui", default=None, help="directory of built UI assets")
    serve.set_defaults(func=_cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NonConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.diagnostics:
            print(f"diagnostics: {json.dumps(exc.diagnostics)}", file=sys.stderr)
        return 3
    except SpectraMixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
