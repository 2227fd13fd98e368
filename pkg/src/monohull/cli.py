"""Command-line front end.

Reads a strict JSON document describing either a configuration (explicit
classes or zonotope generators over a gram matrix) or a manifold model
(connected sum of catalog blocks), dispatches the requested computation, and
emits a human table or a byte-stable machine document. All exact rationals
travel as "p/q" strings so the exact path never passes through floats.

Exit codes: 0 success, 2 input/parse error, 3 resource/cap error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any

from . import bounds as bounds_mod
from . import grassmann, hull, manifold
from .errors import (
    InputDataError,
    MonohullError,
    ResourceCapError,
    SchemaError,
    UnsupportedModelError,
)
from .quadform import QuadraticSpace

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3

COMMANDS = ("beta", "alpha", "bounds", "oracle", "report")

_BLOCK_KEYS = {
    "general_type": {"kind", "count", "c1sq", "chi", "tau", "b_plus", "h20_odd", "simply_connected"},
    "cp2bar": {"kind", "count"},
    "k3": {"kind", "count"},
    "t4": {"kind", "count"},
    "n3xs1": {"kind", "count", "b1"},
}


@dataclass(frozen=True)
class Options:
    mode: str = "both"  # beta | alpha | both
    samples: int = hull.DEFAULT_ORACLE_SAMPLES
    seed: int = 0
    starts: int = grassmann.DEFAULT_STARTS
    cap: int | None = None  # overrides both enumeration caps when set
    tol: Fraction | None = None
    exact_only: bool = False  # CLI-only, not part of the document
    allow_asymmetric: bool = False  # CLI-only, not part of the document

    @property
    def generator_cap(self) -> int:
        return self.cap if self.cap is not None else hull.DEFAULT_GENERATOR_CAP

    @property
    def vertex_cap(self) -> int:
        return self.cap if self.cap is not None else hull.DEFAULT_VERTEX_CAP


@dataclass(frozen=True)
class InputDocument:
    kind: str  # explicit | zonotope | manifold
    gram: tuple | None = None
    classes: tuple | None = None
    generators: tuple | None = None
    blocks: tuple = ()
    extra_plus: int = 0
    extra_minus: int = 0
    options: Options = field(default_factory=Options)

    def to_json_dict(self) -> dict:
        out: dict[str, Any] = {}
        if self.kind == "explicit":
            out["space"] = {"gram": [[_rat_str(x) for x in row] for row in self.gram]}
            out["classes"] = [[_rat_str(x) for x in v] for v in self.classes]
        elif self.kind == "zonotope":
            out["space"] = {"gram": [[_rat_str(x) for x in row] for row in self.gram]}
            out["zonotope"] = {"generators": [[_rat_str(x) for x in v] for v in self.generators]}
        else:
            blocks = []
            for b in self.blocks:
                k = b.kind
                entry: dict[str, Any] = {"kind": k.label, "count": b.multiplicity}
                if isinstance(k, manifold.GeneralType):
                    entry.update(
                        c1sq=k.c1sq,
                        chi=k.chi,
                        tau=k.tau,
                        b_plus=k.b_plus,
                        h20_odd=k.h20_odd,
                        simply_connected=k.simply_connected,
                    )
                elif isinstance(k, manifold.ThreeManifoldTimesCircle):
                    entry["b1"] = k.b1
                blocks.append(entry)
            out["manifold"] = {
                "sum": blocks,
                "ambient_extension": {
                    "extra_plus": self.extra_plus,
                    "extra_minus": self.extra_minus,
                },
            }
        opts: dict[str, Any] = {
            "mode": self.options.mode,
            "samples": self.options.samples,
            "seed": self.options.seed,
            "starts": self.options.starts,
        }
        if self.options.cap is not None:
            opts["cap"] = self.options.cap
        if self.options.tol is not None:
            opts["tol"] = _rat_str(self.options.tol)
        out["options"] = opts
        return out

    def digest(self) -> str:
        payload = json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()


def _rat_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _require_map(obj, path: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{path}: expected an object")
    return obj


def _require_list(obj, path: str) -> list:
    if not isinstance(obj, list):
        raise SchemaError(f"{path}: expected an array")
    return obj


def _check_keys(obj: dict, allowed: set[str], path: str) -> None:
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise SchemaError(f"{path}: unexpected key {unknown[0]!r}")


def _parse_rational(obj, path: str) -> Fraction:
    if isinstance(obj, bool):
        raise SchemaError(f"{path}: expected integer or 'p/q' rational, got boolean")
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj.strip())
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"{path}: not a valid rational: {obj!r}") from None
    if isinstance(obj, float):
        raise SchemaError(f"{path}: floats are not accepted; write the value as 'p/q'")
    raise SchemaError(f"{path}: expected integer or 'p/q' rational")


def _parse_int(obj, path: str, minimum: int | None = None) -> int:
    if isinstance(obj, bool) or not isinstance(obj, int):
        raise SchemaError(f"{path}: expected an integer")
    if minimum is not None and obj < minimum:
        raise SchemaError(f"{path}: must be >= {minimum}")
    return obj


def _parse_bool(obj, path: str) -> bool:
    if not isinstance(obj, bool):
        raise SchemaError(f"{path}: expected a boolean")
    return obj


def _parse_matrix(obj, path: str) -> tuple:
    rows = _require_list(obj, path)
    if not rows:
        raise SchemaError(f"{path}: matrix must be non-empty")
    out = []
    for i, row in enumerate(rows):
        row = _require_list(row, f"{path}[{i}]")
        out.append(tuple(_parse_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(out)


def _parse_vectors(obj, path: str, dim: int) -> tuple:
    rows = _require_list(obj, path)
    out = []
    for i, row in enumerate(rows):
        row = _require_list(row, f"{path}[{i}]")
        if len(row) != dim:
            raise SchemaError(f"{path}[{i}]: expected {dim} coordinates, got {len(row)}")
        out.append(tuple(_parse_rational(x, f"{path}[{i}][{j}]") for j, x in enumerate(row)))
    return tuple(out)


def _parse_block(obj, path: str) -> manifold.BuildingBlock:
    obj = _require_map(obj, path)
    if "kind" not in obj:
        raise SchemaError(f"{path}: missing required key 'kind'")
    kind = obj["kind"]
    if kind not in _BLOCK_KEYS:
        raise SchemaError(
            f"{path}.kind: unknown block kind {kind!r} "
            f"(expected one of {sorted(_BLOCK_KEYS)})"
        )
    _check_keys(obj, _BLOCK_KEYS[kind], path)
    count = _parse_int(obj.get("count", 1), f"{path}.count", minimum=1)
    if kind == "general_type":
        for key in ("c1sq", "chi", "tau", "b_plus"):
            if key not in obj:
                raise SchemaError(f"{path}: missing required key {key!r}")
        block = manifold.GeneralType(
            c1sq=_parse_int(obj["c1sq"], f"{path}.c1sq"),
            chi=_parse_int(obj["chi"], f"{path}.chi"),
            tau=_parse_int(obj["tau"], f"{path}.tau"),
            b_plus=_parse_int(obj["b_plus"], f"{path}.b_plus"),
            h20_odd=_parse_bool(obj.get("h20_odd", True), f"{path}.h20_odd"),
            simply_connected=_parse_bool(
                obj.get("simply_connected", True), f"{path}.simply_connected"
            ),
        )
    elif kind == "cp2bar":
        block = manifold.CP2Bar()
    elif kind == "k3":
        block = manifold.K3()
    elif kind == "t4":
        block = manifold.T4()
    else:
        block = manifold.ThreeManifoldTimesCircle(
            b1=_parse_int(obj.get("b1", 1), f"{path}.b1", minimum=0)
        )
    return manifold.BuildingBlock(kind=block, multiplicity=count)


def _parse_options(obj, path: str) -> Options:
    obj = _require_map(obj, path)
    _check_keys(obj, {"mode", "samples", "seed", "starts", "cap", "tol"}, path)
    opts = Options()
    if "mode" in obj:
        mode = obj["mode"]
        if mode not in ("beta", "alpha", "both"):
            raise SchemaError(f"{path}.mode: expected beta|alpha|both, got {mode!r}")
        opts = replace(opts, mode=mode)
    if "samples" in obj:
        opts = replace(opts, samples=_parse_int(obj["samples"], f"{path}.samples", minimum=1))
    if "seed" in obj:
        opts = replace(opts, seed=_parse_int(obj["seed"], f"{path}.seed", minimum=0))
    if "starts" in obj:
        opts = replace(opts, starts=_parse_int(obj["starts"], f"{path}.starts", minimum=1))
    if "cap" in obj:
        opts = replace(opts, cap=_parse_int(obj["cap"], f"{path}.cap", minimum=1))
    if "tol" in obj:
        opts = replace(opts, tol=_parse_rational(obj["tol"], f"{path}.tol"))
    return opts


def parse_input(text: str) -> InputDocument:
    """Parse and validate an input document; raises SchemaError naming the
    offending line (syntax) or field path (schema)."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    obj = _require_map(obj, "$")
    _check_keys(obj, {"space", "classes", "zonotope", "manifold", "options"}, "$")
    options = _parse_options(obj["options"], "options") if "options" in obj else Options()

    has_classes = "classes" in obj
    has_zono = "zonotope" in obj
    has_manifold = "manifold" in obj
    if sum((has_classes, has_zono, has_manifold)) != 1:
        raise SchemaError(
            "$: exactly one of 'classes', 'zonotope', or 'manifold' is required"
        )
    if has_manifold:
        if "space" in obj:
            raise SchemaError("$: 'space' is not allowed with 'manifold' input")
        m = _require_map(obj["manifold"], "manifold")
        _check_keys(m, {"sum", "ambient_extension"}, "manifold")
        if "sum" not in m:
            raise SchemaError("manifold: missing required key 'sum'")
        blocks = tuple(
            _parse_block(b, f"manifold.sum[{i}]")
            for i, b in enumerate(_require_list(m["sum"], "manifold.sum"))
        )
        if not blocks:
            raise SchemaError("manifold.sum: at least one block is required")
        extra_plus = extra_minus = 0
        if "ambient_extension" in m:
            ext = _require_map(m["ambient_extension"], "manifold.ambient_extension")
            _check_keys(ext, {"extra_plus", "extra_minus"}, "manifold.ambient_extension")
            extra_plus = _parse_int(
                ext.get("extra_plus", 0), "manifold.ambient_extension.extra_plus", minimum=0
            )
            extra_minus = _parse_int(
                ext.get("extra_minus", 0), "manifold.ambient_extension.extra_minus", minimum=0
            )
        return InputDocument(
            kind="manifold",
            blocks=blocks,
            extra_plus=extra_plus,
            extra_minus=extra_minus,
            options=options,
        )

    if "space" not in obj:
        raise SchemaError("$: missing required key 'space'")
    space_obj = _require_map(obj["space"], "space")
    _check_keys(space_obj, {"gram"}, "space")
    if "gram" not in space_obj:
        raise SchemaError("space: missing required key 'gram'")
    gram = _parse_matrix(space_obj["gram"], "space.gram")
    dim = len(gram)
    for i, row in enumerate(gram):
        if len(row) != dim:
            raise SchemaError(f"space.gram[{i}]: expected {dim} entries, got {len(row)}")
    if has_classes:
        classes = _parse_vectors(obj["classes"], "classes", dim)
        return InputDocument(kind="explicit", gram=gram, classes=classes, options=options)
    z = _require_map(obj["zonotope"], "zonotope")
    _check_keys(z, {"generators"}, "zonotope")
    if "generators" not in z:
        raise SchemaError("zonotope: missing required key 'generators'")
    generators = _parse_vectors(z["generators"], "zonotope.generators", dim)
    return InputDocument(kind="zonotope", gram=gram, generators=generators, options=options)


def parse_input_path(path: str) -> InputDocument:
    if path == "-":
        return parse_input(sys.stdin.read())
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_input(fh.read())
    except OSError as exc:
        raise SchemaError(f"cannot read input {path!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# dispatch


def _build_configuration(doc: InputDocument) -> tuple[hull.MonopoleConfiguration, list[str], Any]:
    warnings: list[str] = []
    if doc.kind == "manifold":
        model = manifold.connected_sum(list(doc.blocks))
        generated = manifold.monopole_configuration(
            model, extra_plus=doc.extra_plus, extra_minus=doc.extra_minus
        )
        warnings.extend(model.hypothesis_warnings)
        return generated.cfg, warnings, (model, generated)
    space = QuadraticSpace(doc.gram)
    if doc.kind == "explicit":
        cfg = hull.MonopoleConfiguration.explicit(
            space, doc.classes, allow_asymmetric=doc.options.allow_asymmetric
        )
        if doc.options.allow_asymmetric:
            sym_count = cfg.class_count - len(doc.classes)
            if sym_count:
                warnings.append(
                    f"configuration was auto-symmetrized: {sym_count} negatives added"
                )
        return cfg, warnings, None
    cfg = hull.MonopoleConfiguration.zonotope(space, doc.generators)
    return cfg, warnings, None


def _beta_payload(result: hull.BetaResult) -> dict:
    witness = None
    if result.witness is not None:
        witness = {
            "point": [_rat_str(x) for x in result.witness.point.coords],
            "barycentric": [
                [label, _rat_str(w)] for label, w in result.witness.barycentric
            ],
            "value": _number_payload(result.witness.value),
        }
    return {
        "value": _number_payload(result.value),
        "mode": result.mode,
        "witness": witness,
        "attaining_vertices": list(result.attaining_vertices),
        "oracle_gap": result.oracle_gap,
    }


def _number_payload(x) -> dict:
    if isinstance(x, Fraction):
        return {"exact": _rat_str(x), "float": float(x), "tag": "exact"}
    return {"exact": None, "float": float(x), "tag": "numeric"}


def _alpha_payload(result: grassmann.AlphaResult, cfg: hull.MonopoleConfiguration) -> dict:
    labels = grassmann.attaining_labels(cfg, result.classes_attaining)
    return {
        "value": result.value,
        "boundary_flag": result.boundary_flag,
        "classes_attaining": list(labels),
        "evaluations": len(result.trace),
        "final_objective": result.trace[-1] if result.trace else result.value,
        "note": result.note,
    }


def _bounds_payload(report: bounds_mod.BoundsReport) -> dict:
    def check_payload(check: bounds_mod.EinsteinCheck) -> dict:
        return {
            "lhs": check.lhs,
            "rhs": _number_payload(check.rhs),
            "verdict": check.verdict,
            "rigidity_note": check.rigidity_note,
        }

    return {
        "beta_sq": _number_payload(report.beta_sq),
        "alpha_sq": report.alpha_sq,
        "scalar_l2_lower": {
            "coeff_pi2": _rat_str(report.curvature.scalar_coeff),
            "float": report.curvature.scalar_l2_lower,
        },
        "weyl_mixed_lower": {
            "coeff_pi2": _rat_str(report.curvature.weyl_coeff),
            "float": report.curvature.weyl_mixed_lower,
        },
        "yamabe_upper": report.curvature.yamabe_upper,
        "einstein_2chi_minus_3tau": check_payload(report.einstein.minus_check),
        "einstein_2chi_plus_3tau": check_payload(report.einstein.plus_check),
        "einstein_verdict": report.einstein.verdict,
        "ricci_l2_lower": {
            "coeff_pi2": _rat_str(report.ricci.coeff),
            "float": report.ricci.value,
            "vacuous": report.ricci.vacuous,
            "note": report.ricci.note,
        },
        "notes": list(report.notes),
    }


def run(command: str, doc: InputDocument, options: Options | None = None) -> dict:
    """Execute a command against a parsed document; returns the output payload."""
    if command not in COMMANDS:
        raise SchemaError(f"unknown command {command!r}")
    opts = options or doc.options
    cfg, warnings, model_pair = _build_configuration(
        replace(doc, options=opts) if options else doc
    )
    payload: dict[str, Any] = {
        "command": command,
        "input_digest": doc.digest(),
        "options": {
            "mode": opts.mode,
            "samples": opts.samples,
            "seed": opts.seed,
            "starts": opts.starts,
            "generator_cap": opts.generator_cap,
            "vertex_cap": opts.vertex_cap,
            "exact_only": opts.exact_only,
        },
        "beta": None,
        "alpha": None,
        "bounds": None,
        "oracle": None,
        "warnings": warnings,
        "timing_s": None,
    }

    need_beta = command in ("beta", "alpha", "bounds", "report")
    need_alpha = (command == "alpha") or (
        command in ("bounds", "report") and opts.mode in ("alpha", "both")
    )
    need_oracle = command in ("oracle", "report")

    beta_result = None
    if need_beta:
        beta_result = hull.beta_squared(
            cfg,
            generator_cap=opts.generator_cap,
            vertex_cap=opts.vertex_cap,
            allow_heuristic=not opts.exact_only,
            seed=opts.seed,
            oracle_samples=opts.samples,
        )
        payload["beta"] = _beta_payload(beta_result)

    if need_alpha:
        kwargs: dict[str, Any] = {"starts": opts.starts, "seed": opts.seed}
        if opts.tol is not None:
            kwargs["fatol"] = float(opts.tol)
        alpha_result = grassmann.alpha_squared(cfg, **kwargs)
        payload["alpha"] = _alpha_payload(alpha_result, cfg)
        if beta_result is not None and beta_result.mode == "exact":
            payload["alpha"]["sandwich_gap"] = alpha_result.value - float(beta_result.value)

    if command in ("bounds", "report"):
        if model_pair is None:
            if command == "bounds":
                raise SchemaError("bounds requires a manifold input document")
        else:
            model, generated = model_pair
            if beta_result.mode != "exact":
                raise ResourceCapError(
                    "bounds require an exact beta^2; raise --cap so the "
                    "configuration stays on the exact path"
                )
            extra_notes = [f"provenance: {generated.provenance}"]
            if generated.ambient_description:
                extra_notes.append(f"ambient: {generated.ambient_description}")
            if generated.known_beta is not None and beta_result.value != generated.known_beta:
                warnings.append(
                    f"computed beta^2 = {beta_result.value} differs from the catalog "
                    f"value {generated.known_beta}"
                )
            alpha_val = payload["alpha"]["value"] if payload["alpha"] else None
            report = bounds_mod.bounds_report(
                model,
                beta_result.value,
                alpha_sq=alpha_val,
                extra_notes=tuple(extra_notes),
            )
            payload["bounds"] = _bounds_payload(report)

    if need_oracle:
        if cfg.is_empty:
            payload["oracle"] = None
        else:
            value = hull.monte_carlo_oracle(cfg, samples=opts.samples, seed=opts.seed)
            payload["oracle"] = {"value": value, "samples": opts.samples, "seed": opts.seed}

    return payload


# ---------------------------------------------------------------------------
# formatting


def to_machine(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _fmt_number(num: dict | float | None) -> str:
    if num is None:
        return "-"
    if isinstance(num, dict):
        if num.get("exact") is not None:
            return f"{num['exact']} (= {num['float']:.6g})"
        return f"{num['float']:.9g}"
    return f"{num:.9g}"


def to_text(payload: dict, elapsed: float) -> str:
    lines = [f"monohull {payload['command']}  [digest {payload['input_digest'][:12]}]"]
    beta = payload["beta"]
    if beta:
        lines.append(f"beta^2      : {_fmt_number(beta['value'])}  mode={beta['mode']}")
        if beta["witness"]:
            pt = ", ".join(beta["witness"]["point"])
            lines.append(f"  witness   : [{pt}]")
            combo = ", ".join(f"{label}:{w}" for label, w in beta["witness"]["barycentric"])
            lines.append(f"  combo     : {combo}")
        if beta["attaining_vertices"]:
            lines.append(f"  attaining : {beta['attaining_vertices']}")
        if beta["oracle_gap"] is not None:
            lines.append(f"  oracle gap: {beta['oracle_gap']:.3g}")
    alpha = payload["alpha"]
    if alpha:
        flag = "yes" if alpha["boundary_flag"] else "no"
        lines.append(f"alpha^2     : {alpha['value']:.9g}  chart-boundary={flag}")
        lines.append(f"  attaining : {alpha['classes_attaining']}")
        if alpha.get("sandwich_gap") is not None:
            lines.append(f"  alpha-beta: {alpha['sandwich_gap']:.3g}")
        if alpha["note"]:
            lines.append(f"  note      : {alpha['note']}")
    bnd = payload["bounds"]
    if bnd:
        lines.append("bounds:")
        lines.append(
            f"  scalar L2 lower : {bnd['scalar_l2_lower']['coeff_pi2']} pi^2"
            f" = {bnd['scalar_l2_lower']['float']:.6g}"
        )
        lines.append(
            f"  mixed Weyl lower: {bnd['weyl_mixed_lower']['coeff_pi2']} pi^2"
            f" = {bnd['weyl_mixed_lower']['float']:.6g}"
        )
        lines.append(f"  Yamabe upper    : {bnd['yamabe_upper']:.6g}")
        for key, label in (
            ("einstein_2chi_minus_3tau", "2chi-3tau"),
            ("einstein_2chi_plus_3tau", "2chi+3tau"),
        ):
            chk = bnd[key]
            lines.append(
                f"  Einstein {label}: lhs={chk['lhs']} rhs={chk['rhs']['exact']}"
                f" -> {chk['verdict']}"
            )
            if chk["rigidity_note"]:
                lines.append(f"      {chk['rigidity_note']}")
        lines.append(f"  Einstein verdict: {bnd['einstein_verdict']}")
        ric = bnd["ricci_l2_lower"]
        lines.append(
            f"  Ricci L2 lower  : {ric['coeff_pi2']} pi^2 = {ric['float']:.6g}"
            f" ({ric['note']})"
        )
        for note in bnd["notes"]:
            lines.append(f"  note: {note}")
    orc = payload["oracle"]
    if orc:
        lines.append(
            f"oracle      : {orc['value']:.9g}  (samples={orc['samples']}, seed={orc['seed']})"
        )
    if payload["warnings"]:
        for w in payload["warnings"]:
            lines.append(f"warning     : {w}")
    lines.append(f"time        : {elapsed:.3f} s")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# entry point


def _merge_flags(doc: InputDocument, args: argparse.Namespace) -> Options:
    opts = doc.options
    if args.mode is not None:
        opts = replace(opts, mode=args.mode)
    if args.samples is not None:
        opts = replace(opts, samples=args.samples)
    if args.seed is not None:
        opts = replace(opts, seed=args.seed)
    if args.starts is not None:
        opts = replace(opts, starts=args.starts)
    if args.cap is not None:
        opts = replace(opts, generator_cap=args.cap, vertex_cap=args.cap)
    if args.tol is not None:
        opts = replace(opts, tol=args.tol)
    if args.exact_only:
        opts = replace(opts, exact_only=True)
    if args.allow_asymmetric:
        opts = replace(opts, allow_asymmetric=True)
    return opts


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monohull",
        description=(
            "Convex-geometric smooth-structure invariants: beta^2, alpha^2, and the "
            "derived curvature and Einstein-obstruction bounds."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("beta", "maximize the intersection form over the configuration hull"),
        ("alpha", "minimax over maximal positive subspaces (reports beta^2 as well)"),
        ("bounds", "curvature/Einstein/Yamabe report (manifold input required)"),
        ("oracle", "Monte-Carlo lower-bound oracle for beta^2"),
        ("report", "everything the input supports"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("input", nargs="?", default="-", help="input document path, or - for stdin")
        p.add_argument("--mode", choices=("beta", "alpha", "both"), default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--starts", type=int, default=None)
        p.add_argument("--cap", type=int, default=None)
        p.add_argument("--tol", type=float, default=None)
        p.add_argument("--exact-only", action="store_true", dest="exact_only")
        p.add_argument("--allow-asymmetric", action="store_true", dest="allow_asymmetric")
        p.add_argument("--format", choices=("text", "machine"), default="text")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        doc = parse_input_path(args.input)
        options = _merge_flags(doc, args)
        payload = run(args.command, doc, options)
    except (SchemaError, InputDataError, UnsupportedModelError) as exc:
        print(f"monohull: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceCapError as exc:
        print(f"monohull: resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except MonohullError as exc:
        print(f"monohull: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    for w in payload["warnings"]:
        print(f"monohull: warning: {w}", file=sys.stderr)
    if args.format == "machine":
        sys.stdout.write(to_machine(payload))
    else:
        sys.stdout.write(to_text(payload, time.perf_counter() - started))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
