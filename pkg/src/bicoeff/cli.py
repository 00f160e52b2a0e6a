"""``bicoeff`` command line: bounds, verify, table, revert.

Exit status: 0 success, 1 usage error, 2 validation error, 3 verification
failure.  Machine formats (csv, json) print 12 significant digits, text
prints 6.  ``BICOEFF_SEED`` overrides the default seed.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import asdict, dataclass

import numpy as np

from .classbounds import ClassSpec, bounds_for, sstar_discrepancies
from .coeffsystem import (
    CLASS_FUNCTIONALS,
    FunctionalId,
    keogh_merkes_bound,
    maximize_functional,
    printed_bound,
    sample_consistent_pairs,
    sstar_keogh_merkes_v,
)
from .errors import ValidationError
from .maminda import MaMindaPhi, parse_phi
from .powerseries import DEFAULT_ORDER, normalized_series, ps_revert

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_FAIL = 0, 1, 2, 3
NOT_CLAIMED = "not claimed in source"
VERIFY_TOL = 1e-9

CLASS_NAMES = {
    "r-sigma": "r_sigma",
    "sstar-sigma": "sstar_sigma",
    "k-sigma": "k_sigma",
    "mixed-k-r": "mixed_k_r",
    "mixed-sstar-r": "mixed_sstar_r",
    "mixed-sstar-k": "mixed_sstar_k",
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    class_spec: str | None = None
    lam: float = 1.0
    phi_spec: str = "beta:0"
    mode: str = "box"
    samples: int = 20000
    seed: int = 0
    output_format: str = "text"
    order: int = DEFAULT_ORDER
    coeffs: str | None = None


# ------------------------------------------------------------------ numbers

def _num(x, digits: int):
    """Round a float to ``digits`` significant digits for rendering."""
    if x is None or isinstance(x, (str, bool, int)):
        return x
    x = float(x) + 0.0
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if math.isnan(x):
        return "nan"
    return float(f"{x:.{digits}g}")


def _text(x) -> str:
    if x is None:
        return "-"
    if isinstance(x, float):
        return f"{x:.6g}"
    return str(x)


def render(config: dict, rows: list[dict], fmt: str, extra: dict | None = None) -> str:
    extra = extra or {}
    if fmt == "json":
        doc = {"config": config,
               "rows": [{k: _num(v, 12) for k, v in r.items()} for r in rows]}
        for key, items in extra.items():
            doc[key] = [{k: _num(v, 12) for k, v in r.items()} for r in items]
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        all_rows = rows + [r for items in extra.values() for r in items]
        cols: list[str] = []
        for r in all_rows:
            cols += [k for k in r if k not in cols]
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
        w.writeheader()
        for r in all_rows:
            w.writerow({k: ("" if r.get(k) is None else _num(r.get(k), 12)) for k in cols})
        return buf.getvalue()
    out = [" ".join(f"{k}={v}" for k, v in config.items())]
    for title, items in [("", rows), *extra.items()]:
        if not items:
            continue
        if title:
            out += ["", f"[{title}]"]
        cols = list(items[0])
        cells = [[_text(_num(r.get(c), 6)) for c in cols] for r in items]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        out.append("  ".join(c.ljust(wd) for c, wd in zip(cols, widths)).rstrip())
        for row in cells:
            out.append("  ".join(v.ljust(wd) for v, wd in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def reparse_json(text: str) -> str:
    """Re-render parsed JSON output; byte-identical for :func:`render` output."""
    return json.dumps(json.loads(text), indent=2) + "\n"


# ------------------------------------------------------------------ commands

def _spec(cfg: RunConfig) -> ClassSpec:
    if cfg.class_spec is None:
        raise UsageError("--class is required for this command")
    return ClassSpec(CLASS_NAMES[cfg.class_spec], cfg.lam if cfg.class_spec == "r-sigma" else 0.0)


def _phi(cfg: RunConfig) -> MaMindaPhi:
    try:
        return parse_phi(cfg.phi_spec)
    except ValidationError:
        raise
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _config_dict(cfg: RunConfig, *keys: str) -> dict:
    d = asdict(cfg)
    return {k: d[k] for k in ("command", *keys)}


def cmd_bounds(cfg: RunConfig) -> tuple[str, int]:
    spec, phi = _spec(cfg), _phi(cfg)
    rep = bounds_for(spec, phi.B1, phi.B2)
    rows = []
    for q, bound, branches in (("a2", rep.a2_bound, rep.a2_branches),
                               ("a3", rep.a3_bound, rep.a3_branches)):
        if bound is None:
            rows.append({"quantity": q, "branch": "min", "value": NOT_CLAIMED})
            continue
        rows += [{"quantity": q, "branch": k, "value": v} for k, v in branches.items()]
        rows.append({"quantity": q, "branch": "min", "value": bound})
    if rep.R_value is not None:
        rows.append({"quantity": "R", "branch": "R", "value": rep.R_value})
    config = _config_dict(cfg, "class_spec", "lam", "phi_spec")
    config.update(B1=_num(phi.B1, 12), B2=_num(phi.B2, 12))
    return render(config, rows, cfg.output_format), EXIT_OK


def _status(found: float, bound: float | None) -> str:
    if bound is None:
        return "n/a"
    return "FAIL" if found > bound + VERIFY_TOL * max(1.0, bound) else "PASS"


def verify_rows(cfg: RunConfig) -> tuple[dict, list[dict], list[dict]]:
    """Rows of the verification report and, for sstar-sigma, the discrepancy list."""
    spec, phi = _spec(cfg), _phi(cfg)
    B1, B2, lam = phi.B1, phi.B2, spec.lam
    rows = []
    ids = [FunctionalId.parse(i) for i in CLASS_FUNCTIONALS[spec.kind]]
    if spec.kind == "sstar_sigma":
        ids.append(FunctionalId("keogh_merkes", sstar_keogh_merkes_v(B1, B2)))
    for fid in ids:
        is_km = fid.id == "keogh_merkes"
        if fid.id == "eq19_10" and B1 * B1 + B1 - B2 == 0:
            rows.append({"functional": str(fid), "target": fid.target, "bound": None,
                         "box_max": "inf", "tight_max": "inf", "gap": None,
                         "judged_on": cfg.mode, "status": "n/a"})
            continue
        bound = keogh_merkes_bound(fid.v) if is_km else printed_bound(fid, lam, B1, B2)
        box = maximize_functional(fid, lam, B1, B2, "box", cfg.samples, cfg.seed)
        tight = maximize_functional(fid, lam, B1, B2, "tight", cfg.samples, cfg.seed)
        basis = "tight" if is_km else cfg.mode
        found = tight.max_modulus if basis == "tight" else box.max_modulus
        rows.append({"functional": str(fid), "target": fid.target, "bound": bound,
                     "box_max": box.max_modulus, "tight_max": tight.max_modulus,
                     "gap": bound - found, "judged_on": basis,
                     "status": _status(found, bound)})
    rep = bounds_for(spec, B1, B2)
    joint = sample_consistent_pairs(spec, B1, B2, cfg.samples, cfg.seed)
    for q, bound, vals in (("a2", rep.a2_bound, joint.a2), ("a3", rep.a3_bound, joint.a3)):
        found = float(np.abs(vals).max())
        rows.append({"functional": f"joint:{q}", "target": f"|{q}|", "bound": bound,
                     "box_max": None, "tight_max": found,
                     "gap": None if bound is None else bound - found,
                     "judged_on": "tight", "status": _status(found, bound)})
    disc = []
    if spec.kind == "sstar_sigma":
        d = sstar_discrepancies(B1, B2)
        disc = [
            {"quantity": "a2 branch 3", "printed_label": "B1*sqrt(B1)/sqrt(B1^2+|B1-B2|)",
             "printed": d["a2_branch3_printed"],
             "derived_label": "sqrt(B1^3/|B1^2+B1-B2|) from eq19.10",
             "derived": d["a2_branch3_derived"]},
            {"quantity": "a3 branch 2", "printed_label": "(B1^2+B1+|B2-B1|)/2",
             "printed": d["a3_branch2_printed"],
             "derived_label": "(B1^2+|B2|+|B1-B2|)/2 from eq19.31",
             "derived": d["a3_branch2_derived"]},
        ]
    config = _config_dict(cfg, "class_spec", "lam", "phi_spec", "mode", "samples", "seed")
    config.update(B1=_num(B1, 12), B2=_num(B2, 12))
    return config, rows, disc


def cmd_verify(cfg: RunConfig) -> tuple[str, int]:
    if cfg.samples < 1:
        raise ValidationError(f"--samples must be >= 1, got {cfg.samples}")
    config, rows, disc = verify_rows(cfg)
    extra = {"discrepancies": disc} if disc else {}
    code = EXIT_FAIL if any(r["status"] == "FAIL" for r in rows) else EXIT_OK
    return render(config, rows, cfg.output_format, extra), code


def table_rows() -> list[dict]:
    """Every numeric value in the remarks, exact vs generic recomputation."""
    from .classbounds import bound_k_sigma, bound_mixed, bound_r_sigma, bound_sstar_sigma

    rows = []

    def add(label, exact, generic, printed=None):
        rows.append({"label": label, "printed": printed, "exact": exact,
                     "generic": generic, "abs_diff": abs(exact - generic)})

    def beta(b):
        phi = MaMindaPhi.order_beta(b)
        return phi.B1, phi.B2

    for b, printed in ((0.0, "0.816"), (0.25, None), (0.5, None)):
        add(f"Th2.2 λ=1 β={b:g}", math.sqrt(2 * (1 - b) / 3),
            bound_r_sigma(1.0, *beta(b)).a2_bound, printed)
    for b in (0.0, 0.25, 0.5, 0.75):
        exact = math.sqrt(2 * (1 - b)) if b <= 0.5 else math.sqrt((1 - b) * (3 - 2 * b))
        add(f"Th2.5 β={b:g} a2 (piecewise)", exact, bound_sstar_sigma(*beta(b)).a2_bound,
            "sqrt(2)" if b == 0 else None)
    br = list(bound_sstar_sigma(*beta(0.5)).a2_branches.values())
    add("Th2.5 β=0.5 crossover |branch1-branch2|", 0.0, abs(br[0] - br[1]))
    for a in (0.25, 0.5, 1.0):
        phi = MaMindaPhi.strongly_starlike(a)
        add(f"Th2.5 α={a:g} a2", 2 * a / math.sqrt(1 + a),
            bound_sstar_sigma(phi.B1, phi.B2).a2_bound)
    for b in (0.0, 0.25, 0.5):
        rep = bound_k_sigma(*beta(b))
        add(f"Th2.9 β={b:g} a2", 1 - b, rep.a2_bound)
        add(f"Th2.9 β={b:g} a3", (1 - b) * (3 - 2 * b) / 3, rep.a3_bound)
    for b in (0.0, 0.25):
        rep = bound_mixed("mixed_k_r", *beta(b))
        add(f"Th2.11 β={b:g} a2", math.sqrt(3 * (1 - b)) / 2, rep.a2_bound,
            "0.867" if b == 0 else None)
        add(f"Th2.11 β={b:g} a3", 5 * (1 - b) / 6, rep.a3_bound, "0.833" if b == 0 else None)
    for b in (0.0, 0.25):
        rep = bound_mixed("mixed_sstar_r", *beta(b))
        add(f"Th2.13 β={b:g} a2", math.sqrt(10 * (1 - b)) / 3, rep.a2_bound,
            "1.054" if b == 0 else None)
        add(f"Th2.13 β={b:g} a3", 14 * (1 - b) / 9, rep.a3_bound, "1.56" if b == 0 else None)
    for b in (0.0, 0.25, 0.5):
        rep = bound_mixed("mixed_sstar_k", *beta(b))
        add(f"Th2.15 β={b:g} a2", math.sqrt(1 - b), rep.a2_bound, "1" if b == 0 else None)
        add(f"Th2.15 β={b:g} a3", 1 - b, rep.a3_bound, "1" if b == 0 else None)
    for label, phi in (("janowski:1,0", MaMindaPhi.janowski(1, 0)),
                       ("alpha:0.5", MaMindaPhi.strongly_starlike(0.5))):
        T = phi.B1 + abs(phi.B2 - phi.B1)
        rep = bound_mixed("mixed_sstar_k", phi.B1, phi.B2)
        add(f"Th2.15 {label} a2 sqrt(T/2)", math.sqrt(T / 2), rep.a2_bound)
        add(f"Th2.15 {label} a3 T/2", T / 2, rep.a3_bound)
    return rows


def cmd_table(cfg: RunConfig) -> tuple[str, int]:
    return render(_config_dict(cfg), table_rows(), cfg.output_format), EXIT_OK


def _parse_coeffs(text: str | None) -> list[complex]:
    if not text:
        raise UsageError("--coeffs a2,a3,... is required for revert")
    out = []
    for tok in text.split(","):
        try:
            out.append(complex(tok.strip().replace("i", "j")))
        except ValueError:
            raise UsageError(f"bad coefficient {tok!r} in --coeffs") from None
    return out


def cmd_revert(cfg: RunConfig) -> tuple[str, int]:
    tail = _parse_coeffs(cfg.coeffs)
    if cfg.order < 2:
        raise UsageError(f"--order must be >= 2 for revert, got {cfg.order}")
    if len(tail) > cfg.order - 1:
        raise UsageError(f"{len(tail)} coefficients given but --order {cfg.order} "
                         f"holds only a2..a{cfg.order}")
    F = ps_revert(normalized_series(tail, cfg.order))
    rows = [{"degree": k, "re": c.real, "im": c.imag} for k, c in enumerate(F.coeffs)]
    config = _config_dict(cfg, "order", "coeffs")
    return render(config, rows, cfg.output_format), EXIT_OK


COMMANDS = {"bounds": cmd_bounds, "verify": cmd_verify, "table": cmd_table, "revert": cmd_revert}


# ------------------------------------------------------------------ parsing

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    try:
        default_seed = int(os.environ.get("BICOEFF_SEED", "0"))
    except ValueError:
        default_seed = 0
    parser = _Parser(prog="bicoeff", description=__doc__.split("\n")[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--class", dest="class_spec", choices=list(CLASS_NAMES))
    parser.add_argument("--lambda", dest="lam", type=float, default=1.0,
                        help="lambda for r-sigma (default 1)")
    parser.add_argument("--phi", dest="phi_spec", default="beta:0",
                        help="janowski:A,B | beta:b | alpha:a | custom:B1,B2[,...]")
    parser.add_argument("--mode", choices=("box", "tight"), default="box")
    parser.add_argument("--samples", type=int, default=20000)
    parser.add_argument("--seed", type=int, default=default_seed)
    parser.add_argument("--order", type=int, default=DEFAULT_ORDER)
    parser.add_argument("--format", dest="output_format", choices=("text", "csv", "json"),
                        default="text")
    parser.add_argument("--coeffs", help="a2,a3,... for revert")
    return parser


def run(argv: list[str] | None = None) -> tuple[str, int]:
    """Parse ``argv`` and run; returns ``(output, exit_status)``."""
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**vars(args))
    try:
        return COMMANDS[cfg.command](cfg)
    except UsageError as exc:
        return f"bicoeff: usage error: {exc}\n", EXIT_USAGE
    except ValidationError as exc:
        return f"bicoeff: validation error: {exc}\n", EXIT_VALIDATION


def main(argv: list[str] | None = None) -> int:
    out, code = run(argv)
    stream = sys.stdout if code in (EXIT_OK, EXIT_FAIL) else sys.stderr
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
