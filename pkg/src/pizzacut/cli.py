"""Command line front end.

Exit codes: 0 success (fair, for ``partition``/``verify``), 1 unfair result,
2 invalid input, 3 odd n, 4 numerical failure, 5 theorem or witness violation.
Every failure also writes ``error.json`` to the output directory.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import chain, partition, sections
from .documents import PizzaDocument, dumps, profile_csv, tree_document, tree_from_dict
from .errors import GeometryError, OddNError, PizzaError
from .generate import KINDS, generate
from .geom import EPS_SEC
from .svg import chain_svg, partition_svg


@dataclass
class RunConfig:
    n: int = 2
    eps_sec: float = EPS_SEC
    eps_fair: float = partition.EPS_FAIR
    theta_samples: int = sections.SCAN_SAMPLES
    disk_vertices: int = 512
    seed: int = 0
    output_dir: Path = Path(".")
    svg: bool = False

    def __post_init__(self):
        if self.n < 2:
            raise GeometryError(f"--n must be at least 2, got {self.n}")
        if self.theta_samples < 16:
            raise GeometryError(f"--theta-samples must be at least 16, got {self.theta_samples}")
        if self.disk_vertices < 64:
            raise GeometryError(f"--m must be at least 64, got {self.disk_vertices}")
        if not (self.eps_sec > 0 and self.eps_fair > 0):
            raise GeometryError("tolerances must be positive")
        self.output_dir = Path(self.output_dir)


def _write(outdir: Path, name: str, text: str) -> Path:
    outdir.mkdir(parents=True, exist_ok=True)
    path = outdir / name
    path.write_text(text)
    return path


def _config(args, **overrides) -> RunConfig:
    fields = dict(
        n=getattr(args, "n", 2),
        theta_samples=getattr(args, "theta_samples", sections.SCAN_SAMPLES),
        disk_vertices=getattr(args, "m", None) or 512,
        seed=args.seed,
        output_dir=args.output_dir,
        svg=getattr(args, "svg", False),
    )
    if getattr(args, "tol", None) is not None:
        fields["eps_fair"] = args.tol
    if getattr(args, "eps_sec", None) is not None:
        fields["eps_sec"] = args.eps_sec
    fields.update(overrides)
    return RunConfig(**fields)


def cmd_generate(args) -> int:
    cfg = _config(args)
    params = dict(r=args.r, R=args.R, m=args.m, a=args.a, b=args.b, x=args.x, y=args.y,
                  points=args.points)
    allowed = {"disk_pair": ("r", "R", "m"), "square_pair": ("a", "b"),
               "offset_square": ("a", "b", "x", "y"), "random_pair": ("points",)}
    doc = generate(args.kind, seed=cfg.seed,
                   **{k: v for k, v in params.items() if k in allowed[args.kind]})
    path = _write(cfg.output_dir, args.name or f"{args.kind}.json", doc.to_json())
    print(path)
    return 0


def cmd_partition(args) -> int:
    if args.n % 2:
        raise OddNError(f"n = {args.n} is odd; a fair partition obeying the cutting rule "
                        "may not exist", n=args.n)
    cfg = _config(args)
    pizza = PizzaDocument.load(args.input).to_pizza()
    tree = partition.fair_partition(pizza, cfg.n, samples=cfg.theta_samples, eps=cfg.eps_sec)
    report = partition.verify_partition(pizza, tree, cfg.eps_fair)
    _write(cfg.output_dir, "tree.json", dumps(tree_document(tree)))
    _write(cfg.output_dir, "report.json", dumps(report.to_dict()))
    if cfg.svg:
        _write(cfg.output_dir, "partition.svg", partition_svg(pizza, tree))
    print(f"n={report.n} fair={report.fair} max_deviation={report.max_deviation:.3e}")
    return 0 if report.fair else 1


def cmd_verify(args) -> int:
    cfg = _config(args)
    pizza = PizzaDocument.load(args.input).to_pizza()
    try:
        data = json.loads(Path(args.tree).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise GeometryError(f"cannot read tree {args.tree}: {exc}") from None
    tree = tree_from_dict(data, pizza.dough)
    report = partition.verify_partition(pizza, tree, cfg.eps_fair)
    _write(cfg.output_dir, "report.json", dumps(report.to_dict()))
    print(f"n={report.n} fair={report.fair} max_deviation={report.max_deviation:.3e}")
    return 0 if report.fair else 1


def cmd_profile(args) -> int:
    cfg = _config(args)
    pizza = PizzaDocument.load(args.input).to_pizza()
    prof = sections.profile(pizza, args.alpha, args.which, cfg.theta_samples, cfg.eps_sec)
    path = _write(cfg.output_dir, "profile.csv", profile_csv(prof))
    print(path)
    return 0


def cmd_theorem1(args) -> int:
    cfg = _config(args)
    pizza = PizzaDocument.load(args.input).to_pizza()
    search = sections.find_corollary_section if args.corollary else \
        sections.find_simultaneous_section
    witness = search(pizza, args.alpha, samples=cfg.theta_samples, eps=cfg.eps_sec)
    _write(cfg.output_dir, "theorem1.json", dumps(witness.to_dict()))
    print(f"alpha={witness.alpha} beta={witness.beta!r}")
    return 0


def cmd_chain(args) -> int:
    cfg = _config(args)
    pizza = PizzaDocument.load(args.input).to_pizza()
    body = pizza.body(args.body)
    report = chain.build_chain(body, args.alpha, args.n, eps=cfg.eps_sec)
    _write(cfg.output_dir, "chain.json", dumps(report.to_dict()))
    if cfg.svg:
        _write(cfg.output_dir, "chain.svg", chain_svg(body, report))
    print(f"n={report.n} k={report.k} closure_residual={report.closure_residual:.3e}")
    return 0


def cmd_witness(args) -> int:
    cfg = _config(args)
    report = partition.check_disk_deficiency(args.r, args.R, cfg.disk_vertices, args.betas,
                                             strict=False)
    _write(cfg.output_dir, "witness.json", dumps(report.to_dict()))
    print(f"holds={report.holds} min_slack={min(report.min_slack)!r}")
    return 0 if report.holds else 5


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pizzacut",
                                description="Fair partitions of nested convex pizzas.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, needs_input=True):
        if needs_input:
            sp.add_argument("--input", required=True, help="pizza document (JSON)")
        sp.add_argument("--output-dir", default=".", type=Path)
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--theta-samples", type=int, default=sections.SCAN_SAMPLES)
        sp.add_argument("--eps-sec", type=float, default=None,
                        help="section residual tolerance")
        return sp

    g = common(sub.add_parser("generate", help="write a pizza document"), needs_input=False)
    g.add_argument("kind", choices=KINDS)
    g.add_argument("--name", help="output file name")
    for flag in ("--r", "--R", "--a", "--b", "--x", "--y"):
        g.add_argument(flag, type=float)
    g.add_argument("--m", type=int)
    g.add_argument("--points", type=int)
    g.set_defaults(func=cmd_generate)

    sp = common(sub.add_parser("partition", help="fair partition into n slices"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--tol", type=float, default=None, help="fairness tolerance")
    sp.add_argument("--svg", action="store_true")
    sp.set_defaults(func=cmd_partition)

    sp = common(sub.add_parser("verify", help="check a partition tree"))
    sp.add_argument("--tree", required=True)
    sp.add_argument("--tol", type=float, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = common(sub.add_parser("profile", help="companion fraction along directions"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--which", choices=("sectionA", "sectionB"), default="sectionA")
    sp.set_defaults(func=cmd_profile)

    sp = common(sub.add_parser("theorem1", help="simultaneous section witness"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--corollary", action="store_true",
                    help="section the dough, minimise the topping share instead")
    sp.set_defaults(func=cmd_theorem1)

    sp = common(sub.add_parser("chain", help="chain of consecutive alpha-sections"))
    sp.add_argument("--alpha", type=float, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--body", choices=("topping", "dough"), default="topping")
    sp.add_argument("--svg", action="store_true")
    sp.set_defaults(func=cmd_chain)

    sp = common(sub.add_parser("witness", help="concentric-disk deficiency check"),
                needs_input=False)
    sp.add_argument("--r", type=float, default=1.0)
    sp.add_argument("--R", type=float, default=2.0)
    sp.add_argument("--m", type=int, default=512)
    sp.add_argument("--betas", type=float, nargs="+", default=[1 / 3, 1 / 5, 2 / 5])
    sp.set_defaults(func=cmd_witness)
    return p


def main(argv: Optional[list] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PizzaError as exc:
        err = exc
    except ValueError as exc:
        err = GeometryError(str(exc))
    payload = err.to_dict()
    try:
        _write(Path(args.output_dir), "error.json", dumps(payload))
    except OSError:
        pass
    print(f"error: {err}", file=sys.stderr)
    return err.exit_code


if __name__ == "__main__":
    sys.exit(main())
