"""Command-line front end.

    qheegaard omega "s1^3" -n 2 --format json
    qheegaard jones "s1^3" -n 2
    qheegaard hfk "s1^3" -n 2
    qheegaard check --corpus data/corpus.txt --parallel 4
    qheegaard render "s1 s2^-1 s1 s2^-1" -n 3 --out fig8.svg

Exit codes: 0 success, 1 computation error (error JSON on stderr), 2 usage
or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import __version__
from .braid_core import BraidWord, closure_info, parse_braid
from .checks import read_corpus, run_entry
from .disc_model import dump_text, realise
from .errors import BraidSyntaxError, BudgetExceeded, InvalidIndex, NonBigonIndexOne, NotAKnot, QHError
from .heegaard import build_heegaard_diagram, diagram_json, diagram_text
from .hfk_desk import bigon_homology_ranks, bigraded_generators, euler_char_check
from .intersection_form import (
    JONES_UNIT_RULE,
    OmegaResult,
    jones_from_omega,
    omega_q,
    specialize,
    transported_model,
)
from .laurent import conway_normalize
from .oracles import alexander_burau, jones_kauffman
from .render import grading_labels, svg_diagram, svg_disc

COMMANDS = ("omega", "alexander", "jones", "diagram", "hfk", "check", "render")


@dataclass
class RunConfig:
    command: str
    word: str | None = None
    n: int | None = None
    fmt: str = "text"
    reduce: bool = True
    out: str | None = None
    corpus: str | None = None
    budget: int = 24
    parallel: int = 1
    seed: int = 0
    what: str = "disc"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qheegaard", description="Braid closures: graded intersections, Jones/Alexander, Heegaard diagrams.")
    p.add_argument("--version", action="version", version=f"qheegaard {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        if name != "check":
            s.add_argument("word", help='braid word, e.g. "s1^3 s2^-1"')
        s.add_argument("-n", type=int, default=None, help="number of strands (default: largest index + 1)")
        s.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        s.add_argument("--no-reduce", dest="reduce", action="store_false", help="skip bigon removal")
        s.add_argument("--out", default=None, help="write output here instead of stdout")
        s.add_argument("--corpus", default=None, help="corpus file name;n;word;jones;alexander")
        s.add_argument("--budget", type=int, default=24, help="max crossings for the Kauffman oracle")
        s.add_argument("--parallel", type=int, default=1, help="worker processes for check")
        s.add_argument("--seed", type=int, default=0)
        if name == "render":
            s.add_argument("--what", choices=("disc", "diagram", "dump"), default="disc",
                           help="disc SVG, Heegaard diagram SVG, or the exact text dump of the disc")
    return p


def _guess_n(word: str) -> int:
    import re

    idx = [int(k) for k in re.findall(r"s(\d+)", word)]
    return max(idx, default=1) + 1


def _braid(cfg: RunConfig) -> BraidWord:
    n = cfg.n if cfg.n is not None else _guess_n(cfg.word)
    if n < 1:
        raise InvalidIndex(f"strand count {n} must be positive")
    return parse_braid(cfg.word, n)


def _emit(cfg: RunConfig, text: str):
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def omega_json(res: OmegaResult) -> dict:
    knot = closure_info(res.word).is_knot
    gens = sorted(({"sign": t.sign, "a_hf": g.a_hf, "a_qhf": g.a_qhf} for t, g in zip(res.tuples, res.gradings)),
                  key=lambda e: (e["a_hf"], e["a_qhf"], e["sign"]))
    alex = conway_normalize(specialize(res.omega, "AlexanderD1")) if knot else None
    return {
        "braid": res.word.text(),
        "n": res.word.n,
        "writhe": res.writhe,
        "components": res.components,
        "prefactor": {"ex2": res.prefactor_ex2, "ed": res.prefactor_ed},
        "generators": gens,
        "omega": res.omega.to_json(),
        "alexander": alex.to_text() if alex is not None else None,
        "jones": jones_from_omega(res).to_text(),
        "jones_unit": JONES_UNIT_RULE,
    }


def cmd_omega(cfg: RunConfig) -> int:
    res = omega_q(_braid(cfg), reduce=cfg.reduce)
    data = omega_json(res)
    if cfg.fmt == "json":
        _emit(cfg, _dumps(data))
        return 0
    lines = [f"braid      {data['braid']}  (n={data['n']}, writhe {data['writhe']}, {data['components']} component(s))",
             f"prefactor  x^({data['prefactor']['ex2']}/2) d^{data['prefactor']['ed']}",
             f"omega      {res.omega.to_text()}",
             f"generators {len(data['generators'])}",
             "  sign  A_hf  A_qhf"]
    for g in data["generators"]:
        lines.append(f"  {g['sign']:+d}  {g['a_hf']:>5} {g['a_qhf']:>6}")
    if data["alexander"] is not None:
        lines.append(f"alexander  {data['alexander']}")
    lines.append(f"jones      {data['jones']}")
    _emit(cfg, "\n".join(lines) + "\n")
    return 0


def _status(ours, oracle) -> str:
    if oracle is None:
        return "SKIPPED"
    return "MATCH" if ours == oracle else "MISMATCH"


def cmd_alexander(cfg: RunConfig) -> int:
    word = _braid(cfg)
    info = closure_info(word)
    if not info.is_knot:
        raise NotAKnot(f"closure has {info.components} components")
    p = conway_normalize(specialize(omega_q(word, cfg.reduce).omega, "AlexanderD1"))
    oracle = alexander_burau(word)
    return _poly_out(cfg, "alexander", word, p, _status(p, oracle))


def cmd_jones(cfg: RunConfig) -> int:
    word = _braid(cfg)
    p = jones_from_omega(omega_q(word, cfg.reduce))
    try:
        oracle = jones_kauffman(word, budget=cfg.budget)
    except BudgetExceeded:
        oracle = None
    return _poly_out(cfg, "jones", word, p, _status(p, oracle))


def _poly_out(cfg, name, word, p, status) -> int:
    if cfg.fmt == "json":
        _emit(cfg, _dumps({"braid": word.text(), "n": word.n, name: p.to_json(), "text": p.to_text(), "oracle": status}))
    else:
        _emit(cfg, f"{p.to_text()}\noracle: {status}\n")
    return 0 if status != "MISMATCH" else 1


def _diagram(cfg: RunConfig):
    word = _braid(cfg)
    model = transported_model(word)
    return build_heegaard_diagram(model, word, realise(model, cfg.reduce))


def cmd_diagram(cfg: RunConfig) -> int:
    d = _diagram(cfg)
    _emit(cfg, _dumps(diagram_json(d)) if cfg.fmt == "json" else diagram_text(d))
    return 0


def cmd_hfk(cfg: RunConfig) -> int:
    d = _diagram(cfg)
    data = bigraded_generators(d)
    euler = euler_char_check(d, data)
    oracle = alexander_burau(d.word)
    try:
        ranks = bigon_homology_ranks(d, data)
    except NonBigonIndexOne as e:
        # the gradings are still sound; report them before refusing
        if cfg.fmt == "json":
            _emit(cfg, _dumps({"braid": d.word.text(), "n": d.word.n, "generators": len(data.generators),
                               "euler": euler.to_text(), "euler_oracle": _status(euler, oracle),
                               "refused": e.to_dict()}))
        else:
            _emit(cfg, f"generators {len(data.generators)}\neuler {euler.to_text()}  oracle: {_status(euler, oracle)}\n"
                       f"ranks refused: {e}\n")
        raise
    if cfg.fmt == "json":
        out = ranks.to_json()
        out.update({"braid": d.word.text(), "n": d.word.n, "total": ranks.total(),
                    "euler": euler.to_text(), "euler_oracle": _status(euler, oracle)})
        _emit(cfg, _dumps(out))
    else:
        _emit(cfg, ranks.to_text() + f"total rank {ranks.total()}\neuler {euler.to_text()}  oracle: {_status(euler, oracle)}\n")
    return 0


def _check_one(args):
    entry, budget, seed = args
    try:
        return run_entry(entry, budget=budget, seed=seed)
    except QHError as e:
        return {"name": entry.name, "n": entry.n, "word": entry.word, "ok": False, "error": e.to_dict()}


def cmd_check(cfg: RunConfig) -> int:
    if cfg.corpus:
        entries = read_corpus(cfg.corpus)
    else:
        from importlib.resources import files

        path = files("qheegaard").joinpath("data", "corpus.txt")
        entries = read_corpus(str(path))
    jobs = [(e, cfg.budget, cfg.seed) for e in entries]
    if cfg.parallel > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallel) as ex:
            results = list(ex.map(_check_one, jobs))
    else:
        results = [_check_one(j) for j in jobs]
    bad = [r for r in results if not r["ok"]]
    if cfg.fmt == "json":
        _emit(cfg, _dumps({"entries": results, "failed": [r["name"] for r in bad]}))
    else:
        lines = []
        for r in results:
            parts = [k for k, v in r.items() if isinstance(v, dict) and k != "error"]
            failed = [k for k in parts if not r[k]["ok"]]
            tag = "ok" if r["ok"] else "FAIL " + ",".join(failed or [r.get("error", {}).get("error", "?")])
            lines.append(f"{r['name']:<20} n={r['n']}  {tag}")
        lines.append(f"{len(results) - len(bad)}/{len(results)} entries pass")
        _emit(cfg, "\n".join(lines) + "\n")
    if bad:
        sys.stderr.write(json.dumps({"error": "CheckFailed", "message": f"{len(bad)} corpus entries failed",
                                     "entries": [r["name"] for r in bad]}) + "\n")
        return 1
    return 0


def cmd_render(cfg: RunConfig) -> int:
    if cfg.what == "diagram":
        svg = svg_diagram(_diagram(cfg))
    else:
        word = _braid(cfg)
        real = realise(transported_model(word), cfg.reduce)
        labels = grading_labels(omega_q(word, cfg.reduce)) if word.n >= 2 and cfg.what == "disc" else {}
        if cfg.what == "dump":
            _emit(cfg, dump_text(real))
            return 0
        svg = svg_disc(real, title=word.text(), labels=labels)
    _emit(cfg, svg)
    return 0


HANDLERS = {
    "omega": cmd_omega,
    "alexander": cmd_alexander,
    "jones": cmd_jones,
    "diagram": cmd_diagram,
    "hfk": cmd_hfk,
    "check": cmd_check,
    "render": cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__})
    if cfg.command != "check" and cfg.n is not None and cfg.n < 1:
        parser.error("-n must be positive")
    try:
        return HANDLERS[cfg.command](cfg)
    except (BraidSyntaxError, InvalidIndex) as e:
        sys.stderr.write(json.dumps(e.to_dict()) + "\n")
        return 2
    except QHError as e:
        sys.stderr.write(json.dumps(e.to_dict()) + "\n")
        return 1
    except (OSError, ValueError) as e:
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
