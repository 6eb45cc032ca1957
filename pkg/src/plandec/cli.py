"""Command-line front end.

Exit codes: 0 success, 2 unreadable input, 3 unmet precondition,
4 violated bound or invariant.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .decomposition import (Decomposition, DecompositionError, quadratic_decomp, reduce_order, validate)
from .drawing import CrossingReport, Drawing, DrawingError, convex_count, count_crossings
from .graph import Graph, GraphError, parse_edge_list
from .oracles import has_minor_small, oracle_caps
from .partition import Partition, convex_treewidth_pipeline, is_forest, tree_partition, width_bound
from .render import crossing_bound, render
from .sumtree import SumTree, wagner_k5_decompose

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_VIOLATION = 0, 2, 3, 4


class CliError(Exception):
    def __init__(self, code: int, msg: str) -> None:
        super().__init__(msg)
        self.code = code


@dataclass
class RunConfig:
    command: str
    input: str | None
    out: str | None
    seed: int = 0
    cls: str = "generic"
    strong: bool = False
    p: int | None = None
    svg: str | None = None
    verify: str = "fast"
    quadratic: bool = False
    k: int | None = None


# ---------------------------------------------------------------------------
# I/O helpers
# ---------------------------------------------------------------------------


def _read_text(path: str | None) -> str:
    try:
        if path is None or path == "-":
            return sys.stdin.read()
        return Path(path).read_text()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read input: {exc}") from None


def _read_graph(cfg: RunConfig) -> Graph:
    try:
        return parse_edge_list(_read_text(cfg.input))
    except GraphError as exc:
        raise CliError(EXIT_PARSE, f"bad edge list: {exc}") from None


def _emit(cfg: RunConfig, payload: dict, table: list[tuple[str, object, object, object]]) -> None:
    text = json.dumps(payload, separators=(",", ":")) + "\n"
    lines = _format_table(table)
    if cfg.out:
        Path(cfg.out).write_text(text)
        sys.stdout.write(lines)
    else:
        sys.stdout.write(text)
        sys.stderr.write(lines)


def _format_table(rows: list[tuple[str, object, object, object]]) -> str:
    if not rows:
        return ""
    head = ("quantity", "value", "bound", "status")
    cells = [head] + [tuple("" if c is None else str(c) for c in r) for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(4)]
    return "".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in cells)


def _status(ok: bool | None) -> str | None:
    return None if ok is None else ("pass" if ok else "FAIL")


def _check_oracle(cfg: RunConfig, g: Graph, target: str) -> None:
    if cfg.verify != "full":
        return
    cap = oracle_caps()[1]
    if g.n > cap:
        raise CliError(EXIT_PRECONDITION, f"full verification needs n <= {cap} (PLANDEC_ORACLE_CAP)")
    if has_minor_small(g, target):
        raise CliError(EXIT_PRECONDITION, f"input has a {target} minor")


def _write_svg(cfg: RunConfig, dr: Drawing, rep: CrossingReport) -> None:
    if cfg.svg:
        Path(cfg.svg).write_text(dr.to_svg(rep))


def _decomp_rows(d: Decomposition) -> list[tuple[str, object, object, object]]:
    rep = validate(d)
    m = d.metrics()
    return [
        ("valid", rep.ok, None, _status(rep.ok)),
        ("planar", rep.planar, None, _status(bool(rep.planar))),
        ("width", m.width, None, None),
        ("spread", m.spread, None, None),
        ("order", m.order, None, None),
        ("edges", rep.edge_bound[0], rep.edge_bound[1], _status(rep.edge_bound[0] <= rep.edge_bound[1])),
    ]


def _fail_if(rows) -> None:
    bad = [r[0] for r in rows if r[3] == "FAIL"]
    if bad:
        raise CliError(EXIT_VIOLATION, "violated: " + ", ".join(bad))


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_decompose(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    if cfg.quadratic:
        d = quadratic_decomp(g)
    elif g.n == 0:
        d = Decomposition(g, (), Graph(0), strong=False, p=2)
    elif cfg.cls == "k5":
        _check_oracle(cfg, g, "K5")
        from .k5 import planar_omega_decomp_k5, strong_3_decomp_k5, strong_omega_decomp_k5
        if cfg.strong and cfg.p == 3:
            d = strong_3_decomp_k5(g)
        elif cfg.strong:
            d = strong_omega_decomp_k5(g)
        else:
            d = planar_omega_decomp_k5(g)
    elif cfg.cls == "k33":
        _check_oracle(cfg, g, "K33")
        from .k33 import k33_planar_partition
        d = k33_planar_partition(g).as_decomposition()
    elif cfg.cls == "treewidth":
        d = tree_partition(g).as_decomposition()
    else:
        d = reduce_order(quadratic_decomp(g), g.n).decomposition
    if cfg.p is not None and not (cfg.cls == "k5" and cfg.strong):
        d = d.with_claims(p=cfg.p)
    rows = _decomp_rows(d)
    n = g.n
    if cfg.quadratic:
        rows.append(("order = n(n+1)/2", d.order, n * (n + 1) // 2, _status(d.order == n * (n + 1) // 2)))
    elif cfg.cls == "k5" and n >= 3 and not cfg.strong:
        hist = d.size_histogram()
        rows.append(("size-2 bags", hist.get(2, 0), n - 2, _status(hist.get(2, 0) <= n - 2)))
        rows.append(("size-1 bags", hist.get(1, 0), n // 3, _status(hist.get(1, 0) <= n // 3)))
    elif cfg.cls == "k5" and cfg.strong and cfg.p == 3:
        rows.append(("order", d.order, 3 * n - 8, _status(n < 4 or d.order <= 3 * n - 8)))
    elif cfg.cls == "k5" and cfg.strong:
        b = 4 * n / 3 - 4
        rows.append(("order", d.order, f"{b:.2f}", _status(n < 6 or d.order <= b)))
    elif cfg.cls == "treewidth":
        rows.append(("pattern forest", is_forest(d.dgraph), None, _status(is_forest(d.dgraph))))
    _emit(cfg, d.to_json(), rows)
    _fail_if(rows)
    return EXIT_OK


def _draw_rows(rep: CrossingReport, bound: float | None, label: str, strict: bool = False):
    rows: list[tuple[str, object, object, object]] = [("general position", rep.ok, None, _status(rep.ok))]
    if bound is None:
        rows.append(("crossings", rep.total, None, None))
    else:
        ok = rep.total < bound if strict else rep.total <= bound
        shown = f"{bound:.2f}" if isinstance(bound, float) else bound
        rows.append((f"crossings ({label})", rep.total, shown, _status(ok)))
    rows.append(("max per edge", rep.max_per_edge, None, None))
    return rows


def cmd_draw(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    delta = g.max_degree()
    if cfg.cls == "k5":
        _check_oracle(cfg, g, "K5")
        from .k5 import crossings_k5
        res = crossings_k5(g, seed=cfg.seed)
        dr, rep = res.drawing, res.report
        rows = _draw_rows(rep, 20 / 3 * delta * delta * g.n, "cr < 20/3·Δ²·n", strict=True)
        rows.append(("bends", sum(dr.bends()), None, _status(res.bends_ok)))
    elif cfg.cls == "k33":
        _check_oracle(cfg, g, "K33")
        from .k33 import k33_rectilinear_drawing
        pd = k33_rectilinear_drawing(g, seed=cfg.seed)
        dr, rep = pd.drawing, pd.report
        rows = _draw_rows(rep, delta * max(0, 3 * g.n - 5), "cr ≤ Δ·(3n−5)")
        rows.append(("per-edge (≤ 2Δ)", rep.max_per_edge, 2 * delta, _status(rep.max_per_edge <= 2 * delta)))
    elif cfg.cls == "treewidth":
        return cmd_convex_draw(cfg, g)
    else:
        d = reduce_order(quadratic_decomp(g), g.n).decomposition if g.n else quadratic_decomp(g)
        res = render(d, seed=cfg.seed)
        dr, rep = res.drawing, res.report
        rows = _draw_rows(rep, crossing_bound(d), "2Δ²·Σ C(|X|+1,2)")
        rows.append(("bends", sum(dr.bends()), None, _status(res.bends_ok)))
    _write_svg(cfg, dr, rep)
    _emit(cfg, {"drawing": dr.to_json(), "report": rep.to_json()}, rows)
    _fail_if(rows)
    return EXIT_OK


def cmd_convex_draw(cfg: RunConfig, g: Graph | None = None) -> int:
    g = _read_graph(cfg) if g is None else g
    res = convex_treewidth_pipeline(g, seed=cfg.seed)
    pd = res.drawing
    rep = pd.report
    rows = _draw_rows(rep, res.total_target, "cr < 17/2·(tw+1)·Δ²·|E|", strict=True)
    rows += [
        ("treewidth", res.treewidth, None, None if res.exact_treewidth else "heuristic"),
        ("pattern forest", res.pattern_is_forest, None, _status(res.pattern_is_forest)),
        ("partition width", res.partition.width, f"{res.width_bound:.1f}", _status(res.width_ok)),
        ("per-edge", rep.max_per_edge, res.per_edge_target, _status(rep.max_per_edge < res.per_edge_target)),
        ("convex count agrees", pd.convex_agrees, None, _status(bool(pd.convex_agrees))),
    ]
    _write_svg(cfg, pd.drawing, rep)
    _emit(cfg, {"drawing": pd.drawing.to_json(), "report": rep.to_json(),
                "partition": res.partition.to_json()}, rows)
    _fail_if(rows)
    return EXIT_OK


def cmd_k5_decomp(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    _check_oracle(cfg, g, "K5")
    st = wagner_k5_decompose(g)
    ok = st.recompose() == g and st.is_tree() and st.joins_are_cliques()
    rows = [("pieces", len(st.pieces), None, None)]
    rows += [(f"{k} pieces", v, None, None) for k, v in sorted(st.kinds().items())]
    rows.append(("recomposition", ok, None, _status(ok)))
    _emit(cfg, st.to_json(), rows)
    _fail_if(rows)
    return EXIT_OK


def cmd_tree_partition(cfg: RunConfig) -> int:
    g = _read_graph(cfg)
    p = tree_partition(g)
    forest = is_forest(p.pattern)
    rows = [("pattern forest", forest, None, _status(forest)), ("width", p.width, None, None)]
    if g.n <= oracle_caps()[0]:
        from .oracles import treewidth_exact_small
        tw = max(0, treewidth_exact_small(g))
        wb = width_bound(tw, g.max_degree())
        rows.append(("width (tw exact)", p.width, f"{wb:.1f}", _status(p.width <= wb)))
    _emit(cfg, p.to_json(), rows)
    _fail_if(rows)
    return EXIT_OK


def _naive_total(dr: Drawing) -> int:
    """Independent recount: exact segment intersection over every pair of non-adjacent edges."""
    def orient(a, b, c) -> int:
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 0) - (v < 0)

    segs = []
    for i in range(dr.host.m):
        pl = dr.polyline(i)
        segs.append([(pl[k], pl[k + 1]) for k in range(len(pl) - 1)])
    tot = 0
    for i, j in combinations(range(dr.host.m), 2):
        if set(dr.host.edges[i]) & set(dr.host.edges[j]):
            continue
        for a, b in segs[i]:
            for c, d in segs[j]:
                if orient(a, b, c) * orient(a, b, d) < 0 and orient(c, d, a) * orient(c, d, b) < 0:
                    tot += 1
    return tot


def cmd_verify(cfg: RunConfig) -> int:
    try:
        data = json.loads(_read_text(cfg.input))
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"bad JSON: {exc}") from None
    if isinstance(data, dict) and "drawing" in data:
        data = data["drawing"]
    try:
        if "bags" in data and "dedges" in data:
            d = Decomposition.from_json(data)
            if cfg.verify == "full" and d.host.n > oracle_caps()[1]:
                raise CliError(EXIT_PRECONDITION, "full verification beyond oracle cap")
            rep = validate(d)
            rows = [(v, None, None, "FAIL") for v in rep.violations]
            rows.insert(0, ("valid", rep.ok, None, _status(rep.ok)))
            rows.append(("planar", rep.planar, None, None))
        elif "points" in data:
            dr = Drawing.from_json(data)
            rep = count_crossings(dr)
            rows = [("general position", rep.ok, None, _status(rep.ok))]
            rows += [(msg, None, None, "FAIL") for msg in rep.degeneracies[:10]]
            rows.append(("crossings", rep.total, None, None))
            if cfg.verify == "full":
                naive = _naive_total(dr)
                rows.append(("naive recount", naive, rep.total, _status(naive == rep.total or not rep.ok)))
                if dr.convex:
                    cc = convex_count(list(dr.order), dr.host).total
                    rows.append(("convex count", cc, rep.total, _status(cc == rep.total)))
        elif "pieces" in data and "joins" in data:
            st = SumTree.from_json(data)
            ok_tree, ok_cliques = st.is_tree(), st.joins_are_cliques()
            rows = [("tree", ok_tree, None, _status(ok_tree)), ("joins are cliques", ok_cliques, None, _status(ok_cliques))]
        elif "bags" in data and "host" in data:
            p = Partition.from_json(data)
            rows = [("partition", True, None, "pass"), ("width", p.width, None, None),
                    ("pattern forest", is_forest(p.pattern), None, None)]
        else:
            raise CliError(EXIT_PARSE, "unrecognised artifact")
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, (DecompositionError, DrawingError, GraphError)):
            raise CliError(EXIT_VIOLATION, str(exc)) from None
        raise CliError(EXIT_PARSE, f"schema error: {exc!r}") from None
    sys.stdout.write(_format_table(rows))
    _fail_if(rows)
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="plandec", description="Planar decompositions and crossing-bounded drawings.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--in", dest="input", help="input file (edge list or JSON); stdin if omitted")
        sp.add_argument("--out", help="write the JSON artifact here (the table then goes to stdout)")
        sp.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
        sp.add_argument("--class", dest="cls", choices=["k5", "k33", "treewidth", "generic"], default="generic")
        sp.add_argument("--strong", action="store_true", help="ask for a strong decomposition")
        sp.add_argument("--p", type=int, help="clique level claimed by the decomposition")
        sp.add_argument("--svg", help="also write an SVG picture of the drawing")
        sp.add_argument("--verify", choices=["fast", "full"], default="fast",
                        help="'full' adds exact oracle checks (small inputs only)")

    for name, hlp in [
        ("decompose", "planar decomposition of a graph"),
        ("draw", "drawing with certified crossing count"),
        ("verify", "check a JSON artifact"),
        ("k5-decomp", "clique-sum tree of a K5-minor-free graph"),
        ("k5-draw", "drawing of a K5-minor-free graph"),
        ("k33-draw", "straight-line drawing of a K3,3-minor-free graph"),
        ("tree-partition", "partition with a forest pattern"),
        ("convex-draw", "convex drawing through a tree-partition"),
    ]:
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        if name == "decompose":
            sp.add_argument("--quadratic", action="store_true", help="use the n(n+1)/2-bag grid decomposition")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    cfg = RunConfig(args.command, args.input, args.out, args.seed, args.cls, args.strong, args.p, args.svg,
                    args.verify, getattr(args, "quadratic", False))
    handlers = {
        "decompose": cmd_decompose,
        "draw": cmd_draw,
        "verify": cmd_verify,
        "k5-decomp": cmd_k5_decomp,
        "tree-partition": cmd_tree_partition,
        "convex-draw": cmd_convex_draw,
    }
    if cfg.command == "k5-draw":
        cfg.cls, handler = "k5", cmd_draw
    elif cfg.command == "k33-draw":
        cfg.cls, handler = "k33", cmd_draw
    else:
        handler = handlers[cfg.command]
    try:
        return handler(cfg)
    except CliError as exc:
        sys.stderr.write(f"plandec: {exc}\n")
        return exc.code
    except (GraphError, DecompositionError, DrawingError) as exc:
        sys.stderr.write(f"plandec: precondition failed: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
