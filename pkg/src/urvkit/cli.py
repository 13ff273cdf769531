"""``urvkit`` command line.

Exit status: 0 on success, 1 when the request has no answer (for example a
layout that cannot exist, or a failed audit), 2 on usage or input errors.
Layouts and graphs default to stdin/stdout so commands can be piped.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from urvkit import audit as audit_mod
from urvkit import extremal, formats, synth
from urvkit.decompose import URVG, classify_tree, linear_forest_bipartition
from urvkit.geometry import LayoutError, extract_graph, split_xy
from urvkit.graph import is_tree

K5_MESSAGE = (
    "K_{n} has no unit rectangle visibility layout for n >= 5: sort any five squares by x; "
    "three of them have monotone y, and the middle one blocks the outer two from each other"
)


class DomainFailure(Exception):
    """The request is well formed but has no answer."""


def _read(path: str) -> tuple[str, str]:
    if path in (None, "-"):
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


def _write(text: str, path: str | None = None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _layout(path):
    text, src = _read(path)
    return formats.read_layout(text, src)


def _graph(path):
    text, src = _read(path)
    return formats.read_graph(text, src)


# ---------------------------------------------------------------------------
# commands


def cmd_extract(a):
    g = extract_graph(_layout(a.layout))
    if a.dot:
        _write(formats.to_dot(g))
    elif a.json:
        _write(formats.graph_to_json(g) + "\n")
    else:
        _write(formats.write_graph(g))


def cmd_split(a):
    split = split_xy(_layout(a.layout))
    if a.json:
        _write(formats.graph_to_json(split.gx, axis="horizontal") + "\n")
        _write(formats.graph_to_json(split.gy, axis="vertical") + "\n")
        return
    _write("# gx (horizontal visibilities)\n" + formats.write_graph(split.gx))
    _write("# gy (vertical visibilities)\n" + formats.write_graph(split.gy))


def cmd_synth(a):
    kind = a.kind
    if kind == "cycle":
        layout = synth.layout_cycle(_need(a.n, "--n"))
    elif kind == "complete":
        n = _need(a.n, "--n")
        layout = synth.layout_complete(n)
        if layout is None:
            raise DomainFailure(K5_MESSAGE.format(n=n))
    elif kind == "kmn":
        if not a.kmn:
            raise argparse.ArgumentTypeError("synth kmn needs --kmn M N")
        m, n = sorted(a.kmn)
        layout = synth.layout_kmn(m, n, synth.WEAK if a.weak else synth.STRONG)
        if layout is None:
            cls = synth.classify_kmn(m, n)
            if cls == synth.NOT_WEAK:
                raise DomainFailure(f"K_{m},{n} is not even a weak unit rectangle visibility graph (needs m <= 2, or m = 3 and n <= 4)")
            raise DomainFailure(f"K_{m},{n} is only a weak unit rectangle visibility graph; retry with --weak")
    elif kind == "tree":
        t = _graph(a.graph)
        if not is_tree(t):
            raise DomainFailure("input graph is not a tree")
        if a.weak:
            layout = synth.layout_tree_weak(t)
        else:
            cls = classify_tree(t)
            if cls.kind != URVG:
                raise DomainFailure(
                    "not a URVG: the tree does not split into two subdivided caterpillar forests "
                    "of maximum degree 3; retry with --weak"
                )
            layout = synth.layout_tree(t, cls.decomposition)
            if a.decomposition:
                _write(formats.write_decomposition(cls.decomposition), a.decomposition)
    elif kind == "linarb2":
        g = _graph(a.graph)
        parts = linear_forest_bipartition(g)
        if parts is None:
            raise DomainFailure("linear arboricity exceeds 2: the edges do not split into two unions of paths")
        layout = synth.layout_linear_arb2(g, *parts)
    else:  # pragma: no cover - argparse restricts choices
        raise argparse.ArgumentTypeError(f"unknown synth kind {kind}")
    _write(formats.write_layout(layout, header=f"synth {kind}"), a.output)


def cmd_gen(a):
    kind = a.kind
    if kind in ("tbs", "trs"):
        s = _need(a.s, "--s")
        if kind == "tbs":
            tree = extremal.gen_TBs(s)
            d = classify_tree(tree.graph).decomposition
        else:
            tree, d = extremal.gen_TRs(s)
        if a.decomposition:
            _write(formats.write_decomposition(d), a.decomposition)
        if a.layout:
            _write(formats.write_layout(synth.layout_tree(tree.graph, d, root=tree.root), header=f"gen {kind} s={s}"), a.output)
        else:
            _write(formats.write_graph(tree.graph), a.output)
        return
    n = _need(a.n, "--n")
    make = extremal.gen_dense_layout if kind == "dense" else extremal.gen_dense_bipartite_layout
    _write(formats.write_layout(make(n), header=f"gen {kind} n={n}"), a.output)


def cmd_bounds(a):
    report = extremal.bounds(_need(a.n, "--n"))
    _write((report.to_json() if a.json else report.table()) + "\n")


def cmd_audit(a):
    report = audit_mod.audit_layout(_layout(a.layout))
    _write((report.to_json() if a.json else report.table()) + "\n")
    if not report.ok:
        raise DomainFailure(f"audit failed: {report.failures[0].name}: {report.failures[0].detail}")


def cmd_search(a):
    target = _graph(a.target)
    mode = audit_mod.WEAK if a.weak else audit_mod.STRONG
    out = audit_mod.grid_search(target, Fraction(a.step), a.extent, a.workers, mode)
    if out.exhausted:
        raise DomainFailure(
            f"exhausted after {out.nodes} nodes: no {mode} layout on the 1/{int(1 / out.config.step)} grid "
            f"within extent {a.extent} (evidence only; off-grid placements are not covered)"
        )
    _write(formats.write_layout(out.layout, header=f"search step={a.step} extent={a.extent} nodes={out.nodes}"), a.output)


def cmd_render(a):
    _write(formats.render_svg(_layout(a.layout), edges=a.edges), a.output)


def cmd_refute(a):
    report = audit_mod.refute_k5_random(a.trials, a.seed)
    _write(report.to_json() + "\n")
    if not report.ok:
        raise DomainFailure("refuter found a K5 or a monotone triangle")


def _need(value, flag):
    if value is None:
        raise argparse.ArgumentTypeError(f"missing {flag}")
    return value


# ---------------------------------------------------------------------------
# parser


def _step(text: str) -> Fraction:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad step {text!r}") from None
    if q not in audit_mod.STEPS:
        raise argparse.ArgumentTypeError("step must be 1, 1/2 or 1/3")
    return q


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="urvkit", description="Unit rectangle visibility layouts and graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("extract", help="visibility graph of a layout")
    s.add_argument("layout", nargs="?", default="-")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("split", help="horizontal and vertical visibility graphs")
    s.add_argument("layout", nargs="?", default="-")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_split)

    s = sub.add_parser("synth", help="construct a layout")
    s.add_argument("kind", choices=["tree", "cycle", "complete", "kmn", "linarb2"])
    s.add_argument("graph", nargs="?", default="-", help="graph file for tree/linarb2")
    s.add_argument("--n", type=int)
    s.add_argument("--kmn", type=int, nargs=2, metavar=("M", "N"))
    s.add_argument("--weak", action="store_true")
    s.add_argument("--decomposition", help="also write the tree decomposition here")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("gen", help="extremal trees and dense layouts")
    s.add_argument("kind", choices=["tbs", "trs", "dense", "dense-bipartite"])
    s.add_argument("--s", type=int)
    s.add_argument("--n", type=int)
    s.add_argument("--layout", action="store_true", help="emit a layout of the tree instead of the tree")
    s.add_argument("--decomposition", help="write the tree decomposition here")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bounds", help="edge bounds and dense targets")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("audit", help="universal consistency checks")
    s.add_argument("layout", nargs="?", default="-")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("search", help="exhaustive search on a quantized grid")
    s.add_argument("--target", required=True)
    s.add_argument("--step", type=_step, default=Fraction(1, 2))
    s.add_argument("--extent", type=int, default=6)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--weak", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("refute-k5", help="random search for a K5 layout")
    s.add_argument("--trials", type=int, default=10_000)
    s.add_argument("--seed", type=int, help="defaults to $URVKIT_SEED or 0")
    s.set_defaults(func=cmd_refute)

    s = sub.add_parser("render", help="SVG drawing of a layout")
    s.add_argument("layout", nargs="?", default="-")
    s.add_argument("-o", "--output")
    s.add_argument("--edges", action="store_true")
    s.set_defaults(func=cmd_render)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args)
    except DomainFailure as exc:
        print(f"urvkit: {exc}", file=sys.stderr)
        return 1
    except synth.NotRealizable as exc:
        print(f"urvkit: {exc}", file=sys.stderr)
        return 1
    except (formats.FormatError, LayoutError, argparse.ArgumentTypeError, OSError, ValueError) as exc:
        print(f"urvkit: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
