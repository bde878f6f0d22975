"""Command-line front door.

Output is JSON by default; ``--format csv|dot|text`` where it makes sense.
Exit codes: 0 success, 1 usage error, 2 verification failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor

from . import verify as V
from .cambrian import Cambrian, NotSortable
from .coxeter import CoxeterGroup, GroupTooLarge, NonFiniteType, group, root_table_csv
from .lattice import quotient_lattice, random_congruence
from .weak import build_weak_lattice, pop_weak, pop_weak_up

SCHEMA = "cambrian-pop/1"
EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(message)
        self.flag = flag


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "argument " in message:
            flag = message.split("argument ", 1)[1].split(":", 1)[0]
        else:
            flag = next((t for t in message.split() if t.startswith("-")), "")
        raise UsageError(flag.split("/")[0], message)


# shared option helpers ----------------------------------------------------------

def _common(p, coxeter=True, fmt=("json", "text")):
    p.add_argument("--type", nargs="+", metavar="TYPE",
                   help="A|B|D|E6|E7|E8|F4|G2|H3|H4|I2:<m>, rank inline or as a second token")
    if coxeter:
        g = p.add_mutually_exclusive_group()
        g.add_argument("--coxeter", help="comma-separated word of simple labels")
        g.add_argument("--bipartite", action="store_true")
        g.add_argument("--all-coxeter", action="store_true")
    p.add_argument("--format", choices=fmt, default=fmt[0])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)


def _group(args, default=None) -> CoxeterGroup:
    parts = args.type or ([default] if default else None)
    if not parts:
        raise UsageError("--type", "this command needs --type")
    if len(parts) > 2:
        raise UsageError("--type", "--type takes a type and an optional rank")
    try:
        return group(parts[0], int(parts[1]) if len(parts) == 2 else None)
    except (ValueError, NonFiniteType) as e:
        raise UsageError("--type", str(e)) from e


def _coxeters(args, W: CoxeterGroup) -> list:
    try:
        if getattr(args, "all_coxeter", False):
            return W.coxeter_elements()
        if getattr(args, "bipartite", False):
            return [W.bipartite_coxeter_element()]
        if getattr(args, "coxeter", None):
            return [W.parse_coxeter(args.coxeter)]
    except ValueError as e:
        raise UsageError("--coxeter", str(e)) from e
    return [W.coxeter_element(range(W.rank))]


def _one_coxeter(args, W):
    cs = _coxeters(args, W)
    if len(cs) != 1:
        raise UsageError("--all-coxeter", "this command takes a single Coxeter element")
    return cs[0]


def _is_type_a(W) -> bool:
    return W.type_tag.startswith("A")


def _element(args, W: CoxeterGroup) -> int:
    if getattr(args, "perm", None):
        if not _is_type_a(W):
            raise UsageError("--perm", "--perm needs type A")
        from .typea import PermCodec, parse_perm

        p = parse_perm(args.perm)
        if sorted(p) != list(range(1, W.rank + 2)):
            raise UsageError("--perm", f"not a permutation of 1..{W.rank + 1}")
        return PermCodec(W).element(p)
    if getattr(args, "word", None) is not None:
        try:
            labels = [t for t in args.word.replace(" ", ",").split(",") if t]
            return W.from_word([W.diagram.index_of(t) for t in labels])
        except ValueError as e:
            raise UsageError("--word", str(e)) from e
    raise UsageError("--perm", "give an element with --perm or --word")


def _render(W: CoxeterGroup):
    """Element -> string: one-line notation in type A, a label word otherwise."""
    if _is_type_a(W):
        from .typea import PermCodec, perm_str

        cd = PermCodec(W)
        return lambda w: perm_str(cd.perm(w))
    return lambda w: ",".join(str(x) for x in V.word_labels(W, w)) or "e"


def _cox_str(W, c) -> str:
    return ",".join(str(x) for x in V.coxeter_labels(W, c))


def _emit(obj: dict, out):
    out.write(json.dumps({"schema": SCHEMA, **obj}, separators=(",", ":")) + "\n")


def _bare(obj: dict, out):
    """Single-answer commands print just the answer object."""
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _csv(rows, out):
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    out.write(buf.getvalue())


def _legend(path, L, render):
    if path:
        with open(path, "w") as fh:
            json.dump({"schema": SCHEMA, "legend": {str(i): render(L.elements[i]) for i in range(L.n)}}, fh)


def _dot(L, args, out, name="L"):
    render = _render(args._W)
    out.write(L.to_dot(label=lambda i: str(i), edge_labels=getattr(args, "edge_labels", False),
                       name=name))
    _legend(getattr(args, "legend", None), L, render)


def _coord(x):
    if isinstance(x, int):
        return x
    return x.a if x.b == 0 else str(x)


# subcommands ----------------------------------------------------------------------

def cmd_roots(args, out):
    W = _group(args)
    if args.format == "csv":
        out.write(root_table_csv(W))
        return EXIT_OK
    rows = []
    for r in range(W.N):
        co = W.roots.coords(r)
        rows.append({"index": r, "coords": [_coord(x) for x in co]
                     if co is not None else None,
                     "angle": None if co is not None else W.roots.angle_index[r]})
    if args.format == "text":
        for row in rows:
            out.write(f"{row['index']}: {row['coords'] or 'angle ' + str(row['angle'])}\n")
        return EXIT_OK
    _emit({"type": W.type_tag, "rank": W.rank, "order": W.order(), "coxeter_number": W.coxeter_number(),
           "roots": rows}, out)
    return EXIT_OK


def _lattice_for(args, W):
    if args.which == "weak":
        return build_weak_lattice(W)
    return Cambrian(W, _one_coxeter(args, W)).lattice


def cmd_lattice(args, out):
    W = args._W = _group(args)
    L = _lattice_for(args, W)
    render = _render(W)
    if args.format == "dot":
        _dot(L, args, out)
        return EXIT_OK
    if args.format == "csv":
        _csv([["lower", "upper"]] + [list(e) for e in L.edges()], out)
        _legend(args.legend, L, render)
        return EXIT_OK
    body = {"lattice": args.which, "type": W.type_tag, "size": L.n,
            "elements": [render(w) for w in L.elements], "covers": [list(e) for e in L.edges()]}
    if args.which == "cambrian":
        body["coxeter"] = _cox_str(W, _one_coxeter(args, W))
    if args.format == "text":
        out.write(f"{args.which} lattice of {W.type_tag}: {L.n} elements, {len(L.edges())} covers\n")
        return EXIT_OK
    _emit(body, out)
    return EXIT_OK


def _pop_fn(args, W):
    if args.which == "weak":
        return (lambda w: pop_weak_up(W, w)) if args.up else (lambda w: pop_weak(W, w))
    camb = Cambrian(W, _one_coxeter(args, W))
    L = camb.lattice

    def f(w):
        if w not in camb.sortable_set:
            raise UsageError("--perm" if args.perm else "--word", "element is not c-sortable")
        x = L.index[w]
        return L.elements[L.pop_up(x) if args.up else L.pop_down(x)]
    return f


def cmd_pop(args, out):
    W = _group(args)
    w = _element(args, W)
    result = _render(W)(_pop_fn(args, W)(w))
    if args.format == "text":
        out.write(result + "\n")
    else:
        _bare({"result": result}, out)
    return EXIT_OK


def cmd_orbit(args, out):
    W = _group(args)
    render = _render(W)
    if args.max:
        L = _lattice_for(args, W)
        best, where = L.orbit_stats(up=args.up)
        _emit({"lattice": args.which, "type": W.type_tag, "h": W.coxeter_number(), "max_orbit": best,
               "attained_by": [render(L.elements[x]) for x in where]}, out)
        return EXIT_OK
    f = _pop_fn(args, W)
    orbit = [_element(args, W)]
    while True:
        nxt = f(orbit[-1])
        if nxt == orbit[-1]:
            break
        orbit.append(nxt)
    if args.format == "text":
        out.write(" -> ".join(render(w) for w in orbit) + "\n")
    else:
        _emit({"orbit": [render(w) for w in orbit], "size": len(orbit)}, out)
    return EXIT_OK


def cmd_image(args, out):
    W = args._W = _group(args)
    if args.dot:
        args.format = "dot"
    render = _render(W)
    reports = []
    for c in _coxeters(args, W):
        camb = Cambrian(W, c)
        if args.format == "dot":
            L = camb.lattice
            out.write(L.to_dot(label=lambda i: str(i), name="Camb"))
            _legend(args.legend, L, render)
            return EXIT_OK
        rep = camb.image_report()
        order = sorted(rep["image"], key=lambda w: (w.bit_count(), w))
        reports.append({"coxeter": _cox_str(W, c), "size": len(order),
                        "elements": [render(w) for w in order],
                        "descent_rule_agrees": rep["image"] == rep["descent_rule"],
                        "interval_rule_agrees": rep["image"] == rep["interval_rule"]})
    if args.format == "text":
        for r in reports:
            out.write(f"c={r['coxeter']}: {r['size']} elements: {' '.join(r['elements'])}\n")
    else:
        _emit({"type": W.type_tag, "images": reports}, out)
    return EXIT_OK


def cmd_cjc(args, out):
    W = _group(args)
    rows = []
    for c in _coxeters(args, W):
        L = Cambrian(W, c).lattice
        polys = {m: L.facet_polynomial(m).coeffs for m in ("down", "up", "facets")}
        rows.append({"coxeter": _cox_str(W, c), "facets": len(L.canonical_join_complex_facets()),
                     "polynomial": polys["facets"],
                     "routes_agree": len({tuple(p) for p in polys.values()}) == 1})
    if args.format == "csv":
        _csv([["coxeter", "k", "coefficient"]]
             + [[r["coxeter"], k, x] for r in rows for k, x in enumerate(r["polynomial"])], out)
    else:
        _emit({"type": W.type_tag, "complexes": rows}, out)
    return EXIT_OK


def cmd_arcs(args, out):
    from .typea import (bipartite_nu, delta, diagram_str, facet_counts, maximal_diagrams, nu_map,
                        parse_perm)

    if args.perm:
        p = parse_perm(args.perm)
        arcs = sorted(delta(p))
        if args.format == "text":
            out.write(diagram_str(arcs) + "\n")
        else:
            _emit({"perm": args.perm, "arcs": [str(a) for a in arcs]}, out)
        return EXIT_OK
    if args.n is None:
        raise UsageError("--n", "give --perm or --n")
    n = args.n
    if args.coxeter:
        W = group(f"A{n}")
        nu = nu_map(W.parse_coxeter(args.coxeter))
    else:
        nu = bipartite_nu(n)
    mads = maximal_diagrams(nu, n)
    body = {"n": n, "nu": {str(k): v for k, v in nu.items()}, "facets": len(mads),
            "polynomial": facet_counts(mads)}
    if args.list_facets:
        body["diagrams"] = [diagram_str(d) for d in mads]
    if args.format == "text":
        for d in mads:
            out.write(diagram_str(d) + "\n")
        return EXIT_OK
    _emit(body, out)
    return EXIT_OK


def cmd_motzkin(args, out):
    from .typea import (conjectured_coefficient, motzkin_bar_paths, motzkin_paths, peaks, psi_inverse,
                        diagram_str, InvalidPath)

    if args.peaks:
        _emit({"path": args.peaks, "peaks": [list(p) for p in peaks(args.peaks)]}, out)
        return EXIT_OK
    if args.psi_inverse:
        try:
            d = psi_inverse(args.psi_inverse)
        except InvalidPath as e:
            raise UsageError("--psi-inverse", str(e)) from e
        _emit({"path": args.psi_inverse, "diagram": diagram_str(d)}, out)
        return EXIT_OK
    if args.n is None or args.n < 0:
        raise UsageError("--n", "give a length --n >= 0")
    n = args.n
    if args.poly:
        coeffs = conjectured_coefficient(n) if n >= 1 else [1]
        if args.format == "json":
            _emit({"n": n, "coefficients": coeffs}, out)
        else:
            _csv([["k", "coefficient"]] + [[k, x] for k, x in enumerate(coeffs)], out)
        return EXIT_OK
    M, Mb = motzkin_paths(n), motzkin_bar_paths(n)
    if args.list:
        _emit({"n": n, "M": M, "Mbar": Mb}, out)
        return EXIT_OK
    if args.count:
        _bare({"M": len(M), "Mbar": len(Mb)}, out)
        return EXIT_OK
    _emit({"n": n, "M": len(M), "Mbar": len(Mb)}, out)
    return EXIT_OK


def cmd_heap(args, out):
    from .heaps import HeapData, verify_max_orbit

    W = _group(args)
    c = _one_coxeter(args, W)
    H = HeapData(W, c)
    if args.format == "dot":
        out.write(H.ar_quiver_dot())
        return EXIT_OK
    lab = W.diagram.labels
    X1, X2 = H.bipartition()
    body = {"type": W.type_tag, "coxeter": _cox_str(W, c), "h": H.h,
            "z_c_word": [lab[s] for s in H.z_c_word()],
            "orbit": [V.word_labels(W, v) for v in H.expected_orbit()],
            "psi": {str(lab[i]): lab[W.psi(i)] for i in range(W.rank)},
            "X1": sorted(lab[i] for i in X1), "X2": sorted(lab[i] for i in X2)}
    if args.check:
        body["checks"] = verify_max_orbit(W, c)
    _emit(body, out)
    return EXIT_OK


def _reps(args):
    from .quiver import NotSimplyLaced, QuiverReps

    W = _group(args)
    c = _one_coxeter(args, W)
    try:
        return W, c, QuiverReps(W, c)
    except NotSimplyLaced as e:
        raise UsageError("--type", str(e)) from e


def _brick_names(R, bits):
    from .quiver import _bits

    return [R.name(r) for r in _bits(bits)]


def cmd_rep(args, out):
    W, c, R = _reps(args)
    if args.what == "bricks":
        out.write(R.brick_table_json() + "\n")
        return EXIT_OK
    rows = []
    for k, T in enumerate(R.torsion_classes):
        D, U = R.brick_labels(T)
        rows.append({"id": k, "members": _brick_names(R, T), "D": _brick_names(R, D),
                     "U": _brick_names(R, U), "sortable_word": V.word_labels(W, T)})
    _emit({"type": W.type_tag, "coxeter": _cox_str(W, c), "arrows": [list(a) for a in R.quiver.arrows],
           "torsion_classes": rows}, out)
    return EXIT_OK


def _parse_at(text: str):
    side, _, rest = text.partition(":")
    if side not in ("d", "u") or not rest:
        raise UsageError("--at", "expected d:<i,j,...> or u:<i,j,...>")
    try:
        pos = [int(t) for t in rest.split(",") if t]
    except ValueError as e:
        raise UsageError("--at", "positions must be integers") from e
    return side, pos


def cmd_smc(args, out):
    from .quiver import _bits
    from .smc import MutationCalculus, NotSMCompatible

    W, c, R = _reps(args)
    M = MutationCalculus(R)
    if args.action == "list":
        rows = []
        for k, T in enumerate(R.torsion_classes):
            D, U = R.brick_labels(T)
            rows.append({"id": k, "X": _brick_names(R, D), "Y": _brick_names(R, U)})
        _emit({"type": W.type_tag, "coxeter": _cox_str(W, c), "smcs": rows}, out)
        return EXIT_OK
    if args.torsion is None or not 0 <= args.torsion < len(R.torsion_classes):
        raise UsageError("--torsion", f"torsion id must be in 0..{len(R.torsion_classes) - 1}")
    if not args.at:
        raise UsageError("--at", "mutation needs --at")
    T = R.torsion_classes[args.torsion]
    D, U = R.brick_labels(T)
    side, pos = _parse_at(args.at)
    pool = list(_bits(D if side == "d" else U))
    if any(not 0 <= p < len(pool) for p in pos):
        raise UsageError("--at", f"positions must be in 0..{len(pool) - 1} for side {side}")
    at = sum(1 << pool[p] for p in set(pos))
    try:
        res = M.mutate_left(D, U, at) if side == "d" else M.mutate_right(D, U, at)
    except NotSMCompatible as e:
        _emit({"error": str(e), "torsion": args.torsion}, out)
        return EXIT_FAIL
    Tn = R.torsion_closure(res.down)
    _emit({"type": W.type_tag, "coxeter": _cox_str(W, c), "torsion": args.torsion,
           "before": {"X": _brick_names(R, D), "Y": _brick_names(R, U)},
           "at": {"side": side, "bricks": _brick_names(R, at)},
           "after": {"X": _brick_names(R, res.down), "Y": _brick_names(R, res.up)},
           "torsion_after": R.torsion_classes.index(Tn),
           "witnesses": [{"side": s, "brick": R.name(b), "how": how, "from": R.name(src)}
                         for s, b, how, src in res.witnesses]}, out)
    return EXIT_OK


# verify -------------------------------------------------------------------------------

_DEFAULT_RANGE = {"image": V.IMAGE_RANGE, "orbit": V.IMAGE_RANGE, "facets": V.IMAGE_RANGE,
                  "intervals": V.CRYSTALLOGRAPHIC_RANGE, "pop-mutation": V.REP_RANGE,
                  "preimage": ["A3"], "mutation-dims": V.REP_RANGE}


def _sweep(suite, jobs, tasks):
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(V.run_per_coxeter, [suite] * len(tasks),
                               [t for t, _ in tasks], [w for _, w in tasks]))
    return [V.run_per_coxeter(suite, t, w) for t, w in tasks]


def cmd_verify(args, out):
    suites = list(V.PER_COXETER) + list(V.PER_N) + ["quotients", "vectors"] if args.suite == "all" \
        else [args.suite]
    checked = 0
    for suite in suites:
        if suite in V.PER_COXETER:
            if args.type:
                W = _group(args)
                tasks = [(W.type_tag, c.word) for c in _coxeters(args, W)]
            else:
                tasks = [(t, c.word) for t in _DEFAULT_RANGE[suite] for c in group(t).coxeter_elements()]
            results = _sweep(suite, args.jobs, tasks)
            checked += len(tasks)
            bad = next((r for r in results if r), None)
        elif suite in V.PER_N:
            ns = [args.n] if args.n else list(range(1, 8))
            bad = next((r for n in ns for r in V.PER_N[suite](n)), None)
            checked += len(ns)
        elif suite == "quotients":
            types = [_group(args).type_tag] if args.type else ["A3", "B3"]
            bad = next((r for t in types for r in V.check_quotients(group(t), args.samples, args.seed)), None)
            checked += len(types) * args.samples
        else:
            bad = next(iter(V.check_vectors()), None)
            checked += 1
        if bad:
            _emit({"suite": suite, "ok": False, "counterexample": bad}, out)
            return EXIT_FAIL
    _emit({"suite": args.suite, "ok": True, "checked": checked}, out)
    return EXIT_OK


# lab ------------------------------------------------------------------------------------

def _is_linear(c) -> bool:
    return all(i < j for i, j in c.orientation)


def lab_image_size_extremes(args, out):
    W = _group(args, "A4")
    bip = W.bipartite_coxeter_element().orientation
    rows = []
    for c in W.coxeter_elements():
        size = len(Cambrian(W, c).image())
        rows.append({"coxeter": _cox_str(W, c), "image_size": size, "linear": _is_linear(c),
                     "bipartite": c.orientation == bip})
    sizes = [r["image_size"] for r in rows]
    lin = [r["image_size"] for r in rows if r["linear"]]
    bi = [r["image_size"] for r in rows if r["bipartite"]]
    _emit({"experiment": "image-size-extremes", "type": W.type_tag, "table": rows,
           "min": min(sizes), "max": max(sizes),
           "linear_is_min": bool(lin) and lin[0] == min(sizes),
           "bipartite_is_max": bool(bi) and bi[0] == max(sizes)}, out)
    return EXIT_OK


def lab_upsilon_census(args, out):
    from .heaps import HeapData

    W = _group(args, "A4")
    render = _render(W)
    cs = _coxeters(args, W) if (args.coxeter or args.all_coxeter) else [W.bipartite_coxeter_element()]
    rows = []
    for c in cs:
        camb = Cambrian(W, c)
        L = camb.lattice
        best, where = L.orbit_stats()
        members = sorted((L.elements[x] for x in where), key=lambda w: (w.bit_count(), w))
        z = HeapData(W, c).z_c()
        rows.append({"coxeter": _cox_str(W, c), "upsilon": best, "count": len(members),
                     "members": [render(w) for w in members], "z_c": render(z),
                     "z_c_s1": render(W.right(z, 0)),
                     "z_c_s1_member": W.right(z, 0) in members})
    _emit({"experiment": "upsilon-census", "type": W.type_tag, "table": rows}, out)
    return EXIT_OK


def lab_quotient_orbit_bound(args, out):
    W = _group(args, "A3")
    rng = random.Random(args.seed)
    Wk = build_weak_lattice(W)
    h = W.coxeter_number()
    rows = []
    for k in range(args.samples):
        cong = random_congruence(Wk, rng, rng.randint(1, 3))
        best, _ = quotient_lattice(Wk, cong).orbit_stats()
        rows.append({"sample": k, "classes": cong.num_classes, "max_orbit": best})
    _emit({"experiment": "quotient-orbit-bound", "type": W.type_tag, "h": h, "seed": args.seed,
           "samples": args.samples, "max_orbit": max(r["max_orbit"] for r in rows),
           "within_bound": all(r["max_orbit"] <= h for r in rows),
           "attains_h": sum(r["max_orbit"] == h for r in rows), "table": rows}, out)
    return EXIT_OK


_LAB = {"image-size-extremes": lab_image_size_extremes, "upsilon-census": lab_upsilon_census,
        "quotient-orbit-bound": lab_quotient_orbit_bound}


def cmd_lab(args, out):
    return _LAB[args.experiment](args, out)


# parser ----------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cambrian-pop", description="Pop-stack operators on Cambrian lattices.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("roots", help="positive roots")
    _common(s, coxeter=False, fmt=("json", "csv", "text"))
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("lattice", help="weak order or Cambrian lattice")
    s.add_argument("which", choices=["weak", "cambrian"])
    _common(s, fmt=("json", "csv", "dot", "text"))
    s.add_argument("--legend", help="write an index -> element legend to this file")
    s.add_argument("--edge-labels", action="store_true", help="label covers by shard labels")
    s.set_defaults(func=cmd_lattice)

    for name, func in (("pop", cmd_pop), ("orbit", cmd_orbit)):
        s = sub.add_parser(name, help=f"pop-stack {name}")
        s.add_argument("which", choices=["weak", "cambrian"])
        _common(s)
        s.add_argument("--perm")
        s.add_argument("--word")
        s.add_argument("--up", action="store_true", help="use pop-up instead of pop-down")
        if name == "orbit":
            s.add_argument("--max", action="store_true", help="maximum orbit size over the lattice")
        s.set_defaults(func=func)

    s = sub.add_parser("image", help="image of pop-down on Camb_c")
    _common(s, fmt=("json", "dot", "text"))
    s.add_argument("--dot", action="store_true")
    s.add_argument("--legend")
    s.set_defaults(func=cmd_image)

    s = sub.add_parser("cjc", help="canonical join complex facet polynomial")
    _common(s, fmt=("json", "csv"))
    s.set_defaults(func=cmd_cjc)

    s = sub.add_parser("arcs", help="noncrossing arc diagrams")
    _common(s, coxeter=False, fmt=("json", "text"))
    s.add_argument("--perm")
    s.add_argument("--n", type=int)
    s.add_argument("--coxeter")
    s.add_argument("--bipartite", action="store_true")
    s.add_argument("--list-facets", action="store_true")
    s.set_defaults(func=cmd_arcs)

    s = sub.add_parser("motzkin", help="Motzkin paths")
    _common(s, coxeter=False, fmt=("json", "csv"))
    s.add_argument("--n", type=int)
    s.add_argument("--count", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--poly", action="store_true", help="P(q) coefficients (CSV unless --format json)")
    s.add_argument("--peaks", metavar="PATH")
    s.add_argument("--psi-inverse", metavar="PATH")
    s.set_defaults(func=cmd_motzkin)

    s = sub.add_parser("heap", help="heap H_c and z_c")
    _common(s, fmt=("json", "dot"))
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_heap)

    s = sub.add_parser("rep", help="representations of the quiver Q_c")
    s.add_argument("what", choices=["bricks", "tors"])
    _common(s)
    s.set_defaults(func=cmd_rep)

    s = sub.add_parser("smc", help="simple-minded collections and mutation")
    s.add_argument("action", choices=["list", "mutate"])
    _common(s)
    s.add_argument("--torsion", type=int, help="torsion class id as listed by `rep tors`")
    s.add_argument("--at", help="d:<positions in X> or u:<positions in Y>")
    s.set_defaults(func=cmd_smc)

    s = sub.add_parser("verify", help="run a check suite")
    s.add_argument("suite", choices=list(V.PER_COXETER) + list(V.PER_N) + ["quotients", "vectors", "all"])
    _common(s)
    s.add_argument("--n", type=int)
    s.add_argument("--samples", type=int, default=100)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("lab", help="experiments around open questions (data only)")
    s.add_argument("experiment", choices=sorted(_LAB))
    _common(s)
    s.add_argument("--samples", type=int, default=100)
    s.set_defaults(func=cmd_lab)
    return p


def _fail_usage(message: str, flag: str) -> int:
    sys.stderr.write(json.dumps({"schema": SCHEMA, "error": message, "flag": flag},
                                separators=(",", ":")) + "\n")
    return EXIT_USAGE


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        args._W = None
        return args.func(args, out)
    except UsageError as e:
        return _fail_usage(str(e), e.flag)
    except GroupTooLarge as e:
        return _fail_usage(str(e), "CAMBRIAN_POP_MAX_ELEMENTS")
    except NotSortable as e:
        return _fail_usage(str(e), "--perm")


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
