"""Command-line front end: generate configurations, count crossings, verify
lemma-level invariants, and run the witness pipelines.

Exit codes are a stable contract: 0 success, 1 internal invariant failure,
2 input error.  Every run with --out leaves a manifest, machine-readable
CSV/JSON results, and rendered figures next to them; result files carry no
timestamps so reruns reproduce them byte for byte.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import math
import os
import sys
import tempfile
from datetime import datetime, timezone

from . import __version__
from .errors import InputError, InvariantError
from .gale import (
    affine_diagram,
    enumerate_separations,
    gale_transform,
    is_convex_position_gale,
    neighborliness_gale,
)
from .kfacets import (
    almost_balanced_directed_lines,
    andrzejak_check,
    balanced_lines,
    facet_stats,
    gen_random_3d,
    gen_random_colored_2d,
    halving_bound,
    halving_stats,
    leq_facet_bound,
    leq_facet_count,
)
from .pointconfig import (
    gen_moment_curve,
    gen_planted,
    gen_random,
    gen_segment_sum,
    is_convex_position,
    load_config,
    neighborliness_direct,
    save_config,
)
from .simplexcross import count_all_crossings, radon_partition, simplices_cross
from .witness import (
    highly_neighborly_witnesses,
    main_witnesses,
    nonconvex_witnesses,
    t_neighborly_witnesses,
    verify_report,
)

LEMMAS = ("gale-bijection", "convexity", "neighborliness", "balanced-lines",
          "halving", "leq-facets", "andrzejak", "radon")


def _atomic_write(path, data: str):
    directory = os.path.dirname(path) or "."
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _write_csv(path, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)
    _atomic_write(path, buf.getvalue())


def _write_manifest(out_dir, args, outputs, input_hash=None):
    manifest = {
        "command_line": " ".join(sys.argv),
        "seed": getattr(args, "seed", None),
        "input_hash": input_hash,
        "tool_version": __version__,
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "outputs": sorted(outputs),
    }
    _atomic_write(os.path.join(out_dir, "manifest.json"),
                  json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _load_config_file(path):
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read configuration: {exc}") from exc
    return load_config(raw), hashlib.sha256(raw).hexdigest()


def cmd_gen(args):
    d, n = args.d, args.n
    if d is None:
        raise InputError("gen requires --d")
    if args.generator in ("moment", "cyclic"):
        if n is None:
            raise InputError("gen requires --n")
        cfg = gen_moment_curve(d, range(n))
    elif args.generator == "random":
        if n is None:
            raise InputError("gen requires --n")
        cfg = gen_random(d, n, seed=args.seed, bound=args.bound)
    elif args.generator == "planted":
        if n is None:
            raise InputError("gen requires --n")
        cfg = gen_planted(d, n, seed=args.seed, bound=args.bound)
    elif args.generator == "product":
        cfg = gen_segment_sum(d, seed=args.seed)
        n = 2 * d
    else:
        raise InputError(f"unknown generator {args.generator!r}")

    name = f"{args.generator}_d{d}_n{len(cfg)}_s{args.seed}.json"
    out_dir = args.out or "."
    path = os.path.join(out_dir, name)
    _atomic_write(path, save_config(cfg))
    outputs = [name]
    if args.out:
        from . import plots

        figure = name.replace(".json", ".png")
        plots.configuration_figure(cfg, os.path.join(out_dir, figure))
        outputs.append(figure)
        _write_manifest(out_dir, args, outputs)
    print(f"wrote {path} ({len(cfg)} points in Q^{d})")
    return 0


def cmd_count(args):
    cfg, digest = _load_config_file(args.config)
    u, v = args.u, args.v
    if u is None or v is None:
        raise InputError("count requires --u and --v")
    count, pairs = count_all_crossings(cfg, u, v, emit_pairs=args.emit_pairs)
    total_pairs = (math.comb(len(cfg), u + 1) * math.comb(len(cfg) - u - 1, v + 1)
                   // (2 if u == v else 1))
    print(f"crossing pairs (u={u}, v={v}): {count}")
    if args.out:
        from . import plots

        outputs = ["count.csv"]
        _write_csv(os.path.join(args.out, "count.csv"),
                   ["u", "v", "crossing_pairs", "disjoint_pairs"],
                   [[u, v, count, total_pairs]])
        if args.emit_pairs:
            doc = [[sorted(cfg.labels[i] for i in p.left),
                    sorted(cfg.labels[i] for i in p.right)] for p in pairs]
            _atomic_write(os.path.join(args.out, "pairs.json"),
                          json.dumps(doc, indent=2) + "\n")
            outputs.append("pairs.json")
        plots.margins_figure([count], [0], f"crossing pairs ({u},{v})",
                             os.path.join(args.out, "count.png"))
        outputs.append("count.png")
        _write_manifest(args.out, args, outputs, input_hash=digest)
    return 0


def _verify_gale_bijection(args, rows):
    d = args.d or 3
    m = args.m or d + 3
    ok = True
    for trial in range(args.trials):
        cfg = gen_random(d, m, seed=args.seed + trial, bound=args.bound)
        seps = enumerate_separations(gale_transform(cfg))
        for u in range(1, m - 3):
            v = m - 2 - u
            if v < 1 or u > v:
                continue
            dual = sum(1 for s in seps if set(s.sides()) == {u + 1, v + 1})
            direct, _ = count_all_crossings(cfg, u, v)
            good = dual == direct
            ok = ok and good
            rows.append([trial, u, v, dual, direct, good])
    return ok, ["trial", "u", "v", "separations", "crossings", "pass"]


def _verify_convexity(args, rows):
    d = args.d or 3
    m = args.m or d + 3
    ok = True
    for trial in range(args.trials):
        if trial % 2:
            cfg = gen_planted(d, m, seed=args.seed + trial, bound=args.bound)
        else:
            cfg = gen_random(d, m, seed=args.seed + trial, bound=args.bound)
        direct = is_convex_position(cfg)
        dual = is_convex_position_gale(gale_transform(cfg))
        good = direct == dual
        ok = ok and good
        rows.append([trial, direct, dual, good])
    return ok, ["trial", "direct", "gale", "pass"]


def _verify_neighborliness(args, rows):
    ok = True
    cases = []
    for trial in range(args.trials):
        if trial % 2 and args.d is not None and args.d <= 5:
            cases.append(("segment-sum", gen_segment_sum(args.d, seed=args.seed + trial)))
        else:
            d = args.d or 4
            m = args.m or d + 4
            rng_ts = gen_random(1, m, seed=args.seed + trial, bound=10 * m)
            ts = sorted({p[0] for p in rng_ts.points})
            while len(ts) < m:
                ts.append(max(ts) + 1)
            cases.append(("cyclic", gen_moment_curve(d, ts[:m])))
    for trial, (kind, cfg) in enumerate(cases):
        gale_t = neighborliness_gale(gale_transform(cfg))
        direct_t = neighborliness_direct(cfg)
        good = gale_t == direct_t
        ok = ok and good
        rows.append([trial, kind, gale_t, direct_t, good])
    return ok, ["trial", "kind", "gale_t", "direct_t", "pass"]


def _verify_balanced(args, rows):
    r = args.r or 12
    ok = True
    for trial in range(args.trials):
        cp = gen_random_colored_2d(r, seed=args.seed + trial, bound=args.bound)
        directed = len(almost_balanced_directed_lines(cp))
        good = directed >= r // 2
        row = [trial, r, directed, r // 2, good]
        if r % 2 == 0:
            bal = len(balanced_lines(cp))
            good = good and bal >= r // 2
            row = [trial, r, bal, directed, r // 2, good]
        ok = ok and good
        rows.append(row)
    header = (["trial", "r", "balanced", "directed", "bound", "pass"]
              if r % 2 == 0 else ["trial", "r", "directed", "bound", "pass"])
    return ok, header


def _verify_halving(args, rows):
    s = args.s or 9
    ok = True
    for trial in range(args.trials):
        pts = gen_random_3d(s, seed=args.seed + trial, bound=args.bound)
        count = halving_stats(pts)
        good = count >= halving_bound(s)
        ok = ok and good
        rows.append([trial, s, count, halving_bound(s), good])
    return ok, ["trial", "s", "count", "bound", "pass"]


def _verify_leq_facets(args, rows):
    s = args.s or 13
    ok = True
    for trial in range(args.trials):
        pts = gen_random_3d(s, seed=args.seed + trial, bound=args.bound)
        js = [args.j] if args.j is not None else [j for j in range(s) if j < s / 4]
        for j in js:
            count = leq_facet_count(pts, j)
            good = count >= leq_facet_bound(j)
            ok = ok and good
            rows.append([trial, s, j, count, leq_facet_bound(j), good])
    return ok, ["trial", "s", "j", "count", "bound", "pass"]


def _verify_andrzejak(args, rows):
    s = args.s or 9
    ok = True
    for trial in range(args.trials):
        pts = gen_random_3d(s, seed=args.seed + trial, bound=args.bound)
        for row in andrzejak_check(pts):
            ok = ok and row.ok
            rows.append([trial, s, row.k, row.direct, row.from_facets, row.ok])
    return ok, ["trial", "s", "k", "e_k_direct", "e_k_from_facets", "pass"]


def _verify_radon(args, rows):
    d = args.d or 4
    ok = True
    for trial in range(args.trials):
        cfg = gen_random(d, d + 2, seed=args.seed + trial, bound=args.bound)
        pos, neg = radon_partition(cfg)
        crossing = simplices_cross(cfg, sorted(pos), sorted(neg)) is not None
        ok = ok and crossing
        rows.append([trial, d, "|".join(map(str, sorted(pos))),
                     "|".join(map(str, sorted(neg))), crossing])
    return ok, ["trial", "d", "positive", "negative", "pass"]


VERIFIERS = {
    "gale-bijection": _verify_gale_bijection,
    "convexity": _verify_convexity,
    "neighborliness": _verify_neighborliness,
    "balanced-lines": _verify_balanced,
    "halving": _verify_halving,
    "leq-facets": _verify_leq_facets,
    "andrzejak": _verify_andrzejak,
    "radon": _verify_radon,
}


def cmd_verify(args):
    if args.lemma not in VERIFIERS:
        raise InputError(f"unknown lemma {args.lemma!r}; choose from {', '.join(LEMMAS)}")
    rows = []
    ok, header = VERIFIERS[args.lemma](args, rows)
    passed = sum(1 for r in rows if r[-1])
    print(f"{args.lemma}: {passed}/{len(rows)} checks passed")
    if args.out:
        from . import plots

        name = f"verify_{args.lemma}.csv"
        _write_csv(os.path.join(args.out, name), header, rows)
        outputs = [name]
        count_col = next((i for i, h in enumerate(header) if h in ("count", "balanced", "separations", "e_k_direct")), None)
        bound_col = next((i for i, h in enumerate(header) if h in ("bound", "crossings", "e_k_from_facets")), None)
        if count_col is not None and bound_col is not None:
            figure = f"verify_{args.lemma}.png"
            plots.margins_figure([r[count_col] for r in rows],
                                 [r[bound_col] for r in rows],
                                 args.lemma, os.path.join(args.out, figure))
            outputs.append(figure)
        _write_manifest(args.out, args, outputs)
    if args.lemma == "andrzejak" and args.out:
        # identity report doubles as the facet-stats export
        stats = facet_stats(gen_random_3d(args.s or 9, seed=args.seed, bound=args.bound))
        stats_rows = [[stats.s, j, stats.E[j], ""] for j in range(len(stats.E))]
        stats_rows += [[stats.s, k + 1, "", stats.e[k]] for k in range(len(stats.e))]
        _write_csv(os.path.join(args.out, "facet_stats.csv"),
                   ["s", "j_or_k", "E_j", "e_k"], stats_rows)
        from . import plots

        plots.facet_stats_figure(stats.E, stats.e,
                                 os.path.join(args.out, "facet_stats.png"))
    return 0 if ok else 1


def cmd_witness(args):
    cfg, digest = _load_config_file(args.config)
    regime = args.regime
    if regime == "main":
        report = main_witnesses(cfg)
    elif regime == "nonconvex":
        report = nonconvex_witnesses(cfg)
    elif regime == "t-neighborly":
        if args.t is None:
            raise InputError("t-neighborly regime requires --t")
        report = t_neighborly_witnesses(cfg, args.t)
    elif regime == "highly-neighborly":
        if args.tprime is None:
            raise InputError("highly-neighborly regime requires --tprime")
        report = highly_neighborly_witnesses(cfg, args.tprime)
    else:
        raise InputError(f"unknown regime {regime!r}")

    if not verify_report(cfg, report):
        raise InvariantError("witness report failed re-validation")
    bound_txt = ("bound not claimed (degenerate extension)"
                 if report.degenerate_extension
                 else f"guaranteed lower bound {report.guaranteed_lower_bound}")
    print(f"{regime}: {len(report.pairs)} validated crossing pairs, {bound_txt}")
    for note in report.notes:
        print(f"  note: {note}")

    if args.out:
        from . import plots

        outputs = ["witness_report.json"]
        _atomic_write(os.path.join(args.out, "witness_report.json"),
                      json.dumps(report.to_dict(cfg.labels), indent=2, sort_keys=True) + "\n")
        plots.witness_figure(report, os.path.join(args.out, "witness_counts.png"))
        outputs.append("witness_counts.png")
        if regime == "main":
            m = cfg.dim + 4
            g = gale_transform(cfg.subconfig(range(m)))
            diag = affine_diagram(g)
            if plots.diagram_figure(diag.points, diag.colors,
                                    os.path.join(args.out, "affine_diagram.png")):
                outputs.append("affine_diagram.png")
        _write_manifest(args.out, args, outputs, input_hash=digest)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="galecross",
        description="Exact Gale duality, crossing counts and witness pipelines "
                    "for drawings of complete uniform hypergraphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a point configuration")
    gen.add_argument("--generator", required=True,
                     choices=["moment", "random", "planted", "cyclic", "product"])
    gen.add_argument("--d", type=int)
    gen.add_argument("--n", type=int)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--bound", type=int, default=1000)
    gen.add_argument("--out")

    count = sub.add_parser("count", help="count crossing simplex pairs")
    count.add_argument("--config", required=True)
    count.add_argument("--u", type=int)
    count.add_argument("--v", type=int)
    count.add_argument("--emit-pairs", action="store_true")
    count.add_argument("--out")

    verify = sub.add_parser("verify", help="run a lemma-level invariant suite")
    verify.add_argument("--lemma", required=True)
    verify.add_argument("--trials", type=int, default=20)
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--bound", type=int, default=1000)
    verify.add_argument("--d", type=int)
    verify.add_argument("--m", type=int)
    verify.add_argument("--r", type=int)
    verify.add_argument("--s", type=int)
    verify.add_argument("--j", type=int)
    verify.add_argument("--out")

    witness = sub.add_parser("witness", help="run a crossing-witness pipeline")
    witness.add_argument("--config", required=True)
    witness.add_argument("--regime", required=True,
                         choices=["main", "nonconvex", "t-neighborly", "highly-neighborly"])
    witness.add_argument("--t", type=int)
    witness.add_argument("--tprime", type=int)
    witness.add_argument("--out")

    return parser


COMMANDS = {
    "gen": cmd_gen,
    "count": cmd_count,
    "verify": cmd_verify,
    "witness": cmd_witness,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
