"""Command-line interface: ``parahecke <command> [flags]``.

Exit codes: 0 success, 1 a computed check came out false, 2 usage error
(including instances above the bound), 3 the computation itself failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from .coeffs import RatFunc
from .config import instance_bound
from .hecke import BoundExceeded, sn_cells
from .parabolic import (
    algebra, cell_module, enumerate_cosets, kl_basis_dagger, kl_basis_plus, para_cells,
)
from .schurweyl import KernelSpec, check_conjectures, ideal_cosets, ideal_dim
from .symgroup import Composition, reduced_word
from .tableaux import cellular_pair, cellular_index, predicted_cells, rsk_max, rsk_min

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


def word(w):
    return "".join(map(str, reduced_word(tuple(w)))) or "e"


def perm(w):
    return "".join(map(str, w))


def _coeff_json(c):
    return c.to_json()


# ---------------------------------------------------------------------------
# argument handling

def _mu(args, required=True):
    if args.mu is None:
        if required:
            raise UsageError("--mu is required")
        return None
    try:
        mu = Composition(args.mu)
    except ValueError as exc:
        raise UsageError("--mu: %s" % exc) from None
    if args.n is not None and args.n != mu.n:
        raise UsageError("--n %d does not match --mu %s (sum %d)" % (args.n, args.mu, mu.n))
    bound = instance_bound(args.bound)
    if mu.n > bound:
        raise UsageError("--mu: n = %d exceeds the bound %d (raise --bound)" % (mu.n, bound))
    return mu


def _basis(args, default="dagger"):
    kind = args.kind or default
    if kind in ("plus", "max"):
        return "KLplus"
    if kind in ("dagger", "min"):
        return "KLdagger"
    raise UsageError("--kind must be plus or dagger")


def _N(args):
    if args.N is None:
        raise UsageError("--N is required")
    if args.N < 1:
        raise UsageError("--N must be positive")
    return args.N


# ---------------------------------------------------------------------------
# commands; each returns (payload, table_lines, ok)

def cmd_cosets(args):
    mu = _mu(args)
    rows = []
    for D in enumerate_cosets(mu, args.bound):
        rows.append({"rmin": list(D.rmin), "rplus": list(D.rplus), "L": sorted(D.L),
                     "size": D.size, "word": word(D.rmin)})
    lines = ["%-10s %-10s %-8s %s" % ("rmin", "rplus", "size", "word")]
    lines += ["%-10s %-10s %-8d %s" % (perm(r["rmin"]), perm(r["rplus"]), r["size"], r["word"])
              for r in rows]
    return {"mu": list(mu), "n": mu.n, "count": len(rows), "cosets": rows}, lines, True


def cmd_klbasis(args):
    mu = _mu(args)
    basis = _basis(args, "plus")
    out, lines = [], []
    for D in enumerate_cosets(mu, args.bound):
        if basis == "KLplus":
            elt = kl_basis_plus(D)
            label = "C_{%s}" % word(D.rplus)
            keyword = lambda x: "T_[%s]" % word(algebra(mu).rplus(x))
        else:
            elt = kl_basis_dagger(D)
            label = "eCdag_{%s}e" % word(D.rmin)
            keyword = lambda x: "eT_{%s}e" % word(x)
        terms = sorted(elt.terms.items(), key=lambda kv: (-len(reduced_word(kv[0])), kv[0]))
        out.append({"coset": list(D.rmin), "element": elt.to_json()})
        lines.append("%s = %s" % (label, " + ".join(
            keyword(x) if c == RatFunc(1) else "(%s)%s" % (c, keyword(x)) for x, c in terms)))
    return {"mu": list(mu), "basis": basis, "elements": out}, lines, True


def _cells_payload(cells, key):
    return {s: [sorted(key(x) for x in c) for c in cells[s].partition()] for s in cells}


def cmd_cells(args):
    side = args.side
    mu = _mu(args, required=args.n is None)
    if mu is None:
        n = args.n
        if n > instance_bound(args.bound):
            raise UsageError("--n %d exceeds the bound %d" % (n, instance_bound(args.bound)))
        kind = "C" if _basis(args) == "KLplus" else "Cdagger"
        cells = sn_cells(n, kind, args.bound)
        payload = {"n": n, "basis": kind, "cells": _cells_payload(cells, list)}
        sides = [side] if side else ["L", "R", "LR"]
        lines = ["%s: %s" % (s, " | ".join(",".join(perm(w) for w in c)
                                           for c in payload["cells"][s])) for s in sides]
        return payload, lines, True
    basis = _basis(args)
    cells = para_cells(mu, basis, bound=args.bound)
    pred = predicted_cells(mu, basis)
    agree = {s: [frozenset(c) for c in cells[s].partition()] == pred[s] for s in cells}
    payload = {"mu": list(mu), "basis": basis,
               "cells": _cells_payload(cells, lambda D: list(D.rmin)),
               "matchesRSK": agree}
    sides = [side] if side else ["L", "R", "LR"]
    lines = []
    for s in sides:
        lines.append("%s-cells (%s RSK): %s" % (s, "match" if agree[s] else "DIFFER", " | ".join(
            ",".join(word(x) for x in c) for c in payload["cells"][s])))
    return payload, lines, all(agree.values())


def cmd_rsk(args):
    mu = _mu(args)
    kind = args.kind or "min"
    if kind not in ("min", "max", "dagger", "plus"):
        raise UsageError("--kind must be min or max for rsk")
    rows, lines = [], []
    # D-labels follow (length, reduced word) of the minimal representative
    cosets = sorted(enumerate_cosets(mu, args.bound),
                    key=lambda D: (len(reduced_word(D.rmin)), reduced_word(D.rmin)))
    for i, D in enumerate(cosets, start=1):
        Pm, Qm = rsk_min(D)
        Px, Qx = rsk_max(D)
        rows.append({"label": "D%d" % i, "rmin": list(D.rmin), "rplus": list(D.rplus),
                     "min": [Pm.to_json(), Qm.to_json()], "max": [Px.to_json(), Qx.to_json()]})
        if kind in ("min", "dagger"):
            lines.append("D%-3d %-10s P=%-14s Q=%s" % (i, word(D.rmin), Pm, Qm))
        else:
            lines.append("D%-3d %-10s P=%-14s Q=%s" % (i, word(D.rplus), Px, Qx))
    return {"mu": list(mu), "rows": rows}, lines, True


def cmd_cellmod(args):
    mu = _mu(args)
    basis = _basis(args)
    side = args.side or "L"
    if side not in ("L", "R"):
        raise UsageError("--side must be L or R for cellmod")
    cells = para_cells(mu, basis, side, bound=args.bound)
    out, lines = [], []
    for c in cells.partition():
        mats = cell_module(mu, basis, c, side)
        shape = rsk_min(min(c))[0].shape if basis == "KLdagger" else rsk_max(min(c))[0].shape
        out.append({"cell": [list(D.rmin) for D in sorted(c)], "shape": list(shape),
                    "dim": len(c),
                    "matrices": [{"y": list(y), "matrix": [[_coeff_json(v) for v in row]
                                                           for row in M]}
                                 for y, M in sorted(mats.items())]})
        lines.append("shape %-12s dim %d  cell %s" % (
            ",".join(map(str, shape)), len(c), ",".join(word(D.rmin) for D in sorted(c))))
    return {"mu": list(mu), "basis": basis, "side": side, "modules": out}, lines, True


def cmd_cellular(args):
    mu = _mu(args)
    kind = "C" if _basis(args) == "KLplus" else "Cdagger"
    rows, lines = [], []
    ok = True
    for D in enumerate_cosets(mu, args.bound):
        S, T = cellular_pair(D, kind)
        elt = cellular_index(S, T, kind)
        expected = kl_basis_plus(D) if kind == "C" else kl_basis_dagger(D)
        same = elt == expected
        ok &= same
        rows.append({"coset": list(D.rmin), "S": S.to_json(), "T": T.to_json(), "roundTrip": same})
        lines.append("%-10s S=%-14s T=%-14s %s" % (word(D.rmin), S, T, "ok" if same else "MISMATCH"))
    return {"mu": list(mu), "kind": kind, "rows": rows}, lines, ok


def cmd_ideal(args):
    mu = _mu(args)
    spec = KernelSpec(mu, _N(args))
    cos = ideal_cosets(spec)
    dim = ideal_dim(spec)
    rows = [{"coset": list(D.rmin), "shape": list(rsk_min(D)[0].shape)} for D in cos]
    lines = ["idealDim %d" % dim] + ["%-10s shape %s" % (word(r["coset"]), r["shape"])
                                     for r in rows]
    return ({"mu": list(mu), "N": spec.N, "idealDim": dim, "basis": rows}, lines,
            dim == len(cos))


def cmd_conjecture(args):
    mu = _mu(args)
    N = _N(args)
    if len(mu) != N + 1:
        raise UsageError("--N: conjecture needs mu with N + 1 = %d parts, got %d"
                         % (N + 1, len(mu)))
    rep = check_conjectures(KernelSpec(mu, N), rank_mode=args.rank_mode, seed=args.seed,
                            bound=args.bound)
    if not args.timing:
        rep.pop("elapsedMs")
    ok = all(rep[k] for k in ("xyEqual", "barInvariantX", "xGenerates", "yGenerates"))
    lines = ["%s: %s" % (k, rep[k]) for k in sorted(rep)]
    return rep, lines, ok


def cmd_selftest(args):
    from .selftest import run_all
    results = run_all()
    lines = ["%-4s %s" % ("ok" if r["ok"] else "FAIL", r["name"]) for r in results]
    return {"results": results}, lines, all(r["ok"] for r in results)


COMMANDS = {
    "cosets": cmd_cosets, "klbasis": cmd_klbasis, "cells": cmd_cells, "rsk": cmd_rsk,
    "cellmod": cmd_cellmod, "cellular": cmd_cellular, "ideal": cmd_ideal,
    "conjecture": cmd_conjecture, "selftest": cmd_selftest,
}


def build_parser():
    p = argparse.ArgumentParser(prog="parahecke",
                                description="Parabolic Hecke algebras of type A: cosets, "
                                            "KL bases, cells, RSK and the Schur-Weyl kernel.")
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--n", type=int)
    p.add_argument("--mu", help="composition, comma separated (e.g. 2,2,1)")
    p.add_argument("--N", type=int)
    p.add_argument("--kind", choices=["plus", "dagger", "min", "max"])
    p.add_argument("--side", choices=["L", "R", "LR"])
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--rank-mode", choices=["exact", "eval", "auto"], default="auto")
    p.add_argument("--bound", type=int, help="cap on n (default $PARAHECKE_BOUND or 7)")
    p.add_argument("--seed", type=int, default=0, help="seed for extra evaluation points")
    p.add_argument("--timing", action="store_true", help="include elapsedMs in reports")
    return p


def dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        payload, lines, ok = COMMANDS[args.command](args)
    except (UsageError, BoundExceeded, ValueError) as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (ArithmeticError, AssertionError) as exc:
        print("could not compute: %s" % exc, file=sys.stderr)
        return EXIT_FAILED
    if args.format == "json":
        print(dumps(payload))
    else:
        print("\n".join(lines))
    return EXIT_OK if ok else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
