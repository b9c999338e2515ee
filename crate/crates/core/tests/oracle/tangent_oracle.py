#!/usr/bin/env python3
"""Exact-rational dimension oracle.

Computes dim S_k, dim G_k and dim G_{h,k} of parametrized varieties by a
route that shares no code with the Rust engine:

* S_k: rank over Q of the stacked rows phi(t_i), d phi/d t_ij (sympy diff).
* G_k, G_{h,k}: the tangent space of G(h,r) at the row space of N is
  Hom(N, Q^{r+1}/N). Every parameter direction contributes dN . K where
  K spans the right null space of N; the dimension is the rank of all
  such (h+1)x(r-h) blocks. No affine chart is used.

Samples are small random integers; the reported value is the max rank
over several trials. Output is JSON on stdout.

Usage: python3 tangent_oracle.py [--seed N] [--trials N] [--max-k N] [--only NAME..]
"""
import argparse
import itertools
import json
import random

import sys

import sympy as sp
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def monomials(vars_, deg):
    out = []
    n = len(vars_)
    for total in range(deg + 1):
        for exps in itertools.product(range(total + 1), repeat=n):
            if sum(exps) == total:
                out.append(sp.Mul(*[v**e for v, e in zip(vars_, exps)]))
    return out


def veronese(n, d):
    v = sp.symbols(f"x0:{n}")
    return v, monomials(v, d)


def scroll(a, b):
    s, u = sp.symbols("s u")
    return (s, u), [s**i for i in range(a + 1)] + [u * s**i for i in range(b + 1)]


def segre(n, m):
    xs = sp.symbols(f"x0:{n}")
    ys = sp.symbols(f"y0:{m}")
    left = [sp.Integer(1)] + list(xs)
    right = [sp.Integer(1)] + list(ys)
    return xs + ys, [a * b for a in left for b in right]


def cone_rnc4():
    t, u = sp.symbols("t u")
    return (t, u), [t**i for i in range(5)] + [u]


def projected(vars_, coords, target_r, rng):
    a = sp.Matrix(target_r + 1, len(coords), lambda i, j: rng.randint(-99, 99))
    return vars_, list(a * sp.Matrix(coords))


class Param:
    def __init__(self, vars_, coords):
        self.vars = vars_
        self.n = len(vars_)
        self.r = len(coords) - 1
        self.phi = sp.lambdify(vars_, coords, "sympy")
        self.dphi = [sp.lambdify(vars_, [sp.diff(c, v) for c in coords], "sympy") for v in vars_]

    def at(self, point):
        vals = [sp.Integer(x) for x in point]
        return sp.Matrix([self.phi(*vals)]), [sp.Matrix([d(*vals)]) for d in self.dphi]


def rank(m):
    return DomainMatrix.from_Matrix(m).convert_to(QQ).rank()


def small(rng, lo=-30, hi=30):
    return rng.randint(lo, hi)


def secant_dim(p, k, rng, trials):
    best = -1
    for _ in range(trials):
        rows = []
        for _ in range(k + 1):
            val, ders = p.at([small(rng) for _ in range(p.n)])
            rows.append(val)
            rows.extend(ders)
        best = max(best, rank(sp.Matrix.vstack(*rows)) - 1)
    return best


def grass_dim(p, h, k, rng, trials, with_lambda):
    best = -1
    for _ in range(trials):
        pts = [p.at([small(rng) for _ in range(p.n)]) for _ in range(k + 1)]
        m = sp.Matrix.vstack(*[v for v, _ in pts])
        if with_lambda:
            lam = sp.Matrix(h + 1, k + 1, lambda i, j: small(rng))
        else:
            lam = sp.eye(k + 1)
        big_n = lam * m
        if rank(big_n) < h + 1 or rank(m) < k + 1:
            continue
        ker = sp.Matrix.hstack(*big_n.nullspace()) if h < p.r else sp.zeros(p.r + 1, 0)
        vecs = []
        for i, (_, ders) in enumerate(pts):
            for der in ders:
                dm = sp.zeros(k + 1, p.r + 1)
                dm[i, :] = der
                vecs.append(list(lam * dm * ker))
        if with_lambda:
            for a in range(h + 1):
                for i in range(k + 1):
                    dl = sp.zeros(h + 1, k + 1)
                    dl[a, i] = 1
                    vecs.append(list(dl * m * ker))
        if not vecs or ker.shape[1] == 0:
            best = max(best, 0)
            continue
        best = max(best, rank(sp.Matrix(vecs)))
    return best


def catalog(rng):
    v23 = veronese(2, 3)
    return {
        "veronese:1,3": veronese(1, 3),
        "veronese:1,4": veronese(1, 4),
        "veronese:2,2": veronese(2, 2),
        "veronese:2,3": v23,
        "proj-veronese:2,3": projected(*v23, 5, rng),
        "scroll:2,2": scroll(2, 2),
        "scroll:3,1": scroll(3, 1),
        "scroll:4,0": scroll(4, 0),
        "cone-rnc4": cone_rnc4(),
        "segre:1,1": segre(1, 1),
        "segre:1,2": segre(1, 2),
        "segre:2,2": segre(2, 2),
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=20240601)
    ap.add_argument("--trials", type=int, default=4)
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--only", nargs="*", help="catalog entries to compute")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    out = {"rnc": {}, "catalog": {}}
    for d in ([] if args.only else range(2, 9)):
        p = Param(*veronese(1, d))
        for k in range(1, 4):
            out["rnc"][f"{d},{k}"] = secant_dim(p, k, rng, args.trials)
    for name, (vars_, coords) in catalog(rng).items():
        if args.only and name not in args.only:
            continue
        rng = random.Random(f"{args.seed}:{name}")
        print(name, file=sys.stderr, flush=True)
        p = Param(vars_, coords)
        entry = {"n": p.n, "r": p.r, "S": {}, "G": {}, "GHK": {}}
        for k in range(0, min(args.max_k, p.r) + 1):
            entry["S"][str(k)] = secant_dim(p, k, rng, args.trials)
            entry["G"][str(k)] = grass_dim(p, k, k, rng, args.trials, False)
            for h in range(0, k):
                entry["GHK"][f"{h},{k}"] = grass_dim(p, h, k, rng, args.trials, True)
        out["catalog"][name] = entry
    print(json.dumps(out, indent=1, sort_keys=True))


if __name__ == "__main__":
    main()
