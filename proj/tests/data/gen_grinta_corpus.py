#!/usr/bin/env python3
"""Writes grinta_corpus.json: aligned budget instances for the utility
u(x1, x2) = x1 x2 / (x1 + 1) - 5 x1 + x2 with expected maximal sets.

Everything is computed here with fractions.Fraction and a planar convex
hull, independently of the C++ library. Run from this directory:

    python3 gen_grinta_corpus.py > grinta_corpus.json
"""
import itertools
import json
from fractions import Fraction as F

UPPER = 4
TARGET = 50


def u(x):
    x1, x2 = x
    return x1 * x2 / (x1 + 1) - 5 * x1 + x2


def grid(step):
    axis = []
    v = F(0)
    while v <= UPPER:
        axis.append(v)
        v += step
    return [(a, b) for a in axis for b in axis]


def cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull(points):
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def on_segment(p, a, b):
    if cross(a, b, p) != 0:
        return False
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def in_hull(p, points):
    h = hull(points)
    if len(h) == 1:
        return p == h[0]
    if len(h) == 2:
        return on_segment(p, h[0], h[1])
    # Counter-clockwise polygon: inside or on the boundary iff never strictly right.
    return all(cross(h[i], h[(i + 1) % len(h)], p) >= 0 for i in range(len(h)))


def instance(step, price, wealth):
    ground = grid(step)
    budget = [x for x in ground if price[0] * x[0] + price[1] * x[1] <= wealth]
    values = {x: u(x) for x in ground}
    best = max(values[x] for x in budget)
    maximals = [x for x in budget if values[x] == best]
    convexified = []
    for m in budget:
        if all(in_hull(m, [y for y in ground if values[y] >= values[s]]) for s in budget):
            convexified.append(m)
    return maximals, convexified


def text(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def main():
    candidates = []
    for step in (F(1), F(1, 2)):
        pts = grid(step)
        for price in itertools.product((1, 2, 3), repeat=2):
            w = step
            while w <= UPPER:
                aligned = any(price[0] * x[0] + price[1] * x[1] == w for x in pts)
                if aligned and not (step == 1 and price == (1, 1) and w == 2):
                    candidates.append((step, price, w))
                w += step
    # Evenly spaced picks keep both steps and all price vectors represented.
    picks = [candidates[(i * len(candidates)) // TARGET] for i in range(TARGET)]
    out = []
    for step, price, w in picks:
        maximals, convexified = instance(step, price, w)
        out.append({
            "utility": "paper_6_3",
            "step": text(step),
            "upper": [text(F(UPPER))] * 2,
            "price": [text(F(p)) for p in price],
            "wealth": text(w),
            "maximals": [[text(c) for c in x] for x in sorted(maximals)],
            "convexified_maximals": [[text(c) for c in x] for x in sorted(convexified)],
        })
    print(json.dumps({"candidates": len(candidates), "instances": out}, indent=1))


if __name__ == "__main__":
    main()
