"""Brute-force reference implementations used only by the tests.

They work on plain, unsorted value lists and scan every candidate k, so they
share no code path with the engine.
"""
import heapq
from fractions import Fraction


def brute_h_q(values, q=1):
    q = Fraction(q)
    best = 0
    for k in range(len(values) + 1):
        if sum(1 for v in values if v >= q * k) >= k:
            best = k
    return best


def brute_h(values):
    return brute_h_q(values, 1)


def brute_g(values):
    best = 0
    for g in range(len(values) + 1):
        if sum(heapq.nlargest(g, values), Fraction(0)) >= g * g:
            best = g
    return best


def brute_core_sum(values):
    return sum(heapq.nlargest(brute_h(values), values), Fraction(0))


def brute_kendall_tau_b(xs, ys):
    n = len(xs)
    conc = disc = tx = ty = 0
    for i in range(n):
        for j in range(i + 1, n):
            dx, dy = xs[i] - xs[j], ys[i] - ys[j]
            tx += dx == 0
            ty += dy == 0
            if dx * dy > 0:
                conc += 1
            elif dx * dy < 0:
                disc += 1
    n0 = n * (n - 1) // 2
    return (conc - disc) / ((n0 - tx) * (n0 - ty)) ** 0.5
