"""Independent reference computations written without the library kernels."""
import cmath
import itertools
import math


def weighted_rows(rows, weights):
    total = sum(weights)
    if total == 0:
        return [0.0] * len(rows[0])
    return [sum(w * r[j] for r, w in zip(rows, weights)) / total for j in range(len(rows[0]))]


def complex_mean(polar_pairs, weights):
    z = sum(w * cmath.rect(r, math.radians(d)) for (r, d), w in zip(polar_pairs, weights)) / sum(weights)
    return z, abs(z), math.degrees(cmath.phase(z)) % 360


def pawlak(universe, blocks, target):
    target = set(target)
    lower = {e for b in blocks if set(b) <= target for e in b}
    upper = {e for b in blocks if set(b) & target for e in b}
    return lower, upper


def filter_by_parameters(approx, universe, params):
    return {u for u in universe if all(u in approx[p] for p in params)}


def filter_profiles(profiles, wanted):
    return {x for x, prof in profiles.items() if all(v in w for v, w in zip(prof, wanted))}


def all_subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from itertools.combinations(items, r)
