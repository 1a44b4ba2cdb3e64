#!/usr/bin/env python3
"""Regenerate data/*.csv from the Rolfsen table shipped with spherogram.

Expected-value columns (sigma, det, alexander, genus) are computed here from
spherogram's own Seifert matrix, which is independent of the C++ code paths.
Composite entries take their expected values from the summands (signature and
genus add, Alexander polynomials and determinants multiply).
Sign convention for sigma: positive knots have negative signature. spherogram's
Seifert form gives positive knots positive signature, so its value is negated.

    python3 tools/corpus/generate_corpus.py data/
"""
import csv
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np
import spherogram


def pd_string(link):
    # spherogram labels arcs from 0; shift to 1-based labels.
    return " ".join("X(%d,%d,%d,%d)" % tuple(x + 1 for x in xing) for xing in link.PD_code())


def int_det(rows):
    """Fraction-free Bareiss determinant of an integer matrix."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def interpolate(xs, ys):
    """Exact Lagrange interpolation; returns {exponent: coefficient}."""
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xs[j] * basis[k + 1]
            denom *= xs[i] - xs[j]
        for k in range(len(basis)):
            coeffs[k] += ys[i] * basis[k] / denom
    out = {}
    for e, c in enumerate(coeffs):
        assert c.denominator == 1
        if c != 0:
            out[e] = int(c)
    return out


def oracle(link):
    v = np.array(link.seifert_matrix(), dtype=object)
    if v.size == 0:
        return 0, 1, "0:1", 0
    n = v.shape[0]
    sym = (v + v.T).astype(float)
    eig = np.linalg.eigvalsh(sym)
    sigma = -int(np.sum(eig > 1e-9) - np.sum(eig < -1e-9))
    xs = list(range(n + 1))
    ys = [int_det((x * v - v.T).tolist()) for x in xs]
    coeffs = interpolate(xs, ys)
    lo, hi = min(coeffs), max(coeffs)
    span = hi - lo
    mid = (lo + hi) // 2
    shifted = {e - mid: c for e, c in coeffs.items()}
    if sum(shifted.values()) < 0:
        shifted = {e: -c for e, c in shifted.items()}
    assert sum(shifted.values()) == 1
    det = abs(sum(c if e % 2 == 0 else -c for e, c in shifted.items()))
    alex = ";".join("%d:%d" % (e, shifted[e]) for e in sorted(shifted, reverse=True))
    return sigma, det, alex, span // 2


def parse_alex(text):
    return {int(e): int(c) for e, c in (term.split(":") for term in text.split(";"))}


def combine(parts):
    sigma, det, genus, alex = 0, 1, 0, {0: 1}
    for s, d, a, g in parts:
        sigma += s
        det *= d
        genus += g
        prod = {}
        for e1, c1 in alex.items():
            for e2, c2 in parse_alex(a).items():
                prod[e1 + e2] = prod.get(e1 + e2, 0) + c1 * c2
        alex = {e: c for e, c in prod.items() if c != 0}
    text = ";".join("%d:%d" % (e, alex[e]) for e in sorted(alex, reverse=True))
    return sigma, det, text, genus


def write(path, table):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "pd", "sigma", "det", "alexander", "genus"])
        w.writerows(table)


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    alternating, nonalternating = [], []
    for n in range(3, 10):
        k = 1
        while True:
            name = "%d_%d" % (n, k)
            try:
                link = spherogram.Link(name)
            except Exception:
                break
            row = [name, pd_string(link), *oracle(link)]
            (alternating if link.is_alternating() else nonalternating).append(row)
            print(name, file=sys.stderr)
            k += 1

    def csum(*summands):
        link = summands[0].copy()
        for s in summands[1:]:
            link = link.connected_sum(s)
        return link

    # connected_sum mutates its operands, so every summand is a fresh Link.
    def knot(spec):
        name, mirrored = spec.rstrip("*"), spec.endswith("*")
        link = spherogram.Link(name)
        return link.mirror() if mirrored else link

    # Mirroring negates the signature and keeps the rest.
    def summand_oracle(spec):
        sigma, det, alex, genus = oracle(spherogram.Link(spec.rstrip("*")))
        return (-sigma if spec.endswith("*") else sigma), det, alex, genus

    for parts in [
        ["3_1", "3_1"],
        ["3_1", "3_1*"],
        ["3_1", "5_2*"],
        ["3_1", "3_1", "3_1"],
        ["5_1", "4_1"],
    ]:
        link = csum(*[knot(p) for p in parts])
        expected = combine([summand_oracle(p) for p in parts])
        alternating.append(["#".join(parts), pd_string(link), *expected])

    write(outdir / "alternating_le9.csv", alternating)
    write(outdir / "nonalternating_le9.csv", nonalternating)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")
