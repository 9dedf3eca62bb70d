"""Timing sweeps for the codecs, with a fitted scaling report.

Wall-clock times are evidence only: the codecs' cost models are stated in
digit operations, which timings can suggest but not certify, so nothing
here asserts a bound. The sweep writes one CSV of measurements and one
log-log figure with least-squares slopes per (order, operation) curve.
"""

from __future__ import annotations

import csv
import math
import os
import random
import time

from .combined_codec import rank_comb, unrank_comb
from .counting import gaussian
from .errors import InvalidParameterError
from .ext_codec import rank_ext, unrank_ext
from .ferrers_codec import rank_ferrers, unrank_ferrers
from .subspace import Params

__all__ = ["run_bench", "fit_exponent"]

_CODECS = {
    "ext": (rank_ext, unrank_ext),
    "ferrers": (rank_ferrers, unrank_ferrers),
    "combined": (rank_comb, unrank_comb),
}


def _measure(params, order, samples, rng):
    """Seconds per unrank and per rank at one parameter point."""
    rank_fn, unrank_fn = _CODECS[order]
    total = gaussian(params.n, params.k, params.q)
    indices = [rng.randrange(total) for _ in range(samples)]

    t0 = time.perf_counter()
    subspaces = [unrank_fn(i, params) for i in indices]
    t1 = time.perf_counter()
    ranks = [rank_fn(X) for X in subspaces]
    t2 = time.perf_counter()

    if ranks != indices:
        raise AssertionError(f"round-trip broke at {params} under {order!r}")
    return (t1 - t0) / samples, (t2 - t1) / samples


def fit_exponent(ns, times):
    """Least-squares slope of log(time) against log(n)."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(t) for t in times]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    var = sum((x - mx) ** 2 for x in xs)
    if var == 0:
        return float("nan")
    return sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / var


def run_bench(
    out_dir,
    q=2,
    sizes=(8, 12, 16, 24, 32),
    orders=("ext", "ferrers", "combined"),
    samples=20,
    seed=20240901,
    report=print,
):
    """Sweep n over `sizes` at k = n // 2, write CSV and figure, report fits.

    Returns the list of measurement rows. The figure and CSV land in
    out_dir as bench.csv and bench_scaling.png.
    """
    for order in orders:
        if order not in _CODECS:
            raise InvalidParameterError(f"unknown order {order!r}")
    rng = random.Random(seed)
    os.makedirs(out_dir, exist_ok=True)
    rows = []
    for n in sizes:
        params = Params(q, n, n // 2)
        for order in orders:
            per_unrank, per_rank = _measure(params, order, samples, rng)
            report(
                f"q={q} n={n:4d} k={params.k:3d} {order:9s} "
                f"unrank {per_unrank:.3e} s/op  rank {per_rank:.3e} s/op"
            )
            rows.append(
                {
                    "order": order,
                    "op": "unrank",
                    "q": q,
                    "n": n,
                    "k": params.k,
                    "samples": samples,
                    "seconds_per_op": per_unrank,
                }
            )
            rows.append(
                {
                    "order": order,
                    "op": "rank",
                    "q": q,
                    "n": n,
                    "k": params.k,
                    "samples": samples,
                    "seconds_per_op": per_rank,
                }
            )

    csv_path = os.path.join(out_dir, "bench.csv")
    with open(csv_path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        writer.writerows(rows)

    fits = {}
    for order in orders:
        for op in ("rank", "unrank"):
            pts = [(r["n"], r["seconds_per_op"]) for r in rows
                   if r["order"] == order and r["op"] == op]
            fits[(order, op)] = fit_exponent([p[0] for p in pts], [p[1] for p in pts])

    _plot(rows, fits, orders, os.path.join(out_dir, "bench_scaling.png"))

    report(f"wrote {csv_path} and bench_scaling.png")
    for (order, op), e in sorted(fits.items()):
        report(f"fit {order:9s} {op:7s} time ~ n^{e:.2f}")
    if "ext" in orders and "combined" in orders:
        ratio = _mean_ratio(rows, "combined", "ext")
        report(f"combined/ext mean time ratio: {ratio:.3f}")
    return rows


def _mean_ratio(rows, top, bottom):
    pairs = []
    for op in ("rank", "unrank"):
        a = {r["n"]: r["seconds_per_op"] for r in rows if r["order"] == top and r["op"] == op}
        b = {r["n"]: r["seconds_per_op"] for r in rows if r["order"] == bottom and r["op"] == op}
        pairs.extend(a[n] / b[n] for n in a if n in b and b[n] > 0)
    return sum(pairs) / len(pairs)


def _plot(rows, fits, orders, path):
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, axes = plt.subplots(1, 2, figsize=(10, 4), sharey=True)
    for ax, op in zip(axes, ("unrank", "rank")):
        for order in orders:
            pts = sorted(
                (r["n"], r["seconds_per_op"])
                for r in rows
                if r["order"] == order and r["op"] == op
            )
            ns = [p[0] for p in pts]
            ts = [p[1] for p in pts]
            e = fits[(order, op)]
            ax.loglog(ns, ts, marker="o", label=f"{order} (~n^{e:.2f})")
        ax.set_title(f"{op}, k = n/2")
        ax.set_xlabel("n")
        ax.grid(True, which="both", alpha=0.3)
    axes[0].set_ylabel("seconds per operation")
    axes[0].legend()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
