"""Chart rendering for sweep records: PNG files next to the JSONL output."""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .theorems import FAIL, NA, PASS

STATUS_COLORS = {PASS: "#2f9e44", FAIL: "#e03131", NA: "#adb5bd"}


def _classification_chart(records: list[dict], path: str) -> None:
    buckets: dict[str, int] = {}
    for record in records:
        key = record["classification"] or "not critical"
        buckets[key] = buckets.get(key, 0) + 1
    labels = sorted(buckets)
    values = [buckets[k] for k in labels]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(labels, values, color="#1971c2")
    for i, v in enumerate(values):
        ax.text(i, v, str(v), ha="center", va="bottom")
    ax.set_ylabel("graphs")
    ax.set_title(f"classification of {len(records)} records")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _check_outcomes_chart(records: list[dict], path: str) -> None:
    counts: dict[str, dict[str, int]] = {}
    for record in records:
        for entry in record["checks"]:
            per = counts.setdefault(entry["check"], {PASS: 0, FAIL: 0, NA: 0})
            per[entry["status"]] += 1
    checks = list(counts)
    fig, ax = plt.subplots(figsize=(7, max(3, 0.5 * len(checks) + 1.5)))
    left = [0] * len(checks)
    for status in (PASS, FAIL, NA):
        widths = [counts[c][status] for c in checks]
        ax.barh(checks, widths, left=left, color=STATUS_COLORS[status], label=status)
        left = [a + b for a, b in zip(left, widths)]
    ax.set_xlabel("graphs")
    ax.set_title("check outcomes")
    ax.legend()
    ax.invert_yaxis()
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def _orders_chart(records: list[dict], path: str) -> None:
    orders = [record["profile"]["n"] for record in records]
    fig, ax = plt.subplots(figsize=(6, 4))
    if orders:
        lo, hi = min(orders), max(orders)
        bins = [b - 0.5 for b in range(lo, hi + 2)]
        ax.hist(orders, bins=bins, color="#1971c2", rwidth=0.9)
        ax.set_xticks(range(lo, hi + 1))
    ax.set_xlabel("vertices")
    ax.set_ylabel("graphs")
    ax.set_title("order distribution")
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)


def render_figures(records: list[dict], outdir: str) -> list[str]:
    """Write the three sweep charts into outdir, returning their paths."""
    os.makedirs(outdir, exist_ok=True)
    jobs = [
        ("classification.png", _classification_chart),
        ("check_outcomes.png", _check_outcomes_chart),
        ("orders.png", _orders_chart),
    ]
    paths = []
    for name, draw in jobs:
        path = os.path.join(outdir, name)
        draw(records, path)
        paths.append(path)
    return paths


__all__ = ["render_figures"]
