#!/usr/bin/env python3
"""Fetch the benchmark datasets used by the anchor acceptance checks.

Downloads a handful of ARFF files from the public clustering-benchmark
collection (github.com/deric/clustering-benchmark), converts them to the
CSV layout the loaders expect (header row, float features, trailing
integer label column, -1 for noise) and drops them into data/.

Needs outbound network access. Pure stdlib, no third-party packages.

Usage: python3 scripts/fetch_benchmarks.py [--out DIR] [--force]
"""

import argparse
import csv
import io
import re
import sys
import urllib.error
import urllib.request
from pathlib import Path

RAW_BASE = "https://raw.githubusercontent.com/deric/clustering-benchmark/master/src/main/resources/datasets/artificial"

# local name -> upstream file name
DATASETS = {
    "3-spiral": "3-spiral.arff",
    "smile1": "smile1.arff",
    "dartboard1": "dartboard1.arff",
    "chainlink": "chainlink.arff",
    "aggregation": "aggregation.arff",
    "compound": "compound.arff",
    "complex9": "complex9.arff",
}

NOISE_NAMES = {"noise", "noisy", "outlier", "-1"}


def parse_arff(text, source):
    """Minimal ARFF reader for dense numeric data with a nominal class.

    Handles exactly the subset these files use: @attribute declarations,
    an @data section, comma-separated rows, '%' comments. The class/label
    attribute is whichever one is named class/label (last one otherwise).
    """
    attributes = []
    rows = []
    in_data = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if not in_data:
            low = line.lower()
            if low.startswith("@attribute"):
                m = re.match(r"@attribute\s+('[^']*'|\"[^\"]*\"|\S+)", line,
                             re.IGNORECASE)
                if not m:
                    raise ValueError(f"{source}:{lineno}: bad @attribute line")
                attributes.append(m.group(1).strip("'\""))
            elif low.startswith("@data"):
                if not attributes:
                    raise ValueError(f"{source}: @data before any @attribute")
                in_data = True
            continue
        values = [v.strip().strip("'\"") for v in line.split(",")]
        if len(values) != len(attributes):
            raise ValueError(
                f"{source}:{lineno}: expected {len(attributes)} fields, "
                f"got {len(values)}")
        rows.append(values)
    if not in_data:
        raise ValueError(f"{source}: no @data section")
    return attributes, rows


def label_index(attributes):
    for i, name in enumerate(attributes):
        if name.lower() in ("class", "label", "cluster"):
            return i
    return len(attributes) - 1


def to_int_labels(raw_labels, source):
    """Map class names to ints. Numeric names keep their value, noise-like
    names become -1, anything else gets ids in sorted name order."""
    out = []
    leftovers = sorted({v for v in raw_labels
                        if v.lower() not in NOISE_NAMES and not _as_int(v)})
    ids = {name: i for i, name in enumerate(leftovers)}
    for v in raw_labels:
        if v.lower() in NOISE_NAMES:
            out.append(-1)
            continue
        n = _as_int(v)
        out.append(n[0] if n else ids[v])
    if not out:
        raise ValueError(f"{source}: no data rows")
    return out


def _as_int(text):
    try:
        f = float(text)
    except ValueError:
        return None
    if f != int(f):
        return None
    return (int(f),)


def convert(name, arff_text):
    attributes, rows = parse_arff(arff_text, name)
    li = label_index(attributes)
    if any("?" in row for row in rows):
        raise ValueError(f"{name}: missing values are not supported")
    features = [[float(v) for j, v in enumerate(row) if j != li]
                for row in rows]
    labels = to_int_labels([row[li] for row in rows], name)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    dims = len(features[0])
    writer.writerow([f"f{i}" for i in range(dims)] + ["label"])
    for feat, lab in zip(features, labels):
        writer.writerow([repr(v) for v in feat] + [lab])
    return buf.getvalue(), len(rows), dims


def fetch(url):
    req = urllib.request.Request(url, headers={"User-Agent": "fetch-benchmarks"})
    with urllib.request.urlopen(req, timeout=60) as resp:
        return resp.read().decode("utf-8", errors="replace")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=None,
                    help="output directory (default: <repo>/data)")
    ap.add_argument("--force", action="store_true",
                    help="re-download files that already exist")
    args = ap.parse_args()

    out_dir = Path(args.out) if args.out else Path(__file__).resolve().parent.parent / "data"
    out_dir.mkdir(parents=True, exist_ok=True)

    failures = 0
    for name, upstream in DATASETS.items():
        target = out_dir / f"{name}.csv"
        if target.exists() and not args.force:
            print(f"  {target} exists, skipping (use --force to refresh)")
            continue
        url = f"{RAW_BASE}/{upstream}"
        try:
            text = fetch(url)
            csv_text, n, dims = convert(name, text)
        except urllib.error.URLError as e:
            print(f"  {name}: download failed ({e.reason}). This script "
                  "needs outbound access to raw.githubusercontent.com; "
                  "run it from a machine that has it.", file=sys.stderr)
            failures += 1
            continue
        except ValueError as e:
            print(f"  {name}: {e}", file=sys.stderr)
            failures += 1
            continue
        target.write_text(csv_text)
        print(f"  wrote {target} ({n} rows, {dims} features)")
    if failures:
        print(f"{failures} dataset(s) failed", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
