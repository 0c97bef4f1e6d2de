#!/usr/bin/env python3
"""Download the public benchmark networks and convert them to edge lists.

Writes data/<name>.txt (one "u v" pair per line, '#' header) for each dataset
that can be reached. Checksums of the downloaded archives are pinned in
data/CHECKSUMS.sha256: the first successful fetch records them, later fetches
must match. After conversion the giant component's |V| and |E| are compared
with the published table and a warning is printed on mismatch.

Usage: tools/fetch_datasets.py [--out DIR] [name ...]
"""

import argparse
import collections
import hashlib
import io
import os
import re
import sys
import urllib.request
import zipfile

NEWMAN = "http://www-personal.umich.edu/~mejn/netdata/"
PAJEK = "http://vlado.fmf.uni-lj.si/pub/networks/data/"

# name -> (url, member inside archive or None, format, expected GCC |V|, |E|)
DATASETS = {
    "usair": (PAJEK + "mix/USAir97.net", None, "pajek", 332, 2126),
    "netscience": (NEWMAN + "netscience.zip", "netscience.gml", "gml", 379, 914),
    "power": (NEWMAN + "power.zip", "power.gml", "gml", 4941, 6594),
    "pb": (NEWMAN + "polblogs.zip", "polblogs.gml", "gml", 1222, 16714),
    "yeast": (PAJEK + "bio/Yeast/yeast.zip", "YeastS.net", "pajek", 2224, 6609),
}

CHECKSUM_FILE = "CHECKSUMS.sha256"


def fetch(url, timeout=60):
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read()


def extract(blob, member):
    if member is None:
        return blob.decode("latin-1")
    with zipfile.ZipFile(io.BytesIO(blob)) as zf:
        names = zf.namelist()
        match = [n for n in names if n.lower().endswith(member.lower())]
        if not match:
            raise ValueError(f"{member} not in archive (has {names})")
        return zf.read(match[0]).decode("latin-1")


def parse_gml(text):
    # Newman's files keep ids as integers; edges may span several lines.
    edges = []
    for block in re.finditer(r"edge\s*\[(.*?)\]", text, re.S):
        body = block.group(1)
        s = re.search(r"source\s+(-?\d+)", body)
        t = re.search(r"target\s+(-?\d+)", body)
        if s and t:
            edges.append((int(s.group(1)), int(t.group(1))))
    return edges


def parse_pajek(text):
    edges = []
    mode = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("%"):
            continue
        if line.startswith("*"):
            head = line.split()[0].lower()
            mode = {"*edges": "pairs", "*arcs": "pairs", "*edgeslist": "list", "*arcslist": "list"}.get(head)
            continue
        tokens = line.split()
        if mode == "pairs" and len(tokens) >= 2:
            edges.append((int(tokens[0]), int(tokens[1])))
        elif mode == "list" and len(tokens) >= 2:
            edges.extend((int(tokens[0]), int(t)) for t in tokens[1:])
    return edges


def giant_component_size(edges):
    adj = collections.defaultdict(set)
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    seen, best = set(), set()
    for start in sorted(adj):
        if start in seen:
            continue
        comp, queue = {start}, collections.deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in comp:
                    comp.add(y)
                    queue.append(y)
        seen |= comp
        if len(comp) > len(best):
            best = comp
    m = sum(1 for u in best for v in adj[u] if u < v)
    return len(best), m


def load_checksums(path):
    sums = {}
    if os.path.exists(path):
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if len(parts) == 2:
                    sums[parts[1]] = parts[0]
    return sums


def save_checksums(path, sums):
    with open(path, "w") as fh:
        for name in sorted(sums):
            fh.write(f"{sums[name]}  {name}\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data"))
    ap.add_argument("names", nargs="*", default=sorted(DATASETS))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    sums_path = os.path.join(args.out, CHECKSUM_FILE)
    sums = load_checksums(sums_path)

    failed = 0
    for name in args.names:
        if name not in DATASETS:
            print(f"{name}: unknown dataset (known: {', '.join(sorted(DATASETS))})", file=sys.stderr)
            failed += 1
            continue
        url, member, fmt, want_v, want_e = DATASETS[name]
        try:
            blob = fetch(url)
        except Exception as exc:  # network errors vary by platform
            print(f"{name}: download failed: {exc}", file=sys.stderr)
            failed += 1
            continue
        digest = hashlib.sha256(blob).hexdigest()
        if name in sums and sums[name] != digest:
            print(f"{name}: checksum mismatch ({digest} != pinned {sums[name]})", file=sys.stderr)
            failed += 1
            continue
        sums[name] = digest

        text = extract(blob, member)
        edges = parse_gml(text) if fmt == "gml" else parse_pajek(text)
        target = os.path.join(args.out, f"{name}.txt")
        with open(target, "w") as fh:
            fh.write(f"# {name} from {url}\n")
            for u, v in edges:
                fh.write(f"{u} {v}\n")
        v, e = giant_component_size(edges)
        note = "" if (v, e) == (want_v, want_e) else f"  WARNING: expected {want_v} / {want_e}"
        print(f"{name}: {len(edges)} raw edges, giant component {v} / {e}{note}")

    save_checksums(sums_path, sums)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
