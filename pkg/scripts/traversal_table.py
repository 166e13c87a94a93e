"""Time the four traversal methods over uniform trees of increasing depth.

    python scripts/traversal_table.py --depths 6 7 8 9 10 --repeat 3

Prints one row per depth with best-of-N seconds per method and the
cursor/direct ratios for the search and list columns.
"""

import argparse
import csv
import sys
from dataclasses import dataclass, field

from treecursor.bench import Method, run_bench
from treecursor.tree import uniform_size


@dataclass
class TableConfig:
    depths: list = field(default_factory=lambda: [6, 7, 8, 9, 10])
    branch: int = 4
    repeat: int = 3


def best_time(depth, branch, method, repeat):
    return min(run_bench(depth, branch, method).wall_time for _ in range(repeat))


def run(cfg: TableConfig):
    rows = []
    for d in cfg.depths:
        t = {m: best_time(d, cfg.branch, m, cfg.repeat) for m in Method}
        rows.append({
            "depth": d,
            "nodes": uniform_size(d, cfg.branch),
            **{m.value: t[m] for m in Method},
            "search_ratio": t[Method.SEARCH_CURSOR] / t[Method.SEARCH_DIRECT],
            "list_ratio": t[Method.LIST_CURSOR] / t[Method.LIST_DIRECT],
        })
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--depths", type=int, nargs="+", default=TableConfig().depths)
    p.add_argument("--branch", type=int, default=4)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--csv", action="store_true")
    args = p.parse_args()
    rows = run(TableConfig(args.depths, args.branch, args.repeat))
    if args.csv:
        w = csv.DictWriter(sys.stdout, fieldnames=list(rows[0]))
        w.writeheader()
        w.writerows(rows)
        return
    print(f"{'depth':>5} {'nodes':>9} {'search':>8} {'search':>8} {'list':>8} {'list':>8} {'ratio':>6} {'ratio':>6}")
    print(f"{'':>5} {'':>9} {'direct':>8} {'cursor':>8} {'direct':>8} {'cursor':>8} {'search':>6} {'list':>6}")
    for r in rows:
        print(
            f"{r['depth']:>5} {r['nodes']:>9} {r['search_direct']:>7.3f}s {r['search_cursor']:>7.3f}s "
            f"{r['list_direct']:>7.3f}s {r['list_cursor']:>7.3f}s {r['search_ratio']:>6.2f} {r['list_ratio']:>6.2f}"
        )


if __name__ == "__main__":
    main()
