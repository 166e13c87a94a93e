"""Measure list cells per operation over random single-threaded edit scripts.

    python scripts/edit_cost.py --lengths 1000 10000 100000

Amortised O(1) editing shows up as a flat cells/op column, even though
the most expensive single ``up`` grows with the script.
"""

import argparse
import random
from dataclasses import dataclass, field

from treecursor.edit import LEFT, RIGHT, EditCursor
from treecursor.plist import count_cells
from treecursor.tree import leaf, make_node

OPS = ("move", "insert", "delete", "replace", "down", "up", "promote")


@dataclass
class ScriptConfig:
    lengths: list = field(default_factory=lambda: [1_000, 10_000, 100_000])
    seed: int = 0
    start_size: int = 200


def random_tree(rng, n):
    kids = [[] for _ in range(n)]
    for i in range(1, n):
        kids[rng.randrange(i)].append(i)

    def build(i):
        return make_node(i, [build(k) for k in kids[i]])

    return build(0)


def step(rng, c):
    """Apply one random legal operation; returns (cursor, op name)."""
    while True:
        op = rng.choice(OPS)
        side = rng.choice((LEFT, RIGHT))
        blocked = c.at_left if side is LEFT else c.at_right
        if op == "up":
            if not c.at_top:
                return c.up(), op
        elif op == "insert":
            return c.insert(side, leaf(-1)), op
        elif not blocked:
            if op == "move":
                return c.move(side), op
            if op == "delete":
                return c.delete(side)[1], op
            if op == "replace":
                return c.replace(side, leaf(-2)), op
            if op == "down":
                return c.down(side), op
            return c.promote_children(side), op


def run(cfg: ScriptConfig):
    for k in cfg.lengths:
        rng = random.Random(cfg.seed)
        c = EditCursor.start(random_tree(rng, cfg.start_size))
        worst_up = 0
        with count_cells() as total:
            for _ in range(k):
                with count_cells() as one:
                    c, op = step(rng, c)
                if op == "up":
                    worst_up = max(worst_up, one.total)
            c.top()
        print(f"k={k:>7}  cells={total.total:>8}  cells/op={total.total / k:.3f}  worst single up={worst_up}")


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--lengths", type=int, nargs="+", default=ScriptConfig().lengths)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args()
    run(ScriptConfig(args.lengths, args.seed))


if __name__ == "__main__":
    main()
