#!/usr/bin/env python3
"""Convert a GEDCOM genealogy to a kinship edge list.

Individuals become vertices; an edge links spouses and each child to
both parents. Output: one "u v" pair per line with integer ids.
"""

import re
import sys


def main(path):
    husb, wife, children = {}, {}, {}
    fam = None
    with open(path, errors="replace") as f:
        for line in f:
            m = re.match(r"0 @(F\d+)@ FAM", line)
            if m:
                fam = m.group(1)
                children[fam] = []
                continue
            if line.startswith("0"):
                fam = None
                continue
            if fam:
                m = re.match(r"1 (HUSB|WIFE|CHIL) @(I\d+)@", line)
                if m:
                    kind, ind = m.groups()
                    if kind == "HUSB":
                        husb[fam] = ind
                    elif kind == "WIFE":
                        wife[fam] = ind
                    else:
                        children[fam].append(ind)

    ids = {}

    def vid(ind):
        return ids.setdefault(ind, len(ids) + 1)

    edges = set()
    for fam, kids in children.items():
        parents = [p for p in (husb.get(fam), wife.get(fam)) if p]
        if len(parents) == 2:
            edges.add(tuple(sorted((vid(parents[0]), vid(parents[1])))))
        for kid in kids:
            for p in parents:
                edges.add(tuple(sorted((vid(p), vid(kid)))))
    for u, v in sorted(edges):
        print(u, v)


if __name__ == "__main__":
    main(sys.argv[1])
