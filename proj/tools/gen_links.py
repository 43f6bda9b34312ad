#!/usr/bin/env python3
"""Regenerate data/links.pd from the KnotInfo LinkInfo tables.

Requires `pip install database_knotinfo`. The `{0}` / `{0,0}` orientation
variant of each link is written under its bare name (these coincide with the
Knot Atlas PD codes); every orientation variant is also written under its
full LinkInfo name, e.g. `L6n1{0,1}`.
"""
import re
import sys

from database_knotinfo import link_list

NAMES = ["L2a1", "L4a1", "L5a1", "L6a1", "L6a2", "L6a3", "L6a4", "L6a5", "L6n1",
         "L7a1", "L7a2", "L7a3", "L7a4", "L7a5", "L7a6", "L7a7", "L7n1", "L7n2"]


def to_pd(vector):
    crossings = re.findall(r"\{([^{}]*)\}", vector[1:-1])
    return " ".join("X(" + ",".join(c.replace(" ", "").split(",")) + ")" for c in crossings)


def main(out):
    rows = {r["name"]: r["pd_notation_vector"] for r in link_list(proper_links=True)[1:]}
    lines = [
        "# Oriented PD codes, one link per line: `name: X(a,b,c,d) ...`.",
        "# X(a,b,c,d): a is the incoming under-arc, then counterclockwise.",
        "# Prime links through seven crossings from the KnotInfo LinkInfo database;",
        "# bare names carry the Knot Atlas orientation, braced names are the",
        "# LinkInfo orientation variants.",
        "unknot:",
        "3_1: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        "trefoil: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    ]
    for name in NAMES:
        variants = [k for k in rows if k.split("{")[0] == name]
        lines.append(f"{name}: {to_pd(rows[variants[0]])}")
        lines.extend(f"{v}: {to_pd(rows[v])}" for v in variants)
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data/links.pd")
