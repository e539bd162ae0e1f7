#!/usr/bin/env python3
"""Derive the integral cohomology fixtures under data/ from Betti numbers
and homology torsion, via universal coefficients: H^k = Z^{b_k} + Tors H_{k-1}.

Torsion inputs: for the Enriques surface, H_1 = Z/2 (the fundamental group
is Z/2), and Poincare duality forces Tors H_2 = Tors H_1. Curves and the
point are torsion-free.
"""

import json
import pathlib


def cohomology(betti, homology_torsion):
    degrees = {}
    for k, b in enumerate(betti):
        torsion = sorted(homology_torsion.get(k - 1, []))
        degrees[str(k)] = {"rank": b, "torsion": torsion}
    return {"degrees": degrees}


def main():
    out = pathlib.Path(__file__).resolve().parent.parent / "data"
    out.mkdir(exist_ok=True)

    fixtures = {
        "point": cohomology([1], {}),
        "enriques": cohomology([1, 0, 10, 0, 1], {1: [2], 2: [2]}),
    }
    for g in (1, 2, 3):
        fixtures[f"curve_genus{g}"] = cohomology([1, 2 * g, 1], {})

    # Kunneth product with a torsion-free second factor:
    # H^p = sum_{i+j=p} H^i (x) Z^{rank H^j}
    def kunneth(a, b):
        degrees = {}
        for i, da in a["degrees"].items():
            for j, db in b["degrees"].items():
                assert not db["torsion"], "second factor must be torsion-free"
                p = str(int(i) + int(j))
                acc = degrees.setdefault(p, {"rank": 0, "torsion": []})
                acc["rank"] += da["rank"] * db["rank"]
                acc["torsion"] = sorted(acc["torsion"] + da["torsion"] * db["rank"])
        return {"degrees": degrees}

    fixtures["enriques_x_elliptic"] = kunneth(fixtures["enriques"],
                                              fixtures["curve_genus1"])

    # transgression matrix H^0 -> H^3 of the product, hitting the first
    # torsion generator; generators are ordered torsion first, then free
    h3 = fixtures["enriques_x_elliptic"]["degrees"]["3"]
    h0 = fixtures["enriques_x_elliptic"]["degrees"]["0"]
    rows = len(h3["torsion"]) + h3["rank"]
    cols = len(h0["torsion"]) + h0["rank"]
    entries = [[0] * cols for _ in range(rows)]
    entries[0][0] = 1
    fixtures["d3_enriques_elliptic"] = {"rows": rows, "cols": cols, "entries": entries}

    for name, data in fixtures.items():
        path = out / f"{name}.json"
        path.write_text(json.dumps(data, indent=2) + "\n")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
