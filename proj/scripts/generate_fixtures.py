#!/usr/bin/env python3
"""Regenerates the JSON problem fixtures and reference-sample CSVs under
tests/fixtures/.

Three demo studies are covered:
  * an ellipsoid chart fitted per coordinate from 8 parameter points, in
    plain value mode and with first- and second-order derivative data;
  * a four-variable function (polynomial in Z,T; logarithmic and
    fractional in X,Y) fitted on the 3^4 integer grid from a mixed
    derivative set;
  * a gappy (Birkhoff) variant of the same function in three variables on
    the 3^3 and 2^3 grids.

Every numeric input is rationalized to 12 decimal digits so the problem
files stay exact; reference CSVs hold float64 samples of the true
functions for error studies.
"""

import json
import os
from fractions import Fraction

import sympy as sp

OUT = os.path.join(os.path.dirname(__file__), os.pardir, "tests", "fixtures")

X, Y, Z, T = sp.symbols("X Y Z T")


def rat12(value) -> str:
    """Exact 12-digit decimal string of a sympy expression's value."""
    f = Fraction(int(sp.Integer(round(value * 10**12))), 10**12)
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    f = abs(f)
    scaled = f.numerator * 10**12 // f.denominator
    whole, frac = divmod(scaled, 10**12)
    return f"{sign}{whole}.{frac:012d}".rstrip("0").rstrip(".")


def high_precision(expr, subs):
    return sp.nsimplify(expr, rational=False).subs(subs).evalf(40)


def directional(expr, symbols, vector):
    return sum(sp.Integer(c) * sp.diff(expr, s) for c, s in zip(vector, symbols))


def iterated(expr, symbols, directions, multi_index):
    out = expr
    for order, vector in zip(multi_index, directions):
        for _ in range(order):
            out = directional(out, symbols, vector)
    return out


def write_json(name, doc):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        json.dump(doc, f, indent=1)
        f.write("\n")
    print("wrote", path)


def write_csv(name, header, rows):
    path = os.path.join(OUT, name)
    with open(path, "w") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join("%.17g" % v for v in row) + "\n")
    print("wrote", path, f"({len(rows)} rows)")


def grid_points(lo, hi, steps):
    if steps == 1:
        return [lo]
    return [lo + i * (hi - lo) / (steps - 1) for i in range(steps)]


# ---------------------------------------------------------------- ellipsoid

ELL = (sp.cos(X) * sp.cos(Y), sp.cos(X) * sp.sin(Y), 3 * sp.sin(X))
ELL_POINTS = [
    (2, 0),
    (2, sp.pi / 2),
    (2, sp.pi),
    (2, 3 * sp.pi / 2),
    (3, sp.pi / 4),
    (3, 3 * sp.pi / 4),
    (3, 5 * sp.pi / 4),
    (3, 7 * sp.pi / 4),
]
ELL_DIRS = [(1, 0), (0, 1)]
ELL_MODES = {
    "lagrange": [(0, 0)],
    "hermite1": [(0, 0), (1, 0), (0, 1)],
    "hermite2": [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)],
}


def ellipsoid_fixtures():
    point_strings = [
        [rat12(high_precision(c, {})) for c in pt] for pt in ELL_POINTS
    ]
    for mode_name, index_set in ELL_MODES.items():
        mode = "lagrange" if mode_name == "lagrange" else "hermite"
        for axis, component in zip("xyz", ELL):
            nodes = []
            for pt, pt_str in zip(ELL_POINTS, point_strings):
                subs = {X: pt[0], Y: pt[1]}
                conditions = []
                for h in index_set:
                    value = high_precision(
                        iterated(component, (X, Y), ELL_DIRS, h), subs
                    )
                    conditions.append({"h": list(h), "value": rat12(value)})
                node = {"point": pt_str, "conditions": conditions}
                if mode != "lagrange":
                    node["directions"] = [["1", "0"], ["0", "1"]]
                nodes.append(node)
            write_json(
                f"ellipsoid_{mode_name}_{axis}.json",
                {
                    "variables": ["X", "Y"],
                    "order": "grevlex",
                    "mode": mode,
                    "nodes": nodes,
                },
            )

    xs = grid_points(2.0, 3.0, 50)
    ys = grid_points(0.0, float(rat12((2 * sp.pi * sp.Rational(49, 50)).evalf(40))), 50)
    for axis, component in zip("xyz", ELL):
        fn = sp.lambdify((X, Y), component, "math")
        rows = [[x, y, fn(x, y)] for x in xs for y in ys]
        write_csv(f"ellipsoid_ref_{axis}.csv", ["X", "Y", "F"], rows)


# ------------------------------------------------------------ four variables

F4 = (Z - T) ** 2 * sp.log(1 / X) / Y
F4_DIRS = [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (1, 1, 1, 1)]
F4_INDICES = [
    (0, 0, 0, 0),
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (2, 0, 0, 0),
    (0, 2, 0, 0),
    (1, 1, 0, 0),
]


def fourvar_fixtures():
    syms = (X, Y, Z, T)
    derived = {h: iterated(F4, syms, F4_DIRS, h) for h in F4_INDICES}
    nodes = []
    for x in (1, 2, 3):
        for y in (1, 2, 3):
            for z in (1, 2, 3):
                for t in (1, 2, 3):
                    subs = {X: x, Y: y, Z: z, T: t}
                    conditions = [
                        {"h": list(h), "value": rat12(expr.subs(subs).evalf(40))}
                        for h, expr in derived.items()
                    ]
                    nodes.append(
                        {
                            "point": [str(x), str(y), str(z), str(t)],
                            "directions": [[str(c) for c in d] for d in F4_DIRS],
                            "conditions": conditions,
                        }
                    )
    write_json(
        "fourvar_hermite.json",
        {
            "variables": ["X", "Y", "Z", "T"],
            "order": "grevlex",
            "mode": "hermite",
            "nodes": nodes,
        },
    )

    fn = sp.lambdify(syms, F4, "math")
    xs = grid_points(1.0, 3.0, 41)
    zs = grid_points(1.0, 3.0, 41)
    rows = [[x, 2.0, z, 2.0, fn(x, 2.0, z, 2.0)] for x in xs for z in zs]
    write_csv("fourvar_ref_xz.csv", ["X", "Y", "Z", "T", "F"], rows)
    ys = grid_points(1.0, 3.0, 41)
    rows = [[x, y, 1.0, 3.0, fn(x, y, 1.0, 3.0)] for x in xs for y in ys]
    write_csv("fourvar_ref_xy.csv", ["X", "Y", "Z", "T", "F"], rows)


# ---------------------------------------------------------------- birkhoff

G3 = F4.subs(T, 2)
G3_DIRS = [(1, 1, 0), (1, 1, 1), (1, 0, 0)]
G3_INDICES = [
    (0, 0, 0),
    (1, 0, 0),
    (0, 1, 0),
    (0, 0, 2),
    (1, 0, 1),
    (2, 0, 0),
]


def birkhoff_fixtures():
    syms = (X, Y, Z)
    derived = {h: iterated(G3, syms, G3_DIRS, h) for h in G3_INDICES}
    for per_axis, name in ((3, "birkhoff27.json"), (2, "birkhoff8.json")):
        axis_values = list(range(1, per_axis + 1))
        nodes = []
        for x in axis_values:
            for y in axis_values:
                for z in axis_values:
                    subs = {X: x, Y: y, Z: z}
                    conditions = [
                        {"h": list(h), "value": rat12(expr.subs(subs).evalf(40))}
                        for h, expr in derived.items()
                    ]
                    nodes.append(
                        {
                            "point": [str(x), str(y), str(z)],
                            "directions": [[str(c) for c in d] for d in G3_DIRS],
                            "conditions": conditions,
                        }
                    )
        write_json(
            name,
            {
                "variables": ["X", "Y", "Z"],
                "order": "grevlex",
                "mode": "birkhoff",
                "nodes": nodes,
            },
        )


if __name__ == "__main__":
    os.makedirs(OUT, exist_ok=True)
    ellipsoid_fixtures()
    fourvar_fixtures()
    birkhoff_fixtures()
