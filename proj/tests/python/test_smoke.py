"""Smoke tests for the python bindings."""

import json
import sys

import _grasscut as gc


def check(cond, msg):
    if not cond:
        print("FAIL:", msg)
        sys.exit(1)


def main():
    types = gc.types("1,1,1,2")
    check(len(types) == 7, "seven admissible types for 1,1,1,2")
    check([0, 0, 0, 2] in types, "doubled fourth block type present")

    cs = gc.essential_weights("1,1,1,1")
    check(len(cs) == 7, "seven essential weights for 1,1,1,1")

    check(gc.height("1,1,1,1", [1, 1, 1, 1]) == 2, "height of the full weight")
    check(gc.height("1,1,1,1", [3, 1, 0, 0]) == 0, "infeasible weight")

    gw = gc.weight_monomials("1,1,1,1", [1, 1, 1, 1])
    check(len(gw) == 3, "three quadratic generators")
    check([(1, 2), (3, 4)] in [[tuple(p) for p in m] for m in gw],
          "split-pair generator present")

    paves = gc.paves("1,1,1,2")
    check(len(paves) == 12, "twelve paves")
    pavings = gc.pavings("1,1,1,2")
    check(len(pavings) == 8, "eight pavings")

    fan = json.loads(gc.fan_json("1,1,1,2"))
    check(len(fan) == 8, "eight fan records")
    gens = sorted(len(rec["chart_generators"]) for rec in fan)
    check(gens == [4, 4, 4, 5, 5, 5, 5, 6],
          "generator counts across the fan")

    names = gc.chart_names("1,1,1,2")
    check(len(names) == 6 and "X_1A" in names, "X catalog")
    chart = json.loads(gc.chart_json("1,1,1,2", "X_1A"))
    check(chart["variables"] == ["epsP_2", "xX_12", "hH_22"],
          "X_1A variable list")

    rep = gc.verify_embedding("1,1,1,2", "X_1A", trials=5, seed=7)
    check(rep["pass"], "X_1A embedding verification")

    check(gc.cross_ratio_check(trials=50, seed=3), "cross-ratio identity")

    print("python smoke: all checks passed")


if __name__ == "__main__":
    main()
