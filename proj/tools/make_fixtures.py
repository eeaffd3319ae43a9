#!/usr/bin/env python3
"""Regenerate the bundled knot fixtures.

Needs the `database_knotinfo`, `snappy_15_knots` and `spherogram` Python
packages. Output goes to fixtures/ next to this script's parent.
"""
import csv
import json
import os
import sqlite3
import sys

import sympy
import database_knotinfo
import snappy_15_knots
from spherogram.codecs import DTcodec

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "fixtures")
T = sympy.Symbol("t")

TABLE1 = ["8_18", "9_40", "10_98", "10_99", "10_123", "11a_43", "11a_44",
          "11a_47", "11a_57", "11a_231", "11a_263", "11a_297", "11a_332",
          "11n_71", "11n_72", "11n_73", "11n_74", "11n_75", "11n_76",
          "11n_77", "11n_78", "11n_81", "11n_164"]
EXCEPTIONS = ["10_99", "12n_508", "12n_604", "12n_666"]


def knotinfo_rows():
    csv.field_size_limit(10**9)
    path = os.path.join(os.path.dirname(database_knotinfo.__file__),
                        "csv_data", "knotinfo_data_complete.csv")
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh, delimiter="|"))
    return rows[1:]  # second row holds display names


def ht_pd(name):
    db = os.path.join(os.path.dirname(snappy_15_knots.__file__),
                      "sqlite_files", "15_knots.sqlite")
    con = sqlite3.connect(db)
    (code,) = con.execute("select DT from HT_links where name = ?", (name,)).fetchone()
    pd = DTcodec(code).link().PD_code()
    return json.dumps([[x + 1 for x in c] for c in pd], separators=(",", ":"))


def ht_names(crossings, alternating, limit, stride):
    db = os.path.join(os.path.dirname(snappy_15_knots.__file__),
                      "sqlite_files", "15_knots.sqlite")
    con = sqlite3.connect(db)
    pattern = "K%d%s%%" % (crossings, "a" if alternating else "n")
    names = [r[0] for r in con.execute(
        "select name from HT_links where name like ? order by id", (pattern,))]
    return names[::stride][:limit]


def normalized(expr):
    if not expr.strip():
        return [1]
    poly = sympy.Poly(sympy.sympify(expr.replace("^", "**")), T)
    coeffs = [int(c) for c in reversed(poly.all_coeffs())]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    g = 0
    for c in coeffs:
        g = sympy.igcd(g, c)
    coeffs = [c // g for c in coeffs]
    if coeffs[0] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


def write(name, rows):
    with open(os.path.join(ROOT, name), "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "pd"])
        for r in rows:
            w.writerow(r)


def main():
    os.makedirs(ROOT, exist_ok=True)
    ki = knotinfo_rows()
    by_name = {r["name"]: r for r in ki}

    def pd_of(r):
        return r["pd_notation"].strip() or "[]"

    def row(n):
        return (n, pd_of(by_name[n]))

    le10 = [(r["name"], pd_of(r)) for r in ki if int(r["crossing_number"]) <= 10]
    write("le10.csv", le10)
    write("table1.csv", [row(n) for n in TABLE1])
    write("exceptions.csv", [row(n) for n in EXCEPTIONS])
    c12 = [r for r in ki if r["crossing_number"] == "12"]
    write("c12.csv", [(r["name"], pd_of(r)) for r in c12[::11]])
    write("k14a1975.csv", [("14a_1975", ht_pd("K14a1975"))])

    mixed = [(r["name"], pd_of(r)) for r in ki if r["crossing_number"] == "8"]
    for c, stride in (("10", 4), ("12", 50), ("13", 250)):
        sel = [r for r in ki if r["crossing_number"] == c][::stride][:40]
        mixed += [(r["name"], pd_of(r)) for r in sel]
    for c, alt in ((14, True), (14, False), (15, True), (15, False)):
        for n in ht_names(c, alt, 15, 997):
            mixed.append((n[1:].replace("a", "a_", 1).replace("n", "n_", 1), ht_pd(n)))
    write("mixed.csv", mixed)

    # Reference values from KnotInfo for cross-checking (not used by the library).
    names = {n for n, _ in le10 + [row(n) for n in TABLE1 + EXCEPTIONS] + [(r["name"], 0) for r in c12[::11]]}
    names |= {n for n, _ in mixed if n in by_name}
    with open(os.path.join(ROOT, "knotinfo_reference.csv"), "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["name", "Delta1", "Delta2"])
        for r in ki:
            if r["name"] in names:
                d1 = normalized(r["alexander_polynomial"])
                d2 = normalized(r["second_alexander_polynomial"])
                w.writerow([r["name"], json.dumps(d1, separators=(",", ":")),
                            json.dumps(d2, separators=(",", ":"))])


if __name__ == "__main__":
    sys.exit(main())
