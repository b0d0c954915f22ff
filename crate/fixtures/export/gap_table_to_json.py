"""Convert a GAP character-table dump (see export_table.g) to table JSON.

GAP gives each value as [conductor, CoeffsCyc(v, conductor)], coefficients
on zeta^0 .. zeta^(n-1). They are reduced modulo the n-th cyclotomic
polynomial to the power basis of length phi(n).

usage: python3 gap_table_to_json.py tbl.g NAME ORDER EXPONENT > out.json
"""

import json
import re
import sys

import sympy
from sympy.abc import x


def gap_value(text):
    text = re.sub(r"\[ *(-?\d+) *\.\. *(-?\d+) *\]",
                  lambda m: "[" + ",".join(str(i) for i in range(int(m.group(1)), int(m.group(2)) + 1)) + "]",
                  text)
    return json.loads(text)


def power_basis(n, coeffs):
    phi = sympy.cyclotomic_poly(n, x)
    poly = sum(sympy.Rational(c) * x**i for i, c in enumerate(coeffs))
    rem = sympy.Poly(sympy.rem(sympy.expand(poly), phi, x), x)
    out = [sympy.Rational(0)] * int(sympy.totient(n))
    for (i,), c in rem.terms():
        out[i] = sympy.Rational(c)
    return [[str(c.p), str(c.q)] for c in out]


def main():
    path, name, order, exponent = sys.argv[1:5]
    fields = {}
    for line in open(path):
        key, _, val = line.partition("=")
        fields[key.strip()] = gap_value(val)
    k = len(fields["sizes"])
    powers = fields["powers"]
    classes = [
        {
            "size": fields["sizes"][i],
            "order": fields["orders"][i],
            "power_map": {str(p): powers[p][i] - 1 for p in range(int(exponent))},
        }
        for i in range(k)
    ]
    rows = [[{"n": n, "coeffs": power_basis(n, c)} for n, c in row] for row in fields["rows"]]
    json.dump({"group": name, "order": int(order), "exponent": int(exponent),
               "classes": classes, "rows": rows}, sys.stdout)


if __name__ == "__main__":
    main()
