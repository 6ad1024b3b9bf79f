#!/usr/bin/env python3
"""Regenerates src/bernoulli_table.inc: B_2k and B_2k/(2k)! for k = 1..60."""
import pathlib
from mpmath import mp, bernoulli, factorial, nstr

mp.dps = 50
ORDER = 60

rows_b, rows_r = [], []
for k in range(1, ORDER + 1):
    b = bernoulli(2 * k)
    rows_b.append(f"    {nstr(b, 36, min_fixed=1, max_fixed=0)}L,")
    rows_r.append(f"    {nstr(b / factorial(2 * k), 36, min_fixed=1, max_fixed=0)}L,")

out = pathlib.Path(__file__).resolve().parent.parent / "src" / "bernoulli_table.inc"
out.write_text(
    "// Generated by tools/gen_bernoulli.py; do not edit.\n"
    f"inline constexpr int kBernoulliOrder = {ORDER};\n\n"
    "// B_{2k}, k = 1..kBernoulliOrder\n"
    "inline constexpr long double kBernoulli[kBernoulliOrder] = {\n" + "\n".join(rows_b) + "\n};\n\n"
    "// B_{2k} / (2k)!, k = 1..kBernoulliOrder\n"
    "inline constexpr long double kBernoulliOverFactorial[kBernoulliOrder] = {\n" + "\n".join(rows_r) + "\n};\n"
)
print(f"wrote {out}")
