#!/usr/bin/env python3
"""Regenerates ttest_cases.inc: reference two-sample pooled t-test results.

Inputs are multiples of 0.5 so every value transfers exactly into a C++
double literal. Reference values come from scipy.stats.ttest_ind.
"""
import numpy as np
from scipy import stats

rng = np.random.default_rng(20240817)

cases = []
for _ in range(12):
    na = int(rng.integers(3, 10))
    nb = int(rng.integers(3, 10))
    a = rng.integers(0, 41, size=na) / 2.0
    b = rng.integers(0, 41, size=nb) / 2.0
    if np.var(a, ddof=1) == 0 and np.var(b, ddof=1) == 0:
        continue
    res = stats.ttest_ind(a, b, equal_var=True)
    cases.append((a, b, float(res.statistic), na + nb - 2, float(res.pvalue)))

print("// Generated by oracle/gen_ttest_cases.py -- do not edit by hand.")
print("// clang-format off")
print("struct TTestCase {")
print("    std::vector<double> a, b;")
print("    double t, df, p;")
print("};")
print("inline const std::vector<TTestCase> kTTestCases = {")
for a, b, t, df, p in cases:
    fa = ", ".join(repr(float(x)) for x in a)
    fb = ", ".join(repr(float(x)) for x in b)
    print("    {{%s}, {%s}, %.17g, %d, %.17g}," % (fa, fb, t, df, p))
print("};")
print("// clang-format on")
