"""Shared independent oracles for the test suite (floating root checks, curves)."""

import math

import numpy as np


def root_moduli(f):
    return np.abs(np.roots([float(c) for c in reversed(f.coeffs)]))


def check_weil_against_floating(f, q, ours):
    """Compare an exact Weil verdict with a floating root-modulus oracle.

    Returns "ok" (agreement), "exempt" (some root modulus within 1e-9 of
    sqrt(q), where the criterion tolerates disagreement), or "fail".  The fast
    path uses numpy eigenvalues; ambiguous cases escalate to 60-digit roots so
    that genuine boundary roots (deviation exactly 0) are separated from
    near-boundary ones.
    """
    target = math.sqrt(q)
    devs = np.abs(root_moduli(f) - target)
    dmax = float(devs.max())
    verdict = dmax <= 1e-9
    if verdict == ours and not (1e-10 < dmax < 1e-8):
        return "ok"
    import mpmath

    from weilclass.intpoly import squarefree_part

    sf = squarefree_part(f)  # same root set; repeated roots stall polyroots
    with mpmath.workdps(60):
        roots = mpmath.polyroots([mpmath.mpf(c) for c in reversed(sf.coeffs)], maxsteps=200, extraprec=120)
        tgt = mpmath.sqrt(q)
        mdevs = [abs(abs(r) - tgt) for r in roots]
        verdict = max(mdevs) <= mpmath.mpf("1e-9")
        if verdict == ours:
            return "ok"
        if any(mpmath.mpf("1e-50") < d < mpmath.mpf("1e-9") for d in mdevs):
            return "exempt"
    return "fail"
