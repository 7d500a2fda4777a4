"""Recovering the critical arc length empirically, without the formula.

The estimator only watches where the chord midpoint (C_k(t), 0) crosses
from the boundary of the hull into its interior, bisecting on t.  The
closed form 2*pi*(k-1)/(2k-1) is used purely as the yardstick afterwards.
"""

import time

from trigmoment.edges import edge_threshold, estimate_threshold


def main():
    print("bisection on the midpoint-interiority transition")
    print("------------------------------------------------")
    print(f"{'k':>3} {'psi_hat':>12} {'closed form':>12} {'error':>10} "
          f"{'bracket width':>14} {'seconds':>8}")
    for k, samples in ((2, 4000), (3, 4000), (4, 5000)):
        started = time.perf_counter()
        est = estimate_threshold(k, num_samples=samples, resolution=1e-3)
        elapsed = time.perf_counter() - started
        lo, hi = est.bracket
        closed = edge_threshold(k)
        print(f"{k:>3} {est.psi_hat:>12.6f} {closed:>12.6f} "
              f"{est.psi_hat - closed:>+10.2e} {hi - lo:>14.2e} {elapsed:>8.2f}")
    print()
    print("the estimate lands within 5e-3 of the closed form; the small")
    print("positive bias is the interiority probe's displacement delta —")
    print("midpoints just inside the hull still look boundary-like until")
    print("their clearance exceeds delta.")


if __name__ == "__main__":
    main()
