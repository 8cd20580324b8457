"""One transition away from idempotency, a quadratic jump in threshold.

The ladder on n states synchronizes in n-1 steps and both of its
letters are idempotent.  Redirecting a single transition (the sink's b)
makes b merely *almost* idempotent: exactly one state of its image
moves.  That one change lifts the reset threshold from n-1 to
(n*n - 3n + 4)/2.

The 7-state instance is exact.  For other odd sizes the same redirect
is a plausible generalization; the harness treats those measurements as
informative only, and this script prints them side by side.
"""

from idemsync import gen_gusev_like, gen_ladder, reset_threshold

print(f"{'n':>3} {'ladder ret':>11} {'redirected ret':>15} {'(n^2-3n+4)/2':>13}")
for n in range(3, 14, 2):
    ladder_ret = reset_threshold(gen_ladder(n)).threshold
    redirected_ret = reset_threshold(gen_gusev_like(n)).threshold
    formula = (n * n - 3 * n + 4) // 2
    marker = "" if redirected_ret == formula else "  <- differs"
    print(f"{n:>3} {ladder_ret:>11} {redirected_ret:>15} {formula:>13}{marker}")

print()
print("The n=7 instance is checked exactly by `idemsync verify gusev7`;")
print("other sizes are reported without being asserted.")
