"""Why two idempotent letters synchronize in linear length.

Strongly connected instances collapse to a single shape: tracing the
orbit that alternates the two letters from any moved state either
closes immediately (the flip-flop) or exhibits a cycle that no word can
merge.  Unique-sink instances synchronize by peeling off a state
without predecessors at each step, one letter per state, giving a reset
word of length n-1.  Random sampling confirms the n-1 ceiling.
"""

import random

from idemsync import (
    Dfa,
    classify_strongly_connected_2idem,
    find_sinks,
    gen_flipflop,
    gen_ladder,
    gen_random_idempotent,
    is_synchronizing,
    predecessor_free_states,
    reset_threshold,
    synchronize_sink_2idem,
    verify_reset_word,
    word_to_names,
)

print("Strongly connected case")
print("-" * 60)
verdict = classify_strongly_connected_2idem(gen_flipflop())
print("flip-flop:", verdict.kind.value)

# an alternating 3-cycle: every state is either q_i (fixed by b) or
# p_i (fixed by a); the letters shuttle along the cycle forever
cycle = Dfa(6, ("a", "b"), ((1, 1, 3, 3, 5, 5), (0, 2, 2, 4, 4, 0)))
verdict = classify_strongly_connected_2idem(cycle)
print(
    f"6-state alternating cycle: {verdict.kind.value}, "
    f"cycle q={verdict.cycle_q} p={verdict.cycle_p}"
)
print("pair test agrees it cannot synchronize:", not is_synchronizing(cycle))
print()

print("Unique-sink case")
print("-" * 60)
ladder = gen_ladder(8)
print("ladder on 8 states, sink:", find_sinks(ladder).members())
print("predecessor-free states:", predecessor_free_states(ladder).members())
word = synchronize_sink_2idem(ladder)
print("constructed word:", " ".join(word_to_names(ladder, word)),
      f"(length {len(word)} = n-1)")
print("verified:", verify_reset_word(ladder, word))
print("exact threshold for comparison:", reset_threshold(ladder).threshold)
print()

print("Random sampling under the n-1 ceiling")
print("-" * 60)
rng = random.Random(5)
rows = []
while len(rows) < 300:
    n = rng.randint(2, 12)
    dfa = gen_random_idempotent(n, 2, rng.randrange(2**32))
    if not is_synchronizing(dfa):
        continue
    threshold = reset_threshold(dfa).threshold
    assert threshold <= n - 1
    rows.append((n, threshold))
tight = sum(1 for n, t in rows if t == n - 1)
print("300 random synchronizing instances, all within the ceiling;")
print(f"the ceiling is met exactly in {tight} of them.")
