"""The state-doubling transform, step by step.

Starting from the 4-state binary family member (threshold 9), the
transform produces an 8-state automaton with three letters, every one
an idempotent of rank 4, and threshold exactly 18.  The word encoder
maps each base letter to a two-letter block, which is how a base reset
word becomes a doubled reset word of twice the length; the decoder
inverts it and pinpoints words that do not factor into blocks.
"""

from idemsync import (
    chi_decode,
    chi_encode,
    gen_cerny,
    higgins_transform,
    is_idempotent_letter,
    letter_rank,
    render_automaton,
    reset_threshold,
    verify_reset_word,
    word_from_names,
    word_to_names,
)

base = gen_cerny(4)
image = higgins_transform(base)
doubled = image.result

print("Base automaton:")
print(render_automaton(base))
print("Doubled automaton (states 4..7 are the primed copies of 0..3):")
print(render_automaton(doubled))

for j in range(doubled.k):
    print(
        f"letter {doubled.letters[j]}: rank {letter_rank(doubled, j)}, "
        f"idempotent {is_idempotent_letter(doubled, j)}"
    )
print()

base_result = reset_threshold(base)
doubled_result = reset_threshold(doubled)
print(f"base threshold:    {base_result.threshold}")
print(f"doubled threshold: {doubled_result.threshold}  (exactly twice)")
print()

encoded = chi_encode(image, base_result.witness)
print("base witness:   ", " ".join(word_to_names(base, base_result.witness)))
print("encoded witness:", " ".join(word_to_names(doubled, encoded)))
print("encoded witness resets the doubled automaton:",
      verify_reset_word(doubled, encoded))
print()

print("decoding the encoded witness recovers the base word:",
      " ".join(word_to_names(base, chi_decode(image, encoded))))
stray = word_from_names(doubled, ["a1", "b"])
print("decoding a word that starts mid-block:", chi_decode(image, stray))
