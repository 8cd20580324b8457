"""Constructive synchronization for automata with two idempotent letters.

For this class the reset threshold never exceeds ``n - 1``.  The two
functions here realize the constructive content behind the bound:
:func:`classify_strongly_connected_2idem` shows that a strongly
connected instance is either the two-state flip-flop or not
synchronizing at all (exhibiting an alternating cycle as the obstacle),
and :func:`synchronize_sink_2idem` builds a reset word of length
``n - 1`` for the unique-sink case by repeatedly peeling off a state
without predecessors.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .core import (
    Dfa,
    StateSet,
    UsageError,
    Word,
    find_sinks,
    is_idempotent_letter,
    is_strongly_connected,
)
from .analysis import verify_reset_word


class TwoIdemKind(Enum):
    FLIP_FLOP = "flip-flop"
    NOT_SYNCHRONIZING = "not-synchronizing"
    NOT_APPLICABLE = "not-applicable"


class ContradictionError(RuntimeError):
    """Every remaining non-sink state has a predecessor.

    This can only happen when the input violates the synchronizing
    precondition: the offending states form a letter-closed set from
    which the sink is unreachable.
    """


@dataclass(frozen=True)
class TwoIdemClassification:
    """Verdict for a strongly connected automaton with two idempotent letters.

    ``NOT_SYNCHRONIZING`` verdicts carry the alternating cycle that
    blocks synchronization: ``cycle_q[i]`` is fixed by the passive
    letter and moved to ``cycle_p[i]`` by ``moving_letter``, and
    ``cycle_p[i]`` flows on to ``cycle_q[(i + 1) % cycle_length]``.
    """

    kind: TwoIdemKind
    cycle_length: int | None = None
    cycle_q: tuple[int, ...] | None = None
    cycle_p: tuple[int, ...] | None = None
    moving_letter: int | None = None
    reason: str | None = None


def _not_applicable(reason: str) -> TwoIdemClassification:
    return TwoIdemClassification(TwoIdemKind.NOT_APPLICABLE, reason=reason)


def classify_strongly_connected_2idem(dfa: Dfa) -> TwoIdemClassification:
    """Classify a strongly connected two-idempotent-letter automaton.

    Starting from state 0, pick the first letter that moves it and trace
    the orbit that alternates the two letters until it closes.  A cycle
    of length 1 forces the flip-flop on two states; any longer cycle is
    a proof that no word can merge its states, so the automaton does not
    synchronize.  Inputs failing a precondition (exactly two letters,
    both idempotent, strong connectivity, at least two states) get a
    ``NOT_APPLICABLE`` verdict with the reason.
    """
    if dfa.k != 2:
        return _not_applicable(f"expected exactly 2 letters, got {dfa.k}")
    for j in range(2):
        if not is_idempotent_letter(dfa, j):
            return _not_applicable(f"letter {dfa.letters[j]!r} is not idempotent")
    if dfa.n < 2:
        return _not_applicable("expected at least 2 states")
    if not is_strongly_connected(dfa):
        return _not_applicable("not strongly connected")

    start = 0
    mover = next(
        (j for j in range(2) if dfa.delta[j][start] != start), None
    )
    # A state fixed by both letters would be a sink, impossible here.
    assert mover is not None
    passive = 1 - mover
    cycle_q = []
    cycle_p = []
    state = start
    for _ in range(dfa.n):
        cycle_q.append(state)
        moved = dfa.delta[mover][state]
        cycle_p.append(moved)
        state = dfa.delta[passive][moved]
        if state == start:
            break
    else:
        raise RuntimeError("alternating orbit failed to close")
    if len(cycle_q) == 1:
        # {start, moved} is closed under both letters; strong
        # connectivity then forces exactly these two states.
        assert dfa.n == 2
        return TwoIdemClassification(TwoIdemKind.FLIP_FLOP, moving_letter=mover)
    return TwoIdemClassification(
        TwoIdemKind.NOT_SYNCHRONIZING,
        cycle_length=len(cycle_q),
        cycle_q=tuple(cycle_q),
        cycle_p=tuple(cycle_p),
        moving_letter=mover,
    )


def predecessor_free_states(dfa: Dfa) -> StateSet:
    """States that are not the image of any other state under any letter."""
    has_pred = [False] * dfa.n
    for row in dfa.delta:
        for p, q in enumerate(row):
            if q != p:
                has_pred[q] = True
    return StateSet.of(
        (q for q in range(dfa.n) if not has_pred[q]), dfa.n
    )


def synchronize_sink_2idem(dfa: Dfa) -> Word:
    """Reset word of length ``n - 1`` for a synchronizing automaton with
    two idempotent letters and a unique sink.

    Each round removes a state without predecessors among the remaining
    ones (lowest index when there is a choice) and emits the first
    letter that moves it; the removed state's image stays inside the
    remainder, so the concatenated letters drive everything into the
    sink.  The constructed word is verified before being returned.

    Raises ``UsageError`` when the automaton does not have exactly two
    idempotent letters and a unique sink, and
    :class:`ContradictionError` when no predecessor-free state exists,
    which means the automaton was not synchronizing to begin with.
    """
    if dfa.k != 2:
        raise UsageError(f"expected exactly 2 letters, got {dfa.k}")
    for j in range(2):
        if not is_idempotent_letter(dfa, j):
            raise UsageError(f"letter {dfa.letters[j]!r} is not idempotent")
    sinks = find_sinks(dfa).members()
    if len(sinks) != 1:
        raise UsageError(f"expected a unique sink, found {len(sinks)}")
    sink = sinks[0]

    alive = [True] * dfa.n
    remaining = dfa.n
    word = []
    while remaining > 1:
        has_pred = [False] * dfa.n
        for row in dfa.delta:
            for p in range(dfa.n):
                if alive[p] and row[p] != p:
                    has_pred[row[p]] = True
        free = next(
            (
                q
                for q in range(dfa.n)
                if alive[q] and q != sink and not has_pred[q]
            ),
            None,
        )
        if free is None:
            raise ContradictionError(
                "every remaining state has a predecessor; "
                "the automaton is not synchronizing"
            )
        mover = next(j for j in range(2) if dfa.delta[j][free] != free)
        word.append(mover)
        alive[free] = False
        remaining -= 1
    result = tuple(word)
    if not verify_reset_word(dfa, result):
        raise RuntimeError("constructed word failed verification")
    return result
