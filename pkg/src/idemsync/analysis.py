"""Synchronization analysis: decision, exact thresholds, witness words.

Two complementary engines live here.  :func:`is_synchronizing` runs the
polynomial pair-merging test and never explores subsets.
:func:`reset_threshold` performs a breadth-first search over the power
automaton, starting from the full state set, and returns the exact
threshold together with the lexicographically least shortest reset word.
The search is budgeted; the pair test runs first so non-synchronizing
inputs never trigger an exponential walk.

The ``check_*`` functions package the library's named claims (see the
verification harness) as one-shot reports.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Dfa,
    StateSet,
    UsageError,
    Word,
    image_of_set,
    find_sinks,
    is_idempotent_letter,
    is_strongly_connected,
    letter_rank,
)
from .generators import chi_encode, gen_cerny, higgins_transform


@dataclass(frozen=True)
class SearchBudget:
    """Resource limits for the subset search.

    ``None`` means unlimited.  ``max_subsets`` bounds how many distinct
    subsets may be discovered; ``max_depth`` bounds the word length
    explored.
    """

    max_subsets: int | None = None
    max_depth: int | None = None

    def __post_init__(self) -> None:
        if self.max_subsets is not None and self.max_subsets < 1:
            raise UsageError(f"max_subsets must be positive, got {self.max_subsets}")
        if self.max_depth is not None and self.max_depth < 1:
            raise UsageError(f"max_depth must be positive, got {self.max_depth}")


DEFAULT_BUDGET = SearchBudget(max_subsets=1 << 24)

#: Largest state count the bit-packed subset search accepts by default.
#: Callers with patience can raise it per call; the pair test has no limit.
DEFAULT_CAPACITY = 63


@dataclass(frozen=True)
class SyncResult:
    """Outcome of an exact threshold search.

    When ``synchronizing`` is true, ``threshold`` and ``witness`` are
    present, the witness has exactly ``threshold`` letters, it maps the
    full state set to a singleton, and it is the lexicographically least
    word (by letter index) among all shortest reset words.

    When ``truncated`` is true the budget ran out before resolution and
    the result makes no synchronization claim: ``synchronizing`` is
    false and threshold and witness are absent.  Use
    :func:`is_synchronizing` for a budget-independent decision.
    """

    synchronizing: bool
    threshold: int | None
    witness: Word | None
    states_explored: int
    truncated: bool


@dataclass(frozen=True)
class AnalysisReport:
    """Structural and synchronization facts about one automaton."""

    n: int
    letters: tuple[str, ...]
    letter_ranks: tuple[int, ...]
    letter_idempotent: tuple[bool, ...]
    sinks: tuple[int, ...]
    strongly_connected: bool
    sync: SyncResult


def is_synchronizing(dfa: Dfa) -> bool:
    """Decide synchronizability by merging state pairs.

    An automaton synchronizes exactly when every pair of states can be
    mapped to a single state by some word.  The check runs backward
    closure on the pair graph in ``O(k * n**2)`` pair steps and needs no
    budget.
    """
    n = dfa.n
    if n == 1:
        return True
    mergeable = [False] * (n * n)
    reverse: dict[int, list[int]] = {}
    queue: list[int] = []
    for p in range(n):
        for q in range(p + 1, n):
            pair = p * n + q
            direct = False
            for row in dfa.delta:
                u, v = row[p], row[q]
                if u == v:
                    direct = True
                    continue
                if u > v:
                    u, v = v, u
                reverse.setdefault(u * n + v, []).append(pair)
            if direct:
                mergeable[pair] = True
                queue.append(pair)
    while queue:
        target = queue.pop()
        for pair in reverse.get(target, ()):
            if not mergeable[pair]:
                mergeable[pair] = True
                queue.append(pair)
    return all(
        mergeable[p * n + q] for p in range(n) for q in range(p + 1, n)
    )


def reset_threshold(
    dfa: Dfa,
    budget: SearchBudget = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> SyncResult:
    """Exact reset threshold and lexicographically least shortest witness.

    Runs the pair test first; a non-synchronizing automaton is reported
    without any subset exploration.  Otherwise a breadth-first search
    from the full state set walks subsets under the letter actions,
    trying letters in index order so that the first singleton discovered
    yields the lexicographically least shortest reset word.

    Raises ``UsageError`` when the automaton has more than ``capacity``
    states; use :func:`is_synchronizing` alone for such sizes.
    """
    n = dfa.n
    if n > capacity:
        raise UsageError(
            f"{n} states exceed the subset-search capacity {capacity}; "
            "the pair test (is_synchronizing) still applies"
        )
    if not is_synchronizing(dfa):
        return SyncResult(False, None, None, 0, False)
    full = (1 << n) - 1
    if n == 1:
        return SyncResult(True, 0, (), 1, False)
    masks = [[1 << t for t in row] for row in dfa.delta]
    k = dfa.k
    # bits -> (parent bits, letter); the full set is its own root.
    seen: dict[int, tuple[int, int]] = {full: (full, -1)}
    frontier = [full]
    depth = 0
    while frontier:
        if budget.max_depth is not None and depth >= budget.max_depth:
            return SyncResult(False, None, None, len(seen), True)
        depth += 1
        next_frontier: list[int] = []
        for bits in frontier:
            for j in range(k):
                row_masks = masks[j]
                img = 0
                rest = bits
                while rest:
                    low = rest & -rest
                    img |= row_masks[low.bit_length() - 1]
                    rest ^= low
                if img in seen:
                    continue
                if (
                    budget.max_subsets is not None
                    and len(seen) >= budget.max_subsets
                ):
                    return SyncResult(False, None, None, len(seen), True)
                seen[img] = (bits, j)
                if img & (img - 1) == 0:
                    return SyncResult(
                        True, depth, _walk_back(seen, img, full), len(seen), False
                    )
                next_frontier.append(img)
        frontier = next_frontier
    raise RuntimeError(
        "subset search exhausted without a singleton after a positive pair test"
    )


def _walk_back(
    seen: dict[int, tuple[int, int]], bits: int, root: int
) -> Word:
    word = []
    while bits != root:
        bits, j = seen[bits]
        word.append(j)
    word.reverse()
    return tuple(word)


def verify_reset_word(dfa: Dfa, word: Word) -> bool:
    """True when ``word`` maps the full state set to a single state."""
    return len(image_of_set(dfa, StateSet.full(dfa.n), word)) == 1


def is_proper(dfa: Dfa) -> bool:
    """True when every reset word needs every letter.

    Properness is defined for automata with more than two letters: the
    automaton must synchronize, and removing any single letter must
    leave a non-synchronizing automaton.  Each removal costs one pair
    test, so no search budget is involved.
    """
    if dfa.k <= 2:
        return False
    if not is_synchronizing(dfa):
        return False
    return all(
        not is_synchronizing(_without_letter(dfa, j)) for j in range(dfa.k)
    )


def _without_letter(dfa: Dfa, j: int) -> Dfa:
    letters = dfa.letters[:j] + dfa.letters[j + 1 :]
    rows = dfa.delta[:j] + dfa.delta[j + 1 :]
    return Dfa(dfa.n, letters, rows)


def analyze_automaton(
    dfa: Dfa,
    budget: SearchBudget = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> AnalysisReport:
    """Collect the standard structural and synchronization facts."""
    return AnalysisReport(
        n=dfa.n,
        letters=dfa.letters,
        letter_ranks=tuple(letter_rank(dfa, j) for j in range(dfa.k)),
        letter_idempotent=tuple(
            is_idempotent_letter(dfa, j) for j in range(dfa.k)
        ),
        sinks=find_sinks(dfa).members(),
        strongly_connected=is_strongly_connected(dfa),
        sync=reset_threshold(dfa, budget, capacity),
    )


@dataclass(frozen=True)
class Lemma1Report:
    """Shape facts about a doubled automaton: idempotency and half rank."""

    base_n: int
    letter_ranks: tuple[int, ...]
    letter_idempotent: tuple[bool, ...]
    ok: bool


def check_lemma1(dfa: Dfa) -> Lemma1Report:
    """Check that every letter of the doubled automaton is an idempotent
    of rank equal to the base state count."""
    doubled = higgins_transform(dfa).result
    ranks = tuple(letter_rank(doubled, j) for j in range(doubled.k))
    idem = tuple(is_idempotent_letter(doubled, j) for j in range(doubled.k))
    ok = all(idem) and all(r == dfa.n for r in ranks)
    return Lemma1Report(dfa.n, ranks, idem, ok)


@dataclass(frozen=True)
class Theorem2Report:
    """Doubling-transform synchronization facts for one base automaton.

    ``threshold_doubled`` and ``encoded_witness_resets`` are ``None``
    when the base does not synchronize (there is nothing to double).
    """

    base: SyncResult
    transformed: SyncResult
    sync_agrees: bool
    threshold_doubled: bool | None
    encoded_witness_resets: bool | None
    ok: bool


def check_theorem2(
    dfa: Dfa,
    budget: SearchBudget = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> Theorem2Report:
    """Check that doubling preserves synchronizability, exactly doubles
    the reset threshold, and that the encoded base witness resets the
    doubled automaton at exactly twice the length."""
    image = higgins_transform(dfa)
    base = reset_threshold(dfa, budget, capacity)
    transformed = reset_threshold(image.result, budget, capacity)
    sync_agrees = base.synchronizing == transformed.synchronizing
    threshold_doubled: bool | None = None
    encoded_resets: bool | None = None
    if base.synchronizing and transformed.synchronizing:
        threshold_doubled = transformed.threshold == 2 * base.threshold
        encoded = chi_encode(image, base.witness)
        encoded_resets = len(encoded) == 2 * len(base.witness) and verify_reset_word(
            image.result, encoded
        )
    ok = (
        not base.truncated
        and not transformed.truncated
        and sync_agrees
        and threshold_doubled is not False
        and encoded_resets is not False
    )
    return Theorem2Report(
        base, transformed, sync_agrees, threshold_doubled, encoded_resets, ok
    )


@dataclass(frozen=True)
class Corollary3Report:
    """Facts about the doubling of the classic binary family member:
    three idempotent letters of half rank, properness, and the
    threshold ``n**2/2 - 2n + 2``."""

    n: int
    expected_threshold: int
    sync: SyncResult
    letter_ranks: tuple[int, ...]
    letter_idempotent: tuple[bool, ...]
    proper: bool
    ok: bool


def check_corollary3(
    n: int,
    budget: SearchBudget = DEFAULT_BUDGET,
    capacity: int = DEFAULT_CAPACITY,
) -> Corollary3Report:
    """Build the doubled automaton on ``n`` states (``n`` even, at least
    4) from the binary family on ``n/2`` states and check its advertised
    shape: 3 letters, all idempotent of rank ``n/2``, proper, threshold
    ``n**2/2 - 2n + 2``."""
    if n < 4 or n % 2 != 0:
        raise UsageError(f"need an even state count of at least 4, got {n}")
    doubled = higgins_transform(gen_cerny(n // 2)).result
    expected = n * n // 2 - 2 * n + 2
    sync = reset_threshold(doubled, budget, capacity)
    ranks = tuple(letter_rank(doubled, j) for j in range(doubled.k))
    idem = tuple(is_idempotent_letter(doubled, j) for j in range(doubled.k))
    proper = is_proper(doubled)
    ok = (
        doubled.k == 3
        and sync.synchronizing
        and sync.threshold == expected
        and all(idem)
        and all(r == n // 2 for r in ranks)
        and proper
    )
    return Corollary3Report(n, expected, sync, ranks, idem, proper, ok)
