"""Bottom-up mining of rare and non-present item-sets.

The miner walks the item-set lattice from the single largest item-set (all
interned items) down toward single items, one cardinality level at a time.
Adding items to an item-set can only shrink its support, so every superset
of a low-support item-set also has low support: the descent reaches every
rare and every non-present item-set. In the other direction, every subset
of a frequent item-set is frequent, which lets the miner drop candidates
lying below a known frequent item-set without counting them.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Collection, Iterable, Iterator

from .itemsets import (
    Classification,
    ItemSet,
    TransactionDatabase,
    canonical_key,
    classify_support,
)

EMIT_RARE = "rare"
EMIT_NONPRESENT = "nonpresent"
EMIT_BOTH = "both"
EMIT_CHOICES = (EMIT_RARE, EMIT_NONPRESENT, EMIT_BOTH)


@dataclass(frozen=True)
class MiningConfig:
    """Thresholds and toggles for one mining run.

    `sigma` is the exclusive maximum support: an item-set is kept when its
    support is strictly below it. Values above |D| + 1 behave exactly like
    |D| + 1 (no support can reach them), which keeps mining legal on
    arbitrarily small buckets such as empty monitoring cycles; front ends
    that want the strict `sigma <= |D| + 1` contract enforce it themselves.
    Disabling pruning never changes the output, only the work done.
    """

    sigma: int
    pruning_enabled: bool = True
    emit: str = EMIT_BOTH

    def __post_init__(self) -> None:
        if self.sigma < 1:
            raise ValueError(f"sigma must be at least 1, got {self.sigma}")
        if self.emit not in EMIT_CHOICES:
            raise ValueError(f"emit must be one of {EMIT_CHOICES}, got {self.emit!r}")


@dataclass(frozen=True)
class MinedItemSet:
    """An item-set with its exact support and rare/non-present class."""

    itemset: ItemSet
    support: int
    classification: Classification


@dataclass(frozen=True)
class LevelState:
    """Outcome of testing one cardinality level.

    `interesting` holds the level's rare and non-present item-sets (all of
    cardinality `k`, support below sigma); `frequent_record` the candidates
    of the same cardinality that turned out frequent, which drive pruning
    one level further down. The two are disjoint and together are exactly
    the candidates tested at this level.
    """

    k: int
    interesting: tuple[MinedItemSet, ...]
    frequent_record: tuple[ItemSet, ...]


def _iter_child_masks(mask: int) -> Iterator[int]:
    """All subsets of `mask` with exactly one bit cleared."""
    bits = mask
    while bits:
        low = bits & -bits
        yield mask ^ low
        bits ^= low


def _generate_masks(level_masks: Collection[int]) -> list[int]:
    # The intersection of two distinct (k+1)-sets has k items exactly when
    # both are one-item extensions of the same k-set, so a k-set is a
    # candidate iff at least two of its (k+1)-supersets sit in the level.
    # Counting parents per child is linear in the level size where the
    # literal pairwise intersection is quadratic; the output is identical.
    parents: Counter[int] = Counter()
    for mask in level_masks:
        for child in _iter_child_masks(mask):
            parents[child] += 1
    return sorted(child for child, n in parents.items() if n >= 2)


def _prune_masks(candidates: Iterable[int], frequent_record: Collection[int]) -> list[int]:
    # Candidates are one item smaller than the record's members, so "subset
    # of a frequent item-set" reduces to "one-bit child of one".
    doomed = {child for mask in frequent_record for child in _iter_child_masks(mask)}
    return [c for c in candidates if c not in doomed]


def _evaluate_masks(
    candidates: Iterable[int], db: TransactionDatabase, sigma: int
) -> tuple[list[tuple[int, int]], list[int]]:
    kept: list[tuple[int, int]] = []
    frequent: list[int] = []
    for mask in candidates:
        support = db.support_of_mask(mask)
        if support < sigma:
            kept.append((mask, support))
        else:
            frequent.append(mask)
    return kept, frequent


def generate_candidates(level: Collection[ItemSet]) -> list[ItemSet]:
    """All pairwise intersections of level members that share all but one item.

    Members must have one common width and one common cardinality k+1; the
    result is the deduplicated set of those k-item intersections, in
    deterministic order.
    """
    members = list(level)
    if not members:
        return []
    width = members[0].width
    cardinality = members[0].cardinality
    for m in members:
        if m.width != width:
            raise ValueError("mixed item-set widths in one level")
        if m.cardinality != cardinality:
            raise ValueError("mixed cardinalities in one level")
    return [ItemSet(mask, width) for mask in _generate_masks({m.mask for m in members})]


def prune_candidates(
    candidates: Iterable[ItemSet], frequent_record: Collection[ItemSet]
) -> list[ItemSet]:
    """Drop every candidate that is a subset of a frequent item-set one level up."""
    members = list(candidates)
    if not members:
        return []
    width = members[0].width
    kept = _prune_masks(
        [c.mask for c in members], {f.mask for f in frequent_record}
    )
    return [ItemSet(mask, width) for mask in kept]


def evaluate_candidates(
    candidates: Iterable[ItemSet], db: TransactionDatabase, sigma: int
) -> tuple[list[MinedItemSet], list[ItemSet]]:
    """Count each candidate's exact support and split the level's outcome.

    Candidates with support below sigma come back classified (zero support is
    non-present, the rest rare); the others form the frequent record used to
    prune the next level down.
    """
    kept, frequent = _evaluate_masks((c.mask for c in candidates), db, sigma)
    width = db.width
    mined = [
        MinedItemSet(ItemSet(mask, width), support, classify_support(support, sigma))
        for mask, support in kept
    ]
    return mined, [ItemSet(mask, width) for mask in frequent]


def iter_levels(db: TransactionDatabase, config: MiningConfig) -> Iterator[LevelState]:
    """Walk the lattice largest cardinality first, yielding each tested level.

    Starts with the full item-set, then all of its one-item reductions, then
    repeatedly intersects the previous level's survivors, pruning candidates
    below recorded frequent item-sets. Stops after single items, or as soon
    as a level has no survivors. The empty set is never a candidate.
    """
    width = db.width
    if width == 0:
        return
    sigma = config.sigma

    def level_state(k: int, kept: list[tuple[int, int]], frequent: list[int]) -> LevelState:
        mined = tuple(
            MinedItemSet(ItemSet(mask, width), support, classify_support(support, sigma))
            for mask, support in kept
        )
        record = tuple(ItemSet(mask, width) for mask in frequent)
        return LevelState(k, mined, record)

    full = (1 << width) - 1
    kept, frequent = _evaluate_masks([full], db, sigma)
    yield level_state(width, kept, frequent)
    if not kept or width == 1:
        return

    # Seed level |I|-1 with every one-item reduction of the full item-set.
    candidates = sorted(_iter_child_masks(full))
    kept, frequent = _evaluate_masks(candidates, db, sigma)
    yield level_state(width - 1, kept, frequent)

    for k in range(width - 2, 0, -1):
        if not kept:
            return
        candidates = _generate_masks([mask for mask, _ in kept])
        if config.pruning_enabled:
            candidates = _prune_masks(candidates, frequent)
        kept, frequent = _evaluate_masks(candidates, db, sigma)
        yield level_state(k, kept, frequent)


def mine_rare(db: TransactionDatabase, config: MiningConfig) -> list[MinedItemSet]:
    """Every non-empty item-set over the universe with support below sigma.

    Returns exact supports with each item-set classified rare (support >= 1)
    or non-present (support 0), filtered by `config.emit` and sorted by
    (cardinality, rendered labels). A database whose full item-set is
    frequent yields an empty result: no rare or non-present item-set exists.
    """
    results: list[MinedItemSet] = []
    for level in iter_levels(db, config):
        results.extend(level.interesting)
    if config.emit == EMIT_RARE:
        results = [r for r in results if r.support > 0]
    elif config.emit == EMIT_NONPRESENT:
        results = [r for r in results if r.support == 0]
    results.sort(key=lambda r: canonical_key(r.itemset, db))
    return results
