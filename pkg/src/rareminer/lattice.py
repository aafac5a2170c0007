"""Exhaustive classification of the full item-set lattice.

Enumerates every non-empty subset of the item universe with an exact
support count and a three-way class. This is the ground truth the miners
are checked against: deliberately simple, capped to small universes, and
built to be obviously correct rather than fast.
"""

from __future__ import annotations

from dataclasses import dataclass

from .itemsets import (
    Classification,
    ItemSet,
    ItemUniverseError,
    TransactionDatabase,
    classify_support,
)

# 2^|I| subsets get enumerated; refuse anything bigger than this by default.
ORACLE_ITEM_CAP = 16


@dataclass(frozen=True, slots=True)
class LatticeEntry:
    itemset: ItemSet
    support: int
    classification: Classification


def _check_cap(db: TransactionDatabase, max_items: int) -> None:
    if db.width > max_items:
        raise ItemUniverseError(
            db.width, max_items, what="item universe for exhaustive enumeration"
        )


def classify_all(
    db: TransactionDatabase, sigma: int, *, max_items: int = ORACLE_ITEM_CAP
) -> list[LatticeEntry]:
    """Support and class of every non-empty item-set over the universe.

    Classes: support >= sigma is frequent, 0 < support < sigma is rare,
    support 0 is non-present. Entries come back in ascending bit-vector
    order for reproducible dumps.
    """
    if sigma < 1:
        raise ValueError(f"sigma must be at least 1, got {sigma}")
    _check_cap(db, max_items)
    entries = []
    for mask in range(1, 1 << db.width):
        support = db.support_of_mask(mask)
        entries.append(
            LatticeEntry(ItemSet(mask, db.width), support, classify_support(support, sigma))
        )
    return entries


def coverage(db: TransactionDatabase, *, max_items: int = ORACLE_ITEM_CAP) -> list[ItemSet]:
    """Every item-set with at least one instance in the database.

    Equals the union of the frequent and rare classes for any sigma.
    """
    _check_cap(db, max_items)
    return [
        ItemSet(mask, db.width)
        for mask in range(1, 1 << db.width)
        if db.support_of_mask(mask) >= 1
    ]
