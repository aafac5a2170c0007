"""Classical top-down frequent item-set mining.

Level-wise Apriori search in the style of Agrawal & Srikant (VLDB 1994):
count single items, then repeatedly join the frequent k-sets into (k+1)-
candidates, discard candidates with an infrequent k-subset, and count the
survivors. The minimum support threshold is inclusive, so mining with
minsupp equal to the rare miner's exclusive maximum makes the two outputs
partition the lattice of non-empty item-sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Collection

from .itemsets import ItemSet, TransactionDatabase, canonical_key


@dataclass(frozen=True)
class FrequentItemSet:
    itemset: ItemSet
    support: int


def join_candidates(frequent: Collection[ItemSet]) -> list[ItemSet]:
    """Join (k-1)-sets into k-candidates, then prune by the subset check.

    Uses the canonical prefix convention: two sorted id tuples join only
    when they agree on their first k-2 items, so no candidate is generated
    twice. Candidates with any infrequent (k-1)-subset are dropped.
    """
    members = list(frequent)
    if not members:
        return []
    width = members[0].width
    for m in members:
        if m.width != width:
            raise ValueError("mixed item-set widths")
    tuples = sorted(m.item_ids() for m in members)
    member_set = set(tuples)

    candidates: list[tuple[int, ...]] = []
    start = 0
    while start < len(tuples):
        prefix = tuples[start][:-1]
        end = start
        while end < len(tuples) and tuples[end][:-1] == prefix:
            end += 1
        for a, b in combinations(range(start, end), 2):
            candidates.append(prefix + (tuples[a][-1], tuples[b][-1]))
        start = end

    kept = []
    for candidate in candidates:
        if all(
            candidate[:i] + candidate[i + 1 :] in member_set
            for i in range(len(candidate))
        ):
            kept.append(ItemSet.from_ids(candidate, width))
    return kept


def mine_frequent(db: TransactionDatabase, minsupp: int) -> list[FrequentItemSet]:
    """Exactly the non-empty item-sets with support >= minsupp (inclusive).

    Results carry exact supports and come back sorted by (cardinality,
    rendered labels).
    """
    if minsupp < 1:
        raise ValueError(f"minsupp must be at least 1, got {minsupp}")
    results: list[FrequentItemSet] = []
    level = [ItemSet.from_ids([i], db.width) for i in range(db.width)]
    while level:
        frequent_here = []
        for itemset in level:
            support = db.support(itemset)
            if support >= minsupp:
                frequent_here.append(itemset)
                results.append(FrequentItemSet(itemset, support))
        if not frequent_here:
            break
        level = join_candidates(frequent_here)
    results.sort(key=lambda r: canonical_key(r.itemset, db))
    return results
