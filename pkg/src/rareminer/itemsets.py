"""Item interning, bit-vector item-sets, and transaction databases.

The item universe of a database is the ordered set of distinct item labels,
interned in order of first appearance. An item-set is a fixed-width
bit-vector over that universe, so subset tests and intersections are single
integer operations. All types here are immutable after construction and
safe to share across threads; every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Optional, Sequence

# The bottom-up miner starts from the full item-set, and the number of rare
# plus non-present item-sets can approach 2^|I|; the cap keeps that honest
# at desk scale. Override per call where a larger universe is intended.
DEFAULT_ITEM_CAP = 24


class ItemUniverseError(ValueError):
    """An input would intern more distinct items than the configured cap."""

    def __init__(self, n_items: int, cap: int, what: str = "item universe"):
        self.n_items = n_items
        self.cap = cap
        super().__init__(
            f"{what} has {n_items} distinct items, exceeding the cap of {cap}"
        )


class Classification(Enum):
    """Support class of an item-set relative to a threshold sigma."""

    FREQUENT = "FREQUENT"
    RARE = "RARE"
    NONPRESENT = "NONPRESENT"

    @property
    def tag(self) -> str:
        return self.value


def classify_support(support: int, sigma: int) -> Classification:
    """Three-way class: zero support is non-present, below sigma is rare."""
    if support == 0:
        return Classification.NONPRESENT
    if support < sigma:
        return Classification.RARE
    return Classification.FREQUENT


def _require_same_width(a: "ItemSet", b: "ItemSet") -> None:
    if a.width != b.width:
        raise ValueError(f"item-set widths differ: {a.width} != {b.width}")


@dataclass(frozen=True, slots=True)
class ItemSet:
    """Fixed-width bit-vector item-set; bit i is set iff item i is a member."""

    mask: int
    width: int

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError(f"negative item-set width {self.width}")
        if not 0 <= self.mask < (1 << self.width):
            raise ValueError(f"mask {self.mask:#x} out of range for width {self.width}")

    @classmethod
    def empty(cls, width: int) -> "ItemSet":
        return cls(0, width)

    @classmethod
    def full(cls, width: int) -> "ItemSet":
        return cls((1 << width) - 1, width)

    @classmethod
    def from_ids(cls, ids: Iterable[int], width: int) -> "ItemSet":
        mask = 0
        for item_id in ids:
            if not 0 <= item_id < width:
                raise ValueError(f"item id {item_id} out of range for width {width}")
            mask |= 1 << item_id
        return cls(mask, width)

    @property
    def cardinality(self) -> int:
        return self.mask.bit_count()

    def item_ids(self) -> tuple[int, ...]:
        """Member item ids, ascending."""
        return tuple(i for i in range(self.width) if self.mask >> i & 1)

    def is_subset_of(self, other: "ItemSet") -> bool:
        _require_same_width(self, other)
        return self.mask & ~other.mask == 0

    def intersect(self, other: "ItemSet") -> "ItemSet":
        _require_same_width(self, other)
        return ItemSet(self.mask & other.mask, self.width)


def combinable(a: ItemSet, b: ItemSet, k: int) -> bool:
    """True iff both operands have k+1 items and share exactly k of them.

    This is the condition under which intersecting two item-sets of one
    lattice level yields a member of the level below.
    """
    _require_same_width(a, b)
    if a.cardinality != k + 1 or b.cardinality != k + 1:
        return False
    return (a.mask & b.mask).bit_count() == k


@dataclass(frozen=True, slots=True)
class Transaction:
    """One database record: its source line index and its item members."""

    id: int
    items: ItemSet


class TransactionDatabase:
    """An interned item universe plus an ordered list of transactions."""

    def __init__(self, labels: Sequence[str], transactions: Sequence[Transaction]):
        labels = tuple(labels)
        index: dict[str, int] = {}
        for i, label in enumerate(labels):
            if label in index:
                raise ValueError(f"duplicate item label {label!r}")
            index[label] = i
        width = len(labels)
        for t in transactions:
            if t.items.width != width:
                raise ValueError("transaction width does not match the item universe")
            if t.items.mask == 0:
                raise ValueError("empty transactions are not allowed")
        self._labels = labels
        self._index = index
        self._transactions = tuple(transactions)
        self._masks = tuple(t.items.mask for t in self._transactions)

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def transactions(self) -> tuple[Transaction, ...]:
        return self._transactions

    @property
    def width(self) -> int:
        """Size of the item universe |I|."""
        return len(self._labels)

    def __len__(self) -> int:
        """Number of transactions |D|."""
        return len(self._transactions)

    @property
    def transaction_masks(self) -> tuple[int, ...]:
        """Raw transaction bit-vectors, for callers working at the mask level."""
        return self._masks

    def item_id(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"unknown item label {label!r}") from None

    def itemset_from_labels(self, labels: Iterable[str]) -> ItemSet:
        return ItemSet.from_ids((self.item_id(label) for label in labels), self.width)

    def full_itemset(self) -> ItemSet:
        return ItemSet.full(self.width)

    def labels_of(self, itemset: ItemSet) -> tuple[str, ...]:
        """Member labels, sorted lexicographically."""
        if itemset.width != self.width:
            raise ValueError("item-set width does not match this database")
        return tuple(sorted(self._labels[i] for i in itemset.item_ids()))

    def render(self, itemset: ItemSet) -> str:
        """Canonical text form: labels sorted lexicographically, space separated.

        Used for all output and persistence so results are byte-deterministic
        and independent of item interning order.
        """
        return " ".join(self.labels_of(itemset))

    def support_of_mask(self, mask: int) -> int:
        count = 0
        for t in self._masks:
            if mask & t == mask:
                count += 1
        return count

    def support(self, itemset: ItemSet) -> int:
        """Exact number of transactions containing every item of `itemset`."""
        if itemset.width != self.width:
            raise ValueError("item-set width does not match this database")
        return self.support_of_mask(itemset.mask)


def parse_database(text: str, *, max_items: int = DEFAULT_ITEM_CAP) -> TransactionDatabase:
    """Parse transaction text: one transaction per line, whitespace-separated.

    Tokens are arbitrary non-whitespace labels (numeric ids parse unchanged).
    Blank lines and lines starting with '#' are ignored; duplicate tokens
    within a line collapse to one membership. Items are interned in order of
    first appearance; each transaction keeps its source line index as its id.

    Raises ItemUniverseError when the input holds more than `max_items`
    distinct items.
    """
    index: dict[str, int] = {}
    rows: list[tuple[int, list[int]]] = []
    for lineno, line in enumerate(text.splitlines()):
        if line.startswith("#") or not line.strip():
            continue
        ids = [index.setdefault(token, len(index)) for token in line.split()]
        rows.append((lineno, ids))
    if len(index) > max_items:
        raise ItemUniverseError(len(index), max_items)
    width = len(index)
    transactions = [
        Transaction(lineno, ItemSet.from_ids(ids, width)) for lineno, ids in rows
    ]
    return TransactionDatabase(tuple(index), transactions)


def database_from_transactions(
    transactions: Iterable[Iterable[str]],
    *,
    universe: Optional[Sequence[str]] = None,
    max_items: int = DEFAULT_ITEM_CAP,
) -> TransactionDatabase:
    """Build a database from in-memory label collections.

    With `universe` given, the item dictionary is fixed up front (items may
    then occur in no transaction) and unknown labels are rejected; otherwise
    items are interned in first-appearance order. Empty transactions are
    skipped: they can never affect the support of a non-empty item-set.
    """
    rows: list[list[int]] = []
    if universe is not None:
        index = {label: i for i, label in enumerate(universe)}
        if len(index) != len(tuple(universe)):
            raise ValueError("duplicate labels in the item universe")
        for row in transactions:
            ids = []
            for label in row:
                if label not in index:
                    raise ValueError(f"item label {label!r} not in the given universe")
                ids.append(index[label])
            rows.append(ids)
        labels = tuple(universe)
    else:
        index = {}
        for row in transactions:
            rows.append([index.setdefault(label, len(index)) for label in row])
        labels = tuple(index)
    if len(labels) > max_items:
        raise ItemUniverseError(len(labels), max_items)
    width = len(labels)
    built = [
        Transaction(i, ItemSet.from_ids(ids, width))
        for i, ids in enumerate(rows)
        if ids
    ]
    return TransactionDatabase(labels, built)


def canonical_key(itemset: ItemSet, db: TransactionDatabase) -> tuple[int, str]:
    """Sort key for all emitted output: cardinality, then rendered labels."""
    return (itemset.cardinality, db.render(itemset))


def format_result_line(
    itemset: ItemSet,
    support: int,
    classification: Classification,
    db: TransactionDatabase,
) -> str:
    """One output line: `<labels> : <support> <CLASS>`."""
    return f"{db.render(itemset)} : {support} {classification.tag}"
