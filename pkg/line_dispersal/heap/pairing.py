"""Meldable min-heap backed by a pairing heap.

Insert and meld link two roots with one comparison; extract_min re-pairs the
root's children with the standard two-pass scheme, which gives O(log n)
amortized extract_min. Keys only need ``<``; the solver stores plain scaled
integers of one instance.
"""
from __future__ import annotations

from typing import Generic, Iterable, List, Optional, TypeVar

from ..errors import EmptyHeapError

K = TypeVar("K")


class _Node:
    __slots__ = ("key", "sub")

    def __init__(self, key, sub: Optional[List[_Node]] = None):
        self.key = key
        self.sub = sub if sub is not None else []


class MeldHeap(Generic[K]):
    """Min-heap over a multiset of keys. Melding consumes the other heap."""

    __slots__ = ("_root", "_size", "comparisons")

    def __init__(self, keys: Iterable[K] = ()):
        self._root: Optional[_Node] = None
        self._size = 0
        self.comparisons = 0
        for key in keys:
            self.insert(key)

    def __len__(self) -> int:
        return self._size

    def __bool__(self) -> bool:
        return self._size > 0

    def _link(self, a: Optional[_Node], b: Optional[_Node]) -> Optional[_Node]:
        if a is None:
            return b
        if b is None:
            return a
        self.comparisons += 1
        if b.key < a.key:
            a, b = b, a
        a.sub.append(b)
        return a

    def _pair(self, heaps: List[_Node]) -> Optional[_Node]:
        if not heaps:
            return None
        # left-to-right pairing pass, then fold right-to-left
        paired = [self._link(heaps[i], heaps[i + 1]) if i + 1 < len(heaps) else heaps[i]
                  for i in range(0, len(heaps), 2)]
        root = paired[-1]
        for node in reversed(paired[:-1]):
            root = self._link(node, root)
        return root

    def insert(self, key: K) -> MeldHeap[K]:
        self._root = self._link(self._root, _Node(key))
        self._size += 1
        return self

    def find_min(self) -> K:
        if self._root is None:
            raise EmptyHeapError("find_min on an empty heap")
        return self._root.key

    def extract_min(self) -> K:
        if self._root is None:
            raise EmptyHeapError("extract_min on an empty heap")
        root = self._root
        self._root = self._pair(root.sub)
        self._size -= 1
        return root.key

    def meld(self, other: MeldHeap[K]) -> MeldHeap[K]:
        """Merges other into self, leaving other empty."""
        if other is self:
            return self
        self._root = self._link(self._root, other._root)
        self._size += other._size
        self.comparisons += other.comparisons
        other._root, other._size, other.comparisons = None, 0, 0
        return self

    def drain(self) -> List[K]:
        """Extracts every key; returns them in ascending order."""
        return [self.extract_min() for _ in range(self._size)]
