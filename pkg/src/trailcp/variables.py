"""Interval integer variables."""

from .trail import TrailedInt

__all__ = ["IntervalVar"]


class IntervalVar:
    """Integer variable whose domain is the interval ``[min, max]``.

    Both bounds are :class:`~trailcp.trail.TrailedInt`, so any narrowing is
    undone on backtrack. Propagators watch bound changes through
    :meth:`watch_min` and :meth:`watch_max`; watcher lists are never trailed.

    A failed update leaves the domain untouched: the node is about to be
    undone anyway.
    """

    def __init__(self, queue, trail, init_min: int, init_max: int, name=None):
        self.name = name
        self._queue = queue
        self._min = TrailedInt(trail, init_min)
        self._max = TrailedInt(trail, init_max)
        self.min_watchers = []
        self.max_watchers = []

    @property
    def min(self) -> int:
        return self._min.get_value()

    @property
    def max(self) -> int:
        return self._max.get_value()

    def get_min(self) -> int:
        return self._min.get_value()

    def get_max(self) -> int:
        return self._max.get_value()

    def is_assigned(self) -> bool:
        return self._min.get_value() == self._max.get_value()

    def watch_min(self, propagator):
        self.min_watchers.append(propagator)

    def watch_max(self, propagator):
        self.max_watchers.append(propagator)

    def update_min(self, new_min: int) -> bool:
        if new_min > self._max.get_value():
            return False
        if new_min <= self._min.get_value():
            return True
        self._min.set_value(new_min)
        enqueue = self._queue.enqueue
        for propagator in self.min_watchers:
            enqueue(propagator)
        return True

    def update_max(self, new_max: int) -> bool:
        if new_max < self._min.get_value():
            return False
        if new_max >= self._max.get_value():
            return True
        self._max.set_value(new_max)
        enqueue = self._queue.enqueue
        for propagator in self.max_watchers:
            enqueue(propagator)
        return True

    def __repr__(self):
        lo, hi = self.min, self.max
        dom = str(lo) if lo == hi else f"[{lo}, {hi}]"
        return f"{self.name}={dom}" if self.name else f"IntervalVar({dom})"
