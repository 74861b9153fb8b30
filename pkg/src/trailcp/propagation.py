"""Propagators, the propagation queue, and the solver that owns them."""

from collections import deque

from .trail import Trail
from .variables import IntervalVar

__all__ = ["Propagator", "PropagationQueue", "Solver"]


class Propagator:
    """Filtering procedure of a constraint.

    ``enqueued`` is managed by :class:`PropagationQueue` and is true while the
    propagator sits in the queue. Subclasses implement :meth:`init`, which
    performs the initial filtering and registers on variable events, and
    :meth:`propagate`. Both return ``False`` iff filtering hit a conflict.
    """

    enqueued = False

    def init(self) -> bool:
        raise NotImplementedError

    def propagate(self) -> bool:
        raise NotImplementedError


class PropagationQueue:
    """FIFO of awake propagators, run to a fixpoint by :meth:`propagate`."""

    def __init__(self):
        self._queue = deque()

    def __len__(self):
        return len(self._queue)

    def __iter__(self):
        return iter(self._queue)

    def enqueue(self, propagator: Propagator):
        if not propagator.enqueued:
            propagator.enqueued = True
            self._queue.append(propagator)

    def propagate(self) -> bool:
        """Run queued propagators until the queue is empty.

        After the first conflict the remaining propagators are dequeued
        without being called, so the queue is always left empty.
        """
        queue = self._queue
        unfailed = True
        while queue:
            propagator = queue.popleft()
            if unfailed:
                unfailed = propagator.propagate()
            propagator.enqueued = False
        return unfailed

    def clear(self):
        while self._queue:
            self._queue.popleft().enqueued = False


class Solver:
    """Owns the trail, the queue, the variables and the propagators."""

    def __init__(self):
        self.trail = Trail()
        self.queue = PropagationQueue()
        self.variables = []
        self.propagators = []
        self.failed = False

    def int_var(self, lo: int, hi: int, name=None) -> IntervalVar:
        if name is None:
            name = f"x{len(self.variables)}"
        var = IntervalVar(self.queue, self.trail, lo, hi, name)
        self.variables.append(var)
        return var

    def add_propagator(self, propagator: Propagator) -> bool:
        """Initialize ``propagator`` and keep it if initialization succeeds.

        The queue is drained afterwards, since the initial filtering may have
        woken propagators registered earlier. When no node is open, the
        resulting domains are committed as the root state, so a later
        ``undo_all`` does not revert them. A conflict marks the solver as
        failed at the root; later calls then return ``False`` immediately.
        """
        if self.failed:
            return False
        if propagator.init() and self.queue.propagate():
            self.propagators.append(propagator)
            if self.trail.depth == 0:
                self.trail.commit()
            return True
        self.queue.clear()
        self.failed = True
        return False

    def propagate(self) -> bool:
        if self.failed:
            self.queue.clear()
            return False
        return self.queue.propagate()
