"""Trailing state restoration.

A :class:`Trail` records undoable :class:`Change` objects in chronological
order and remembers, for every open search node, the trail size at which the
node began. Backtracking to a node pops and undoes changes until the trail is
back to that size.
"""

__all__ = ["Change", "Trail", "TrailedInt"]


class Change:
    """An undoable state mutation stored on a :class:`Trail`."""

    def undo(self):
        raise NotImplementedError

    def discard(self):
        """Called instead of :meth:`undo` when the trail forgets the entry."""


class Trail:
    """Two stacks: the changes, and the trail size at the start of each node.

    Every node also carries a stamp, drawn from a counter that only grows.
    Stateful objects compare their last recorded stamp against
    :attr:`node_stamp` to record at most one restoration entry per node.
    """

    def __init__(self):
        self._changes = []
        self._nodes = []
        # stamp of each open node's parent, parallel to _nodes
        self._parent_stamps = []
        self._clock = 0
        self._stamp = 0

    @property
    def size(self) -> int:
        return len(self._changes)

    @property
    def depth(self) -> int:
        """Number of open nodes above the root."""
        return len(self._nodes)

    @property
    def boundaries(self) -> tuple:
        return tuple(self._nodes)

    @property
    def timestamp(self) -> int:
        """Number of nodes ever opened. Never decreases."""
        return self._clock

    @property
    def node_stamp(self) -> int:
        """Stamp of the current node; 0 at the root."""
        return self._stamp

    def entries(self) -> tuple:
        """Stored changes, oldest first. For inspection only."""
        return tuple(self._changes)

    def store(self, change: Change):
        self._changes.append(change)

    def new_node(self):
        self._nodes.append(len(self._changes))
        self._parent_stamps.append(self._stamp)
        self._clock += 1
        self._stamp = self._clock

    def undo_node(self):
        """Restore the previous node. No-op at the root."""
        if self._nodes:
            self._undo_until(self._nodes.pop())
            self._stamp = self._parent_stamps.pop()

    def undo_all(self):
        """Restore the root node."""
        self._undo_until(0)
        self._nodes.clear()
        self._parent_stamps.clear()
        self._stamp = 0

    def commit(self):
        """Forget every stored change, making the current state the root.

        Only valid at the root: raises ``RuntimeError`` if a node is open.
        """
        if self._nodes:
            raise RuntimeError("commit() with open nodes")
        changes = self._changes
        while changes:
            changes.pop().discard()

    def _undo_until(self, size):
        changes = self._changes
        while len(changes) > size:
            changes.pop().undo()


class TrailedInt(Change):
    """A reversible integer.

    The object is its own :class:`Change`: each stored entry is ``self``, and
    ``undo`` pops the most recent saved value. Only the first modification in
    a node is saved, since only the value at the start of a node is needed to
    restore it.
    """

    __slots__ = ("_trail", "_value", "_old", "_stored_at")

    def __init__(self, trail: Trail, init_value: int):
        self._trail = trail
        self._value = init_value
        # (value, stamp) pairs; the stamp is restored too so that a node
        # re-entered after a backtrack still records its own entry
        self._old = []
        self._stored_at = -1

    def get_value(self) -> int:
        return self._value

    value = property(get_value)

    def set_value(self, value: int):
        if value == self._value:
            return
        trail = self._trail
        if self._stored_at < trail.node_stamp:
            self._old.append((self._value, self._stored_at))
            self._stored_at = trail.node_stamp
            trail.store(self)
        self._value = value

    def undo(self):
        self._value, self._stored_at = self._old.pop()

    def discard(self):
        self._stored_at = self._old.pop()[1]

    def __repr__(self):
        return f"TrailedInt({self._value})"
