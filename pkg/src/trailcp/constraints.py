"""Binary propagators over interval variables.

There are no constraint objects; a constraint is whatever set of propagators
enforces it. Each propagator here stands alone.
"""

from .propagation import Propagator
from .variables import IntervalVar

__all__ = ["LowerEqual", "NotEqualOffset"]


class LowerEqual(Propagator):
    """Enforces ``x <= y`` with bounds consistency.

    Only an increase of ``x.min`` or a decrease of ``y.max`` can trigger new
    filtering, so those are the only events watched.
    """

    def __init__(self, x: IntervalVar, y: IntervalVar):
        self.x = x
        self.y = y

    def init(self) -> bool:
        if not self.propagate():
            return False
        self.x.watch_min(self)
        self.y.watch_max(self)
        return True

    def propagate(self) -> bool:
        x, y = self.x, self.y
        return x.update_max(y.get_max()) and y.update_min(x.get_min())

    def __repr__(self):
        return f"LowerEqual({self.x.name}, {self.y.name})"


class NotEqualOffset(Propagator):
    """Enforces ``x + a != y + b``.

    Filtering only happens once one side is assigned, and only shaves the
    forbidden value when it sits on a bound of the other variable. Interior
    values cannot be removed from an interval domain; search deals with them.
    """

    def __init__(self, x: IntervalVar, y: IntervalVar, a: int = 0, b: int = 0):
        self.x = x
        self.y = y
        self.a = a
        self.b = b

    def init(self) -> bool:
        if not self.propagate():
            return False
        for var in (self.x, self.y):
            var.watch_min(self)
            var.watch_max(self)
        return True

    def propagate(self) -> bool:
        x, y = self.x, self.y
        shift = self.a - self.b
        # Shaving one side can assign it, which enables shaving the other;
        # events raised here don't re-enqueue self, so loop locally.
        while True:
            changed = False
            if x.is_assigned():
                ok, hit = _shave(y, x.get_min() + shift)
                if not ok:
                    return False
                changed |= hit
            if y.is_assigned():
                ok, hit = _shave(x, y.get_min() - shift)
                if not ok:
                    return False
                changed |= hit
            if not changed:
                return True

    def __repr__(self):
        return f"NotEqualOffset({self.x.name}, {self.y.name}, {self.a}, {self.b})"


def _shave(var, value):
    """Remove ``value`` from ``var`` if it is a bound.

    Returns ``(ok, changed)``.
    """
    if value == var.get_min():
        return var.update_min(value + 1), True
    if value == var.get_max():
        return var.update_max(value - 1), True
    return True, False
