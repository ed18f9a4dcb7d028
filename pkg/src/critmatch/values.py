"""Exact fixed-point numbers for preference values and blocking thresholds.

All quantities are integer multiples of 5e-7 ("ticks"), i.e. half of the
1e-6 input grid.  The half step exists so that model reductions can encode
a strict inequality on the input grid as a ">=" threshold strictly between
two grid points.  Arithmetic is exact and platform independent; binary
floating point is never used.

``Value.INFINITY`` is a first-class saturating infinity, legal only for
thresholds (a free edge side has gamma = delta = INFINITY).  Its negative
counterpart appears only as an internal ranking key and is rejected by the
parser.
"""

from __future__ import annotations

from dataclasses import dataclass

#: ticks per whole preference unit (doubled 1e6 scale)
TICKS_PER_UNIT = 2_000_000
#: one step of the 1e-6 input grid, in ticks
GRID_TICKS = 2
#: the finest representable step, strictly inside the input grid
HALF_STEP_TICKS = 1

_NEG_INF, _FINITE, _POS_INF = -1, 0, 1


@dataclass(frozen=True)
class Value:
    """A fixed-point rational (ticks of 5e-7) or a saturating infinity."""

    ticks: int = 0
    kind: int = _FINITE

    def __post_init__(self) -> None:
        if self.kind not in (_NEG_INF, _FINITE, _POS_INF):
            raise ValueError(f"bad Value kind {self.kind!r}")
        if self.kind != _FINITE and self.ticks != 0:
            raise ValueError("infinite Value must have ticks == 0")

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_ticks(cls, ticks: int) -> Value:
        return cls(ticks=ticks)

    @classmethod
    def from_units(cls, units: int) -> Value:
        return cls(ticks=units * TICKS_PER_UNIT)

    @classmethod
    def from_micros(cls, micros: int) -> Value:
        """Value from an integer count of 1e-6 grid steps."""
        return cls(ticks=micros * GRID_TICKS)

    @classmethod
    def parse(cls, text: str) -> Value:
        """Parse a decimal string with at most 7 fraction digits, or "inf".

        The 7th fraction digit, when present, must be a half step (so the
        result stays on the tick lattice).  Raises ValueError otherwise.
        """
        text = text.strip()
        if text == "inf":
            return INFINITY
        sign = 1
        body = text
        if body.startswith("-"):
            sign, body = -1, body[1:]
        int_part, _, frac_part = body.partition(".")
        if not int_part.isdigit() or (frac_part and not frac_part.isdigit()):
            raise ValueError(f"malformed value {text!r}")
        if len(frac_part) > 7:
            raise ValueError(f"value {text!r} has more than 7 fraction digits")
        frac = int(frac_part.ljust(7, "0")) if frac_part else 0
        if frac % 5 != 0:
            raise ValueError(f"value {text!r} is not on the 5e-7 tick grid")
        ticks = int(int_part) * TICKS_PER_UNIT + frac // 5
        return cls(ticks=sign * ticks)

    # -- predicates ------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == _FINITE

    @property
    def on_input_grid(self) -> bool:
        """True when the value is finite and lies on the 1e-6 grid."""
        return self.kind == _FINITE and self.ticks % GRID_TICKS == 0

    # -- ordering --------------------------------------------------------

    def _key(self) -> tuple[int, int]:
        return (self.kind, self.ticks)

    def __lt__(self, other: Value) -> bool:
        return self._key() < other._key()

    def __le__(self, other: Value) -> bool:
        return self._key() <= other._key()

    def __gt__(self, other: Value) -> bool:
        return self._key() > other._key()

    def __ge__(self, other: Value) -> bool:
        return self._key() >= other._key()

    # -- arithmetic (saturating) ------------------------------------------

    def __neg__(self) -> Value:
        if self.kind == _FINITE:
            return Value(ticks=-self.ticks)
        return NEG_INFINITY if self.kind == _POS_INF else INFINITY

    def __add__(self, other: Value) -> Value:
        if self.kind == _FINITE and other.kind == _FINITE:
            return Value(ticks=self.ticks + other.ticks)
        if self.kind == _FINITE:
            return other
        if other.kind == _FINITE or other.kind == self.kind:
            return self
        raise ValueError("INFINITY + NEG_INFINITY is undefined")

    def __sub__(self, other: Value) -> Value:
        return self + (-other)

    # -- formatting --------------------------------------------------------

    def __str__(self) -> str:
        if self.kind == _POS_INF:
            return "inf"
        if self.kind == _NEG_INF:
            return "-inf"
        sign = "-" if self.ticks < 0 else ""
        units, rem = divmod(abs(self.ticks), TICKS_PER_UNIT)
        if rem == 0:
            return f"{sign}{units}"
        frac = f"{rem * 5:07d}".rstrip("0")
        return f"{sign}{units}.{frac}"

    def __repr__(self) -> str:
        return f"Value({self})"


INFINITY = Value(ticks=0, kind=_POS_INF)
NEG_INFINITY = Value(ticks=0, kind=_NEG_INF)
ZERO = Value(0)

#: preference value of being unmatched; the model only requires it to be <= 0
UNMATCHED_VALUE = ZERO


def as_value(x: Value | int | str) -> Value:
    """Coerce ints (whole units) and decimal strings to Value."""
    if isinstance(x, Value):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a Value")
    if isinstance(x, int):
        return Value.from_units(x)
    if isinstance(x, str):
        return Value.parse(x)
    raise TypeError(f"cannot interpret {x!r} as a Value")
