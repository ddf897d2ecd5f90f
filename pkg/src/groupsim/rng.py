"""Seeded random streams and the distribution samplers used by every randomizer.

Streams are keyed by (seed, derivation path) instead of draw order, so adding a
new randomizer label never shifts the samples drawn under existing labels and
sibling derivation order does not matter.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

_U64 = 0xFFFFFFFFFFFFFFFF


class RngStream:
    """Deterministic random stream derived from (seed, label path).

    Two streams built from the same (seed, path) produce identical sample
    sequences.  Child streams are independent of sibling derivation order and
    of how much the parent has been sampled.  A single stream must not be
    sampled from multiple threads.
    """

    __slots__ = ("seed", "path", "_gen")

    def __init__(self, seed: int, path: str = ""):
        self.seed = int(seed) & _U64
        self.path = path
        digest = hashlib.sha256(f"{self.seed}:{path}".encode()).digest()
        self._gen = np.random.Generator(
            np.random.PCG64(int.from_bytes(digest[:16], "little"))
        )

    def derive(self, label: str) -> "RngStream":
        """Child stream keyed by label; independent of sibling order."""
        if not label:
            raise ValueError("derivation label must be nonempty")
        return RngStream(self.seed, f"{self.path}/{label}")

    def random(self) -> float:
        """Uniform in [0, 1)."""
        return float(self._gen.random())

    def __repr__(self) -> str:  # pragma: no cover
        return f"RngStream(seed={self.seed}, path={self.path!r})"


def derive_stream(parent: RngStream, label: str) -> RngStream:
    """Derive a labeled child stream from *parent*."""
    return parent.derive(label)


def sample_real(stream: RngStream, lo: float, hi: float) -> float:
    """Uniform real in [lo, hi); degenerate range returns lo."""
    if lo > hi:
        raise ValueError(f"invalid range: lo={lo} > hi={hi}")
    return lo + (hi - lo) * stream.random()


def sample_int(stream: RngStream, lo: int, hi: int) -> int:
    """Uniform integer in [lo, hi], both ends inclusive."""
    if lo > hi:
        raise ValueError(f"invalid range: lo={lo} > hi={hi}")
    return int(stream._gen.integers(lo, hi, endpoint=True))


def sample_choice(stream: RngStream, items: Sequence, weights: Sequence[float] | None = None):
    """Pick one item, uniformly or by nonnegative weights with positive sum."""
    if len(items) == 0:
        raise ValueError("cannot choose from empty items")
    if weights is None:
        return items[sample_int(stream, 0, len(items) - 1)]
    if len(weights) != len(items):
        raise ValueError("weights length must match items")
    w = np.asarray(weights, dtype=float)
    if np.any(w < 0) or w.sum() <= 0:
        raise ValueError("weights must be nonnegative with positive sum")
    cumulative = np.cumsum(w / w.sum())
    idx = int(np.searchsorted(cumulative, stream.random(), side="right"))
    return items[min(idx, len(items) - 1)]


def _check_range(lo: float, hi: float, name: str) -> None:
    if lo > hi:
        raise ValueError(f"{name}: lo={lo} > hi={hi}")


def _check_unit_range(lo: float, hi: float, name: str) -> None:
    _check_range(lo, hi, name)
    if lo < 0.0 or hi > 1.0:
        raise ValueError(f"{name}: color component range must lie in [0, 1]")


@dataclass(frozen=True)
class RealUniform:
    lo: float
    hi: float

    def __post_init__(self):
        _check_range(self.lo, self.hi, "RealUniform")

    def sample(self, stream: RngStream) -> float:
        return sample_real(stream, self.lo, self.hi)


@dataclass(frozen=True)
class IntUniform:
    lo: int
    hi: int

    def __post_init__(self):
        _check_range(self.lo, self.hi, "IntUniform")

    def sample(self, stream: RngStream) -> int:
        return sample_int(stream, self.lo, self.hi)


@dataclass(frozen=True)
class Choice:
    items: tuple
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "items", tuple(self.items))
        if self.weights is not None:
            object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.items) == 0:
            raise ValueError("Choice: items must be nonempty")
        if self.weights is not None:
            if len(self.weights) != len(self.items):
                raise ValueError("Choice: weights length must match items")
            if any(w < 0 for w in self.weights) or sum(self.weights) <= 0:
                raise ValueError("Choice: weights must be nonnegative with positive sum")

    def sample(self, stream: RngStream):
        return sample_choice(stream, self.items, self.weights)


@dataclass(frozen=True)
class ColorHSV:
    """HSV color with per-component uniform ranges; components stay in [0, 1]."""

    h: tuple[float, float] = (0.0, 1.0)
    s: tuple[float, float] = (0.0, 1.0)
    v: tuple[float, float] = (0.0, 1.0)

    def __post_init__(self):
        for name, rng in (("h", self.h), ("s", self.s), ("v", self.v)):
            _check_unit_range(rng[0], rng[1], f"ColorHSV.{name}")

    def sample(self, stream: RngStream) -> tuple[float, float, float]:
        return (
            sample_real(stream, *self.h),
            sample_real(stream, *self.s),
            sample_real(stream, *self.v),
        )


@dataclass(frozen=True)
class ColorRGBA:
    """RGBA color with per-channel uniform ranges; components stay in [0, 1]."""

    r: tuple[float, float] = (0.0, 1.0)
    g: tuple[float, float] = (0.0, 1.0)
    b: tuple[float, float] = (0.0, 1.0)
    a: tuple[float, float] = (1.0, 1.0)

    def __post_init__(self):
        for name, rng in (("r", self.r), ("g", self.g), ("b", self.b), ("a", self.a)):
            _check_unit_range(rng[0], rng[1], f"ColorRGBA.{name}")

    def sample(self, stream: RngStream) -> tuple[float, float, float, float]:
        return (
            sample_real(stream, *self.r),
            sample_real(stream, *self.g),
            sample_real(stream, *self.b),
            sample_real(stream, *self.a),
        )


@dataclass(frozen=True)
class Cartesian:
    """Per-axis sampler; each axis is a constant or a nested spec."""

    axes: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(self.axes))

    def sample(self, stream: RngStream) -> tuple[float, ...]:
        out = []
        for axis in self.axes:
            if isinstance(axis, (int, float)):
                out.append(float(axis))
            else:
                out.append(float(axis.sample(stream)))
        return tuple(out)


@dataclass(frozen=True)
class EulerY:
    """Yaw about the vertical axis, degrees in [lo, hi)."""

    lo: float
    hi: float

    def __post_init__(self):
        _check_range(self.lo, self.hi, "EulerY")

    def sample(self, stream: RngStream) -> float:
        return sample_real(stream, self.lo, self.hi)


DistributionSpec = (
    RealUniform | IntUniform | Choice | ColorHSV | ColorRGBA | Cartesian | EulerY
)
