"""Abstract asset catalogs: scenes, panoramas, lighting volumes, characters, clips.

Clips are parametric stand-ins for real animation data: each one contributes an
action label, a translation speed, a phase cycle, and style parameters.  No
mesh/keyframe content is stored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .rng import RngStream, sample_real


class AtomicAction(str, Enum):
    WALK = "walk"
    RUN = "run"
    DANCE = "dance"
    IDLE = "idle"
    TEXT = "text"
    TALK = "talk"
    POINT = "point"
    WAVE = "wave"
    # reserved slots so the registry always holds 14 classes
    RESERVED_1 = "reserved_1"
    RESERVED_2 = "reserved_2"
    RESERVED_3 = "reserved_3"
    RESERVED_4 = "reserved_4"
    RESERVED_5 = "reserved_5"
    RESERVED_6 = "reserved_6"


ACTION_CLASSES: tuple[AtomicAction, ...] = tuple(AtomicAction)

# actions that never translate the character
IN_PLACE_ACTIONS = frozenset(
    a for a in AtomicAction if a not in (AtomicAction.WALK, AtomicAction.RUN)
)

LOCOMOTION_SPEEDS = {AtomicAction.WALK: 1.4, AtomicAction.RUN: 3.0}

DEFAULT_SHOULDER_WIDTH = 0.45
HEIGHT_RANGE = (1.5, 1.9)


@dataclass(frozen=True)
class CharacterAsset:
    id: str
    height: float
    shoulder_width: float = DEFAULT_SHOULDER_WIDTH
    metadata: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.height <= 0 or self.shoulder_width <= 0:
            raise ValueError(f"character {self.id}: dimensions must be positive")


@dataclass(frozen=True)
class ClipAsset:
    id: str
    action_class: AtomicAction
    nominal_speed: float  # m/s at unit animation-speed factor; 0 for in-place actions
    cycle_length: float  # seconds per cycle at unit factor
    style_params: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        if self.cycle_length <= 0:
            raise ValueError(f"clip {self.id}: cycle_length must be positive")
        if self.nominal_speed < 0:
            raise ValueError(f"clip {self.id}: nominal_speed must be >= 0")
        if self.action_class in (AtomicAction.WALK, AtomicAction.RUN) and self.nominal_speed <= 0:
            raise ValueError(f"clip {self.id}: locomotion clips need nominal_speed > 0")

    def style(self, name: str, default: float = 0.5) -> float:
        for key, value in self.style_params:
            if key == name:
                return value
        return default

    def stride_factor(self) -> float:
        """Translation-speed multiplier from the stride style, in [0.9, 1.1]."""
        return 0.9 + 0.2 * self.style("stride")


@dataclass(frozen=True)
class AssetCatalog:
    scenes: tuple[str, ...]
    hdris: tuple[str, ...]
    lighting_volumes: tuple[str, ...]
    characters: tuple[CharacterAsset, ...]
    clips: tuple[ClipAsset, ...]

    def __post_init__(self):
        for name, items in (
            ("scenes", self.scenes),
            ("hdris", self.hdris),
            ("lighting_volumes", self.lighting_volumes),
            ("characters", self.characters),
            ("clips", self.clips),
        ):
            if len(items) == 0:
                raise ValueError(f"catalog category {name} is empty")
        by_action: dict[AtomicAction, list[ClipAsset]] = {}
        for clip in self.clips:
            by_action.setdefault(clip.action_class, []).append(clip)
        object.__setattr__(self, "_clips_by_action", by_action)
        object.__setattr__(self, "_by_id", {c.id: c for c in self.characters})
        object.__setattr__(self, "_clip_by_id", {c.id: c for c in self.clips})

    def clips_for(self, action: AtomicAction) -> list[ClipAsset]:
        clips = self._clips_by_action.get(action, [])
        if not clips:
            raise ValueError(f"no clips registered for action {action.value}")
        return clips

    def character(self, character_id: str) -> CharacterAsset:
        return self._by_id[character_id]

    def clip(self, clip_id: str) -> ClipAsset:
        return self._clip_by_id[clip_id]


def build_default_catalog(config, rng: RngStream) -> AssetCatalog:
    """Build a catalog with the configured category counts.

    Character heights draw uniformly from [1.5, 1.9] m; shoulder width defaults
    to 0.45 m for everyone (uniform collision threshold).  Clips cover all 14
    action classes round-robin, with nominal speeds 1.4 m/s (walk), 3.0 m/s
    (run) and 0 for in-place actions.
    """
    counts = config.catalog
    for name, count in (
        ("scenes", counts.scenes),
        ("hdris", counts.hdris),
        ("lighting_volumes", counts.lighting_volumes),
        ("characters", counts.characters),
        ("clips", counts.clips),
    ):
        if count < 1:
            raise ValueError(f"catalog count {name} must be >= 1")

    scenes = tuple(f"scene_{i:03d}" for i in range(counts.scenes))
    hdris = tuple(f"hdri_{i:03d}" for i in range(counts.hdris))
    volumes = tuple(f"volume_{i:02d}" for i in range(counts.lighting_volumes))

    char_rng = rng.derive("characters")
    characters = tuple(
        CharacterAsset(
            id=f"char_{i:04d}",
            height=sample_real(char_rng, *HEIGHT_RANGE),
            shoulder_width=DEFAULT_SHOULDER_WIDTH,
        )
        for i in range(counts.characters)
    )

    clip_rng = rng.derive("clips")
    clips = []
    for i in range(counts.clips):
        action = ACTION_CLASSES[i % len(ACTION_CLASSES)]
        clips.append(
            ClipAsset(
                id=f"clip_{i:04d}",
                action_class=action,
                nominal_speed=LOCOMOTION_SPEEDS.get(action, 0.0),
                cycle_length=sample_real(clip_rng, 0.8, 2.0),
                style_params=(
                    ("arm_space", sample_real(clip_rng, 0.0, 1.0)),
                    ("stride", sample_real(clip_rng, 0.0, 1.0)),
                ),
            )
        )

    catalog = AssetCatalog(scenes, hdris, volumes, characters, tuple(clips))
    if counts.override_path:
        catalog = apply_catalog_override(catalog, Path(counts.override_path))
    return catalog


def apply_catalog_override(catalog: AssetCatalog, path: Path) -> AssetCatalog:
    """Replace characters and/or clips from a JSON override file.

    Expected document: {"characters": [{"id", "height", "shoulder_width"?}],
    "clips": [{"id", "action", "nominal_speed"?, "cycle_length"?, "arm_space"?,
    "stride"?}]}.  Categories absent from the file keep the generated assets.
    """
    doc = json.loads(Path(path).read_text())
    characters = catalog.characters
    clips = catalog.clips
    if "characters" in doc:
        characters = tuple(
            CharacterAsset(
                id=entry["id"],
                height=float(entry["height"]),
                shoulder_width=float(entry.get("shoulder_width", DEFAULT_SHOULDER_WIDTH)),
            )
            for entry in doc["characters"]
        )
    if "clips" in doc:
        clips = tuple(
            ClipAsset(
                id=entry["id"],
                action_class=AtomicAction(entry["action"]),
                nominal_speed=float(
                    entry.get(
                        "nominal_speed",
                        LOCOMOTION_SPEEDS.get(AtomicAction(entry["action"]), 0.0),
                    )
                ),
                cycle_length=float(entry.get("cycle_length", 1.0)),
                style_params=(
                    ("arm_space", float(entry.get("arm_space", 0.5))),
                    ("stride", float(entry.get("stride", 0.5))),
                ),
            )
            for entry in doc["clips"]
        )
    return AssetCatalog(catalog.scenes, catalog.hdris, catalog.lighting_volumes, characters, clips)
