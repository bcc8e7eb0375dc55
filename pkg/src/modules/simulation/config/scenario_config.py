"""Scenario presets and configuration assembly.

Sources are layered with a fixed precedence: defaults < preset < scenario file
< command-line flags, later layers winning field by field.
"""

from collections.abc import Mapping
from dataclasses import replace
from typing import Any

from src.modules.core.domain.geometry import Point
from src.modules.core.infra.documents.config_document import SimConfigDocument
from src.modules.network.domain.config import SimConfig

PRESETS: dict[str, dict[str, Any]] = {
    "n50": {"node_count": 50},
    "n100": {"node_count": 100},
    "n150": {"node_count": 150},
}


class UnknownPreset(Exception):
    """Raised when a preset name is not one of ``PRESETS``."""

    def __init__(self, name: str) -> None:
        """Initialize with the offending name."""
        self.name: str = name
        super().__init__(
            f"unknown preset {name!r}; valid presets: {', '.join(sorted(PRESETS))}"
        )


def _apply(config: SimConfig, fields: Mapping[str, Any]) -> SimConfig:
    changes = {name: value for name, value in fields.items() if value is not None}
    radio = changes.pop("radio", None)
    harvest = changes.pop("harvest", None)
    for name in ("bs_position", "depot_position"):
        if name in changes and not isinstance(changes[name], Point):
            x, y = changes[name]
            changes[name] = Point(float(x), float(y))
    if radio:
        changes["radio"] = replace(
            config.radio, **{k: v for k, v in radio.items() if v is not None}
        )
    if harvest:
        changes["harvest"] = replace(
            config.harvest, **{k: v for k, v in harvest.items() if v is not None}
        )
    return replace(config, **changes)


def build_config(
    preset: str | None = None,
    document: SimConfigDocument | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> SimConfig:
    """Assemble a configuration from its layered sources.

    Args:
        preset: Name of a preset in ``PRESETS``.
        document: Parsed scenario file.
        overrides: ``SimConfig`` field values from command-line flags; ``None``
            values mean the flag was not given.

    Returns:
        The merged configuration, not yet validated.

    Raises:
        UnknownPreset: If ``preset`` is not a known name.
        ValueError: If a position is not a finite point.
    """
    config = SimConfig()
    if preset is not None:
        if preset not in PRESETS:
            raise UnknownPreset(preset)
        config = _apply(config, PRESETS[preset])
    if document is not None:
        config = _apply(config, document.overrides())
    if overrides:
        config = _apply(config, overrides)
    return config
