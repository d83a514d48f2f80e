"""Loaders for the example shifts and block maps shipped with the package."""

from __future__ import annotations

from importlib import resources

from .base import CellularAutomaton
from .shift import Shift
from .shiftio import RawCa, bind_ca, parse_ca_text, parse_shift_text


def _fixture_dir():
    return resources.files("soficlab") / "fixtures"


def bundled_names() -> tuple[tuple[str, ...], tuple[str, ...]]:
    """(shift names, block-map names), each sorted."""
    shifts, cas = [], []
    for entry in _fixture_dir().iterdir():
        if entry.name.endswith(".shift"):
            shifts.append(entry.name[:-len(".shift")])
        elif entry.name.endswith(".ca"):
            cas.append(entry.name[:-len(".ca")])
    return tuple(sorted(shifts)), tuple(sorted(cas))


def bundled_shift(name: str) -> Shift:
    path = _fixture_dir() / f"{name}.shift"
    return parse_shift_text(path.read_text(encoding="utf-8"), name=f"{name}.shift")


def bundled_raw_ca(name: str) -> RawCa:
    path = _fixture_dir() / f"{name}.ca"
    return parse_ca_text(path.read_text(encoding="utf-8"), name=f"{name}.ca")


def bundled_ca(name: str, shift: Shift) -> CellularAutomaton:
    """The named block map bound over the alphabet of ``shift``."""
    return bind_ca(bundled_raw_ca(name), shift.alphabet)
