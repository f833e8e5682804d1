"""Bundled curve and topology fixtures with provenance-tagged expected values."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from .curve import CurveSpec, validate_curve
from .errors import CurveError, FixtureError

REQUIRED = ("name", "p", "f")


@dataclass(frozen=True)
class Fixture:
    name: str
    curve: CurveSpec
    expected: dict
    provenance: dict
    claims: dict = field(default_factory=dict)  # stated values that are diffed, not trusted


def bundled_path() -> Path:
    return Path(str(resources.files("hyperzeta") / "data" / "fixtures.json"))


def _line_of(text: str, needle: str) -> int:
    pos = text.find(needle)
    return text.count("\n", 0, pos) + 1 if pos >= 0 else 0


def _read(path: Path | str | None) -> tuple[str, object]:
    path = bundled_path() if path is None else Path(path)
    text = path.read_text()
    try:
        return text, json.loads(text)
    except json.JSONDecodeError as e:
        raise FixtureError(f"{path}:{e.lineno}:{e.colno}: {e.msg}") from None


def load_fixtures(path: Path | str | None = None) -> list[Fixture]:
    """Curve fixtures from a JSON file: a list of entries or {"curves": [...]}."""
    text, data = _read(path)
    entries = data.get("curves", []) if isinstance(data, dict) else data
    if not isinstance(entries, list):
        raise FixtureError("curve fixtures must be a list")
    out, seen = [], set()
    for k, entry in enumerate(entries):
        where = f"fixture {k}"
        if isinstance(entry, dict) and "name" in entry:
            where = f"line {_line_of(text, json.dumps(entry['name']))}: fixture {entry['name']!r}"
        if not isinstance(entry, dict):
            raise FixtureError(f"{where}: expected an object")
        missing = [key for key in REQUIRED if key not in entry]
        if missing:
            raise FixtureError(f"{where}: missing {', '.join(missing)}")
        if entry["name"] in seen:
            raise FixtureError(f"{where}: duplicate name")
        seen.add(entry["name"])
        expected = entry.get("expected", {})
        provenance = entry.get("provenance", {})
        untagged = [key for key in expected if key not in provenance]
        if untagged:
            raise FixtureError(f"{where}: expected values without provenance: {', '.join(untagged)}")
        try:
            curve = validate_curve(int(entry["p"]), str(entry["f"]))
        except (CurveError, ValueError) as e:
            raise FixtureError(f"{where}: {type(e).__name__}: {e}") from None
        out.append(Fixture(entry["name"], curve, expected, provenance, entry.get("claims", {})))
    return out


def fixture_by_name(name: str, path: Path | str | None = None) -> Fixture:
    for fx in load_fixtures(path):
        if fx.name == name:
            return fx
    raise KeyError(name)


def load_topology(path: Path | str | None = None) -> tuple[dict, list]:
    _, data = _read(path)
    if not isinstance(data, dict):
        return {}, []
    return data.get("complexes", {}), data.get("covers", [])
