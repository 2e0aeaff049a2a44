"""Scenario files: TOML tables ``[economy] [skills] [preference] [rent] [simulation]``.

Example::

    [economy]
    label = "custom"
    preset = "paper-2024"   # optional starting point
    c = 0.06                # overrides the preset's c
    b = 5.4                 # or a = 221.4, not both

    [skills]
    mu = 100
    sigma = 15

    [preference]
    phi = 2.5

    [rent]
    alpha = 0.5

    [simulation]
    n = 100000
    seed = 7
"""

from __future__ import annotations

import sys
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .bellcurve import RentShare
from .economy import Economy, SkillDistribution, Technology
from .errors import ModelDomainError
from .montecarlo import SimulationConfig
from .preferences import Preference
from .report import Scenario, preset

__all__ = ["ScenarioError", "load_scenario", "parse_scenario"]

_SCHEMA = {
    "economy": {"label": str, "preset": str, "a": float, "b": float, "c": float},
    "skills": {"mu": float, "sigma": float},
    "preference": {"phi": float},
    "rent": {"alpha": float},
    "simulation": {"n": int, "seed": int, "workers": int},
}


class ScenarioError(ValueError):
    """Malformed scenario file; the message names the offending table/key."""


def _typed(section, key, value, kind):
    if kind is str:
        if not isinstance(value, str):
            raise ScenarioError(f"[{section}] {key}: expected a string, got {value!r}")
        return value
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ScenarioError(f"[{section}] {key}: expected a number, got {value!r}")
    if kind is int and not isinstance(value, int):
        raise ScenarioError(f"[{section}] {key}: expected an integer, got {value!r}")
    return kind(value)


def parse_scenario(text: str, source: str = "<scenario>", recalibrate: bool = False) -> Scenario:
    try:
        doc = tomllib.loads(text)
    except tomllib.TOMLDecodeError as exc:
        raise ScenarioError(f"{source}: {exc}") from None

    tables = {}
    for section, body in doc.items():
        if section not in _SCHEMA:
            raise ScenarioError(f"{source}: unknown table [{section}]")
        if not isinstance(body, dict):
            raise ScenarioError(f"{source}: {section} must be a table")
        for key, value in body.items():
            if key not in _SCHEMA[section]:
                raise ScenarioError(f"{source}: [{section}] unknown key {key!r}")
            try:
                tables.setdefault(section, {})[key] = _typed(section, key, value, _SCHEMA[section][key])
            except ScenarioError as exc:
                raise ScenarioError(f"{source}: {exc}") from None

    econ_t = tables.get("economy", {})
    try:
        base = preset(econ_t["preset"], recalibrate) if "preset" in econ_t else None
        if "a" in econ_t and "b" in econ_t:
            raise ScenarioError(f"{source}: [economy] give a or b, not both")
        tech = base.economy.tech if base else None
        if tech is None and not ("c" in econ_t and ("a" in econ_t or "b" in econ_t)):
            raise ScenarioError(f"{source}: [economy] needs c and one of a/b (or a preset)")
        c = econ_t.get("c", tech.c_coef if tech else None)
        if "a" in econ_t:
            tech = Technology.from_level(econ_t["a"], c)
        elif "b" in econ_t:
            tech = Technology.from_log(econ_t["b"], c)
        else:
            tech = Technology.from_log(tech.b_coef, c)

        skills_t = tables.get("skills", {})
        skills0 = base.economy.skills if base else SkillDistribution()
        skills = SkillDistribution(skills_t.get("mu", skills0.mu), skills_t.get("sigma", skills0.sigma))

        pref = Preference(tables["preference"]["phi"]) if "phi" in tables.get("preference", {}) else None
        rent = RentShare(tables["rent"]["alpha"]) if "alpha" in tables.get("rent", {}) else None
        sim = SimulationConfig(**tables["simulation"]) if "simulation" in tables else None
    except ModelDomainError as exc:
        raise ScenarioError(f"{source}: {exc}") from None

    label = econ_t.get("label", base.label if base else Path(source).stem)
    economy = Economy(tech, skills)
    # a preset tag is kept only while the preset's economy is untouched
    tag = base.preset if base is not None and base.economy == economy else "none"
    return Scenario(label=label, economy=economy, preference=pref, rent=rent,
                    simulation=sim, preset=tag)


def load_scenario(path, recalibrate: bool = False) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"{path}: {exc.strerror}") from None
    return parse_scenario(text, str(path), recalibrate)
