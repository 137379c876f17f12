"""Job configuration: loading, schema validation and object construction."""

import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

import jsonschema

from ..galois import (ExtensionPresentation, cyclic_cubic_fixture, quadratic_fixture,
                      trivial_fixture)
from ..normform import quaternion_algebra
from ..poly import Poly
from ..ratfunc import KT
from ..structalg import StructureAlgebra, matrix_algebra

SCHEMA_VERSION = "1"
FIXTURES = {
    "quadratic": quadratic_fixture,
    "cyclic-cubic": cyclic_cubic_fixture,
    "trivial": trivial_fixture,
}


class ConfigError(ValueError):
    """The configuration is malformed or refers to something undefined."""


def load_schema(name):
    text = resources.files("skewgalois").joinpath("schemas", f"{name}-v{SCHEMA_VERSION}.json")
    return json.loads(text.read_text(encoding="utf-8"))


def input_digest(doc):
    canon = json.dumps(doc, sort_keys=True, separators=(",", ":"), ensure_ascii=False)
    return "sha256:" + hashlib.sha256(canon.encode("utf-8")).hexdigest()


@dataclass
class JobConfig:
    algebra: StructureAlgebra
    extensions: dict
    tasks: list
    series_order: int = 16
    seed: int = 0
    digest: str = ""
    raw: dict = field(default_factory=dict, repr=False)


def _tpoly(coeffs):
    return Poly([Fraction(c) for c in coeffs])


def _tratfunc(spec):
    if isinstance(spec, dict):
        den = _tpoly(spec["den"])
        if not den:
            raise ConfigError("rational function with zero denominator")
        return KT.convert(_tpoly(spec["num"])) / KT.convert(den)
    return KT.convert(_tpoly(spec))


def build_algebra(spec):
    if "quaternion" in spec:
        a, b = (Fraction(c) for c in spec["quaternion"])
        if not a or not b:
            raise ConfigError("quaternion symbol entries must be nonzero")
        return quaternion_algebra(a, b)
    if "matrix" in spec:
        return matrix_algebra(spec["matrix"])
    table = spec["table"]
    d = len(table)
    if any(len(row) != d or any(len(v) != d for v in row) for row in table):
        raise ConfigError(f"structure table must be {d} x {d} x {d}")
    unit = spec.get("unit")
    if unit is not None and len(unit) != d:
        raise ConfigError("unit vector has the wrong length")
    names = spec.get("names")
    if names is not None and len(names) != d:
        raise ConfigError("names list has the wrong length")
    return StructureAlgebra([[[Fraction(c) for c in v] for v in row] for row in table],
                            unit=None if unit is None else [Fraction(c) for c in unit],
                            names=names)


def build_extension(name, spec):
    if "fixture" in spec:
        return FIXTURES[spec["fixture"]]()
    min_poly = Poly([KT.convert(_tpoly(r)) for r in spec["min_poly"]], KT)
    if not min_poly.is_monic():
        raise ConfigError(f"extension {name!r}: minimal polynomial must be monic in y")
    autos = [Poly([_tratfunc(c) for c in image], KT) for image in spec["automorphisms"]]
    return ExtensionPresentation(min_poly, autos, name)


def parse_config(doc, order=None, seed=None):
    """Validate a decoded JSON document and build a JobConfig."""
    try:
        jsonschema.validate(doc, load_schema("config"))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"schema violation at {where}: {exc.message}") from None
    extensions = doc.get("extensions", {})
    names = set()
    for task in doc["tasks"]:
        if task["name"] in names:
            raise ConfigError(f"duplicate task name {task['name']!r}")
        names.add(task["name"])
        ref = task.get("extension")
        if ref is not None and ref not in extensions:
            raise ConfigError(f"task {task['name']!r} refers to missing extension {ref!r}")
    algebra = build_algebra(doc["algebra"])
    built = {name: build_extension(name, spec) for name, spec in extensions.items()}
    return JobConfig(
        algebra=algebra,
        extensions=built,
        tasks=list(doc["tasks"]),
        series_order=order if order is not None else doc.get("series_order", 16),
        seed=seed if seed is not None else doc.get("seed", 0),
        digest=input_digest(doc),
        raw=doc,
    )


def load_config(path, order=None, seed=None):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if order is not None and order < 2:
        raise ConfigError("series order must be at least 2")
    return parse_config(doc, order, seed)


def algebra_from_text(text):
    """'hamilton', 'quaternion:a,b' or 'matrix:n'."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "hamilton" and not arg:
            return quaternion_algebra(-1, -1)
        if kind == "quaternion":
            a, b = (Fraction(x) for x in arg.split(","))
            if a and b:
                return quaternion_algebra(a, b)
        if kind == "matrix":
            n = int(arg)
            if 1 <= n <= 4:
                return matrix_algebra(n)
    except ValueError:
        pass
    raise ConfigError(f"unknown algebra {text!r}; use hamilton, quaternion:a,b or matrix:n")
