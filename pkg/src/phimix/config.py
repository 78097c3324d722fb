"""Declarative experiment configs: strict TOML parsing and validation.

Configs are plain TOML with no embedded code.  Parsing is strict: unknown
keys anywhere in the file are rejected, required keys must be present, and
enumerated fields are checked against their choices.  The validated config
is a plain nested dict with defaults filled in.
"""

from __future__ import annotations

from dataclasses import dataclass

try:
    import tomllib
except ModuleNotFoundError:          # Python 3.10
    import tomli as tomllib

__all__ = ["ConfigError", "KINDS", "load_config", "validate_config",
           "build_mixing"]

KINDS = ("pgf", "lemma22", "converge-sum", "converge-max", "mid-check",
         "subordinate", "classl", "ns-check")


class ConfigError(Exception):
    """Raised for malformed or inconsistent experiment configs."""


@dataclass(frozen=True)
class Field:
    """One schema slot: scalar type, requiredness, default, choices."""

    type: str
    required: bool = False
    default: object = None
    choices: tuple = None


def _table(schema, required=False, default=None):
    return Field("table", required=required, default=default), schema


def _check_scalar(field, value, path):
    if field.type == "int":
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{path}: expected an integer")
        return int(value)
    if field.type == "float":
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{path}: expected a number")
        return float(value)
    if field.type == "str":
        if not isinstance(value, str):
            raise ConfigError(f"{path}: expected a string")
        if field.choices and value not in field.choices:
            raise ConfigError(
                f"{path}: {value!r} is not one of {list(field.choices)}")
        return value
    if field.type == "bool":
        if not isinstance(value, bool):
            raise ConfigError(f"{path}: expected a boolean")
        return value
    if field.type == "float_list":
        if not isinstance(value, list) or not value or any(
                isinstance(v, bool) or not isinstance(v, (int, float))
                for v in value):
            raise ConfigError(f"{path}: expected a non-empty number list")
        return [float(v) for v in value]
    raise ConfigError(f"{path}: unhandled field type {field.type!r}")


def _walk(data, schema, path):
    if not isinstance(data, dict):
        raise ConfigError(f"{path or 'config'}: expected a table")
    known = set(schema)
    unknown = set(data) - known
    if unknown:
        where = f"{path}." if path else ""
        raise ConfigError(
            f"unknown key {where}{sorted(unknown)[0]!r}")
    out = {}
    for name, spec in schema.items():
        sub = f"{path}.{name}" if path else name
        if isinstance(spec, tuple):
            field, inner = spec
            if name not in data:
                if field.required:
                    raise ConfigError(f"missing required table {sub!r}")
                out[name] = field.default
            elif field.type == "table":
                out[name] = _walk(data[name], inner, sub)
            else:   # table_list
                if not isinstance(data[name], list) or not data[name]:
                    raise ConfigError(f"{sub}: expected a non-empty list"
                                      " of tables")
                out[name] = [
                    _walk(item, inner, f"{sub}[{i}]")
                    for i, item in enumerate(data[name])]
        else:
            if name not in data:
                if spec.required:
                    raise ConfigError(f"missing required key {sub!r}")
                out[name] = spec.default
            else:
                out[name] = _check_scalar(spec, data[name], sub)
    return out


_MIXING = {
    "kind": Field("str", required=True,
                  choices=("gamma", "exponential", "degenerate")),
    "shape": Field("float"),
    "scale": Field("float"),
    "point": Field("float"),
}


def build_mixing(table, path="mixing"):
    """Construct the MixingLaw described by a validated mixing table."""
    from .mixing import MixingLaw

    kind = table["kind"]
    try:
        if kind == "gamma":
            if table["shape"] is None:
                raise ConfigError(f"{path}: gamma mixing needs 'shape'")
            return MixingLaw.gamma(table["shape"],
                                   table["scale"] if table["scale"]
                                   is not None else 1.0)
        if kind == "exponential":
            return MixingLaw.exponential(table["scale"] if table["scale"]
                                         is not None else 1.0)
        if table["point"] is None:
            raise ConfigError(f"{path}: degenerate mixing needs 'point'")
        return MixingLaw.degenerate(table["point"])
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from exc


_COUNTING = {
    "mixing": _table(_MIXING, required=True),
    "shift": Field("int", default=0),
    "stride": Field("int", default=1),
    "scale_rule": Field("str", default="fixed",
                        choices=("fixed", "complement-theta")),
}

_COUNTING_WITH_THETA = dict(_COUNTING)
_COUNTING_WITH_THETA["theta"] = Field("float", required=True)

_ID = {
    "lambda": Field("float", default=1.0),
    "alpha": Field("float", required=True),
    "beta": Field("float", default=0.0),
}

_GRID = {
    "lo": Field("float", default=-5.0),
    "hi": Field("float", default=5.0),
    "points": Field("int", default=61),
}

_LOG_GRID = {
    "lo": Field("float", default=0.5),
    "hi": Field("float", default=8.0),
    "points": Field("int", default=7),
    "log": Field("bool", default=True),
}

_COMMON = {
    "kind": Field("str", required=True, choices=KINDS),
    "seed": Field("int", default=42),
    "samples": Field("int", default=100000),
    "out": Field("str"),
}


def _with_common(extra):
    schema = dict(_COMMON)
    schema.update(extra)
    return schema


SCHEMAS = {
    "pgf": _with_common({
        "counting": _table(_COUNTING_WITH_THETA, required=True),
        "m_max": Field("int", default=40),
        "thresholds": _table({
            "sigmas": Field("float", default=4.0),
        }, default={"sigmas": 4.0}),
    }),
    "lemma22": _with_common({
        "theta": Field("float_list", default=[0.1, 0.01, 0.001]),
        "counting": _table(_COUNTING, required=True),
        "grid": _table({
            "lo": Field("float", default=0.1),
            "hi": Field("float", default=5.0),
            "points": Field("int", default=50),
        }, default={"lo": 0.1, "hi": 5.0, "points": 50}),
        "thresholds": _table({
            "final": Field("float", default=1e-2),
            "decreasing": Field("bool", default=True),
        }, default={"final": 1e-2, "decreasing": True}),
    }),
    "converge-sum": _with_common({
        "theta": Field("float_list", required=True),
        "counting": _table(_COUNTING, required=True),
        "increments": _table({
            "kind": Field("str", required=True,
                          choices=("stable", "cauchy", "gaussian",
                                   "exponential")),
            "lambda": Field("float", default=1.0),
            "alpha": Field("float"),
            "beta": Field("float", default=0.0),
            "scale": Field("float", default=1.0),
        }, required=True),
        "norming": _table({
            "alpha": Field("float", required=True),
            "stride_adjusted": Field("bool", default=True),
        }, required=True),
        "target": _table({
            "kind": Field("str", required=True,
                          choices=("linnik", "stable", "exponential-df")),
            "lambda": Field("float", default=1.0),
            "alpha": Field("float"),
            "beta": Field("float", default=0.0),
            "nu": Field("float", default=1.0),
            "scale": Field("float", default=1.0),
        }, required=True),
        "grid": _table(_GRID, default={"lo": -5.0, "hi": 5.0, "points": 61}),
        "thresholds": _table({
            "final": Field("float", default=0.02),
            "decreasing": Field("bool", default=True),
            "ks": Field("float", default=0.01),
        }, default={"final": 0.02, "decreasing": True, "ks": 0.01}),
    }),
    "converge-max": _with_common({
        "theta": Field("float_list", required=True),
        "counting": _table(_COUNTING, required=True),
        "increments": _table({
            "kind": Field("str", required=True, choices=("frechet",)),
            "gamma": Field("float_list", default=[1.0, 1.0]),
        }, required=True),
        "norming": _table({
            "stride_adjusted": Field("bool", default=True),
        }, default={"stride_adjusted": True}),
        "target": _table({
            "kind": Field("str", required=True, choices=("mid-mixture",)),
            "mixing": _table(_MIXING, required=True),
        }, required=True),
        "grid": _table(_LOG_GRID,
                       default={"lo": 0.5, "hi": 8.0, "points": 7,
                                "log": True}),
        "thresholds": _table({
            "final": Field("float", default=0.02),
            "decreasing": Field("bool", default=True),
        }, default={"final": 0.02, "decreasing": True}),
    }),
    "mid-check": _with_common({
        "laws": (Field("table_list", required=True), {
            "kind": Field("str", required=True,
                          choices=("product-frechet", "product-exponential",
                                   "l-shaped-fixture", "nqd-fixture")),
            "gamma": Field("float_list", default=[1.0, 1.0]),
            "axis": Field("float_list"),
            "expect": Field("str", default="pass", choices=("pass", "fail")),
        }),
        "powers": Field("float_list", default=[0.5, 1.0, 2.0, 5.0]),
        "grid": _table(_LOG_GRID,
                       default={"lo": 0.5, "hi": 8.0, "points": 7,
                                "log": True}),
        "sample": _table({
            "mixing": _table(_MIXING, required=True),
            "gamma": Field("float_list", default=[1.0, 1.0]),
            "grid": _table(_LOG_GRID,
                           default={"lo": 0.5, "hi": 8.0, "points": 7,
                                    "log": True}),
            "spot": Field("float_list"),
            "thresholds": _table({
                "final": Field("float", default=0.01),
                "spot": Field("float", default=0.01),
            }, default={"final": 0.01, "spot": 0.01}),
        }),
    }),
    "subordinate": _with_common({
        "id": _table(_ID, required=True),
        "directing": _table(_MIXING, required=True),
        "times": Field("float_list", default=[1.0]),
        "grid": _table(_GRID, default={"lo": -5.0, "hi": 5.0, "points": 61}),
        "thresholds": _table({
            "cf": Field("float"),
            "two_sample": Field("bool", default=False),
            "two_sample_level": Field("float", default=0.01),
            "ks_target": Field("str",
                               choices=("laplace", "exponential")),
            "ks": Field("float", default=0.01),
        }, default={"cf": None, "two_sample": False,
                    "two_sample_level": 0.01, "ks_target": None,
                    "ks": 0.01}),
    }),
    "classl": _with_common({
        "subjects": (Field("table_list", required=True), {
            "kind": Field("str", required=True,
                          choices=("gamma", "exponential", "degenerate",
                                   "linnik", "gaussian",
                                   "bernoulli-fixture", "uniform-fixture")),
            "shape": Field("float", default=1.0),
            "scale": Field("float", default=1.0),
            "point": Field("float", default=1.0),
            "lambda": Field("float", default=1.0),
            "alpha": Field("float", default=1.0),
            "beta": Field("float", default=0.0),
            "nu": Field("float", default=1.0),
            "expect": Field("str", default="pass", choices=("pass", "fail")),
        }),
        "c_grid": Field("float_list", default=[0.3, 0.5, 0.7]),
        "factor_grid": _table({
            "s_max": Field("float", default=10.0),
            "anchors": Field("int", default=25),
        }, default={"s_max": 10.0, "anchors": 25}),
        "cf_grid": _table({
            "t_max": Field("float", default=5.0),
            "points": Field("int", default=41),
        }, default={"t_max": 5.0, "points": 41}),
    }),
    "ns-check": _with_common({
        "theta": Field("float_list", default=[0.1, 0.01]),
        "id": _table(_ID, required=True),
        "grid": _table(_GRID, default={"lo": -1.0, "hi": 1.0, "points": 61}),
        "thresholds": _table({
            "final": Field("float", default=1e-2),
            "decreasing": Field("bool", default=True),
        }, default={"final": 1e-2, "decreasing": True}),
    }),
}


def validate_config(data):
    """Validate a parsed TOML table; returns the config with defaults."""
    if not isinstance(data, dict):
        raise ConfigError("config root must be a table")
    kind = data.get("kind")
    if kind not in KINDS:
        raise ConfigError(
            f"config needs kind = one of {list(KINDS)}, got {kind!r}")
    cfg = _walk(data, SCHEMAS[kind], "")
    theta = cfg.get("theta")
    if theta is not None:
        if any(t <= 0.0 for t in theta):
            raise ConfigError("theta values must be positive")
        if len(theta) > 1 and not all(
                a > b for a, b in zip(theta, theta[1:])):
            raise ConfigError("theta sequence must be strictly decreasing")
    return cfg


def load_config(path):
    """Read, parse, and validate a config file.

    Returns
    -------
    cfg : dict
        Validated config with defaults applied.
    raw : str
        Raw file text, echoed into report headers.
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            raw = handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        data = tomllib.loads(raw)
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"invalid TOML in {path}: {exc}") from exc
    return validate_config(data), raw
