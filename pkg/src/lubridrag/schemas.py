"""JSON Schemas (draft 2020-12) for every document the CLI emits."""

_NUMBER = {"type": "number"}
_NULLABLE_NUMBER = {"type": ["number", "null"]}

ERROR = {
    "type": "object",
    "required": ["error"],
    "additionalProperties": False,
    "properties": {
        "error": {
            "type": "object",
            "required": ["kind", "message"],
            "additionalProperties": False,
            "properties": {"kind": {"type": "string"}, "message": {"type": "string"}},
        }
    },
}

_ESTIMATE_PROPERTIES = {
    "value": _NUMBER,
    "method": {"enum": ["exact_integral", "asymptotic", "lower_bound", "upper_bound"]},
    "regime": _NUMBER,
    "err_estimate": _NUMBER,
    "branch": {"type": "string"},
    "warning": {"type": "string"},
}

_PARAM_PROPERTIES = {
    "h": _NUMBER,
    "eps": _NUMBER,
    "alpha": _NUMBER,
    "r0": _NUMBER,
    "beta_s": _NUMBER,
    "beta_p": _NUMBER,
    "lambda": _NUMBER,
    "beta_eff": _NUMBER,
}

DRAG = {
    "type": "object",
    "required": ["command", "model", "h", "value", "method"],
    "properties": {
        "command": {"enum": ["drag", "asym"]},
        "model": {"enum": ["noslip", "slip", "corrugated"]},
        **_PARAM_PROPERTIES,
        **_ESTIMATE_PROPERTIES,
        "lower_bound": _NUMBER,
        "upper_bound": _NUMBER,
    },
    "additionalProperties": False,
}

SWEEP = {
    "type": "object",
    "required": ["command", "model", "columns", "rows"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "sweep"},
        "model": {"enum": ["noslip", "slip", "corrugated"]},
        "columns": {"type": "array", "items": {"type": "string"}},
        "rows": {
            "type": "array",
            "items": {"type": "array", "items": {"type": ["number", "string", "null"]}},
        },
    },
}

ORACLE = {
    "type": "object",
    "required": ["command", "bc", "n", "energy", "continuum_energy", "continuum_gap",
                 "max_abs_gap", "energy_gap"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "oracle"},
        "bc": {"enum": ["clamped", "robin"]},
        "n": {"type": "integer", "minimum": 8},
        "alpha_s": _NUMBER,
        "alpha_p": _NUMBER,
        "energy": _NUMBER,
        "continuum_energy": _NUMBER,
        "continuum_gap": _NUMBER,
        "max_abs_gap": _NUMBER,
        "energy_gap": _NUMBER,
    },
}

SIMULATE = {
    "type": "object",
    "required": ["command", "model", "h0", "v0", "outcome", "samples"],
    "additionalProperties": False,
    "properties": {
        "command": {"const": "simulate"},
        "model": {"enum": ["noslip", "slip", "corrugated"]},
        "h0": _NUMBER,
        "v0": _NUMBER,
        "outcome": {
            "type": "object",
            "required": ["kind"],
            "additionalProperties": False,
            "properties": {
                "kind": {"enum": ["contact", "rest", "truncated"]},
                "t": _NUMBER,
                "h_star": _NUMBER,
                "t_max": _NUMBER,
            },
        },
        "samples": {
            "type": "object",
            "required": ["t", "h", "v"],
            "additionalProperties": False,
            "properties": {k: {"type": "array", "items": _NUMBER} for k in ("t", "h", "v")},
        },
    },
}

_CONSTANTS_ROW = {
    "type": "object",
    "required": ["alpha", "lambda_alpha", "mu_alpha", "log_case"],
    "additionalProperties": False,
    "properties": {
        "alpha": _NUMBER,
        "lambda_alpha": _NUMBER,
        "mu_alpha": _NULLABLE_NUMBER,
        "log_case": {"type": "boolean"},
    },
}

CONSTANTS = {
    "oneOf": [
        {
            "type": "object",
            "required": ["command", *_CONSTANTS_ROW["required"]],
            "additionalProperties": False,
            "properties": {"command": {"const": "constants"}, **_CONSTANTS_ROW["properties"]},
        },
        {
            "type": "object",
            "required": ["command", "rows"],
            "additionalProperties": False,
            "properties": {
                "command": {"const": "constants"},
                "rows": {"type": "array", "items": _CONSTANTS_ROW},
            },
        },
    ]
}

BY_COMMAND = {
    "drag": DRAG,
    "asym": DRAG,
    "sweep": SWEEP,
    "oracle": ORACLE,
    "simulate": SIMULATE,
    "constants": CONSTANTS,
}
