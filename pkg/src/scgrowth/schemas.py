"""Published JSON schemas for each CLI subcommand's report."""

_RAT = {"type": "string", "pattern": r"^-?\d+(/\d+)?$"}
_NUM_OR_IV = {
    "oneOf": [
        {"type": "integer"},
        {"type": "null"},
        {"type": "object", "required": ["exact", "value"],
         "properties": {"exact": _RAT, "value": {"type": "number"}}},
        {"type": "object", "required": ["interval", "value"],
         "properties": {"interval": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
                        "value": {"type": "number"}}},
    ]
}


def _obj(required: dict, extra: dict | None = None) -> dict:
    props = dict(required)
    props.update(extra or {})
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": sorted(required),
        "properties": props,
    }


_REDUCED = _obj({
    "alpha": _RAT,
    "delta": _RAT,
    "basepoint": {"type": "string"},
    "verdict": {"type": "boolean"},
    "failing_pair": {"type": ["array", "null"], "items": {"type": "string"}},
    "reason": {"type": "string"},
    "pair_margins": {"type": "array", "items": {
        "type": "object", "required": ["pair", "product", "threshold"],
        "properties": {"pair": {"type": "array", "items": {"type": "string"}},
                       "product": _RAT, "threshold": _RAT}}},
})

SCHEMAS = {
    "check-sc": _obj({
        "variant": {"enum": ["cprime", "cdoubleprime"]},
        "lambda": _RAT,
        "max_piece_len": {"type": "integer", "minimum": 0},
        "shortest_relator_len": {"type": "integer", "minimum": 0},
        "verdict": {"enum": ["pass", "fail"]},
        "witness": {"type": "string"},
    }),
    "dehn": _obj({
        "input": {"type": "string"},
        "normal_form": {"type": "string"},
        "trivial": {"type": "boolean"},
        "steps": {"type": "array", "items": {
            "type": "object",
            "required": ["position", "length", "relator", "replacement", "result"],
            "properties": {"position": {"type": "integer"}, "length": {"type": "integer"},
                           "relator": {"type": "string"}, "replacement": {"type": "string"},
                           "result": {"type": "string"}}}},
    }),
    "growth": _obj({
        "ball_sizes": {"type": "array", "items": {"type": "integer"}},
        "fekete_upper": {"type": "array", "items": {"type": "number"}},
        "bracket": {"type": "array", "items": {"type": "number"}, "minItems": 2, "maxItems": 2},
        "lower_bound": {"type": "number"},
        "upper_bound": {"type": "number"},
        "psg_ratio": {"type": "number"},
        "subadditive_ok": {"type": "boolean"},
        "provenance": {"type": "object"},
    }),
    "delta": _obj({
        "delta": _RAT,
        "mode": {"enum": ["exhaustive", "sampled"]},
        "points": {"type": "integer"},
        "radius": {"type": "integer"},
        "seed": {"type": "integer"},
    }),
    "energy": _obj({
        "min_value": {"type": "integer"},
        "argmin": {"type": "string"},
        "scanned": {"type": "integer"},
        "skipped": {"type": "integer"},
        "per_point": {"type": "object", "additionalProperties": {"type": "integer"}},
    }),
    "reduced": _REDUCED,
    "pingpong": _obj({
        "S": {"type": "array", "items": {"type": "string"}},
        "b": {"type": "integer"},
        "b0": _RAT,
        "classes": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}},
        "u_lengths": {"type": "array", "items": {"type": "integer"}},
        "posts": {"type": "object", "required": ["in_U_power", "size_matches_classes", "reduced"],
                  "additionalProperties": {"type": "boolean"}},
        "report": _REDUCED,
        "warnings": {"type": "array", "items": {"type": "string"}},
    }),
    "family": _obj({
        "h": {"type": "string"},
        "eps": _RAT,
        "members": {"type": ["array", "null"], "items": {"type": "string"}},
        "orbit_radius": {"type": ["integer", "null"]},
        "T_estimate": {"type": "integer"},
        "Delta_estimate": {"type": "integer"},
        "note": {"type": "string"},
        "sc": {"type": "object", "required": ["sc1", "sc2", "verdict"]},
    }),
    "shortfree": _obj({
        "counts": {"type": "array", "items": {"type": "integer"}},
        "per_length": {"type": "array", "items": {"type": "integer"}},
        "bound_ok": {"type": "boolean"},
        "members_scanned": {"type": "integer"},
        "note": {"type": "string"},
    }, {"words": {"type": "array", "items": {"type": "string"}}}),
    "constants": _obj({
        "inputs": {"type": "object"},
        "derived": {"type": "object", "additionalProperties": _NUM_OR_IV},
        "consistency": {"type": "object", "additionalProperties": {"type": "boolean"}},
    }, {"growth_transfer": _NUM_OR_IV, "pingpong": {"type": "object"}}),
}

ERROR_SCHEMA = _obj({"error": {"type": "string"}, "message": {"type": "string"}})
