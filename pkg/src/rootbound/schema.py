"""JSON schemas of the command-line reports."""

RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[1-9][0-9]*)?$"}

_PLACE = {
    "type": "object",
    "required": ["factor", "degree", "mi"],
    "properties": {
        "factor": {"type": "string"},
        "degree": {"type": "integer", "minimum": 1},
        "mi": RATIONAL,
    },
    "additionalProperties": False,
}

_BOUND = {
    "type": "object",
    "required": ["presentation", "places", "mi_infinity", "correction", "bound"],
    "properties": {
        "presentation": {"enum": ["collapsed", "as-written"]},
        "places": {"type": "array", "items": _PLACE},
        "mi_infinity": RATIONAL,
        "correction": RATIONAL,
        "bound": RATIONAL,
    },
    "additionalProperties": False,
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "rootbound report",
    "type": "object",
    "required": ["input", "n", "presentation"],
    "properties": {
        "input": {"type": "string"},
        "n": {"type": "integer", "minimum": 0},
        "presentation": {"enum": ["collapsed", "as-written"]},
        "places": {"type": "array", "items": _PLACE},
        "mi_infinity": RATIONAL,
        "correction": RATIONAL,
        "bound": RATIONAL,
        "as_written": _BOUND,
        "kb_bound": RATIONAL,
        "positivity": {"type": "boolean"},
        "equality": {
            "type": "object",
            "required": ["verdict", "obstructions", "initial_systems"],
            "properties": {
                "verdict": {"enum": ["certified", "inconclusive"]},
                "obstructions": {"type": "array", "items": {"type": "string"}},
                "initial_systems": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["place", "tau", "system"],
                        "properties": {
                            "place": {"type": "string"},
                            "tau": {"type": "array", "items": RATIONAL},
                            "system": {"type": "string"},
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        },
        "oracle": {
            "type": "object",
            "required": ["count", "valid", "unclean"],
            "properties": {
                "count": {"type": "integer", "minimum": 0},
                "valid": {"type": "boolean"},
                "unclean": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["factor", "status"],
                        "properties": {
                            "factor": {"type": "string"},
                            "status": {"enum": ["resolved", "flagged"]},
                        },
                        "additionalProperties": False,
                    },
                },
            },
            "additionalProperties": False,
        },
    },
    "additionalProperties": False,
}

MI_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "rootbound mixed integral",
    "type": "object",
    "required": ["n", "mi", "terms"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "mi": RATIONAL,
        "routes": {
            "type": "object",
            "required": ["dec", "def", "mv"],
            "properties": {"dec": RATIONAL, "def": RATIONAL, "mv": RATIONAL},
            "additionalProperties": False,
        },
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["kind", "direction", "value"],
                "properties": {
                    "kind": {"enum": ["facet", "roof", "point"]},
                    "direction": {"type": "array", "items": RATIONAL},
                    "value": RATIONAL,
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}
