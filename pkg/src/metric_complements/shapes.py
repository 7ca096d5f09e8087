"""JSON shape files.

::

    {"type": "ball", "center": [0, 0], "radius": 1, "closed": true}
    {"type": "hpolytope", "normals": [[1, 0], ...], "offsets": [1, ...], "bounded": true}
    {"type": "vpolytope", "generators": [[0, 0], [1, 0], [0, 1]]}
    {"type": "sandwich", "inner": {...}, "outer": {...}}

Dimension is inferred from the coordinate arrays and checked for agreement.
"""
import json

from .bodies import Ball, HPolytope, SandwichSet, VPolytope
from .errors import DimensionMismatch


def body_to_dict(body):
    if isinstance(body, Ball):
        return {"type": "ball", "center": body.center.tolist(), "radius": body.radius,
                "closed": body.closed}
    if isinstance(body, HPolytope):
        return {"type": "hpolytope", "normals": body.normals.tolist(),
                "offsets": body.offsets.tolist(), "bounded": body.bounded}
    if isinstance(body, VPolytope):
        return {"type": "vpolytope", "generators": body.generators.tolist()}
    if isinstance(body, SandwichSet):
        return {"type": "sandwich", "inner": body_to_dict(body.inner),
                "outer": body_to_dict(body.outer)}
    raise TypeError(f"cannot serialize {type(body).__name__}")


def body_from_dict(data):
    kind = data.get("type")
    if kind == "ball":
        return Ball(data["center"], data["radius"], bool(data.get("closed", True)))
    if kind == "hpolytope":
        return HPolytope(data["normals"], data["offsets"], bool(data.get("bounded", True)))
    if kind == "vpolytope":
        return VPolytope(data["generators"])
    if kind == "sandwich":
        inner, outer = body_from_dict(data["inner"]), body_from_dict(data["outer"])
        if inner.dim != outer.dim:
            raise DimensionMismatch("sandwich inner and outer dimensions differ")
        return SandwichSet(inner, outer)
    raise ValueError(f"unknown shape type {kind!r}")


def dumps(body):
    return json.dumps(body_to_dict(body))


def load_shape(path):
    with open(path) as fh:
        return body_from_dict(json.load(fh))


def save_shape(body, path):
    with open(path, "w") as fh:
        json.dump(body_to_dict(body), fh, indent=2)
        fh.write("\n")
