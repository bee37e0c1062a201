"""JSON documents for bunches and fans.

A bunch document lists the weights (images of the generators of gamma),
the members of the bunch as lists of weight indices and, when gamma is not
the positive orthant, the generators of gamma and the matrix of Q. A fan
document lists rays and maximal cones by ray index. Integers beyond 2^53
are written as decimal strings.
"""

import json

from . import linalg as la
from .bunches import Bunch
from .errors import ParseError
from .fans import Fan
from .projected import ProjectedCone

SAFE_INT = 2**53


def _out_int(x):
    return str(x) if abs(x) > SAFE_INT else x


def _out_matrix(rows):
    return [[_out_int(x) for x in row] for row in rows]


def _in_int(x, where):
    if isinstance(x, bool):
        raise ParseError(f"{where}: expected an integer, got a boolean")
    if isinstance(x, int):
        return x
    if isinstance(x, str):
        try:
            return int(x)
        except ValueError:
            pass
    raise ParseError(f"{where}: expected an integer, got {x!r}")


def _in_matrix(rows, where, width=None):
    if not isinstance(rows, list):
        raise ParseError(f"{where}: expected a list")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, list):
            raise ParseError(f"{where}[{i}]: expected a list")
        vec = tuple(_in_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(row))
        if width is not None and len(vec) != width:
            raise ParseError(f"{where}[{i}]: expected {width} entries, got {len(vec)}")
        out.append(vec)
    return tuple(out)


def _field(doc, key):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    return doc[key]


# -- bunches ---------------------------------------------------------------

def bunch_to_document(b, name=None, comment=None):
    pc = b.pc
    doc = {"kind": "bunch"}
    if name:
        doc["name"] = name
    if comment:
        doc["comment"] = comment
    doc["k_rank"] = pc.k_rank
    doc["weights"] = _out_matrix(pc.images)
    if not pc.is_orthant():
        doc["gamma_generators"] = _out_matrix(pc.generators)
        doc["q_matrix"] = _out_matrix(pc.q)
    doc["bunch"] = [sorted(f) for f in b.witnesses]
    return doc


def bunch_from_document(doc, verify=True, limits=None):
    """Raises ParseError on malformed data and VerificationError if the
    cones do not form a bunch."""
    k = _in_int(_field(doc, "k_rank"), "k_rank")
    if k < 0:
        raise ParseError("k_rank: must be nonnegative")
    weights = _in_matrix(_field(doc, "weights"), "weights", k)
    n = len(weights)
    if "gamma_generators" in doc or "q_matrix" in doc:
        gens = _in_matrix(_field(doc, "gamma_generators"), "gamma_generators", n)
        q = _in_matrix(_field(doc, "q_matrix"), "q_matrix", n)
        if len(q) != k:
            raise ParseError(f"q_matrix: expected {k} rows, got {len(q)}")
        pc = ProjectedCone(q, gens, e_rank=n)
        if tuple(pc.images) != weights:
            raise ParseError("weights: do not match Q applied to gamma_generators")
    else:
        pc = ProjectedCone(la.transpose(weights, k), e_rank=n)
    members = _field(doc, "bunch")
    if not isinstance(members, list):
        raise ParseError("bunch: expected a list of index lists")
    faces = []
    for i, m in enumerate(members):
        if not isinstance(m, list):
            raise ParseError(f"bunch[{i}]: expected a list of weight indices")
        idx = [_in_int(x, f"bunch[{i}]") for x in m]
        bad = [j for j in idx if not 0 <= j < n]
        if bad:
            raise ParseError(f"bunch[{i}]: weight index {bad[0]} out of range")
        faces.append(frozenset(idx))
    return Bunch(pc, faces, verify=verify, limits=limits)


# -- fans ------------------------------------------------------------------

def fan_to_document(f, name=None, comment=None):
    doc = {"kind": "fan"}
    if name:
        doc["name"] = name
    if comment:
        doc["comment"] = comment
    doc["n_rank"] = f.n_rank
    doc["rays"] = _out_matrix(f.rays)
    doc["max_cones"] = [list(c) for c in f.max_cones]
    return doc


def fan_from_document(doc):
    n = _in_int(_field(doc, "n_rank"), "n_rank")
    rays = _in_matrix(_field(doc, "rays"), "rays", n)
    cones = _field(doc, "max_cones")
    if not isinstance(cones, list):
        raise ParseError("max_cones: expected a list of index lists")
    max_cones = []
    for i, c in enumerate(cones):
        if not isinstance(c, list):
            raise ParseError(f"max_cones[{i}]: expected a list of ray indices")
        max_cones.append([_in_int(x, f"max_cones[{i}]") for x in c])
    return Fan(n, rays, max_cones)


# -- generic ---------------------------------------------------------------

def kind_of(doc):
    if not isinstance(doc, dict):
        raise ParseError("top level: expected a JSON object")
    kind = doc.get("kind")
    if kind is None:
        kind = "fan" if "rays" in doc else "bunch" if "weights" in doc else None
    if kind not in ("bunch", "fan", "cone-pair"):
        raise ParseError(f"kind: unknown document kind {kind!r}")
    return kind


def from_document(doc, verify=True, limits=None):
    """A Bunch or a Fan, depending on the document kind."""
    kind = kind_of(doc)
    if kind == "bunch":
        return bunch_from_document(doc, verify=verify, limits=limits)
    if kind == "fan":
        return fan_from_document(doc)
    raise ParseError("cone-pair documents describe raw cones, not a bunch or a fan")


def to_document(obj, name=None, comment=None):
    if isinstance(obj, Bunch):
        return bunch_to_document(obj, name, comment)
    if isinstance(obj, Fan):
        return fan_to_document(obj, name, comment)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc, indent=0):
    """JSON with two-space indentation and flat lists of scalars on one line."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(doc, dict):
        if not doc:
            text = "{}"
            return text + "\n" if indent == 0 else text
        items = [f"{inner}{json.dumps(k)}: {dumps(v, indent + 2)}" for k, v in doc.items()]
        text = "{\n" + ",\n".join(items) + "\n" + pad + "}"
    elif isinstance(doc, list) and any(isinstance(v, (list, dict)) for v in doc):
        text = "[\n" + ",\n".join(inner + dumps(v, indent + 2) for v in doc) + "\n" + pad + "]"
    else:
        text = json.dumps(doc)
    return text + "\n" if indent == 0 else text


def loads(text):
    """Parse JSON text, reporting syntax errors with line and column."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
