"""Built-in example documents."""

from .errors import UnknownExample


def _eikelberg(second_ray):
    return {
        "n_rank": 3,
        "rays": [[1, 0, 1], list(second_ray), [-1, -1, 1],
                 [1, 0, -1], [0, 1, -1], [-1, -1, -1]],
        "max_cones": [[0, 1, 2], [3, 4, 5], [0, 1, 4, 3], [1, 2, 5, 4], [0, 2, 5, 3]],
    }


_EXAMPLES = {
    "p123": {
        "kind": "bunch",
        "comment": "weighted projective plane P(1,2,3)",
        "k_rank": 1,
        "weights": [[1], [2], [3]],
        "bunch": [[0]],
    },
    "p1355": {
        "kind": "bunch",
        "comment": "weighted projective space P(1,3,5,5)",
        "k_rank": 1,
        "weights": [[1], [3], [5], [5]],
        "bunch": [[0]],
    },
    "ex3.4": {
        "kind": "cone-pair",
        "comment": "nonsimplicial gamma: the face stars of faces 3 and 0 admit an "
                   "L-invariant separating form although the projected faces have "
                   "disjoint relative interiors",
        "q_matrix": [[0, 0, 1]],
        "gamma_generators": [[1, 0, 1], [0, 1, 2], [1, 0, -2], [0, 1, -1]],
        "faces": [[3], [0]],
        "separating_form": [1, -1, 0],
    },
    "ex4.7": {
        "kind": "bunch",
        "comment": "three equal weights; the maximal projectable fan needs all three "
                   "two-dimensional faces of the orthant",
        "k_rank": 1,
        "weights": [[1], [1], [1]],
        "bunch": [[0]],
    },
    "oda": {
        "kind": "bunch",
        "comment": "complete Q-factorial nonprojective threefold",
        "k_rank": 3,
        "weights": [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [1, 0, 1], [0, 1, 1]],
        "bunch": [[2, 3, 4], [0, 3, 5], [1, 4, 5], [3, 4, 5]],
    },
    "eikelberg-delta": {
        "kind": "fan",
        "comment": "fan over the faces of a prism; b2 = 1",
        **_eikelberg((0, 1, 1)),
    },
    "eikelberg-delta-prime": {
        "kind": "fan",
        "comment": "same combinatorics with the second ray moved to (1,2,3); b2 = 0",
        **_eikelberg((1, 2, 3)),
    },
}


def names():
    return list(_EXAMPLES)


def example_document(name):
    """A fresh copy of the named example document.

    Raises:
      UnknownExample: no example of that name.
    """
    if name not in _EXAMPLES:
        raise UnknownExample(f"unknown example {name!r}; available: {', '.join(names())}")
    doc = _EXAMPLES[name]
    out = {"kind": doc["kind"], "name": name}
    out.update({k: v for k, v in doc.items() if k != "kind"})
    return _copy(out)


def _copy(x):
    if isinstance(x, dict):
        return {k: _copy(v) for k, v in x.items()}
    if isinstance(x, list):
        return [_copy(v) for v in x]
    return x


def example(name):
    """The named example as a Bunch or Fan (cone-pair examples stay documents)."""
    from .io import from_document

    doc = example_document(name)
    return doc if doc["kind"] == "cone-pair" else from_document(doc)
