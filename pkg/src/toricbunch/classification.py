"""Smooth 2-complete toric varieties with class group Z^2, and the
canonical extension of free bunches.

Normal form: weights w_1 = (1, 0) and w_i = (b_i, 1) for i >= 2 with
0 = b_n < ... < b_2, multiplicities mu_1 > 1, mu_n > 0 and
mu_2 + ... + mu_n > 1; the bunch is the single cone cone(w_1, w_2).
"""

from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .bunches import bunch_from_weights, free_bunch_isomorphic, is_free
from .errors import InvalidParameters, MultiplicityDecrease, NotFree


@dataclass(frozen=True)
class KleinschmidtData:
    """Parameters (b_2, ..., b_n) and (mu_1, ..., mu_n)."""

    b: tuple
    mu: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(self.b))
        object.__setattr__(self, "mu", tuple(self.mu))

    @property
    def n(self):
        return len(self.mu)

    @property
    def dim(self):
        return sum(self.mu) - 2

    def problems(self):
        out = []
        if self.n < 2 or len(self.b) != self.n - 1:
            out.append("need n >= 2 multiplicities and n - 1 values b_2..b_n")
            return out
        if any(m < 1 for m in self.mu):
            out.append("multiplicities must be positive")
        if self.mu[0] <= 1:
            out.append("mu_1 > 1 violated")
        if sum(self.mu[1:]) <= 1:
            out.append("mu_2 + ... + mu_n > 1 violated")
        if self.b[-1] != 0:
            out.append("b_n = 0 violated")
        if any(x <= y for x, y in zip(self.b, self.b[1:])):
            out.append("b_2 > ... > b_n violated")
        return out

    def validate(self):
        issues = self.problems()
        if issues:
            raise InvalidParameters("; ".join(issues), condition="parameter constraints")

    def weights(self):
        ws = [(1, 0)] * self.mu[0]
        for bi, mi in zip(self.b, self.mu[1:]):
            ws += [(bi, 1)] * mi
        return ws


def kleinschmidt_to_bunch(d):
    """The free bunch {cone(w_1, w_2)} of the data."""
    d.validate()
    return bunch_from_weights(d.weights(), [[(1, 0), (d.b[0], 1)]], k_rank=2)


def printed_fano_inequality(d):
    """The inequality b_2(mu_3+...+mu_n) < mu_1 + sum_{j=2}^{n-1} b_j mu_{j+1}.

    This is one literal reading of the published condition; it serves as a
    diagnostic next to the ample test.
    """
    d.validate()
    lhs = d.b[0] * sum(d.mu[2:])
    rhs = d.mu[0] + sum(d.b[j - 2] * d.mu[j] for j in range(2, d.n))
    return lhs < rhs


def aligned_fano_inequality(d):
    """b_2(mu_3+...+mu_n) < mu_1 + b_3 mu_3 + ... + b_{n-1} mu_{n-1}.

    Obtained by writing out ample membership of the anticanonical class in
    cone(w_1, w_2) directly.
    """
    d.validate()
    lhs = d.b[0] * sum(d.mu[2:])
    rhs = d.mu[0] + sum(d.b[j - 2] * d.mu[j - 1] for j in range(3, d.n + 1))
    return lhs < rhs


def kleinschmidt_is_fano(d):
    """Ample membership of the anticanonical class (the authoritative test)."""
    from .divisors import is_fano

    return is_fano(kleinschmidt_to_bunch(d))


def enumerate_kleinschmidt(dim, max_b):
    """All normal-form data of the given dimension with b_2 <= max_b.

    Data whose bunches are isomorphic are reported once (the first in the
    sorted order is kept).
    """
    if dim < 2:
        raise InvalidParameters("dimension must be at least 2", condition="dim >= 2")
    total = dim + 2
    out = []
    for n in range(2, total + 1):
        for mus in _compositions(total, n):
            for bs in _b_sequences(n, max_b):
                d = KleinschmidtData(bs, mus)
                if not d.problems():
                    out.append(d)
    out.sort(key=lambda d: (d.n, d.b, d.mu))
    kept, bunches = [], []
    for d in out:
        b = kleinschmidt_to_bunch(d)
        if any(free_bunch_isomorphic(b, other) is not None for other in bunches):
            continue
        kept.append(d)
        bunches.append(b)
    return kept


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _b_sequences(n, max_b):
    # b_2 > ... > b_{n-1} > b_n = 0 chosen from 1..max_b
    for chosen in combinations(range(max_b, 0, -1), n - 2):
        yield tuple(chosen) + (0,)


def canonical_extension(b, new_multiplicities):
    """Raise the multiplicities of the weights of a free bunch.

    Args:
      b: a free bunch.
      new_multiplicities: one entry per distinct weight, in order of first
        appearance among the weights of b.

    Raises:
      NotFree, MultiplicityDecrease, InvalidParameters.
    """
    if not is_free(b):
        raise NotFree("canonical extension needs a free bunch", condition="free")
    counts = Counter(b.weights)
    distinct = list(dict.fromkeys(b.weights))
    if len(new_multiplicities) != len(distinct):
        raise InvalidParameters(f"expected {len(distinct)} multiplicities",
                                condition="multiplicity count")
    for w, m in zip(distinct, new_multiplicities):
        if m < counts[w]:
            raise MultiplicityDecrease(f"multiplicity of {w} drops from {counts[w]} to {m}",
                                       condition="multiplicities do not decrease")
    weights = [w for w, m in zip(distinct, new_multiplicities) for _ in range(m)]
    return bunch_from_weights(weights, list(b.cones), k_rank=b.k_rank)
