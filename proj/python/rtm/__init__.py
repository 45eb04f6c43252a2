"""Rooted tree maps on Q<x,y>, the derivations d_n, and certified MZV numerics.

Linear combinations are dicts mapping a canonical key (forest or word text)
to a ``fractions.Fraction``. The empty forest and the empty word are ``""``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import _core
from ._core import DimensionError, DomainError, ParseError

__version__ = _core.__version__

__all__ = [
    "Certified",
    "DimensionError",
    "DomainError",
    "ParseError",
    "antipode",
    "apply",
    "canonical_key",
    "coproduct",
    "dynkin",
    "enumerate_forests",
    "ladder_decomposition",
    "partial",
    "rank_by_weight",
    "rank_exact",
    "relations_jsonl",
    "span_inclusion",
    "verify_hopf_axioms",
    "verify_main_theorem",
    "verify_series",
    "z_decode",
    "z_encode",
    "z_eval",
    "zeta",
]


def _fraction(pair):
    num, den = pair
    return Fraction(int(num), int(den))


def _exact(value):
    value = Fraction(value)
    return (str(value.numerator), str(value.denominator))


def _terms(raw):
    return {key: _fraction(c) for key, c in raw.items()}


def _word_sum(p):
    if isinstance(p, str):
        return {"" if p == "1" else p: ("1", "1")}
    return {("" if w == "1" else w): _exact(c) for w, c in p.items()}


@dataclass(frozen=True)
class Certified:
    """A decimal value with an absolute error bound."""

    value: str
    bound: str

    def __float__(self):
        return float(self.value)


canonical_key = _core.canonical_key
enumerate_forests = _core.enumerate_forests
z_encode = _core.z_encode
rank_by_weight = _core.rank_by_weight
relations_jsonl = _core.relations_jsonl
verify_hopf_axioms = _core.verify_hopf_axioms
verify_main_theorem = _core.verify_main_theorem
verify_series = _core.verify_series


def coproduct(forest):
    """Coproduct as a dict {(left, right): Fraction}."""
    return {(left, right): _fraction(c) for left, right, c in _core.coproduct(forest)}


def antipode(forest):
    return _terms(_core.antipode(forest))


def dynkin(forest):
    return _terms(_core.dynkin(forest))


def ladder_decomposition(n):
    """d_n as a combination of products of ladders."""
    return _terms(_core.ladder_decomposition(n))


def apply(forest, p):
    """Tree map of ``forest`` applied to a word or a {word: coefficient} dict."""
    return _terms(_core.apply(forest, _word_sum(p)))


def partial(n, p):
    return _terms(_core.partial(n, _word_sum(p)))


def z_decode(index):
    return _core.z_decode(list(index))


def zeta(target, eps="1e-30", digits=0):
    """Certified value of zeta at an index tuple or an admissible word."""
    word = target if isinstance(target, str) else z_decode(target)
    return Certified(*_core.zeta(word, str(eps), digits))


def z_eval(p, eps="1e-30"):
    return Certified(*_core.z_eval(_word_sum(p), str(eps)))


def rank_exact(rows):
    """Exact rank over Q of a matrix given as rows of ints or Fractions."""
    return _core.rank_exact([[_exact(v) for v in row] for row in rows])


def span_inclusion(sub_jsonl, sup_jsonl):
    """(included, witness) for relation files given as jsonl text."""
    return _core.span_inclusion(sub_jsonl, sup_jsonl)
