"""Parsing of the canonical text encoding.

    poly       [c0,c1,...,cn]   little-endian field codes; also an integer
                                (a constant of the prime field) or θ / theta
    ratfn      poly/poly     or a single poly
    point      ratfn,ratfn,...  (commas inside brackets do not split)
    composition 1,2,3  or (1,2,3)
"""

import re

from .carlitz import Composition
from .errors import NotIrreducible
from .field import FieldCtx
from .poly import Poly, is_irreducible
from .ratfn import RationalFn

__all__ = ["parse_poly", "parse_ratfn", "parse_point", "parse_composition", "parse_prime",
           "split_top_level"]

_THETA = {"θ", "theta"}


def split_top_level(text: str, sep: str) -> list:
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ValueError(f"unbalanced brackets in {text!r}")
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError(f"unbalanced brackets in {text!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def parse_poly(F: FieldCtx, text: str) -> Poly:
    text = text.strip()
    if text in _THETA:
        return Poly.theta(F)
    if text.startswith("[") and text.endswith("]"):
        body = text[1:-1].strip()
        if not body:
            return Poly.zero(F)
        coeffs = [int(x) for x in body.split(",")]
        for c in coeffs:
            if not 0 <= c < F.q:
                raise ValueError(f"coefficient {c} is not an element code of GF({F.q})")
        return Poly(F, coeffs)
    if re.fullmatch(r"-?\d+", text):
        # bare integers are constants of the prime field, never theta-digit expansions
        return Poly.const(F, F.from_int(int(text)))
    raise ValueError(f"cannot parse polynomial {text!r}; use [c0,c1,...]")


def parse_ratfn(F: FieldCtx, text: str) -> RationalFn:
    parts = split_top_level(text, "/")
    if len(parts) == 1:
        return RationalFn.from_poly(parse_poly(F, parts[0]))
    if len(parts) == 2:
        return RationalFn(parse_poly(F, parts[0]), parse_poly(F, parts[1]))
    raise ValueError(f"cannot parse rational function {text!r}")


def parse_point(F: FieldCtx, text: str) -> tuple:
    return tuple(parse_ratfn(F, x) for x in split_top_level(text, ","))


def parse_composition(text: str) -> Composition:
    text = text.strip().strip("()")
    return Composition(tuple(int(x) for x in text.split(",")))


def parse_prime(F: FieldCtx, text: str) -> Poly:
    P = parse_poly(F, text)
    if not (P.is_monic() and is_irreducible(P)):
        raise NotIrreducible(f"{P} is not a monic irreducible polynomial")
    return P
