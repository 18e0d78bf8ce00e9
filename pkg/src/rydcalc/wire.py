"""JSON wire format for classes: parse with validation, emit canonically.

A flag class is ``{"n", "k", "perm" | "word" | "regions"}``; regions are keyed
``"i,j"``.  An isotropic class is ``{"family", "n", "k", "base", "top",
"charge"}``.  A strict index is ``{"family", "n", "k", "gamma", "type"}``.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .isotropic import TypedStrictPartition
from .roots import FlagShape
from .ryd import FlagRYD, IsotropicRYD, perm_from_ryd, ryd_from_perm
from .star import AdjointRYD, CoadjointRYD
from .weyl import has_descents_in, is_permutation, perm_to_word, shape_of_word, word_to_perm

__all__ = [
    "WireError",
    "canonical",
    "sort_terms",
    "parse_flag_class",
    "emit_flag_class",
    "parse_isotropic",
    "emit_isotropic",
    "parse_index",
    "emit_index",
    "parse_two_row",
    "emit_two_row",
]


class WireError(ValueError):
    """Malformed or invalid input."""


def canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False)


def sort_terms(terms: list[dict]) -> list[dict]:
    """Order expansion terms by the canonical serialization of their class."""
    return sorted(terms, key=lambda t: canonical(t["class"]))


def _require(data: Mapping, *keys: str) -> None:
    if not isinstance(data, Mapping):
        raise WireError(f"expected a JSON object, got {type(data).__name__}")
    missing = [k for k in keys if k not in data]
    if missing:
        raise WireError(f"missing field(s): {', '.join(missing)}")


def _ints(x: Any, what: str) -> tuple[int, ...]:
    if not isinstance(x, (list, tuple)) or not all(isinstance(v, int) and not isinstance(v, bool) for v in x):
        raise WireError(f"{what} must be a list of integers")
    return tuple(x)


# ------------------------------------------------------------------ flag classes

def parse_flag_class(data: Mapping) -> FlagRYD:
    _require(data, "n", "k")
    shape = FlagShape(data["n"], _ints(data["k"], "k"))
    found = []
    if "perm" in data:
        w = _ints(data["perm"], "perm")
        if len(w) != shape.n or not is_permutation(w) or not has_descents_in(w, shape):
            raise WireError(f"{list(w)} is not a minimal coset representative for k={list(shape.k)}")
        found.append(ryd_from_perm(w, shape))
    if "word" in data:
        tau = _ints(data["word"], "word")
        if shape_of_word(tau) != shape:
            raise WireError(f"word {list(tau)} does not have content {list(shape.sizes)}")
        found.append(ryd_from_perm(word_to_perm(tau), shape))
    if "regions" in data:
        regions = data["regions"]
        if not isinstance(regions, Mapping):
            raise WireError("regions must be an object keyed 'i,j'")
        parts = {}
        for key, p in regions.items():
            try:
                i, j = (int(s) for s in key.split(","))
            except ValueError:
                raise WireError(f"bad region key {key!r}") from None
            parts[(i, j)] = _ints(p, f"region {key}")
        ryd = FlagRYD.from_mapping(shape, parts)
        if not ryd.is_valid():
            raise WireError("regions fail the hook condition")
        found.append(ryd)
    if not found:
        raise WireError("a flag class needs one of perm, word, regions")
    if any(r != found[0] for r in found):
        raise WireError("perm, word and regions disagree")
    return found[0]


def emit_flag_class(ryd: FlagRYD) -> dict:
    w = perm_from_ryd(ryd)
    return {
        "n": ryd.shape.n,
        "k": list(ryd.shape.k),
        "perm": list(w),
        "word": list(perm_to_word(w, ryd.shape)),
        "regions": {f"{i},{j}": list(p) for (i, j), p in ryd.parts},
    }


# ------------------------------------------------------------------ isotropic classes

def parse_isotropic(data: Mapping) -> IsotropicRYD:
    _require(data, "family", "n", "k", "base")
    k = data["k"]
    top = _ints(data.get("top", [0] * k if isinstance(k, int) else []), "top")
    return IsotropicRYD(
        data["family"], data["n"], k, _ints(data["base"], "base"), top, data.get("charge")
    )


def emit_isotropic(ryd: IsotropicRYD) -> dict:
    return {
        "family": ryd.family,
        "n": ryd.n,
        "k": ryd.k,
        "base": list(ryd.base),
        "top": list(ryd.top),
        "charge": ryd.charge,
    }


def parse_index(data: Mapping) -> TypedStrictPartition:
    _require(data, "family", "n", "k", "gamma")
    return TypedStrictPartition(data["family"], data["n"], data["k"], _ints(data["gamma"], "gamma"), data.get("type", 0))


def emit_index(g: TypedStrictPartition) -> dict:
    out = {"family": g.family, "n": g.n, "k": g.k, "gamma": list(g.gamma)}
    if g.family == "D":
        out["type"] = g.marker
    return out


# ------------------------------------------------------------------ two-row shapes

def parse_two_row(data: Mapping, variant: str, n: int) -> CoadjointRYD | AdjointRYD:
    """``{"base": [a, b], "top": bool, "charge": "up" | "down" | null}``."""
    _require(data, "base")
    base = _ints(data["base"], "base")
    top = data.get("top", False)
    if not isinstance(top, bool):
        raise WireError("top must be true or false")
    if variant == "LG":
        if data.get("charge") is not None:
            raise WireError("LG shapes carry no charge")
        return CoadjointRYD(n, base, top)
    if variant == "OG":
        return AdjointRYD(n, base, top, data.get("charge"))
    raise WireError("variant must be LG or OG")


def emit_two_row(x: CoadjointRYD | AdjointRYD) -> dict:
    out = {"base": list(x.base), "top": x.top}
    if isinstance(x, AdjointRYD):
        out["charge"] = x.charge
    return out
