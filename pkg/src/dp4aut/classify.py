"""Field profiles and the maximal automorphism classes attached to them.

A profile records four facts about a field k of characteristic zero:
``i in k``, ``eps3 in k``, ``sqrt5 in k`` and whether ``x^2 + y^2 = -3`` has a
k-point. Both ``i`` and ``eps3`` force the last one:
``1 + (2i)^2 = -3`` and ``(1 + 2 eps3)^2 + 0^2 = -3``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from . import weyl
from .weyl import ClassName, Subgroup

CN = ClassName


class ProfileError(ValueError):
    pass


@dataclass(frozen=True)
class FieldProfile:
    has_i: bool = False
    has_eps3: bool = False
    has_sqrt5: bool = False
    sum2sq_minus3: bool = False

    def validate(self) -> "FieldProfile":
        if self.has_eps3 and not self.sum2sq_minus3:
            raise ProfileError("eps3 in k gives (1+2*eps3)^2 + 0^2 = -3, so s2s must hold")
        if self.has_i and not self.sum2sq_minus3:
            raise ProfileError("i in k gives 1^2 + (2i)^2 = -3, so s2s must hold")
        return self

    @property
    def is_valid(self) -> bool:
        try:
            self.validate()
        except ProfileError:
            return False
        return True

    def as_dict(self) -> dict:
        return {"i": self.has_i, "eps3": self.has_eps3, "sqrt5": self.has_sqrt5, "s2s": self.sum2sq_minus3}

    def __str__(self):
        return ",".join(f"{k}={'yes' if v else 'no'}" for k, v in self.as_dict().items())


def all_profiles() -> list[FieldProfile]:
    return [FieldProfile(*bits) for bits in itertools.product((False, True), repeat=4)]


def valid_profiles() -> list[FieldProfile]:
    return [p for p in all_profiles() if p.is_valid]


FIELD_CATALOG = {
    "Q": FieldProfile(False, False, False, False),
    "Q(i)": FieldProfile(True, False, False, True),
    "Q(eps3)": FieldProfile(False, True, False, True),
    "Q(sqrt5)": FieldProfile(False, False, True, False),
    "Q(sqrt2)": FieldProfile(False, False, False, False),
}


def profile_for_field(name: str) -> FieldProfile:
    try:
        return FIELD_CATALOG[name.strip()]
    except KeyError:
        raise ProfileError(f"unknown field {name!r}; known: {', '.join(FIELD_CATALOG)}") from None


_KEYS = {"i": "has_i", "eps3": "has_eps3", "sqrt5": "has_sqrt5", "s2s": "sum2sq_minus3"}
_BOOL = {"yes": True, "y": True, "true": True, "1": True, "no": False, "n": False, "false": False, "0": False}


def parse_profile(text: str) -> FieldProfile:
    """``i=yes,eps3=no,sqrt5=no,s2s=yes``, ``all-true`` or ``all-false``; unset keys are false."""
    t = text.strip().lower()
    if t == "all-true":
        return FieldProfile(True, True, True, True)
    if t == "all-false":
        return FieldProfile().validate()
    kw = {}
    for part in filter(None, (s.strip() for s in t.split(","))):
        key, _, val = part.partition("=")
        if key.strip() not in _KEYS or val.strip() not in _BOOL:
            raise ProfileError(f"bad profile entry {part!r}")
        kw[_KEYS[key.strip()]] = _BOOL[val.strip()]
    return FieldProfile(**kw).validate()


# ------------------------------------------------------------- maximal sets


@lru_cache(maxsize=None)
def _inside(a: ClassName, b: ClassName) -> bool:
    return weyl.conjugate_into(weyl.named_class(a), weyl.named_class(b)) is not None


def reduce_to_maximal(names) -> frozenset:
    names = set(names)
    return frozenset(a for a in names if not any(b != a and _inside(a, b) for b in names))


def qs_candidates(p: FieldProfile) -> set:
    out = {CN.C2_4_C2, CN.C2_3_S3}
    if p.has_i:
        out.add(CN.C2_4_C4)
    if p.has_eps3:
        out.add(CN.C2_4_S3)
    if p.has_sqrt5:
        out.add(CN.C2_4_D5)
    return out


def maximal_qs(p: FieldProfile) -> frozenset:
    return reduce_to_maximal(qs_candidates(p.validate()))


def maximal_m(p: FieldProfile) -> frozenset:
    cands = qs_candidates(p.validate())
    if p.sum2sq_minus3:
        cands.add(CN.C2_3_NS_S3)
    return reduce_to_maximal(cands)


def in_mk(g_sub: Subgroup, p: FieldProfile) -> bool:
    return any(weyl.conjugate_into(g_sub, weyl.named_class(m)) is not None for m in maximal_m(p))


def non_qs_only_classes() -> frozenset:
    return frozenset({CN.C2_3_NS_S3, CN.C2_NS_S3})


def rationality_obstructed(p: FieldProfile) -> bool:
    """True exactly when some groups of M_k act on no k-rational surface."""
    p.validate()
    return p.sum2sq_minus3 and not p.has_eps3


def in_mk_rat(g_sub: Subgroup, p: FieldProfile) -> bool:
    if not in_mk(g_sub, p):
        return False
    if not rationality_obstructed(p):
        return True
    return not any(weyl.are_conjugate(g_sub, weyl.named_class(n)) for n in non_qs_only_classes())


def stable_window(splitting: Subgroup, aut: Subgroup) -> str:
    """``possible`` iff the splitting group is one of I1, I2, I3 up to conjugacy and centralizes ``aut``.

    The caller is responsible for the side condition that the invariant
    Picard rank is one.
    """
    if not any(weyl.are_conjugate(splitting, weyl.named_class(n)) for n in (CN.I1, CN.I2, CN.I3)):
        return "excluded"
    if splitting <= weyl.centralizer(aut):
        return "possible"
    return "excluded"


def sorted_names(names) -> list:
    order = list(ClassName)
    return sorted(names, key=order.index)
