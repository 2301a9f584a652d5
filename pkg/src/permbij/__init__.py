"""Bijections between 321- and 132-avoiding permutations and the statistics they preserve."""

from .bijections import BIJECTIONS, CODECS, apply, get, invert
from .perm import DomainError, avoids, class_members, parse_perm
from .stats import StatDescriptor, build_catalog, evaluate, parse_name

__all__ = [
    "BIJECTIONS",
    "CODECS",
    "DomainError",
    "StatDescriptor",
    "apply",
    "avoids",
    "build_catalog",
    "class_members",
    "evaluate",
    "get",
    "invert",
    "parse_name",
    "parse_perm",
]
