from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from ..algebra.lie import LiePoly
from ..algebra.lyndon import enumerate_alsbw, is_alsbw, nlsbw_of
from ..algebra.order import MonomialOrder
from ..algebra.words import Tree, Word, occurrences
from ..rewriting.reduction import RuleMatch
from .catalog import OLPI, instantiate


@dataclass(frozen=True)
class Instance:
    label: str
    u: Tree
    v: Tree
    poly: LiePoly


class RuleSet:
    """
    The instances ``phi(u, v)`` of one identity, for every ordered pair of basis
    arguments, produced on demand and cached. Instances equal as polynomials are
    kept once. Safe to share between threads.
    """

    def __init__(self, phi: OLPI, order: MonomialOrder, variant: Optional[str] = None, sample=None):
        self.phi = phi
        self.order = order
        self.variant = variant
        self.sample = sample
        self.template = phi.template(variant)
        self.operated_degree = self.template.operated_degree
        self._lock = threading.Lock()
        self._instances: Dict[Tuple[Tree, Tree], LiePoly] = {}
        self._leading: Dict[Word, Tuple[Tuple[str, LiePoly], ...]] = {}
        self._matches: Dict[Word, Tuple[RuleMatch, ...]] = {}

    @property
    def name(self) -> str:
        name = self.phi.name if self.variant is None else f"{self.phi.name}:{self.variant}"
        if self.sample is not None:
            name += f"@a={self.sample}"
        return name

    def label(self, u: Tree, v: Tree) -> str:
        return f"{self.phi.name}({u}, {v})"

    def instance(self, u: Tree, v: Tree) -> LiePoly:
        key = (u, v)
        poly = self._instances.get(key)
        if poly is None:
            poly = instantiate(self.phi, u, v, self.order, self.variant, self.sample)
            with self._lock:
                poly = self._instances.setdefault(key, poly)
        return poly

    def instances_leading(self, p: Word) -> Tuple[Tuple[str, LiePoly], ...]:
        """Nonzero instances whose leading word is exactly ``p``."""
        found = self._leading.get(p)
        if found is not None:
            return found
        need_deg = p.deg - self.operated_degree
        need_odeg = p.odeg - self.operated_degree
        out: List[Tuple[str, LiePoly]] = []
        if need_deg >= 2 and need_odeg >= 0:
            occs = [o for o in occurrences(p) if o.word.deg < need_deg and is_alsbw(o.word, self.order)]
            tried = set()
            for a in occs:
                for b in occs:
                    if a.word.deg + b.word.deg != need_deg or a.word.odeg + b.word.odeg != need_odeg:
                        continue
                    if not a.disjoint(b) or (a.word, b.word) in tried:
                        continue
                    tried.add((a.word, b.word))
                    u, v = nlsbw_of(a.word, self.order), nlsbw_of(b.word, self.order)
                    poly = self.instance(u, v)
                    if poly and poly.leading_word == p and all(poly != q for _, q in out):
                        out.append((self.label(u, v), poly))
        found = tuple(sorted(out, key=lambda lp: lp[0]))
        with self._lock:
            self._leading[p] = found
        return found

    def match_leading(self, w: Word) -> List[RuleMatch]:
        """Every (instance, placement) whose special s-word leads with ``w``, in a fixed order."""
        found = self._matches.get(w)
        if found is None:
            matches = []
            min_deg = self.operated_degree + 2
            for occ in occurrences(w):
                if occ.word.deg < min_deg:
                    continue
                for label, poly in self.instances_leading(occ.word):
                    matches.append(RuleMatch(label, poly, occ.context(w)))
            matches.sort(key=RuleMatch.sort_key)
            with self._lock:
                found = self._matches.setdefault(w, tuple(matches))
        return list(found)

    def enumerate_instances(self, max_deg: int, max_odeg: Optional[int] = None,
                            max_dep: Optional[int] = None) -> List[Instance]:
        """All distinct nonzero instances on ordered argument pairs within the bounds."""
        args = [nlsbw_of(w, self.order) for w in enumerate_alsbw(self.order, max_deg, max_odeg, max_dep)]
        out: List[Instance] = []
        seen = set()
        for u in args:
            for v in args:
                poly = self.instance(u, v)
                if not poly or poly in seen:
                    continue
                seen.add(poly)
                out.append(Instance(self.label(u, v), u, v, poly))
        return out

