"""Published lists of d-critical values for d <= 17 and their realisation.

Each printed list item is expanded into one :class:`FixtureEntry` per sign
choice. ``printed`` keeps the list's own notation; ``value`` is the exact
value as a sympy expression. Three printed items are misprints that fail the
integrality gate (``(lam-1)/2`` is not an algebraic integer): ``±i√13`` and
``±i√17`` read as ``±√13`` and ``±√17``, and ``±1 ± 3i√2`` (d = 13) reads as
``±1 ± 2i√3``; these carry ``misprint=True`` and keep the printed form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import sympy as sp

from . import cm
from .arith import divisors, jacobi_symbol
from .constructions import (ConstructionError, CriticalPair, constant_tail, induce_product,
                            induce_quotient, induce_subgroup, quadratic_gaussian)
from .exact import exactly_equal, numeric, pretty

TAGS = ("special", "gaussian", "theorem", "theorem_negative", "induced", "conjugate", "higher_genus")
PRINTED_COUNTS = {3: 4, 5: 6, 7: 8, 9: 15, 11: 20, 13: 18, 15: 60, 17: 28}
COMPLETENESS = {3: "complete", 5: "complete", 7: "complete", 9: "complete",
                11: "probable", 13: "probable", 15: "partial", 17: "partial"}

ROUTE_TAG = {
    "constant_tail": "special",
    "gaussian": "gaussian",
    "induced_subgroup": "induced",
    "induced_quotient": "induced",
    "induced_product": "induced",
    "conjugate": "conjugate",
}


@dataclass(frozen=True)
class FixtureEntry:
    d: int
    printed: str
    value: str
    expected_provenance: str
    completeness: str
    misprint: bool = False
    note: str = ""

    def __post_init__(self):
        if self.expected_provenance not in TAGS:
            raise ValueError(f"bad tag {self.expected_provenance!r}")

    @property
    def list_complete(self) -> bool:
        return self.completeness == "complete"

    @property
    def exact(self) -> sp.Expr:
        return sp.sympify(self.value)

    @property
    def display(self) -> str:
        return pretty(self.exact)

    @property
    def number(self) -> complex:
        return numeric(self.exact)

    @property
    def realizable(self) -> bool:
        return self.expected_provenance != "higher_genus"


def _e(d, printed, value, tag, **kw):
    return FixtureEntry(d, printed, str(sp.sympify(value)), tag, COMPLETENESS[d], **kw)


def _cm_block(d, printed, re, im, signs="all", parts=("theorem", "conjugate", "theorem_negative", "conjugate")):
    """Four sign choices of ``±re ± i*im`` in the order +,+ / +,- / -,- / -,+."""
    combos = [(1, 1), (1, -1), (-1, -1), (-1, 1)]
    out = []
    for (s1, s2), tag in zip(combos, parts):
        if signs == "positive" and s1 < 0:
            continue
        out.append(_e(d, printed, f"{s1}*({re}) + {s2}*I*({im})", tag))
    return out


def _higher_genus_block(d, printed, template):
    out = []
    for eps, s1, s2 in itertools.product((1, -1), (1, -1), (1, -1)):
        out.append(_e(d, printed, template.format(eps=eps, s1=s1, s2=s2), "higher_genus"))
    return out


def _build() -> dict[int, list[FixtureEntry]]:
    L: dict[int, list[FixtureEntry]] = {}
    L[3] = [_e(3, "1", "1", "special"), _e(3, "3", "3", "special"),
            _e(3, "±i√3", "I*sqrt(3)", "gaussian"), _e(3, "±i√3", "-I*sqrt(3)", "gaussian")]
    L[5] = [_e(5, "1", "1", "special"), _e(5, "5", "5", "special"),
            _e(5, "±√5", "sqrt(5)", "gaussian"), _e(5, "±√5", "-sqrt(5)", "gaussian"),
            _e(5, "1 ± 2i", "1 + 2*I", "theorem"), _e(5, "1 ± 2i", "1 - 2*I", "conjugate")]
    L[7] = [_e(7, "1", "1", "special"), _e(7, "7", "7", "special"),
            _e(7, "±i√7", "I*sqrt(7)", "gaussian"), _e(7, "±i√7", "-I*sqrt(7)", "gaussian"),
            *_cm_block(7, "±2 ± i√3", "2", "sqrt(3)")]
    L[9] = [_e(9, "1", "1", "special"), _e(9, "9", "9", "special"), _e(9, "3", "3", "special"),
            _e(9, "±i√3", "I*sqrt(3)", "induced"), _e(9, "±i√3", "-I*sqrt(3)", "induced"),
            _e(9, "±3i√3", "3*I*sqrt(3)", "induced"), _e(9, "±3i√3", "-3*I*sqrt(3)", "induced"),
            *_cm_block(9, "±1 ± 2i√2", "1", "2*sqrt(2)",
                       parts=("theorem", "conjugate", "higher_genus", "higher_genus")),
            *_cm_block(9, "±√5 ± 2i", "sqrt(5)", "2")]
    L[11] = [_e(11, "1", "1", "special"), _e(11, "11", "11", "special"),
             _e(11, "4 ± √5", "4 + sqrt(5)", "special"), _e(11, "4 ± √5", "4 - sqrt(5)", "special"),
             _e(11, "±i√11", "I*sqrt(11)", "gaussian"), _e(11, "±i√11", "-I*sqrt(11)", "gaussian"),
             *_cm_block(11, "2 ± i√7", "2", "sqrt(7)", signs="positive"),
             *_cm_block(11, "±2√2 ± i√3", "2*sqrt(2)", "sqrt(3)"),
             *_higher_genus_block(11, "±(1 + ε√5) ± i√(5 − 2ε√5)",
                        "{s1}*(1 + {eps}*sqrt(5)) + {s2}*I*sqrt(5 - 2*{eps}*sqrt(5))")]
    misread = "fails the integrality gate as printed"
    L[13] = [_e(13, "1", "1", "special"), _e(13, "13", "13", "special"),
             _e(13, "5 ± 2√3", "5 + 2*sqrt(3)", "special"), _e(13, "5 ± 2√3", "5 - 2*sqrt(3)", "special"),
             _e(13, "±i√13", "sqrt(13)", "gaussian", misprint=True, note=f"read as ±√13; {misread}"),
             _e(13, "±i√13", "-sqrt(13)", "gaussian", misprint=True, note=f"read as ±√13; {misread}"),
             *[FixtureEntry(13, x.printed, x.value, x.expected_provenance, x.completeness, True,
                            f"read as ±1 ± 2i√3; {misread}")
               for x in _cm_block(13, "±1 ± 3i√2", "1", "2*sqrt(3)",
                                  parts=("theorem", "conjugate", "higher_genus", "higher_genus"))],
             *_cm_block(13, "±√5 ± 2i√2", "sqrt(5)", "2*sqrt(2)"),
             *_cm_block(13, "±3 ± 2i", "3", "2")]
    three = ["1", "3", "I*sqrt(3)", "-I*sqrt(3)"]
    five = ["1", "5", "sqrt(5)", "-sqrt(5)", "1 + 2*I", "1 - 2*I"]
    L[15] = [_e(15, "product of a 3-critical and a 5-critical value", f"({x})*({y})", "induced")
             for x in three for y in five]
    L[15] += [_e(15, "−3", "-3", "higher_genus"), _e(15, "−5", "-5", "higher_genus"),
              _e(15, "6 ± √21", "6 + sqrt(21)", "special"), _e(15, "6 ± √21", "6 - sqrt(21)", "special"),
              *_cm_block(15, "±2 ± i√11", "2", "sqrt(11)"),
              *_cm_block(15, "±2√2 ± i√7", "2*sqrt(2)", "sqrt(7)"),
              *_cm_block(15, "±2√3 ± i√3", "2*sqrt(3)", "sqrt(3)"),
              *_higher_genus_block(15, "±2√(2 − ε√3) ± (2 + ε√3)i",
                         "{s1}*2*sqrt(2 - {eps}*sqrt(3)) + {s2}*(2 + {eps}*sqrt(3))*I"),
              *[_e(15, "1 + ε√5 ± i√(9 − 2ε√5)", f"1 + {eps}*sqrt(5) + {s}*I*sqrt(9 - 2*{eps}*sqrt(5))",
                   "higher_genus") for eps in (1, -1) for s in (1, -1)],
              *[_e(15, "±(√3 ± i√2)(√2 ± i)", f"{s0}*(sqrt(3) + {s1}*I*sqrt(2))*(sqrt(2) + {s2}*I)",
                   "higher_genus") for s0 in (1, -1) for s1 in (1, -1) for s2 in (1, -1)]]
    L[17] = [_e(17, "1", "1", "special"), _e(17, "17", "17", "special"),
             _e(17, "7 ± 4√2", "7 + 4*sqrt(2)", "special"), _e(17, "7 ± 4√2", "7 - 4*sqrt(2)", "special"),
             _e(17, "±i√17", "sqrt(17)", "gaussian", misprint=True, note=f"read as ±√17; {misread}"),
             _e(17, "±i√17", "-sqrt(17)", "gaussian", misprint=True, note=f"read as ±√17; {misread}"),
             *_cm_block(17, "±1 ± 4i", "1", "4", parts=("theorem", "conjugate", "higher_genus", "higher_genus")),
             *_cm_block(17, "±√5 ± 2i√3", "sqrt(5)", "2*sqrt(3)"),
             *_cm_block(17, "3 ± 2i√2", "3", "2*sqrt(2)", signs="positive"),
             *_cm_block(17, "±√13 ± 2i", "sqrt(13)", "2"),
             *_higher_genus_block(17, "±(1 + 2ε√2) ± 2i√(2 − ε√2)",
                        "{s1}*(1 + 2*{eps}*sqrt(2)) + {s2}*2*I*sqrt(2 - {eps}*sqrt(2))")]
    return L


FIXTURES: dict[int, list[FixtureEntry]] = _build()


def entries(d: int) -> list[FixtureEntry]:
    if d not in FIXTURES:
        raise KeyError(f"no published list for d={d}; available: {sorted(FIXTURES)}")
    return FIXTURES[d]


def printed_fails_integrality(entry: FixtureEntry) -> bool:
    """For the misprints: the printed value has ``(lam - 1)/2`` non-integral."""
    printed = {"±i√13": "I*sqrt(13)", "±i√17": "I*sqrt(17)", "±1 ± 3i√2": "1 + 3*I*sqrt(2)"}
    expr = sp.sympify(printed[entry.printed])
    return not _is_algebraic_integer((expr - 1) / 2)


def _is_algebraic_integer(expr: sp.Expr) -> bool:
    x = sp.Symbol("x")
    poly = sp.Poly(sp.minimal_polynomial(expr, x), x)
    coeffs = poly.all_coeffs()
    lead = coeffs[0]
    return all(sp.Rational(c, lead).q == 1 for c in coeffs)


@dataclass(frozen=True)
class Route:
    """One catalogued construction on Z/dZ with its fixture-facing tag."""

    tag: str
    pair: CriticalPair
    label: str


def _label(pair: CriticalPair) -> str:
    det = pair.detail
    if pair.provenance == "theta_family":
        return f"theta a={det['a']} b={det['b']} k={det['k']} p={det['p']}"
    if pair.provenance == "constant_tail":
        return f"constant tail ({det['variant']})"
    if pair.provenance == "gaussian":
        return f"gaussian u={det['u']}"
    if pair.provenance == "induced_subgroup":
        return f"subgroup from Z/{det['from_d']}Z"
    if pair.provenance == "induced_quotient":
        return f"quotient, d1={det['d1']}"
    if pair.provenance == "induced_product":
        return f"product Z/{det['factors'][0]}Z x Z/{det['factors'][1]}Z"
    return pair.provenance


def _base_routes(d: int, k_range, p_max) -> list[Route]:
    routes = []
    for variant in ("zero", "one", "plus", "minus"):
        routes.append(Route("special", constant_tail(d, variant), f"constant tail ({variant})"))
    seen = set()
    for u in range(1, d):
        if math.gcd(u, d) != 1:
            continue
        s = jacobi_symbol(2 * u, d)
        if s in seen:
            continue
        seen.add(s)
        g = quadratic_gaussian(d, u)
        routes.append(Route("gaussian", g, _label(g)))
    for a, b in cm.enumerate_pairs(d):
        desc = cm.CMDescriptor.build(d, a, b, 0, 1)
        pair = cm.theta_pair(desc)
        routes.append(Route("theorem", pair, _label(pair)))
        hit = cm.search_negative_sign(d, a, b, k_range[0], k_range[1], p_max)
        if hit is not None:
            pair = cm.theta_pair(cm.CMDescriptor.build(d, a, b, *hit))
            routes.append(Route("theorem_negative", pair, _label(pair)))
    return routes


@lru_cache(maxsize=None)
def catalog(d: int, k_range: tuple[int, int] = cm.DEFAULT_K_RANGE, p_max: int = cm.DEFAULT_P_MAX
            ) -> tuple[Route, ...]:
    """Every pair this package can build on Z/dZ: special, gaussian, theta
    (both signs), inductions from proper divisors, and conjugates of all of those."""
    routes = _base_routes(d, k_range, p_max)
    for d1 in divisors(d):
        if d1 in (1, d) or d1 < 3 or d // d1 < 3:
            continue
        for r in catalog(d1, k_range, p_max):
            routes.append(Route("induced", induce_subgroup(r.pair, d), f"subgroup from Z/{d1}Z: {r.label}"))
        for r in catalog(d // d1, k_range, p_max):
            routes.append(Route("induced", induce_quotient(r.pair, d, d1), f"quotient by d1={d1}: {r.label}"))
        d2 = d // d1
        if d1 < d2 and math.gcd(d1, d2) == 1:
            for r1 in catalog(d1, k_range, p_max):
                for r2 in catalog(d2, k_range, p_max):
                    routes.append(Route("induced", induce_product(r1.pair, r2.pair),
                                        f"product ({r1.label}) x ({r2.label})"))
    routes += [Route("conjugate", r.pair.conjugate(), f"conjugate of {r.label}")
               for r in list(routes) if r.tag != "conjugate"]
    return tuple(routes)


@dataclass(frozen=True)
class Realization:
    entry: FixtureEntry
    routes: tuple[Route, ...]

    @property
    def realized(self) -> bool:
        return bool(self.routes)

    @property
    def tags(self) -> tuple[str, ...]:
        return tuple(sorted({r.tag for r in self.routes}))

    @property
    def best_residual(self) -> Optional[float]:
        if not self.routes:
            return None
        return min(r.pair.relative_residual for r in self.routes)

    @property
    def expected_route_found(self) -> bool:
        return self.entry.expected_provenance in self.tags

    @property
    def ok(self) -> bool:
        """Realisable entries are realised; higher-genus entries are not."""
        return self.realized == self.entry.realizable


def realize(entry: FixtureEntry, routes=None, tol: float = 1e-9) -> Realization:
    """Match an entry against the catalogue numerically, then exactly."""
    if routes is None:
        routes = catalog(entry.d)
    target = entry.number
    hits = []
    for r in routes:
        if abs(r.pair.lam - target) > tol * (1 + abs(target)):
            continue
        if r.pair.lambda_exact is not None and not exactly_equal(r.pair.lambda_exact, entry.exact):
            continue
        hits.append(r)
    return Realization(entry, tuple(hits))


def realize_list(d: int) -> list[Realization]:
    routes = catalog(d)
    return [realize(e, routes) for e in entries(d)]


def distinct_values(d: int, tol: float = 1e-9) -> int:
    vals: list[complex] = []
    for e in entries(d):
        v = e.number
        if all(abs(v - w) > tol * (1 + abs(v)) for w in vals):
            vals.append(v)
    return len(vals)
