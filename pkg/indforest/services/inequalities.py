"""
Exhaustive checks of the arithmetic behind the ceil((4n+3)/7) bound.

Every hypothesis has denominator 7 and is compared after multiplying through,
so the checks use integer arithmetic only. All hypotheses have the form
4n <= T for a tuple-dependent T, and the bound is non-decreasing in n, so the
only binding value is n = floor(T / 4).
"""
import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from indforest.core.config import get_settings
from indforest.core.exceptions import PreconditionError
from indforest.models.inequality import Counterexample, ExceptionReport, Verdict

logger = logging.getLogger(__name__)

PARTS = tuple(range(1, 9))


def ceil_div(p: int, q: int) -> int:
    return -(-p // q)


def bound(n: int) -> int:
    """
    The induced forest bound ceil((4n+3)/7).

    Raises:
        PreconditionError: if n < 1
    """
    if n < 1:
        raise PreconditionError(f"bound is defined for n >= 1, got {n}", {"n": n})
    return ceil_div(4 * n + 3, 7)


def _f(x: int) -> int:
    # formal ceil((4x+3)/7); arguments may drop to zero or below
    return ceil_div(4 * x + 3, 7)


def _g(x: int) -> int:
    return ceil_div(4 * x - 1, 7)


def residue(x: int) -> int:
    return (4 * x + 3) % 7


def residue_table() -> Dict[str, object]:
    """
    Residue behaviour of the bound under ceiling division.

    Returns:
        Mapping with "residues" (a mod 7 -> (4a+3) mod 7 for a in 1..7),
        "slack" (residue r -> 7*ceil - (4a+3)) and "increments", the 7x7 table
        of bound(r+j+1) - bound(r+j) for r in 1..7 and j in 0..6
    """
    residues = {a: residue(a) for a in range(1, 8)}
    slack = {r: (7 - r) % 7 for r in range(7)}
    increments = [
        [bound(r + j + 1) - bound(r + j) for j in range(7)] for r in range(1, 8)
    ]
    return {"residues": residues, "slack": slack, "increments": increments}


def check_ineq1(
    value_range: Optional[int] = None, min_k: Optional[int] = None
) -> Verdict:
    """
    Check the two-part split inequality.

    For a_1 + a_2 = n + 3 - k with k <= 8:
    max{f(a_1) + f(a_2) + 2, g(a_1) + g(a_2) + 3} >= bound(n), where
    f(x) = ceil((4x+3)/7) and g(x) = ceil((4x-1)/7).

    Args:
        value_range: Upper value of a_1 and a_2
        min_k: Smallest k considered (k also keeps n >= 1)

    Returns:
        Verdict with the first counterexample in (a_1, a_2, k) order
    """
    settings = get_settings()
    value_range = settings.INEQ1_RANGE if value_range is None else value_range
    min_k = settings.INEQ1_MIN_K if min_k is None else min_k
    checked = 0
    for a1 in range(1, value_range + 1):
        for a2 in range(1, value_range + 1):
            for k in range(max(min_k, 4 - a1 - a2), 9):
                n = a1 + a2 + k - 3
                lhs = max(_f(a1) + _f(a2) + 2, _g(a1) + _g(a2) + 3)
                checked += 1
                if lhs < bound(n):
                    cx = Counterexample({"a1": a1, "a2": a2, "k": k}, n, lhs, bound(n))
                    logger.info(f"Split inequality fails at {cx.params}")
                    return Verdict("ineq1", False, checked, cx)
    logger.info(f"Split inequality holds on {checked} tuples")
    return Verdict("ineq1", True, checked)


@dataclass(frozen=True)
class _Tuple:
    a: Optional[int]
    ai: Tuple[int, ...]
    bj: Tuple[int, ...]
    c: int

    def counted(self) -> Tuple[int, ...]:
        head = () if self.a is None else (self.a,)
        return head + self.ai + self.bj

    def params(self) -> Dict[str, object]:
        out: Dict[str, object] = {}
        if self.a is not None:
            out["a"] = self.a
        out["a_i"] = list(self.ai)
        if self.bj:
            out["b_j"] = list(self.bj)
        out["c"] = self.c
        return out


@dataclass(frozen=True)
class _PartForm:
    has_a: bool
    ks: Callable[[int], Sequence[int]]
    ls: Callable[[int], Sequence[int]]
    offset: Callable[[int], int]
    switch: bool
    symmetric: bool
    excepted: Callable[[Tuple[int, ...]], bool]


def _in(patterns):
    table = set(patterns)
    return lambda rs: rs in table


_P2 = [(0, 4), (4, 0)]
_P3 = [(0, 0), (0, 6), (0, 5), (0, 4), (4, 0), (6, 5), (5, 6), (5, 0), (6, 6), (6, 0)]
_P4 = [(1, 0, 0), (4, 0, 4), (4, 4, 0), (0, 4, 4)]
_P5 = [
    (0, 0, 0),
    (1, 0, 0),
    (4, 0, 3),
    (4, 3, 0),
    (3, 0, 4),
    (4, 0, 4),
    (3, 4, 0),
    (4, 4, 0),
    (1, 6, 0),
    (1, 0, 6),
    (0, 3, 4),
    (0, 4, 3),
    (0, 4, 4),
    (6, 4, 4),
    (4, 4, 6),
    (4, 6, 4),
]
_P8 = [(0, 0), (0, 6), (0, 5), (5, 0), (6, 6), (6, 0)]


def _one_residue_free(rs: Tuple[int, ...]) -> bool:
    # some j has residue 0 or 6 and every other index has residue 0
    return all(r in (0, 6) for r in rs) and sum(r == 6 for r in rs) <= 1


def _form(part: int) -> _PartForm:
    upto = lambda m: range(1, m + 1)  # noqa: E731
    one = lambda _m: (1,)  # noqa: E731
    two = lambda _m: (2,)  # noqa: E731
    none = lambda _m: (0,)  # noqa: E731
    all_zero = lambda rs: all(r == 0 for r in rs)  # noqa: E731
    # (has_a, k values, |L| values, hypothesis offset, switch, symmetric, excepted)
    forms = {
        1: _PartForm(
            has_a=True,
            ks=upto,
            ls=lambda m: range(0, m + 1),
            offset=lambda k: -4 * k - 3,
            switch=True,
            symmetric=True,
            excepted=lambda _rs: False,
        ),
        2: _PartForm(True, one, none, lambda k: -6, True, False, _in(_P2)),
        3: _PartForm(True, one, none, lambda k: 1, False, False, _in(_P3)),
        4: _PartForm(True, two, none, lambda k: -10, True, True, _in(_P4)),
        5: _PartForm(True, two, none, lambda k: -9, True, True, _in(_P5)),
        6: _PartForm(False, upto, none, lambda k: -2, False, True, all_zero),
        7: _PartForm(False, upto, none, lambda k: -1, False, True, _one_residue_free),
        8: _PartForm(True, one, none, lambda k: 0, False, False, _in(_P8)),
    }
    if part not in forms:
        raise PreconditionError(f"part must be in 1..8, got {part}", {"part": part})
    return forms[part]


def _listed_patterns(part: int, max_k: int) -> List[Tuple[int, ...]]:
    """Excepted residue patterns, normalized the way the enumeration keys them."""
    if part == 1:
        return []
    if part in (2, 3, 8):
        return {2: _P2, 3: _P3, 8: _P8}[part]
    if part in (4, 5):
        listed = _P4 if part == 4 else _P5
        return sorted({(p[0],) + tuple(sorted(p[1:])) for p in listed})
    patterns = []
    for k in range(1, max_k + 1):
        patterns.append((0,) * k)
        if part == 7:
            patterns.append((0,) * (k - 1) + (6,))
    return patterns


def _pattern_key(form: _PartForm, t: _Tuple) -> Tuple[int, ...]:
    head = () if t.a is None else (residue(t.a),)
    tail = tuple(residue(x) for x in t.ai)
    return head + (tuple(sorted(tail)) if form.symmetric else tail)


def _hypothesis_total(form: _PartForm, t: _Tuple) -> int:
    k = len(t.ai)
    return sum(4 * x + 3 for x in t.counted()) + 7 * t.c + form.offset(k)


def _conclusion(form: _PartForm, t: _Tuple) -> int:
    rest = sum(_f(b) for b in t.bj) + t.c
    if not form.switch:
        head = 0 if t.a is None else _f(t.a)
        return head + sum(_f(x) for x in t.ai) + rest
    best = None
    for choice in product((0, 1), repeat=len(t.ai)):
        value = (
            _f(t.a - sum(choice))
            + sum(_f(x - s) for x, s in zip(t.ai, choice))
            + rest
            - sum(1 - s for s in choice)
        )
        best = value if best is None else max(best, value)
    return best


def _tuples(
    form: _PartForm, values: Sequence[int], cs: Sequence[int], max_k: int, max_l: int
) -> Iterator[_Tuple]:
    heads = values if form.has_a else (None,)
    for k in form.ks(max_k):
        ai_choices = (
            combinations_with_replacement(values, k)
            if form.symmetric
            else product(values, repeat=k)
        )
        ai_list = list(ai_choices)
        for l in form.ls(max_l):
            bj_list = list(combinations_with_replacement(values, l))
            for a in heads:
                for ai in ai_list:
                    for bj in bj_list:
                        for c in cs:
                            yield _Tuple(a, tuple(ai), tuple(bj), c)


def _shift_into_box(
    form: _PartForm, t: _Tuple, value_range: int, max_c: int
) -> Optional[_Tuple]:
    """Raise parameters by whole periods until n >= 1, staying in the box."""
    while _hypothesis_total(form, t) // 4 < 1:
        if t.a is not None and t.a + 7 <= value_range:
            t = _Tuple(t.a + 7, t.ai, t.bj, t.c)
        elif t.ai and t.ai[-1] + 7 <= value_range:
            t = _Tuple(t.a, t.ai[:-1] + (t.ai[-1] + 7,), t.bj, t.c)
        elif t.c + 4 <= max_c:
            t = _Tuple(t.a, t.ai, t.bj, t.c + 4)
        else:
            return None
    return t


def check_ineq2(
    part: int,
    value_range: Optional[int] = None,
    max_k: Optional[int] = None,
    max_l: Optional[int] = None,
    max_c: Optional[int] = None,
    reduced: bool = True,
) -> Verdict:
    """
    Check one part of the multi-part inequality.

    Args:
        part: Part number, 1..8
        value_range: Upper value of a, a_i and b_j
        max_k: Largest k for the parts with a variable number of a_i
        max_l: Largest |L| (part 1 only)
        max_c: Upper value of c
        reduced: Enumerate one representative per residue class (a, a_i, b_j
            over 1..7 and c over 1..4) instead of the full box

    Returns:
        Verdict; failures outside the exception list become the counterexample,
        and every excepted pattern is reported as realized or vacuous
    """
    settings = get_settings()
    form = _form(part)
    value_range = settings.INEQ2_RANGE if value_range is None else value_range
    max_k = settings.INEQ2_MAX_K if max_k is None else max_k
    max_l = settings.INEQ2_MAX_L if max_l is None else max_l
    max_c = settings.INEQ2_MAX_C if max_c is None else max_c

    if reduced:
        values = range(1, min(7, value_range) + 1)
        cs = range(1, min(4, max_c) + 1)
    else:
        values = range(1, value_range + 1)
        cs = range(1, max_c + 1)

    name = f"ineq2.part{part}"
    checked = 0
    witnesses: Dict[Tuple[int, ...], Counterexample] = {}
    for t in _tuples(form, values, cs, max_k, max_l):
        lhs = _conclusion(form, t)
        n = _hypothesis_total(form, t) // 4
        if n < 1 and not reduced:
            continue
        checked += 1
        if lhs >= ceil_div(4 * n + 3, 7):
            continue
        if n < 1:
            t = _shift_into_box(form, t, value_range, max_c)
            if t is None:
                continue
            lhs, n = _conclusion(form, t), _hypothesis_total(form, t) // 4
        cx = Counterexample(t.params(), n, lhs, bound(n))
        key = _pattern_key(form, t)
        if form.excepted(_raw_key(t)):
            witnesses.setdefault(key, cx)
            continue
        logger.info(f"Part {part} fails at {cx.params} with n={n}")
        return Verdict(name, False, checked, cx, reduced=reduced)

    exceptions = [
        ExceptionReport(p, p in witnesses, witnesses.get(p))
        for p in _listed_patterns(part, max_k)
    ]
    logger.info(
        f"Part {part} holds on {checked} tuples; "
        f"{sum(e.realized for e in exceptions)}/{len(exceptions)} exceptions realized"
    )
    return Verdict(name, True, checked, exceptions=exceptions, reduced=reduced)


def _raw_key(t: _Tuple) -> Tuple[int, ...]:
    head = () if t.a is None else (residue(t.a),)
    return head + tuple(residue(x) for x in t.ai)


def check_all(value_range: Optional[int] = None, reduced: bool = True) -> List[Verdict]:
    """Run every part of the multi-part inequality."""
    return [
        check_ineq2(part, value_range=value_range, reduced=reduced) for part in PARTS
    ]
