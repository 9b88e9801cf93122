"""Heuristic pattern mining over sweep results at k = 4.

Dimension-one cases whose representative is a product of h-generators (and
at most one c-generator) are grouped by a parametric description of their
indices; groups with at least two supporting cases survive, 1h+1c groups
are re-validated by evaluating the mined index expressions on every member,
and the survivors are rendered as a theorem-style text block.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from .families import StuCase

__all__ = [
    "Pattern",
    "extract_indices",
    "parametric_description",
    "summarize_conditions",
    "evaluate_expression",
    "discover_patterns",
    "render_theorem",
]


@dataclass(frozen=True)
class Pattern:
    """One mined family: index expressions, parameter conditions, support."""

    pattern: str
    condition: str
    case_count: int

    def to_json_dict(self) -> dict:
        return {"pattern": self.pattern, "condition": self.condition,
                "case_count": self.case_count}


def extract_indices(pattern_string: str) -> Tuple[List[int], List[int]]:
    """Numeric h- and c-indices appearing in a formatted monomial string."""
    h_matches = re.findall(r"h_(\d+)", pattern_string)
    c_matches = re.findall(r"c_(\d+)", pattern_string)
    return [int(x) for x in h_matches], [int(x) for x in c_matches]


def parametric_description(value: int, s: int, t: int, u: int) -> str:
    """Preferred symbolic form of a concrete index at parameters (s, t, u).

    Priority: a bare parameter, then a parameter plus a constant 1..5 (u
    before t before s), then two- and three-parameter sums, else the
    literal value.
    """
    if value == 0:
        return "0"
    if value == s:
        return "s"
    if value == t:
        return "t"
    if value == u:
        return "u"
    for const in range(1, 6):
        if value == u + const:
            return f"u+{const}"
        if value == t + const:
            return f"t+{const}"
        if value == s + const:
            return f"s+{const}"
    if value == s + t:
        return "s+t"
    if value == s + u:
        return "s+u"
    if value == t + u:
        return "t+u"
    if value == s + t + u:
        return "s+t+u"
    return str(value)


def summarize_conditions(triples: Sequence[Tuple[int, int, int]]) -> str:
    """Per-parameter summary: a single seen value pins it, several floor it."""
    if not triples:
        return "no conditions"
    parts = []
    for pos, name in ((0, "s"), (1, "t"), (2, "u")):
        values = sorted({triple[pos] for triple in triples})
        if len(values) == 1:
            parts.append(f"{name} = {values[0]}")
        else:
            parts.append(f"{name} >= {min(values)}")
    return ", ".join(parts)


def evaluate_expression(expr: str, s: int, t: int, u: int) -> Optional[int]:
    """Value of a mined index expression: a sum of s, t, u, and literals."""
    total = 0
    env = {"s": s, "t": t, "u": u}
    for term in expr.split("+"):
        term = term.strip()
        if term in env:
            total += env[term]
        elif term.isdigit():
            total += int(term)
        else:
            return None
    return total


def discover_patterns(cases: Iterable[StuCase]) -> List[Pattern]:
    """Group dimension-one cases by index shape and keep validated groups.

    Cases must arrive in grid order; group insertion order breaks the
    final ties after the sort by descending support.
    """
    groups: dict = {}
    for case in cases:
        if case.dimension != 1 or case.generator_pattern is None:
            continue
        h_indices, c_indices = extract_indices(case.generator_pattern)
        if len(h_indices) == 1 and len(c_indices) == 1:
            h_desc = parametric_description(h_indices[0], case.s, case.t, case.u)
            c_desc = parametric_description(c_indices[0], case.s, case.t, case.u)
            key = f"h_{{{h_desc}}}c_{{{c_desc}}}"
        elif len(h_indices) == 4 and len(c_indices) == 0:
            h_sorted = sorted(h_indices)
            if h_sorted == sorted([0, case.s, case.s + case.t,
                                   case.s + case.t + case.u]):
                key = "h_0h_sh_{s+t}h_{s+t+u}"
            else:
                key = "h_" + "_".join(str(idx) for idx in h_sorted)
        else:
            continue
        groups.setdefault(key, []).append(case)

    final: List[Pattern] = []
    for key, members in groups.items():
        if len(members) < 2:
            continue
        if not _validate_group(key, members):
            continue
        condition = summarize_conditions([(c.s, c.t, c.u) for c in members])
        final.append(Pattern(key, condition, len(members)))
    final.sort(key=lambda p: -p.case_count)
    return final


def _validate_group(key: str, members: Sequence[StuCase]) -> bool:
    """Re-evaluate 1h+1c index expressions on every member of the group."""
    if "h_{" not in key or "}c_{" not in key:
        return True
    match = re.match(r"h_\{([^}]+)\}c_\{([^}]+)\}", key)
    if match is None:
        return True
    h_expr, c_expr = match.groups()
    for case in members:
        h_indices, c_indices = extract_indices(case.generator_pattern or "")
        if len(h_indices) != 1 or len(c_indices) != 1:
            continue
        expected_h = evaluate_expression(h_expr, case.s, case.t, case.u)
        expected_c = evaluate_expression(c_expr, case.s, case.t, case.u)
        if expected_h != h_indices[0] or expected_c != c_indices[0]:
            return False
    return True


def render_theorem(patterns: Sequence[Pattern], total_cases: int,
                   s_max: int, t_max: int, u_max: int) -> str:
    """Theorem-style text block summarizing the mined patterns."""
    lines = [
        "=" * 80,
        "General Form of Generators of Ext^{4, 4+n_{s,t,u}}_A",
        f"Discovered from {total_cases} computed cases for "
        f"1 <= s <= {s_max}, 1 <= t <= {t_max}, 1 <= u <= {u_max}",
        "=" * 80,
    ]
    if not patterns:
        lines.append("No significant patterns discovered.")
        return "\n".join(lines)
    lines.append("Ext^{4, 4+n_{s,t,u}}_A(F_2, F_2) = {")
    max_len = max(len(f"<{p.pattern}>") for p in patterns)
    for p in patterns:
        pattern_str = f"<{p.pattern}>"
        padding = max_len - len(pattern_str) + 4
        lines.append(f"  {pattern_str}{' ' * padding}if {p.condition}")
    lines.append(f"  0{' ' * (max_len - 1 + 4)}otherwise")
    lines.append("}")
    lines.append("=" * 80)
    return "\n".join(lines)
