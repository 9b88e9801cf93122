"""Plain-text rendering of service responses for the CLI.

The basis block mirrors the layout of the reference computation's verbose
output: header, generator list, dimension lines, simplified relations, and
basis classes joined with " = ".
"""

from __future__ import annotations

from typing import List

__all__ = ["render_basis_block", "render_sweep_s", "render_sweep_stu"]

_SWEEP_BANNER = "=" * 52


def render_basis_block(report: dict) -> str:
    """Text block for one bidegree report (already JSON-shaped)."""
    k, t, n = report["k"], report["t"], report["n"]
    lines = [f"--- Calculating basis for Ext_A^({k}, {t}) ---"]
    gens = report["potential_generators"]
    if not gens:
        if n > 0:
            lines.append("No potential generators found. Ext group is trivial.")
        return "\n".join(lines)
    lines.append("")
    lines.append(f"Found {len(gens)} potential generators (before relations):")
    lines.extend(f"  {g}" for g in gens)
    lines.append("")
    lines.append(f"Dimension of relation space: {report['relation_rank']}")
    lines.append(f"Dimension of Ext_A^({k}, {t}) = {report['dimension']}")
    if report["simplified_relations"]:
        lines.append("")
        lines.append("Simplified Adem Relations:")
        for rel in report["simplified_relations"]:
            rhs = " + ".join(rel["rhs"]) if rel["rhs"] else "0"
            lines.append(f"  -> {rel['lhs']} = {rhs}")
    if report["basis"]:
        lines.append("")
        lines.append("Basis elements:")
        for elem in report["basis"]:
            lines.append("  " + " = ".join(elem["equivalents"]))
    return "\n".join(lines)


def render_sweep_s(resp: dict) -> str:
    """Text for one n = 2^(s+1) - m case, including the skip message."""
    k, s, m, n = resp["k"], resp["s"], resp["m"], resp["n"]
    lines = [
        _SWEEP_BANNER,
        f"Calculating for Case n = 2^{s + 1} - m with k={k}, s={s}, m={m}",
        _SWEEP_BANNER,
        "",
    ]
    if resp["skipped"]:
        lines.append(f"--- Skipping case because n = {n} is negative ---")
        return "\n".join(lines)
    lines.append(f"----Case: n = 2^{s + 1} - {m} = {n} ----")
    lines.append(render_basis_block(resp["report"]))
    return "\n".join(lines)


def render_sweep_stu(resp: dict) -> str:
    """Text summary of a grid sweep, plus the mined theorem if present."""
    totals = resp["totals"]
    lines: List[str] = [
        f"Computed {totals['cases']} total cases.",
        f"Found {totals['nonzero']} non-zero cases.",
    ]
    for case in resp["cases"]:
        if case["dimension"] == 0:
            continue
        line = (f"  (s={case['s']}, t={case['t']}, u={case['u']}) -> "
                f"n = {case['n']}, dimension = {case['dimension']}")
        if case.get("generator_pattern") is not None:
            line += f", generator {case['generator_pattern']}"
        lines.append(line)
    if resp.get("theorem") is not None:
        lines.append("")
        lines.append(resp["theorem"])
    return "\n".join(lines)
