"""Per-target analysis pipeline and deterministic report rendering.

`analyze_target` runs table -> blocks -> fusion -> verdict -> star for
one (group, prime) pair and returns a structured result; the renderers
emit a structured text report and a tab-separated summary.  All numbers
are exact integers; reports are byte-identical across runs for fixed
inputs and version (timing is opt-in and excluded from that contract).
Figures (character-degree charts) are rendered next to the report file
when requested.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from . import __version__
from .blocks import Block, block_partition
from .chartab import CharacterTable, character_table
from .fusion import (
    FusionSystem,
    block_fusion_system,
    focal_oracle,
    focal_subgroup,
    group_fusion_system,
    hyperfocal_oracle,
    hyperfocal_subgroup,
    is_nilpotent_fusion,
)
from .group import PermGroup
from .star import star_orbits
from .verdicts import Verdict, theorem11_verdict

__all__ = [
    "BlockReport",
    "TargetReport",
    "analyze_target",
    "render_text",
    "render_tsv",
    "render_figures",
]

# star orbits are enumerated only when the defect group is this small;
# larger defect groups get an orbit count from |Irr_0| / |P:foc| instead
STAR_ELEMENT_CAP = 512


@dataclass
class FusionSummary:
    complete: bool
    kind: str
    subgroup_orders: list[int]
    aut_orders: list[int]
    aut_is_p_group: list[bool]
    focal_index: int | None
    hyperfocal_index: int | None
    nilpotent: bool | None
    focal_method: str


@dataclass
class BlockReport:
    index: int
    is_principal: bool
    defect: int
    defect_group_order: int
    defect_group_generators: list[str]
    member_degrees: list[int]
    heights: list[int]
    fusion: FusionSummary | None
    verdict: Verdict
    star_orbit_sizes: list[int] | None
    star_orbit_degrees: list[int] | None
    note: str = ""


@dataclass
class TargetReport:
    name: str
    degree: int
    order: int
    prime: int
    class_count: int
    conductor: int
    reduction_map: str
    blocks: list[BlockReport] = field(default_factory=list)
    error: str = ""
    elapsed: float = 0.0


def _fusion_summary(F: FusionSystem, foc, hyp, nilpotent, method) -> FusionSummary:
    p = F.prime
    if F.complete:
        orders = [len(e) + 1 for e in F.element_lists]
        auts = [A.order for A in F.aut_groups]
        flags = [A.is_p_group(p) for A in F.aut_groups]
    else:
        orders, auts, flags = [], [], []
    return FusionSummary(
        complete=F.complete,
        kind=F.kind,
        subgroup_orders=orders,
        aut_orders=auts,
        aut_is_p_group=flags,
        focal_index=F.P.order // foc.order if foc is not None else None,
        hyperfocal_index=F.P.order // hyp.order if hyp is not None else None,
        nilpotent=nilpotent,
        focal_method=method,
    )


def analyze_target(
    G: PermGroup,
    name: str,
    p: int,
    fusion_cap: int | None = None,
    table: CharacterTable | None = None,
) -> TargetReport:
    start = time.monotonic()
    if table is None:
        table = character_table(G)
    report = TargetReport(
        name=name,
        degree=G.degree,
        order=G.order,
        prime=p,
        class_count=len(table.classes),
        conductor=table.conductor,
        reduction_map=describe_reduction_map(table.conductor, p),
    )
    for bi, B in enumerate(block_partition(table, p)):
        report.blocks.append(_analyze_block(G, p, B, bi, name, fusion_cap))
    report.elapsed = time.monotonic() - start
    return report


def _analyze_block(G, p, B: Block, bi, name, fusion_cap) -> BlockReport:
    P = B.defect_group
    note = ""
    F = None
    if not (B.is_principal and P.order == 1):
        if B.is_principal:
            F = group_fusion_system(G, P, fusion_cap)
        else:
            F = block_fusion_system(G, B, fusion_cap)

    fusion = None
    if F is not None:
        if F.complete:
            foc = focal_subgroup(F)
            hyp = hyperfocal_subgroup(F)
            nil = is_nilpotent_fusion(F)
            method = "fusion"
        elif B.is_principal:
            foc = focal_oracle(G, P)
            hyp = hyperfocal_oracle(G, P, p)
            nil = G.is_p_nilpotent(p)
            method = "oracle"
            note = "fusion enumeration over capacity; principal-block oracle used"
        else:
            foc = hyp = nil = None
            method = "unavailable"
            note = "fusion enumeration over capacity; nonprincipal block, partial verdict"
        fusion = _fusion_summary(F, foc, hyp, nil, method)

    verdict = theorem11_verdict(
        G, p, B, block_index=bi, group_id=name, F=F, fusion_cap=fusion_cap
    )

    orbit_sizes = orbit_degrees = None
    if (
        F is not None
        and verdict.focal_method != "unavailable"
        and P.order <= STAR_ELEMENT_CAP
    ):
        orbits = star_orbits(B, F)
        orbit_sizes = [len(o) for o in orbits]
        orbit_degrees = [B.table.degrees[o[0]] for o in orbits]
    elif F is not None and P.order > STAR_ELEMENT_CAP:
        note = (note + "; " if note else "") + "star orbits skipped (defect group too large)"

    return BlockReport(
        index=bi,
        is_principal=B.is_principal,
        defect=B.defect,
        defect_group_order=P.order,
        defect_group_generators=[_cycles_str(g) for g in P.generators],
        member_degrees=B.member_degrees(),
        heights=[B.heights[r] for r in B.member_rows],
        fusion=fusion,
        verdict=verdict,
        star_orbit_sizes=orbit_sizes,
        star_orbit_degrees=orbit_degrees,
        note=note,
    )


def describe_reduction_map(conductor: int, p: int) -> str:
    from .finitefield import ReductionMap

    rm = ReductionMap(p, conductor)
    deg = rm.field.degree
    poly = "+".join(
        f"{c}x^{deg - i}" if i < deg else str(c)
        for i, c in enumerate(rm.field.modulus)
        if c
    )
    return (
        f"conductor {conductor}, p'-part {rm.eprime}, "
        f"field GF({p}^{rm.field.degree}) mod {poly}"
    )


def _cycles_str(g) -> str:
    from .perm import format_cycles

    return format_cycles(g)


# ----------------------------------------------------------------------
# renderers


def _bool(v) -> str:
    return {True: "yes", False: "no", None: "n/a"}[v]


def render_text(reports: list[TargetReport], include_timing: bool = False) -> str:
    lines = [f"blocklab {__version__} analysis report", "=" * 40]
    for rep in reports:
        lines.append("")
        lines.append(
            f"target {rep.name}: degree {rep.degree}, order {rep.order}, "
            f"prime {rep.prime}"
        )
        lines.append(f"  classes: {rep.class_count}")
        lines.append(f"  reduction map: {rep.reduction_map}")
        if rep.error:
            lines.append(f"  ERROR: {rep.error}")
            continue
        for blk in rep.blocks:
            v = blk.verdict
            lines.append(
                f"  block {blk.index} "
                f"({'principal' if blk.is_principal else 'nonprincipal'}): "
                f"defect {blk.defect}, defect group order {blk.defect_group_order}"
            )
            lines.append(
                "    defect group generators (up to conjugacy): "
                + (" ".join(blk.defect_group_generators) or "()")
            )
            lines.append(f"    degrees: {blk.member_degrees}")
            lines.append(f"    heights: {blk.heights}")
            if blk.fusion is not None:
                f = blk.fusion
                lines.append(
                    f"    fusion [{f.kind}]: complete={_bool(f.complete)}, "
                    f"|P:foc|={f.focal_index}, |P:hyp|={f.hyperfocal_index}, "
                    f"nilpotent={_bool(f.nilpotent)} ({f.focal_method})"
                )
                if f.complete:
                    per = ", ".join(
                        f"|Q|={q} |Aut|={a}{' (p-group)' if g else ''}"
                        for q, a, g in zip(
                            f.subgroup_orders, f.aut_orders, f.aut_is_p_group
                        )
                    )
                    lines.append(f"    subgroup classes: {per}")
            lines.append(
                f"    verdict: m={v.m} nu={v.nu_m} |S:P|^2={v.sylow_index_sq} "
                f"|P:foc|={v.focal_index} rhs={v.rhs} |Irr_0|={v.irr0_count}"
            )
            lines.append(
                f"    conditions: (i)={_bool(v.cond_i)} (iii)={_bool(v.cond_iii)} "
                f"(iv)={_bool(v.cond_iv)} consistent={_bool(v.consistent)}"
            )
            lines.append(f"    note: {v.source_condition_note}")
            if blk.star_orbit_sizes is not None:
                lines.append(
                    f"    star orbits: {len(blk.star_orbit_sizes)} orbit(s), "
                    f"sizes {blk.star_orbit_sizes}, "
                    f"degrees {blk.star_orbit_degrees}"
                )
            if blk.note:
                lines.append(f"    note: {blk.note}")
        if include_timing:
            lines.append(f"  elapsed: {rep.elapsed:.2f}s")
    lines.append("")
    return "\n".join(lines)


TSV_COLUMNS = [
    "name", "degree", "order", "prime", "block", "principal", "defect",
    "defect_group_order", "m", "nu_m", "sylow_index_sq", "focal_index",
    "rhs", "irr0_count", "cond_i", "cond_iii", "cond_iv", "consistent",
    "focal_method",
]


def render_tsv(reports: list[TargetReport]) -> str:
    lines = [
        f"# blocklab {__version__}",
        "\t".join(TSV_COLUMNS),
    ]
    for rep in reports:
        for blk in rep.blocks:
            v = blk.verdict
            row = [
                rep.name, rep.degree, rep.order, rep.prime, blk.index,
                _bool(blk.is_principal), blk.defect, blk.defect_group_order,
                v.m, v.nu_m, v.sylow_index_sq, v.focal_index, v.rhs,
                v.irr0_count, _bool(v.cond_i), _bool(v.cond_iii),
                _bool(v.cond_iv), _bool(v.consistent), v.focal_method,
            ]
            lines.append("\t".join(str(x) for x in row))
    lines.append("")
    return "\n".join(lines)


def render_figures(reports: list[TargetReport], directory) -> list[str]:
    """One character-degree chart per target, saved as PNG files."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from pathlib import Path

    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for rep in reports:
        if not rep.blocks:
            continue
        fig, ax = plt.subplots(figsize=(8, 4))
        positions, heights, colors, labels = [], [], [], []
        pos = 0
        palette = ["#4878a8", "#e49444", "#5fa052", "#b04f4f", "#8470a8"]
        for blk in rep.blocks:
            color = palette[blk.index % len(palette)]
            for deg, h in zip(blk.member_degrees, blk.heights):
                positions.append(pos)
                heights.append(deg)
                colors.append(color if h == 0 else "#bbbbbb")
                pos += 1
            pos += 1
        ax.bar(positions, heights, color=colors)
        ax.set_title(
            f"{rep.name} (order {rep.order}), p = {rep.prime}: "
            "character degrees by block (grey = positive height)"
        )
        ax.set_xlabel("irreducible characters, grouped by block")
        ax.set_ylabel("degree")
        fname = directory / f"degrees_{rep.name}_p{rep.prime}.png"
        fig.tight_layout()
        fig.savefig(fname, dpi=110)
        plt.close(fig)
        written.append(str(fname))
    return written
