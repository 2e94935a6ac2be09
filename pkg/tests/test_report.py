"""Report assembly: determinism, exactness, and figure rendering."""

import re

from blocklab.report import (
    analyze_target,
    render_figures,
    render_text,
    render_tsv,
)

TARGETS = [("s3", 2), ("a5", 2), ("s4", 3)]


def _reports(group):
    return [analyze_target(group(n), n, p) for n, p in TARGETS]


def test_text_report_structure(group):
    text = render_text(_reports(group))
    assert text.startswith("blocklab")
    for name, p in TARGETS:
        assert f"target {name}:" in text
    assert "reduction map:" in text
    assert "verdict:" in text
    assert "consistent=yes" in text
    assert "out of scope" in text


def test_reports_byte_identical(group):
    a = render_text(_reports(group))
    b = render_text(_reports(group))
    assert a == b
    assert render_tsv(_reports(group)) == render_tsv(_reports(group))


def test_no_floats_in_reports(group):
    text = render_text(_reports(group))
    tsv = render_tsv(_reports(group))
    # no decimal fractions anywhere (version numbers excepted in header)
    body = "\n".join(text.splitlines()[1:])
    assert not re.search(r"\d+\.\d+", body)
    assert not re.search(r"\d+\.\d+", "\n".join(tsv.splitlines()[1:]))


def test_timing_is_opt_in(group):
    reports = _reports(group)
    assert "elapsed" not in render_text(reports)
    assert "elapsed" in render_text(reports, include_timing=True)


def test_tsv_rows(group):
    tsv = render_tsv(_reports(group))
    lines = [l for l in tsv.splitlines() if l and not l.startswith("#")]
    header, *rows = lines
    cols = header.split("\t")
    assert cols[0] == "name" and "consistent" in cols
    ncols = len(cols)
    assert all(len(r.split("\t")) == ncols for r in rows)
    s3_rows = [r for r in rows if r.startswith("s3\t")]
    assert len(s3_rows) == 2  # two 2-blocks of S3


def test_figures_written(group, tmp_path):
    reports = _reports(group)
    written = render_figures(reports, tmp_path)
    assert len(written) == len(TARGETS)
    for f in written:
        assert f.endswith(".png")
        assert (tmp_path / f.split("/")[-1]).stat().st_size > 0


def test_oracle_fallback_noted_for_large_defect_group(group):
    # a4xc4 at p=2 has defect group of order 16: fusion is enumerable
    rep = analyze_target(group("a4xc4"), "a4xc4", 2)
    assert all(b.fusion.complete for b in rep.blocks)
    assert all(b.verdict.focal_method == "fusion" for b in rep.blocks)
