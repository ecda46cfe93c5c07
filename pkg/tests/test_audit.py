import dataclasses

from srd.audit import audit_published_table


def finding_keys(report):
    return [(f.i, f.j, f.k) for f in report.findings]


def test_audit_flags_exactly_the_four_bad_coefficients(gq_params):
    report = audit_published_table(gq_params)
    assert finding_keys(report) == [(8, 10, 2), (8, 10, 3), (10, 8, 5), (10, 8, 6)]
    assert not report.clean


def test_audit_numeric_values_on_gq22(gq_params):
    report = audit_published_table(gq_params)
    by_key = {(f.i, f.j, f.k): f for f in report.findings}
    f = by_key[(8, 10, 2)]
    assert f.transcribed_value == 16 and f.derived_value == 10
    f = by_key[(8, 10, 3)]
    assert f.transcribed_value == 15 and f.derived_value == 9


def test_audit_symbolic_forms(gq_params):
    report = audit_published_table(gq_params)
    f = report.findings[0]
    assert "n2" in f.transcribed and "a2" in f.transcribed
    assert "S2" in f.derived and "S2" not in f.transcribed


def test_audit_everything_else_agrees(gq_params):
    report = audit_published_table(gq_params)
    assert report.agreement_count == 50 * 10 - 4
    assert report.zero_products_consistent


def test_audit_findings_are_structural_not_numeric(gq_params):
    # setting b2 = S2 changes the numbers but not the disagreement set
    tweaked = dataclasses.replace(gq_params, b2=gq_params.S2)
    assert finding_keys(audit_published_table(tweaked)) == finding_keys(
        audit_published_table(gq_params)
    )


def test_audit_notes_mention_unverifiable_external_table(gq_params):
    report = audit_published_table(gq_params)
    assert any("cannot be audited" in note for note in report.notes)
