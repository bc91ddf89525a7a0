import json
import math

import pytest

import isodirac as iso


def test_version():
    assert iso.__version__ == "0.1.0"


def test_parameter_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        iso.FamilyParams.scarf1(2.0, 2.0)
    with pytest.raises(ValueError):
        iso.FamilyParams.radial_oscillator(-3.0, 1.0)
    with pytest.raises(ValueError):
        iso.Deformation.generic(-0.5)


def radial():
    return iso.Family(iso.FamilyParams.radial_oscillator(3.0, 1.0))


def test_radial_reference_values():
    fam = radial()
    assert fam.phi(1.0) == pytest.approx(-0.25, abs=1e-13)
    assert fam.v1(1.0) == pytest.approx(-3.25, abs=1e-13)
    assert fam.energy1(2) == pytest.approx(12.0)
    assert fam.energy2(0) == pytest.approx(6.0)
    assert fam.psi1(0, 1.0) == pytest.approx(0.99335497720810931, rel=1e-12)
    with pytest.raises(ValueError):
        fam.phi(-1.0)  # outside the open domain


def test_table_and_deformations():
    # the table keeps its family alive even when the temporary is not bound
    table = iso.compute_I(radial(), radial().default_grid())
    assert table.cdf(1.0) == pytest.approx(0.36168629604288020, abs=1e-9)
    assert table.cdf(2.5) + table.tail(2.5) == pytest.approx(1.0, abs=1e-8)

    fam = radial()
    lam1 = iso.Deformation.generic(1.0)
    assert iso.phi_lambda(fam, lam1, 1.0, table) == pytest.approx(
        0.47465597517700948, abs=1e-9
    )
    assert iso.v1_lambda(fam, lam1, 1.0, table) == pytest.approx(
        -2.9244034104575243, abs=1e-8
    )
    with pytest.raises(ValueError):
        iso.psi0_lambda(fam, iso.Deformation.pursey(), 1.0, table)

    sp = iso.dirac_spinor_lambda(fam, lam1, -1, 1.0, table)
    assert sp.lower == 0.0
    assert sp.upper == pytest.approx(iso.psi0_lambda(fam, lam1, 1.0, table))


def test_spectrum_listing():
    fam = radial()
    lines = fam.spectrum(1, 4)
    assert [pytest.approx(l.E) for l in lines] == [0.0, 6.0, 12.0, 18.0]
    assert lines[1].epsilon == pytest.approx(math.sqrt(6.0))

    gpt = iso.Family(iso.FamilyParams.gpt(2.0, 5.0))
    assert gpt.bound_count1() == 2
    assert len(gpt.spectrum(1, 8)) == 2


def test_eigensolve_with_python_callable():
    fam = radial()
    ev = iso.fd_eigensolve(lambda r: fam.v1(r), fam.default_grid(), 2)
    assert ev[0] == pytest.approx(0.0, abs=2e-3)
    assert ev[1] == pytest.approx(6.0, abs=2e-3)


def test_verification_report_round_trip():
    rep = iso.check_closed_forms()
    assert rep.overall()
    text = iso.to_text(rep)
    assert "overall: PASS" in text
    tree = json.loads(iso.to_tree(rep))
    assert tree["overall"] is True
    assert len(tree["checks"]) == len(rep.checks)
