import cmath
import math

import _ajpoly as aj


def test_parse_and_commutation():
    p = aj.parse("lx*mx")
    q = aj.parse("q*mx*lx")
    assert p == q
    assert (p - q).is_zero()
    prod = aj.parse("(mx + lx)*(mx - lx)")
    assert prod == aj.parse("mx^2 + (q - 1)*mx*lx - lx^2")


def test_certificate_41():
    cert = aj.load_certificate("41", aj.default_data_dir())
    rep = aj.verify_certificate(cert)
    assert rep["valid"]


def test_ahatc_pipeline():
    cert = aj.load_certificate("52", aj.default_data_dir())
    res = aj.ahatc_for_knot(cert)
    gar = aj.check_garoufalidis(res["ahat_c"], cert)
    assert gar["match"]
    cl = aj.check_classical(res["ahat_c"], cert)
    assert cl["match"] and cl["degeneracy"] == 2


def test_dilog_unitarity():
    x = 0.37
    d = aj.dilog(x)
    assert abs(abs(d) - 1.0) < 1e-10


def test_chi_smoke():
    val, err = aj.chi("41", 0.0, tol=1e-6)
    assert err < 1e-6
    assert abs(val) > 0.1


def test_toy_elimination():
    g1 = aj.parse("my - mx")
    g2 = aj.parse("my - lx")
    elims = aj.eliminate_my(g1, g2, (0, 0, 0, 0), (0, 0, 0, 0))
    assert len(elims) == 1
    assert elims[0] == aj.parse("mx - lx") or elims[0] == aj.parse("lx - mx")
