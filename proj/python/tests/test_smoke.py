import pitypical as pt


def test_presets():
    s = pt.preset("q2")
    assert (s.p, s.q, s.e, s.f, s.n, s.M) == (2, 2, 1, 1, 1, 12)
    r = pt.preset("q2-ramified")
    assert (r.e, r.n) == (2, 2)


def test_element_arithmetic():
    s = pt.preset("q2-ramified")
    pi = pt.O.pi(s)
    two = pt.O.from_int(s, 2)
    assert pi * pi == two
    assert (pi * pi).div_pi(2) == pt.O.one(s)
    assert two.val_pi() == 2


def test_group_law_multiplicative():
    s = pt.preset("q2")
    F = pt.group_law(s, 8)
    # X + Y + XY: coefficient c[1][1] = 1, c[2][0] = 0
    assert F["coeffs"][1][1]["coeffs"] == [[1]]
    assert F["coeffs"][2][0]["coeffs"] == [[0]]


def test_witt_hand_values():
    s = pt.make_spec(2, [0, 1], [-2, 1], 12)
    one = pt.O.one(s)
    w11 = (one, one)
    a0, a1 = pt.witt_add(s, w11, w11)
    assert a0 == pt.O.from_int(s, 2) and a1 == one
    m0, m1 = pt.witt_mul(s, w11, w11)
    assert m0 == one and m1 == pt.O.from_int(s, 4)


def test_theta_value_integral():
    s = pt.preset("q2")
    v = pt.theta_value(s, 2, pt.O.from_int(s, 3))
    assert v == pt.O.from_int(s, -24)


def test_prism_certificate():
    s = pt.preset("q3")
    rep = pt.prism_verify(s, 2, 32)
    assert rep["pass"] is True
    cert = pt.prism_certificate(s, 1, 16)
    assert cert["pass"] is True and cert["n"] == 1


def test_genus():
    s = pt.preset("q2")
    g = pt.genus(s, 3, 8)  # m = q^2 - 1 = 3 -> q^2 / pi^2 = 1
    assert g["denom_exp"] == 0 and g["num"]["coeffs"] == [[1]]
