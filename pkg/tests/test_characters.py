import pytest

from oracles import factor, one, partition_counts, partitions, poly_mul
from primcrystal.capparelli import canonical_spec
from primcrystal.characters import (char_from_gp, char_kp, char_positive, count_partitions_avoiding,
                                    gp_ct, gp_lattice, gp_theta, principal_product,
                                    principal_spec, shifted_gp, theta_indices, verify_all)
from primcrystal.errors import InsufficientTruncation
from primcrystal.partitions import gf_grounded
from primcrystal.series import Series, euler_inverse, q_poch, subst, to_alpha


def naive_gp(n, N):
    """[x^0] of the double product, multiplied out factor by factor."""
    w = n + 2
    prod = one(w)
    for i in range(n):
        for j in range(N + 1):
            e = [0] * n
            e[i] = -1
            prod = poly_mul(prod, factor(w, (j + 1, *e, 1), 1), trunc=N)
            e[i] = 1
            prod = poly_mul(prod, factor(w, (j, *e, -1), 1), trunc=N)
    return {k: c for k, c in prod.items() if k[-1] == 0}


# --- G^P -------------------------------------------------------------------------

def test_rank_one_is_partitions():
    for f in (gp_ct, gp_lattice, gp_theta):
        assert f(1, 15).q_coefficients() == partition_counts(15)


def test_first_coefficient_rank_two():
    want = {(0, 0): 2, (1, -1): 1, (-1, 1): 1}
    assert gp_ct(2, 4).q_slice(1) == want
    assert gp_lattice(2, 4).q_slice(1) == want
    assert gp_lattice(2, 4).q_slice(0) == {(0, 0): 1}


@pytest.mark.parametrize("n,N", [(2, 7), (3, 4)])
def test_constant_term_matches_naive_expansion(n, N):
    assert gp_ct(n, N).raw_terms == naive_gp(n, N)


@pytest.mark.parametrize("n,N", [(2, 16), (3, 12), (4, 8)])
def test_three_expressions_agree(n, N):
    ct = gp_ct(n, N)
    assert gp_lattice(n, N) == ct
    assert gp_theta(n, N) == ct


@pytest.mark.parametrize("n,N", [(2, 10), (3, 7)])
def test_gp_is_grounded_generating_function(n, N):
    assert gp_ct(n, N) == gf_grounded(n, 0, N)


def test_theta_rank_two_single_product():
    # (-b0/b1 q; q^2)(-b1/b0 q; q^2) (q^2;q^2) / (q;q)^2
    N = 14
    assert theta_indices(2) == [(0, 0)]
    w = 4
    prod = one(w)
    for j in range(N):
        prod = poly_mul(prod, factor(w, (2 * j + 1, 1, -1, 0), 1), trunc=N)
        prod = poly_mul(prod, factor(w, (2 * j + 1, -1, 1, 0), 1), trunc=N)
    s = Series(2, N, prod) * q_poch(2, N, 2, 2) * euler_inverse(2, N) ** 2
    assert gp_theta(2, N) == s


def test_theta_index_counts():
    assert theta_indices(3) == [(0, 0, 0), (0, 1, 0)]
    assert len(theta_indices(4)) == 6 and len(theta_indices(5)) == 24


# --- characters ----------------------------------------------------------------------

@pytest.mark.parametrize("n,N", [(2, 12), (3, 9)])
def test_level_zero_character(n, N):
    assert char_kp(n, 0, N) == q_poch(n, N) * gp_ct(n, N)


def shift_by_hand(s, level, N):
    out = {}
    for (q, *b, x), c in s.raw_terms.items():
        q2 = q + sum(b[:level])
        if q2 <= N:
            key = (q2, *b, x)
            out[key] = out.get(key, 0) + c
    return Series(s.n, N, out)


def test_shift_matches_substitution():
    # the shift lowers degrees, so expand far and check the low part is stable
    n, N = 3, 6
    for level in (1, 2):
        via = shift_by_hand(gp_ct(n, 18), level, N)
        assert via == shift_by_hand(gp_ct(n, 22), level, N)
        assert shifted_gp(n, level, N) == via
        assert char_kp(n, level, N) == q_poch(n, N) * via


def test_shift_has_no_slope_guarantee():
    with pytest.raises(InsufficientTruncation):
        subst(gp_ct(3, 4), shifts=(1, 0, 0), slope=1)


@pytest.mark.parametrize("n,N", [(2, 10), (3, 8), (4, 5)])
def test_character_chain_every_level(n, N):
    for level in range(n):
        kp = char_kp(n, level, N)
        assert kp.coeff(0, (0,) * n) == 1
        assert char_from_gp(n, level, N) == kp
        assert char_positive(n, level, N) == kp
        assert gf_grounded(n, level, N, minimal=True) == kp


def test_positive_examples():
    assert char_positive(2, 0, 20) == char_kp(2, 0, 20)
    assert char_positive(3, 2, 12) == char_kp(3, 2, 12)


@pytest.mark.parametrize("n,level,N", [(3, 1, 10), (2, 1, 12), (3, 0, 8)])
def test_alpha_positivity(n, level, N):
    a = to_alpha(char_positive(n, level, N))
    assert a.is_positive()
    assert all(min(m.c) >= 0 and c > 0 for m, c in a.terms.items())


def test_bad_level():
    with pytest.raises(ValueError):
        char_kp(2, 2, 5)
    with pytest.raises(ValueError):
        gp_ct(3, 5, -1)


# --- principal specialisation ---------------------------------------------------------

def test_principal_product_is_partitions():
    for n in (1, 2, 3, 5):
        assert principal_product(n, 20).q_coefficients() == partition_counts(20)


def test_avoiding_counts():
    want = [sum(1 for p in partitions(m) if all(x % 3 for x in p)) for m in range(13)]
    assert count_partitions_avoiding(3, 12) == want
    assert count_partitions_avoiding(3, 3)[3] == 2
    assert count_partitions_avoiding(1, 4) == [1, 0, 0, 0, 0]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_principal_spec_passes(n):
    rep = principal_spec(n, 30)
    assert rep.passed and len(rep.checks) == 3


# --- verify_all ------------------------------------------------------------------------

def test_verify_all_examples():
    assert verify_all(2, 0, 16).passed
    assert verify_all(3, 1, 10).passed
    rep = verify_all(2, 0, 12, canonical_spec(2))
    assert rep.passed and rep.checks[-1].name.startswith("Capparelli")


def test_report_rendering():
    rep = verify_all(2, 1, 6)
    text = rep.to_text(timings=False)
    assert text.endswith("all checks passed\n") and "(0." not in text
    d = rep.to_dict(timings=False)
    assert d["passed"] and all("seconds" not in c for c in d["checks"])
    assert "seconds" in rep.to_dict()["checks"][0]
