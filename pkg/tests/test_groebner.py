import random

from extremalcurves.groebner import buchberger, initial_monomials, normal_form
from extremalcurves.monomials import MonomialIdeal
from extremalcurves.oracle import oracle_ideal_dims
from extremalcurves.ring import PolyRing, Polynomial, PrimeField

R3 = PolyRing(3)
R4 = PolyRing(4)


class TestBuchberger:
    def test_one_step_spair(self):
        x0, x1, x2 = R3.gens()
        gb = buchberger([x0 * x0 - x1 * x2, x0 * x1])
        got = {str(p) for p in gb}
        assert got == {"x0^2 - x1*x2", "x0*x1", "x1^2*x2"}
        # membership cross-check with the linear-algebra oracle
        dims = oracle_ideal_dims([x0 * x0 - x1 * x2, x0 * x1], 6)
        lead = gb.initial_ideal()
        for j in range(7):
            assert dims[j] == lead.ideal_dim(j)

    def test_monomial_ideal_fixed_point(self):
        x0, x1, x2 = R3.gens()
        gb = buchberger([x0 * x1, x1 * x2 * x2])
        assert {str(p) for p in gb} == {"x0*x1", "x1*x2^2"}

    def test_reduced_and_monic(self):
        x0, x1, x2 = R3.gens()
        gb = buchberger([2 * (x0 * x0) - 4 * (x1 * x2), 3 * (x0 * x1)])
        for p in gb:
            assert p.lead_coeff == 1
        assert {str(p) for p in gb} == {"x0^2 - 2*x1*x2", "x0*x1", "x1^2*x2"}

    def test_prime_field(self):
        ring = PolyRing(3, PrimeField(32003))
        x0, x1, x2 = ring.gens()
        gb = buchberger([x0 * x0 - x1 * x2, x0 * x1])
        assert len(gb) == 3
        assert gb.initial_ideal() == MonomialIdeal(3, [(2, 0, 0), (1, 1, 0), (0, 2, 1)])

    def test_random_dims_agree_with_oracle(self):
        rng = random.Random(23)
        for _ in range(12):
            ring = PolyRing(rng.randrange(3, 5))
            polys = []
            for _ in range(rng.randrange(2, 4)):
                deg = rng.randrange(1, 4)
                terms = [
                    (m, rng.randrange(-2, 3))
                    for m in ring.monomials_of_degree(deg)
                    if rng.random() < 0.4
                ]
                p = Polynomial(ring, terms)
                if p:
                    polys.append(p)
            if not polys:
                continue
            gb = buchberger(polys, ring)
            lead = gb.initial_ideal()
            dims = oracle_ideal_dims(polys, 8, ring)
            for j in range(9):
                assert dims[j] == lead.ideal_dim(j), (polys, j)


class TestNormalForm:
    def test_single_reduction(self):
        x0, x1, x2 = R3.gens()
        gb = buchberger([x0 * x0 - x1 * x2])
        assert normal_form(x0 * x0, gb) == x1 * x2

    def test_member_reduces_to_zero(self):
        x0, x1, x2 = R3.gens()
        f = x0 * x0 - x1 * x2
        gb = buchberger([f, x0 * x1])
        member = (x1 + x2) * f + x2 * (x0 * x1)
        assert not normal_form(member, gb)

    def test_no_reducer(self):
        x0, x1, x2 = R3.gens()
        gb = buchberger([x0, x1])
        assert normal_form(x2 * x2, gb) == x2 * x2

    def test_difference_in_ideal(self):
        x0, x1, x2 = R3.gens()
        gb = buchberger([x0 * x0 - x1 * x2, x0 * x1])
        f = (x0 + x1 + x2) ** 3
        r = normal_form(f, gb)
        assert gb.contains(f - r)
        # remainder is fully reduced: no term divisible by a lead monomial
        lead = gb.initial_ideal()
        for m, _ in r.terms:
            assert not lead.contains(m)


class TestTruncatedLeads:
    def test_cap_cuts_high_degrees(self):
        x0, x1, x2 = R3.gens()
        gens = [x0 * x0 - x1 * x2, x0 * x1]
        full = buchberger(gens).initial_ideal()
        assert initial_monomials(gens, cap=6) == full
        capped = initial_monomials(gens, cap=2)
        assert capped == MonomialIdeal(3, [(2, 0, 0), (1, 1, 0)])
