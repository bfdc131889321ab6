import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import mk
from symx import (
    SymmetryDatum,
    datum_from_dict,
    datum_to_dict,
    datum_to_json,
    euler_genus,
    is_orientation_reversing,
    parse_datum,
    power_twist,
    reduce_values_mod,
    validate,
)
from symx.numtheory import units_of


class TestConstruction:
    def test_bad_order(self):
        with pytest.raises(ValueError, match="order must be a positive integer"):
            mk(0, True, 0)

    def test_bad_genus(self):
        with pytest.raises(ValueError, match="quotient genus must be nonnegative"):
            mk(2, True, -1)

    def test_handle_count(self):
        with pytest.raises(ValueError, match="expected 2 handle values, got 1"):
            mk(4, True, 1, (1,))
        with pytest.raises(ValueError, match="expected 2 handle values, got 3"):
            mk(4, False, 2, (1, 1, 1))

    def test_values_normalized(self):
        d = mk(5, True, 1, (7, -1), cones=(12,))
        assert d.handles == (2, 4) and d.cones == (2,)

    def test_counts(self):
        d = mk(6, True, 0, boundary=(0, 2), cones=(4,))
        assert d.b == 2 and d.s == 1


class TestReversing:
    def test_orientable_closed_preserves(self):
        assert not is_orientation_reversing(mk(4, True, 1, (1, 0)))

    def test_boundary_reverses(self):
        assert is_orientation_reversing(mk(6, True, 0, boundary=(2,)))

    def test_non_orientable_reverses(self):
        assert is_orientation_reversing(mk(2, False, 1, (1,)))


class TestValidate:
    def test_valid(self):
        assert validate(mk(8, False, 2, (1, 3))) == []
        assert validate(mk(6, True, 0, boundary=(4,), cones=(2,))) == []

    def test_relation(self):
        assert "relation sum must vanish mod n" in validate(
            mk(5, True, 0, cones=(1, 1))
        )

    def test_zero_cone(self):
        bad = validate(mk(4, True, 1, (0, 0), cones=(0, 1, 3)))
        assert "cone value must be nonzero" in bad

    def test_crosscap_needed(self):
        assert "non-orientable quotient needs a crosscap" in validate(
            mk(2, False, 0, boundary=(0, 0, 0))
        )

    def test_boundary_order(self):
        assert "mirror boundary requires n = 2 (mod 4)" in validate(
            mk(4, True, 0, boundary=(0, 0))
        )

    def test_reversing_even_order(self):
        assert "orientation-reversing symmetry must have even order" in validate(
            mk(3, False, 1, (1,))
        )

    def test_handle_parity(self):
        assert "handle value must be odd" in validate(mk(4, False, 2, (1, 2)))
        assert "handle value must be even" in validate(
            mk(6, True, 1, (1, 0), boundary=(0,))
        )

    def test_boundary_parity(self):
        assert "boundary value must be even" in validate(
            mk(6, True, 0, boundary=(1, 5))
        )

    def test_cone_parity(self):
        assert "cone value must be even" in validate(
            mk(6, False, 1, (3,), cones=(3, 3))
        )

    def test_surjectivity(self):
        assert "values must generate the cyclic group" in validate(
            mk(4, True, 1, (2, 0), cones=(2, 2))
        )
        # a mirror boundary contributes n/2 even with value zero
        assert validate(mk(2, True, 0, boundary=(0,))) == []

    def test_genus_integrality(self):
        assert "genus must be a nonnegative integer" in validate(
            mk(4, True, 0, cones=(1,))
        )


class TestEulerGenus:
    def test_known_values(self):
        assert euler_genus(mk(8, True, 1, (1, 0))) == 1
        assert euler_genus(mk(8, True, 0, cones=(1, 7))) == 0
        assert euler_genus(mk(8, False, 2, (1, 3))) == 1
        assert euler_genus(mk(6, True, 0, cones=(1, 1, 4))) == 2
        assert euler_genus(mk(2, True, 0, cones=(1,) * 6)) == 2
        assert euler_genus(mk(6, False, 3, (1, 3, 5))) == 4

    def test_unrealizable(self):
        with pytest.raises(ValueError, match="unrealizable datum"):
            euler_genus(mk(4, True, 0, cones=(1,)))
        with pytest.raises(ValueError, match="unrealizable datum"):
            euler_genus(mk(3, True, 0))


class TestPowerTwist:
    def test_not_unit(self):
        with pytest.raises(ValueError, match="not a unit power"):
            power_twist(mk(8, False, 2, (1, 3)), 2)

    def test_known(self):
        assert power_twist(mk(8, False, 2, (5, 3)), 3).handles == (7, 1)

    def test_round_trip_and_validity(self):
        data = [
            mk(8, False, 2, (1, 3)),
            mk(6, True, 0, boundary=(4,), cones=(2,)),
            mk(12, True, 1, (1, 0), cones=(1, 11, 6, 6)),
        ]
        for d in data:
            for m in units_of(d.n):
                t = power_twist(d, m)
                assert power_twist(t, pow(m, -1, d.n)) == d
                assert validate(t) == validate(d)
                assert euler_genus(t) == euler_genus(d)


class TestReduceValues:
    def test_bad_modulus(self):
        with pytest.raises(ValueError, match="modulus must divide the order"):
            reduce_values_mod(mk(8, False, 2, (1, 3)), 3)

    def test_reduces_in_order(self):
        d = mk(8, False, 2, (1, 3), cones=())
        assert reduce_values_mod(d, 4) == (1, 3)
        d2 = mk(6, True, 0, boundary=(4,), cones=(2,))
        assert reduce_values_mod(d2, 2) == (0, 0)


class TestWireFormat:
    def test_round_trip(self):
        d = mk(6, False, 1, (3,), boundary=(2,), cones=(4,))
        assert parse_datum(datum_to_json(d)) == d
        assert datum_from_dict(datum_to_dict(d)) == d

    def test_sorted_keys(self):
        text = datum_to_json(mk(2, True, 0, boundary=(0,)))
        assert text == json.dumps(json.loads(text), sort_keys=True)

    def test_not_an_object(self):
        with pytest.raises(ValueError, match="datum must be a JSON object"):
            parse_datum("[1, 2]")

    def test_invalid_json(self):
        with pytest.raises(ValueError, match="invalid JSON"):
            parse_datum("{nope")

    def test_missing_field(self):
        with pytest.raises(ValueError, match="missing field 'cones'"):
            datum_from_dict(
                {"n": 2, "orientable": True, "h": 0, "handles": [], "boundary": []}
            )

    def test_unknown_field(self):
        with pytest.raises(ValueError, match="unknown field 'extra'"):
            datum_from_dict(
                {
                    "n": 2,
                    "orientable": True,
                    "h": 0,
                    "handles": [],
                    "boundary": [],
                    "cones": [],
                    "extra": 1,
                }
            )

    def test_type_errors(self):
        base = {
            "n": 2,
            "orientable": True,
            "h": 0,
            "handles": [],
            "boundary": [],
            "cones": [],
        }
        with pytest.raises(ValueError, match="field 'n' must be an integer"):
            datum_from_dict({**base, "n": True})
        with pytest.raises(ValueError, match="field 'orientable' must be a boolean"):
            datum_from_dict({**base, "orientable": 1})
        with pytest.raises(ValueError, match="field 'cones' must be a list of integers"):
            datum_from_dict({**base, "cones": [1, "x"]})
        with pytest.raises(ValueError, match="field 'handles' must be a list of integers"):
            datum_from_dict({**base, "handles": [False]})


@given(
    st.integers(1, 12),
    st.integers(0, 2),
    st.lists(st.integers(-10, 10), max_size=4),
)
def test_wire_round_trip_any(n, h, cones):
    d = SymmetryDatum(n, True, h, (0,) * (2 * h), (), tuple(cones))
    assert parse_datum(datum_to_json(d)) == d
