import json

import pytest

from conftest import F5
from jpgeom import catalog
from jpgeom.errors import InvalidField, InvalidPair, SchemaError, UnknownEntry
from jpgeom.exactla import QQ, Field

EXPECTED_DIMS = {
    "diag2": (2, 2, 2),
    "gl2": (1, 2, 1),
    "heis": (1, 2, 1),
    "rect12": (2, 4, 2),
    "scalar": (1, 1, 1),
    "sl2": (1, 1, 1),
    "sl2z": (1, 2, 1),
    "sl3": (2, 4, 2),
    "sl3-2": (2, 4, 2),
    "trivial": (1, 1, 1),
}


def test_names_are_sorted_and_complete():
    assert catalog.names() == sorted(EXPECTED_DIMS)


@pytest.mark.parametrize("field", [F5, QQ, Field.prime(7)])
@pytest.mark.parametrize("name", sorted(EXPECTED_DIMS))
def test_entries_validate(name, field):
    e = catalog.get(name, field)
    assert catalog.validate(e) == []
    assert e.grading.dims == EXPECTED_DIMS[name]


@pytest.mark.parametrize("name", sorted(EXPECTED_DIMS))
def test_save_load_round_trip(name):
    e = catalog.get(name, F5)
    back = catalog.load(catalog.dumps(e))
    assert back.algebra == e.algebra and back.grading == e.grading and back.pair == e.pair
    assert catalog.dumps(back) == catalog.dumps(e)


def test_unknown_entry():
    with pytest.raises(UnknownEntry):
        catalog.get("so5")


@pytest.mark.parametrize("bad", ["not json", "[]", '{"name": "x"}', '{"name": "x", "algebra": {}, "euler": []}'])
def test_schema_errors(bad):
    with pytest.raises(SchemaError):
        catalog.load(bad)


def test_field_mismatch_rejected():
    data = catalog.save(catalog.get("sl2", F5))
    data["pair"] = catalog.save(catalog.get("sl2", QQ))["pair"]
    with pytest.raises(InvalidField):
        catalog.load(data)


def test_corrupted_pair_fails_validation():
    data = catalog.save(catalog.get("scalar", F5))
    data["pair"]["tplus"] = [[[["3"]]]]
    with pytest.raises(InvalidPair):
        catalog.load(data)
    assert catalog.validate(catalog.load(data, validate_entry=False))


def test_sl2_is_tkk_of_scalar_pair():
    scal, sl2, phi = catalog.sl2_tkk_isomorphism(F5)
    assert phi.is_invertible()
    assert scal.algebra.is_homomorphism_to(sl2.algebra, phi)
    assert json.loads(catalog.dumps(scal))["name"] == "scalar"
