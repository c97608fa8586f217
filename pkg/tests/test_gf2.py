"""GF(2^64) arithmetic: axioms, oracle agreement, sampling."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dspath import _gfkernels
from dspath.gf2 import (
    MASK64,
    REDUCTION_LOW,
    Assignment,
    FieldElement,
    ONE,
    ZERO,
    _mul_portable,
    add_raw,
    mul_raw,
    sample,
    sample_raw,
)

u64 = st.integers(min_value=0, max_value=MASK64)


def schoolbook_mul(a: int, b: int) -> int:
    """Independent oracle: bit-by-bit carry-less product, then long division
    by the full reducing polynomial."""
    prod = 0
    for i in range(64):
        if (a >> i) & 1:
            prod ^= b << i
    modulus = (1 << 64) | REDUCTION_LOW
    for shift in range(prod.bit_length() - 65, -1, -1):
        if (prod >> (shift + 64)) & 1:
            prod ^= modulus << shift
    return prod


def test_add_is_xor_and_characteristic_two():
    assert add_raw(0x3, 0x5) == 0x6
    r = random.Random(1)
    for _ in range(200):
        a = r.getrandbits(64)
        assert add_raw(a, a) == 0
        assert add_raw(a, 0) == a


def test_mul_identities():
    t = 1 << 1  # the polynomial x
    assert mul_raw(t, t) == 1 << 2  # no reduction below degree 64
    assert mul_raw(1 << 63, t) == REDUCTION_LOW  # x^64 folds to the modulus tail
    r = random.Random(2)
    for _ in range(200):
        a = r.getrandbits(64)
        assert mul_raw(a, 1) == a
        assert mul_raw(a, 0) == 0


def test_mul_matches_schoolbook_oracle():
    r = random.Random(3)
    for _ in range(10_000):
        a, b = r.getrandbits(64), r.getrandbits(64)
        want = schoolbook_mul(a, b)
        assert mul_raw(a, b) == want
        assert _mul_portable(a, b) == want


@pytest.mark.skipif(not _gfkernels.HAVE_NUMBA, reason="no numba")
def test_compiled_and_portable_paths_agree():
    r = random.Random(4)
    for _ in range(10_000):
        a, b = r.getrandbits(64), r.getrandbits(64)
        assert int(_gfkernels.gf_mul_u64(a, b)) == _mul_portable(a, b)


def test_field_axioms_bulk():
    # 10^5 random triples: associativity, commutativity, distributivity
    r = random.Random(5)
    for _ in range(100_000):
        a, b, c = r.getrandbits(64), r.getrandbits(64), r.getrandbits(64)
        assert mul_raw(a, b) == mul_raw(b, a)
        assert mul_raw(mul_raw(a, b), c) == mul_raw(a, mul_raw(b, c))
        assert mul_raw(a, b ^ c) == mul_raw(a, b) ^ mul_raw(a, c)


@given(u64, u64, u64)
@settings(max_examples=300, deadline=None)
def test_field_axioms_hypothesis(a, b, c):
    assert mul_raw(a, b) == mul_raw(b, a)
    assert mul_raw(mul_raw(a, b), c) == mul_raw(a, mul_raw(b, c))
    assert mul_raw(a, b ^ c) == (mul_raw(a, b) ^ mul_raw(a, c))
    assert add_raw(a, a) == 0
    assert mul_raw(a, 1) == a


def test_field_element_wrapper():
    x = FieldElement(0x3)
    y = FieldElement(0x5)
    assert (x + y).bits == 0x6
    assert (x * ONE) == x
    assert not ZERO
    assert x - y == x + y
    with pytest.raises(ValueError):
        FieldElement(1 << 64)


def test_sample_determinism_and_seed_sensitivity():
    a = [sample_raw(random.Random(42)) for _ in range(5)]
    b = [sample_raw(random.Random(42)) for _ in range(5)]
    assert a == b
    c = sample_raw(random.Random(43))
    assert c != a[0]
    assert isinstance(sample(random.Random(42)), FieldElement)


def test_sample_bit_frequencies():
    import numpy as np

    r = random.Random(6)
    n = 1_000_000
    xs = np.fromiter((sample_raw(r) for _ in range(n)), dtype=np.uint64, count=n)
    for bit in range(64):
        freq = int(((xs >> np.uint64(bit)) & np.uint64(1)).sum()) / n
        assert abs(freq - 0.5) < 0.01


def test_assignment_sampling():
    a = Assignment.sample(7, random.Random(9))
    b = Assignment.sample(7, random.Random(9))
    assert a.values == b.values and len(a) == 7
    assert a[3] == a.values[3]
