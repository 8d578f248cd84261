import random

import pytest
from hypothesis import given, settings

from unknotting.braid import BraidWord, components, exponent_sum, parse_word, strands_for
from unknotting.moves import (
    EXTENDED_ALPHABET,
    GENERIC_ALPHABET,
    LETTERS,
    SIGNED_ALPHABET,
    MoveParseError,
    Status,
    apply_move,
    find_application,
    parse_sequence,
)
from unknotting.verify import expected_exponent_delta

from conftest import knot_words, random_knot_word, words

ALL_TOKENS = sorted(LETTERS)


def test_r2_leftmost_positive():
    assert find_application(parse_word("1 -1 2"), "R2") == ("R2+", (1, 2))


def test_r2_negative_order():
    assert find_application(parse_word("2 -1 1"), "R2") == ("R2-", (2, 3))


def test_r2_none():
    assert find_application(parse_word("1 1"), "R2") is None


def test_r3_reverse_negative_site():
    assert find_application(parse_word("1 -2 -1 -2"), "R3") == ("R3b-", (2, 3, 4))
    assert apply_move(parse_word("1 -2 -1 -2"), "R3").result == parse_word("1 -1 -2 -1")


def test_r3_forward_positive():
    out = apply_move(parse_word("1 2 1"), "R3")
    assert out.variant == "R3+" and out.result == parse_word("2 1 2")


def test_r3_mixed_signs_do_not_match():
    assert find_application(parse_word("1 -2 1"), "R3") is None


def test_m2_unique_top_generator_anywhere():
    w = parse_word("-2 -1")
    assert find_application(w, "M2") == ("M2-", (1,))
    out = apply_move(w, "M2")
    assert out.result == parse_word("-1") and out.result.strands == 2


def test_m2_needs_exactly_one():
    assert find_application(parse_word("1 1 1"), "M2") is None
    assert apply_move(parse_word("1"), "M2").result.is_trivial()
    assert find_application(BraidWord(), "M2") is None


def test_u_flips_leftmost():
    out = apply_move(parse_word("1 1 1"), "U")
    assert out.status is Status.APPLIED
    assert out.result == parse_word("-1 1 1")
    assert out.variant == "U+" and out.site == (1,)


def test_signed_u_targets_sign():
    assert apply_move(parse_word("1 -2 1"), "U-").result == parse_word("1 2 1")
    assert apply_move(parse_word("1 1"), "U-").status is Status.SKIPPED


def test_s_swaps_far_pair():
    out = apply_move(parse_word("1 3"), "S")
    assert out.applied and out.result == parse_word("3 1") and out.variant == "S++"


def test_sb_scans_from_right():
    w = parse_word("1 3 -1 3")
    assert find_application(w, "S") == ("S++", (1, 2))
    assert find_application(w, "Sb") == ("Sb-+", (3, 4))


def test_m1_rotations():
    w = parse_word("1 -2 1 -2")
    assert apply_move(w, "M1").result == parse_word("-2 1 -2 1")
    assert apply_move(w, "M1b").result == parse_word("-2 1 -2 1")
    assert apply_move(parse_word("1 2"), "M1b").result == parse_word("2 1")
    assert apply_move(BraidWord(), "M1").status is Status.SKIPPED


def test_extended_moves():
    w = parse_word("1 1 1")
    assert apply_move(w, "R2b").result == parse_word("1 1 1 1 -1")
    grown = apply_move(w, "M2b").result
    assert grown == parse_word("1 1 1 2") and grown.strands == 3
    assert apply_move(BraidWord(), "R2b").status is Status.SKIPPED
    assert apply_move(BraidWord(), "M2b").result == parse_word("1")


def test_skipped_outcome_has_no_site():
    out = apply_move(parse_word("1 1"), "R2")
    assert out.status is Status.SKIPPED and out.variant is None and out.site is None
    assert out.result == parse_word("1 1")


def test_alphabets():
    assert GENERIC_ALPHABET == ("R2", "R3", "M1", "M1b", "M2", "S", "Sb", "U")
    assert "R2b" not in GENERIC_ALPHABET and "M2b" not in GENERIC_ALPHABET
    assert set(EXTENDED_ALPHABET) - set(GENERIC_ALPHABET) == {"R2b", "M2b"}
    assert all(LETTERS[t].variant for t in SIGNED_ALPHABET)


def test_parse_sequence():
    assert parse_sequence("U M1 M1 R3 R2 M2 M2") == ("U", "M1", "M1", "R3", "R2", "M2", "M2")
    assert parse_sequence("U M1^2 R3 R2 M2^2") == parse_sequence("U M1 M1 R3 R2 M2 M2")
    assert parse_sequence("(U R2)^2 M2") == ("U", "R2", "U", "R2", "M2")
    assert parse_sequence("U R2 M1 (M1 U)^2 M2") == ("U", "R2", "M1", "M1", "U", "M1", "U", "M2")


@pytest.mark.parametrize("text", ["", "X", "U^0", "(U R2", "U)"])
def test_parse_sequence_errors(text):
    with pytest.raises(MoveParseError):
        parse_sequence(text)


def _non_split_components(before, after, family):
    # strands shed by re-tightening beyond the one M2 removes are split unknots
    shed = before.strands - after.strands - (1 if family == "M2" else 0)
    return components(before) == components(after) + shed


@given(words(max_len=14))
@settings(max_examples=300)
def test_components_accounted_for_on_any_word(w):
    for token in ALL_TOKENS:
        out = apply_move(w, token)
        if out.applied and not (token.startswith("R2b") or token.startswith("M2b")):
            assert _non_split_components(w, out.result, LETTERS[token].family.value)


def test_components_preserved_on_random_knot_words():
    rng = random.Random(7)
    for _ in range(10_000):
        w = random_knot_word(rng)
        token = rng.choice(ALL_TOKENS)
        out = apply_move(w, token)
        assert components(out.result) == 1, (w, token)


@given(knot_words(max_len=14))
@settings(max_examples=300)
def test_exponent_sum_deltas(w):
    for token in ALL_TOKENS:
        out = apply_move(w, token)
        if out.applied:
            assert exponent_sum(out.result) - exponent_sum(w) == expected_exponent_delta(out.variant)
            if LETTERS[token].family.value == "U":
                assert abs(exponent_sum(out.result) - exponent_sum(w)) == 2


@given(words(max_len=14))
def test_skip_returns_input(w):
    for token in ALL_TOKENS:
        out = apply_move(w, token)
        if not out.applied:
            assert out.result == w


@given(words(max_len=14))
def test_default_alphabet_never_lengthens(w):
    for token in GENERIC_ALPHABET + SIGNED_ALPHABET:
        assert len(apply_move(w, token).result) <= len(w)


@given(words(max_len=14))
def test_r3_is_an_involution_at_its_site(w):
    out = apply_move(w, "R3")
    if not out.applied:
        return
    i = out.site[0] - 1
    window = BraidWord(out.result.letters[i:i + 3])
    back = apply_move(window, "R3")
    assert back.applied
    restored = out.result.letters[:i] + back.result.letters + out.result.letters[i + 3:]
    assert restored == w.letters


@given(words(max_len=14))
def test_m2bar_then_m2_restores(w):
    grown = apply_move(w, "M2b").result
    assert apply_move(grown, "M2").result == w


@given(words(max_len=14))
def test_results_are_tight(w):
    for token in ALL_TOKENS:
        r = apply_move(w, token).result
        assert r.strands == strands_for(r.letters)
