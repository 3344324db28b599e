"""Property-based checks of the unification algebra over randomly
generated natural-number and list terms."""

from hypothesis import given, settings
from hypothesis import strategies as st

from typelog.prelude import NAT, NAT_LIST, cons, nil, suc, zero
from typelog.terms import (
    EMPTY_STORE,
    is_ground_term,
    occurs_in,
    resolve,
    unify,
)

NAT_VARS = ("x", "y", "z")
LIST_VARS = ("xs", "ys")


def nat_terms(max_depth=5):
    base = st.sampled_from([NAT.var(n) for n in NAT_VARS] + [zero()])
    return st.recursive(base, lambda sub: sub.map(suc), max_leaves=max_depth)


def list_terms(max_depth=4):
    base = st.sampled_from([NAT_LIST.var(n) for n in LIST_VARS] + [nil(NAT_LIST)])
    return st.recursive(
        base,
        lambda sub: st.tuples(nat_terms(3), sub).map(lambda p: cons(*p)),
        max_leaves=max_depth,
    )


def either_pair():
    return st.one_of(
        st.tuples(nat_terms(), nat_terms()),
        st.tuples(list_terms(), list_terms()),
    )


@settings(max_examples=300)
@given(either_pair())
def test_unification_symmetric_up_to_resolution(pair):
    t1, t2 = pair
    s12 = unify(t1, t2, EMPTY_STORE)
    s21 = unify(t2, t1, EMPTY_STORE)
    assert (s12 is None) == (s21 is None)
    if s12 is not None:
        assert resolve(t1, s12) == resolve(t2, s12)
        assert resolve(t1, s21) == resolve(t2, s21)


@settings(max_examples=300)
@given(either_pair())
def test_success_implies_equal_resolved_forms(pair):
    t1, t2 = pair
    store = unify(t1, t2, EMPTY_STORE)
    if store is not None:
        r = resolve(t1, store)
        # Resolution is idempotent: a resolved term has no bound variables.
        assert resolve(r, store) == r


@settings(max_examples=200)
@given(nat_terms())
def test_term_unifies_with_itself(t):
    assert unify(t, t, EMPTY_STORE) is not None


@settings(max_examples=200)
@given(either_pair())
def test_failure_leaves_store_unusable_but_unchanged(pair):
    t1, t2 = pair
    if unify(t1, t2, EMPTY_STORE) is None:
        assert EMPTY_STORE == EMPTY_STORE.__class__()


@settings(max_examples=300)
@given(either_pair())
def test_no_bound_variable_occurs_in_its_own_binding(pair):
    t1, t2 = pair
    store = unify(t1, t2, EMPTY_STORE)
    if store is not None:
        for vid in store:
            assert not occurs_in(vid, store.lookup(vid), store)


@settings(max_examples=300)
@given(either_pair())
def test_ground_results_are_variable_free(pair):
    t1, t2 = pair
    store = unify(t1, t2, EMPTY_STORE)
    if store is not None and is_ground_term(t1, store):
        assert is_ground_term(t2, store)
        assert resolve(t1, store) == resolve(t2, store)
