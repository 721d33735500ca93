import pytest
from hypothesis import given, settings

from line_dispersal.core.audit import audit
from line_dispersal.core.chains import decompose_chains
from line_dispersal.core.model import normalize_instance
from line_dispersal.core.scalar import ScaledInt
from line_dispersal.errors import InstanceFormatError, InvariantBreachError
from line_dispersal.harness.benchmark import heap_ops_bound
from line_dispersal.heap import MeldHeap
from line_dispersal.oracles import (
    check_pointwise_minimal,
    exhaustive_anchored_solve,
    naive_quadratic_solve,
    pav_isotonic_solve,
)
from line_dispersal.solver import (
    LiveChain,
    SolverState,
    TraceEvent,
    insert_point,
    merge_chains,
    replay_trace,
    restore_property,
    shift_chain,
    solve,
)
from line_dispersal.solver.types import MERGE, NEW_CHAIN, PLACE_APPENDED, PLACE_INITIAL, SHIFT
from strategies import instances


@pytest.mark.parametrize("raw, delta, positions, cost", [
    (["0", "1"], "2", ["-1", "1"], "1"),
    (["0", "10"], "1", ["0", "10"], "0"),
    (["0", "3", "3.5"], "2", ["0", "2", "4"], "1.5"),
    (["0", "4", "4.5"], "2", ["0", "2.5", "4.5"], "1.5"),
    (["0", "3", "4"], "2", ["0", "2", "4"], "1"),
    (["5", "5", "5"], "1", ["4", "5", "6"], "2"),
])
def test_solve_examples(raw, delta, positions, cost):
    result = solve(normalize_instance(raw, delta))
    assert result.positions_in_input_order() == positions
    assert str(result.total_cost) == cost


def test_solve_reports_in_input_order():
    result = solve(normalize_instance(["1", "0"], "2"))
    assert result.positions_in_input_order() == ["1", "-1"]
    assert result.displacements_in_input_order() == ["0", "-1"]


def test_solve_trivial_sizes(make_instance):
    empty = solve(make_instance([], 3))
    assert empty.configuration.positions == ()
    assert empty.total_cost == ScaledInt(0)
    assert empty.counters.heap_ops == 0

    single = solve(make_instance([7], 3))
    assert single.configuration.positions == (7,)
    assert single.counters.heap_ops == 0


def test_already_independent_instance_is_untouched(make_instance):
    inst = make_instance([0, 2, 4, 9], 2)
    result = solve(inst)
    assert result.configuration.positions == inst.initial
    assert result.counters.shifts == 0
    assert result.counters.heap_ops == 0


def test_merge_example_chain_counts(make_instance):
    inst = make_instance([0, 30, 35], 20, scale=10)
    result = solve(inst)
    chains = decompose_chains(inst, result.configuration)
    assert [(c.start, c.end, c.cnt_l, c.cnt_o, c.cnt_r) for c in chains] == [(0, 2, 1, 1, 1)]
    assert result.counters.merges == 1


def test_insert_point_joins_on_exact_gap(make_instance):
    state = SolverState(make_instance([0, 2], 2))
    assert insert_point(state, 0) is False
    assert insert_point(state, 1) is False
    assert len(state.chains) == 1
    assert state.chains[0].cnt_o == 2


def test_insert_point_appends_and_flags_tie(make_instance):
    state = SolverState(make_instance([0, 1], 2))
    insert_point(state, 0)
    assert insert_point(state, 1) is True
    chain = state.chains[-1]
    assert state.positions() == [0, 2]
    assert chain.cnt_r == 1
    assert chain.heap_r.find_min() + chain.base == 1


def test_restore_shifts_by_alpha_without_neighbour(make_instance):
    state = SolverState(make_instance([0, 1], 2))
    insert_point(state, 0)
    insert_point(state, 1)
    restore_property(state)
    assert state.positions() == [-1, 1]
    chain = state.chains[-1]
    assert (chain.cnt_l, chain.cnt_o, chain.cnt_r) == (1, 1, 0)


def test_restore_merges_when_beta_comes_first(make_instance):
    state = SolverState(make_instance([0, 30, 35], 20, scale=10), want_trace=True)
    for i in range(3):
        if insert_point(state, i):
            restore_property(state)
    assert state.positions() == [0, 20, 40]
    assert len(state.chains) == 1
    assert [e.kind for e in state.trace if e.iter == 2] == [PLACE_APPENDED, SHIFT, MERGE]
    assert state.trace[-2].amount == ScaledInt(10, 10)


def test_alpha_equal_beta_takes_merge_branch(make_instance):
    result = solve(make_instance([0, 3, 4], 2), want_trace=True)
    assert result.configuration.positions == (0, 2, 4)
    assert [e.kind for e in result.trace] == [
        PLACE_INITIAL, NEW_CHAIN, PLACE_INITIAL, NEW_CHAIN, PLACE_APPENDED, SHIFT, MERGE,
    ]
    assert result.counters.merges == 1
    chains = decompose_chains(result.instance, result.configuration)
    assert [(c.cnt_l, c.cnt_o, c.cnt_r) for c in chains] == [(1, 2, 0)]


def test_restore_without_tie_is_a_breach(make_instance):
    state = SolverState(make_instance([0, 5], 2))
    insert_point(state, 0)
    insert_point(state, 1)
    with pytest.raises(InvariantBreachError):
        restore_property(state)


def _chain(base, slacks, cnt_o=1, start=0):
    heap = MeldHeap(s - base for s in slacks)
    return LiveChain(start=start, end=start + cnt_o + len(slacks) - 1, base=base, cnt_o=cnt_o, heap_r=heap)


def test_shift_pops_members_reaching_zero(make_instance):
    state = SolverState(make_instance([0, 0, 0], 1))
    chain = _chain(0, [1, 3])
    shift_chain(state, chain, 1)
    assert (chain.cnt_l, chain.cnt_o, chain.cnt_r) == (1, 1, 1)
    assert chain.base == -1
    assert chain.shift_total == 1


def test_shift_below_min_slack_empties_o(make_instance):
    state = SolverState(make_instance([0, 0, 0], 1))
    chain = _chain(0, [4, 5], cnt_o=2)
    chain.end = 3
    shift_chain(state, chain, 1)
    assert (chain.cnt_l, chain.cnt_o, chain.cnt_r) == (2, 0, 2)


def test_shift_pops_duplicate_minimum(make_instance):
    state = SolverState(make_instance([0, 0, 0], 1))
    chain = _chain(0, [2, 2])
    shift_chain(state, chain, 2)
    assert (chain.cnt_o, chain.cnt_r) == (2, 0)


@pytest.mark.parametrize("t", [0, -1, 3])
def test_shift_out_of_range_is_a_breach(make_instance, t):
    state = SolverState(make_instance([0, 0], 1))
    with pytest.raises(InvariantBreachError):
        shift_chain(state, _chain(0, [2]), t)


def test_merge_with_empty_right_heap(make_instance):
    state = SolverState(make_instance([0, 0], 1))
    left = _chain(0, [3])
    right = LiveChain(start=2, end=2, base=0, cnt_l=1)
    merged = merge_chains(state, left, right)
    assert merged.heap_r is left.heap_r
    assert (merged.start, merged.end, merged.cnt_l, merged.cnt_o, merged.cnt_r) == (0, 2, 1, 1, 1)


def test_merge_rejects_chains_that_do_not_touch(make_instance):
    state = SolverState(make_instance([0, 0], 1))
    with pytest.raises(InvariantBreachError):
        merge_chains(state, _chain(0, []), LiveChain(start=1, end=1, base=5, cnt_o=1))
    with pytest.raises(InvariantBreachError):
        merge_chains(state, _chain(0, []), LiveChain(start=3, end=3, base=0, cnt_o=1))


@settings(max_examples=300)
@given(instances())
def test_cost_matches_isotonic_oracle(inst):
    assert solve(inst).total_cost == pav_isotonic_solve(inst).best_cost


@settings(max_examples=300)
@given(instances())
def test_identical_to_naive_implementation(inst):
    assert solve(inst).configuration == naive_quadratic_solve(inst).witness


@settings(max_examples=200)
@given(instances())
def test_output_passes_audit(inst):
    assert audit(inst, solve(inst).configuration).ok


@given(instances(max_n=7))
def test_every_prefix_state_is_consistent(inst):
    solve(inst, debug_audit=True)


@settings(max_examples=150)
@given(instances(max_n=8, max_coord=12, max_delta=4))
def test_pointwise_left_of_every_optimum(inst):
    result = solve(inst)
    oracle = exhaustive_anchored_solve(inst)
    assert result.total_cost == oracle.best_cost
    assert check_pointwise_minimal(result.configuration, oracle.all_optima)
    assert result.configuration in oracle.all_optima


@given(instances(max_n=30, max_coord=40))
def test_heap_operation_bound(inst):
    assert solve(inst).counters.heap_ops <= heap_ops_bound(inst.n)


@given(instances(max_n=12))
def test_trace_replay_rebuilds_configuration(inst):
    result = solve(inst, want_trace=True)
    assert replay_trace(inst, result.trace) == result.configuration


def test_dense_chain_stays_within_operation_bound(make_instance):
    n = 2000
    inst = make_instance(range(n), 3)
    result = solve(inst)
    assert result.counters.heap_ops <= heap_ops_bound(n)
    assert len(decompose_chains(inst, result.configuration)) == 1


def test_replay_rejects_placements_past_the_instance(make_instance):
    inst = make_instance([4], 1)
    events = [
        TraceEvent(0, PLACE_INITIAL, 0),
        TraceEvent(0, NEW_CHAIN, 0),
        TraceEvent(1, PLACE_APPENDED, 0),
    ]
    with pytest.raises(InstanceFormatError):
        replay_trace(inst, events)
    with pytest.raises(InstanceFormatError):
        replay_trace(inst, [TraceEvent(0, PLACE_INITIAL, 0), TraceEvent(1, PLACE_INITIAL, 1)])
