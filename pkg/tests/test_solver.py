"""Exact solver: known values, cross-checks between routes, oracles, budgets."""

from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from copnum.board import (
    Graph,
    board_automorphisms,
    build_animal,
    build_royal,
    complete_graph,
    components,
    cycle_graph,
    path_graph,
    preset,
)
from copnum.errors import BudgetExceeded, DomainError
from copnum.game import GameState
from copnum.solver import (
    cop_number,
    extract_strategies,
    is_dismantlable,
    is_winning_start,
    solve_k,
    state_count,
)
from copnum.solver.codec import multiset_count, pack_state, rank, unpack_state, unrank
from copnum.strategies import OracleCops, OracleRobber, simulate


def naive_cops_win(g, k):
    """Plain repeated-pass fixed point over (cops, robber, side); reference only."""
    V = sorted(g.vertices)
    N = {v: sorted(g.closed(v)) for v in V}
    multisets = list(combinations_with_replacement(V, k))
    win = {}
    for cops in multisets:
        for r in V:
            win[(cops, r, 0)] = r in cops
            win[(cops, r, 1)] = r in cops
    changed = True
    while changed:
        changed = False
        for cops in multisets:
            for r in V:
                if not win[(cops, r, 0)]:
                    for move in product(*(N[c] for c in cops)):
                        m = tuple(sorted(move))
                        if r in m or win[(m, r, 1)]:
                            win[(cops, r, 0)] = changed = True
                            break
                if not win[(cops, r, 1)]:
                    if all(u in cops or win[(cops, u, 0)] for u in N[r]):
                        win[(cops, r, 1)] = changed = True
    return any(all(win[(cops, r, 0)] for r in V) for cops in multisets)


def connected_random_graph(m, extra):
    """A spanning path plus extra chords; connected by construction."""
    adj = {v: set() for v in range(m)}
    for v in range(m - 1):
        adj[v].add(v + 1)
        adj[v + 1].add(v)
    for u, v in extra:
        u, v = u % m, v % m
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return Graph(adj)


# known values


def test_paths_are_cop_win():
    for m in range(1, 12):
        assert solve_k(path_graph(m), 1).cops_win


def test_cycles_need_two():
    for m in range(4, 13):
        assert not solve_k(cycle_graph(m), 1).cops_win
        assert solve_k(cycle_graph(m), 2).cops_win
    assert solve_k(cycle_graph(3), 1).cops_win


def test_complete_graphs():
    for m in range(1, 21):
        res = solve_k(complete_graph(m), 1)
        assert res.cops_win
        assert res.capture_time == (0 if m == 1 else 1)


def test_single_vertex():
    res = solve_k(preset("king", 1), 1)
    assert res.cops_win and res.capture_time == 0


def test_queen_7_two_cops_lose():
    assert not solve_k(preset("queen", 7), 2).cops_win


def test_knight_5_central_start():
    g = preset("knight", 5)
    res = solve_k(g, 2)
    assert res.cops_win
    assert is_winning_start(g, 2, (g.vid(3, 3), g.vid(4, 4)), res)


def test_knight_3_cycle_component():
    g = preset("knight", 3)
    cycle = max(components(g), key=len)
    assert not solve_k(g.induced(cycle), 1).cops_win


def test_cop_number_reports():
    rep = cop_number(preset("knight", 3))
    assert rep.values == [2, 1] and rep.total == 3
    assert cop_number(preset("queen", 8)).total == 3
    assert cop_number(preset("rook", 5)).total == 2
    assert cop_number(preset("king", 6)).total == 1


def test_cop_number_marks_unresolved():
    rep = cop_number(preset("queen", 7), budget=50_000)
    assert rep.values == [None]
    assert rep.total is None
    assert rep.to_json()["components"][0]["value"] == "unresolved"


def test_solve_result_json():
    g = preset("knight", 5)
    data = solve_k(g, 2).to_json(g)
    assert set(data) == {"k", "copsWin", "optimalStart", "captureTime", "stateCount"}
    assert data["copsWin"] is True
    assert all(len(sq) == 2 for sq in data["optimalStart"])
    lose = solve_k(preset("queen", 5), 1).to_json()
    assert lose["optimalStart"] is None and lose["captureTime"] is None


# cross-checks


@pytest.mark.parametrize("k", [1, 2])
def test_matches_naive_fixed_point_on_boards(k):
    graphs = [preset(p, n) for p in ("queen", "king", "rook", "bishop") for n in (2, 3)]
    graphs += [build_animal(3, [(1, 2), (1, 0)]), build_royal(3, [(1, 1), (1, 2)])]
    for g in graphs:
        for comp in components(g):
            sub = g.induced(comp)
            assert solve_k(sub, k).cops_win == naive_cops_win(sub, k)


@settings(max_examples=40, deadline=None)
@given(m=st.integers(1, 7), extra=st.lists(st.tuples(st.integers(0, 6), st.integers(0, 6)), max_size=8))
def test_matches_naive_fixed_point_random(m, extra):
    g = connected_random_graph(m, extra)
    for k in (1, 2):
        assert solve_k(g, k).cops_win == naive_cops_win(g, k)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(1, 8), extra=st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=10))
def test_dense_and_retrograde_agree(m, extra):
    g = connected_random_graph(m, extra)
    for k in (1, 2):
        a = solve_k(g, k, method="dense")
        b = solve_k(g, k, method="retrograde")
        assert (a.cops_win, a.capture_time, a.optimal_start) == (b.cops_win, b.capture_time, b.optimal_start)


@settings(max_examples=30, deadline=None)
@given(m=st.integers(1, 8), extra=st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=10))
def test_monotone_in_k(m, extra):
    g = connected_random_graph(m, extra)
    wins = [solve_k(g, k).cops_win for k in (1, 2, 3)]
    for a, b in zip(wins, wins[1:]):
        assert b or not a


def test_symmetry_soundness_small_boards():
    for piece, n in product(("queen", "king", "knight", "rook", "bishop"), range(1, 7)):
        g = preset(piece, n)
        for comp in components(g):
            sub = g.induced(comp)
            for k in (1, 2, 3):
                if state_count(len(sub.vertices), k) > 3_000_000:
                    continue
                plain = solve_k(sub, k)
                sym = solve_k(sub, k, use_symmetry=True)
                assert (plain.cops_win, plain.capture_time) == (sym.cops_win, sym.capture_time), (piece, n, k)


def test_symmetry_soundness_retrograde_quotient():
    for g in (preset("queen", 4), preset("knight", 4), build_royal(4, [(1, 0), (2, 1)])):
        for k in (1, 2):
            plain = solve_k(g, k, method="retrograde")
            sym = solve_k(g, k, method="retrograde", use_symmetry=True)
            assert (plain.cops_win, plain.capture_time) == (sym.cops_win, sym.capture_time)
            assert len(board_automorphisms(g)) >= 2


def test_codec_rank_is_enumeration_order():
    for V, k in ((5, 1), (5, 2), (4, 3), (6, 2)):
        ms = list(combinations_with_replacement(range(V), k))
        assert multiset_count(V, k) == len(ms)
        for i, cops in enumerate(ms):
            assert rank(cops, V) == i
            assert unrank(i, V, k) == cops


def test_state_pack_round_trip():
    V = 7
    for cops in combinations_with_replacement(range(V), 2):
        for r in range(V):
            for side in (0, 1):
                assert unpack_state(pack_state(cops, r, side, V), V, 2) == (cops, r, side)


def test_state_count_formula():
    assert state_count(64, 2) == multiset_count(64, 2) * 64 * 2


def test_deterministic_results():
    g = preset("knight", 6)
    a, b = solve_k(g, 2), solve_k(g, 2)
    assert a.to_json(g) == b.to_json(g)


# oracles


@pytest.mark.parametrize(
    "g,k",
    [(preset("queen", 7), 3), (preset("king", 5), 1), (cycle_graph(6), 2), (preset("knight", 5), 2)],
    ids=["queen7", "king5", "cycle6", "knight5"],
)
def test_oracle_play_lasts_capture_time(g, k):
    res = solve_k(g, k, track_strategy=True)
    tr = simulate(g, OracleCops(k), OracleRobber(k))
    assert tr.result == "captured"
    assert tr.result_turn == res.capture_time


def test_cop_oracle_beats_any_robber_on_king():
    g = preset("king", 5)
    cop, robber = extract_strategies(g, 1)
    start = cop.start()
    for r0 in g.vertices:
        state = GameState(start, r0)
        for _ in range(len(g.vertices)):
            if state.captured:
                break
            depth = cop.depth(state)
            move = cop.move(state)
            cops = tuple(sorted(move))
            if state.robber in cops:
                break
            nxt = robber.move(GameState(cops, state.robber))
            state = GameState(cops, nxt)
            assert cop.depth(state) < depth
        else:
            pytest.fail("robber survived on a cop-win graph")


def test_robber_oracle_evades_one_knight():
    g = preset("knight", 4)
    tr = simulate(g, OracleCops(1), OracleRobber(1), turn_cap=200)
    assert tr.result == "cap"
    assert len(tr.turns) == 200


def test_robber_oracle_escapes_from_every_losing_start():
    g = preset("knight", 4)
    _, robber = extract_strategies(g, 1)
    for c in g.vertices:
        r = robber.place((c,))
        assert robber.escapes(GameState((c,), r))


def test_cop_oracle_outside_region():
    g = cycle_graph(5)
    cop, _ = extract_strategies(g, 1)
    with pytest.raises(DomainError):
        cop.move(GameState((0,), 2))


# errors and budgets


def test_zero_cops_rejected():
    with pytest.raises(ValueError):
        solve_k(preset("queen", 4), 0)


def test_state_budget_named():
    with pytest.raises(BudgetExceeded, match="state budget"):
        solve_k(preset("queen", 6), 2, budget=10)


def test_budget_from_environment(monkeypatch):
    monkeypatch.setenv("COPNUM_STATE_BUDGET", "100")
    with pytest.raises(BudgetExceeded):
        solve_k(preset("queen", 5), 2)


def test_dense_cell_limit():
    with pytest.raises(BudgetExceeded, match="dense cell limit"):
        solve_k(preset("queen", 12), 3)


# dismantlability


def test_cycle_4_not_dismantlable():
    ok, order = is_dismantlable(cycle_graph(4))
    assert not ok


def test_king_dismantlable_with_certificate():
    for n in (1, 2, 5, 9):
        g = preset("king", n)
        ok, order = is_dismantlable(g)
        assert ok
        assert len(order) == len(g.vertices) - 1
        alive = set(g.vertices)
        for v in order:
            nv = g.closed(v) & alive
            assert any(u != v and nv <= (g.closed(u) & alive) for u in alive)
            alive.discard(v)


@settings(max_examples=60, deadline=None)
@given(m=st.integers(1, 9), extra=st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), max_size=14))
def test_dismantlable_iff_cop_win(m, extra):
    g = connected_random_graph(m, extra)
    assert is_dismantlable(g)[0] == solve_k(g, 1).cops_win
