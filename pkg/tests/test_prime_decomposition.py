import pytest

from src.exceptions import DisconnectedError, NotCaterpillarError, OutOfRangeError, TooLargeError
from src.graph_core import build_graph
from src.prime_decomposition import (
    caterpillar_minimal_primes,
    dimension_witness,
    generator_membership,
    is_minimal_prime,
    krull_dimension,
    minimal_primes,
    prime_component,
)
from src.utils.corpus import path_graph


def cut_sets(primes):
    return [pc.s for pc in primes]


def test_path_on_three_vertices(p3):
    assert cut_sets(minimal_primes(p3)) == [(), (2,)]


def test_four_cycle(c4):
    assert cut_sets(minimal_primes(c4)) == [(), (1, 3), (2, 4)]
    assert is_minimal_prime(c4, [1, 3])
    assert not is_minimal_prime(c4, [1])
    assert is_minimal_prime(c4, [])


def test_path_on_six_vertices_matches_caterpillar_rule():
    p6 = path_graph(6)
    expected = [(), (2,), (3,), (4,), (5,), (2, 4), (2, 5), (3, 5)]
    assert cut_sets(minimal_primes(p6)) == expected
    assert cut_sets(caterpillar_minimal_primes(p6)) == expected


def test_caterpillar_rule_on_fig2(fig2):
    assert cut_sets(caterpillar_minimal_primes(fig2)) == cut_sets(minimal_primes(fig2))


def test_caterpillar_rule_needs_caterpillar(spider7):
    with pytest.raises(NotCaterpillarError):
        caterpillar_minimal_primes(spider7)


def test_prime_component_text(p3):
    pc = prime_component(p3, [2])
    assert pc.components == ((1,), (3,))
    assert pc.dim_contribution == 4
    assert pc.to_text() == "S={2}; components=[{1},{3}]; dim=(3-1)+2=4"


def test_krull_dimension(p3, c4, fig2):
    assert krull_dimension(p3) == 4
    assert krull_dimension(c4) == 5
    assert krull_dimension(fig2) == 19
    assert dimension_witness(fig2).s == (2, 4, 6)


def test_krull_dimension_of_disconnected_graph():
    # one edge (dimension 3) plus an isolated vertex (2 free variables)
    assert krull_dimension(build_graph(3, [(1, 2)])) == 5


def test_generator_membership(c4):
    for pc in minimal_primes(c4):
        assert generator_membership(c4, pc)
    assert not generator_membership(c4, prime_component(path_graph(4), [2]))


def test_errors(c4, fig4):
    with pytest.raises(OutOfRangeError):
        prime_component(c4, [5])
    with pytest.raises(DisconnectedError):
        minimal_primes(build_graph(4, [(1, 2), (3, 4)]))
    with pytest.raises(TooLargeError):
        minimal_primes(fig4, max_n=10)


def test_guard_from_environment(monkeypatch, fig2):
    monkeypatch.setenv("MCLOSED_PRIMES_MAX_N", "12")
    with pytest.raises(TooLargeError):
        krull_dimension(fig2)
