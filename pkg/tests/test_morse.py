import random
from math import comb

import pytest

from cutcomplex import (
    MorseMatching,
    cut_complex,
    element_matching_sequence,
    family,
    from_facets,
    mask_of,
    prism_matching_order,
    reduced_homology,
    restricted_matching,
    spanning_tree,
    tree_matching_order,
    verify_acyclic_and_critical,
)
from conftest import random_graph, random_tree


def test_cone_apex_first_is_perfect():
    cx = from_facets([(0, 1), (1, 2)]).cone()  # apex is vertex 3
    mm = element_matching_sequence(cx, [3, 0, 1, 2])
    acyclic, census = verify_acyclic_and_critical(mm)
    assert acyclic and census == {}


def test_tree_matching_p4():
    t = family("path:4")
    mm = element_matching_sequence(cut_complex(t, 2), tree_matching_order(t, 0))
    acyclic, census = verify_acyclic_and_critical(mm)
    assert acyclic and census == {}


def test_tree_matching_star_and_random():
    star = family("star:4")
    mm = element_matching_sequence(cut_complex(star, 2), tree_matching_order(star, 0))
    assert verify_acyclic_and_critical(mm) == (True, {})
    rng = random.Random(13)
    for _ in range(8):
        t = random_tree(rng, rng.randint(3, 8))
        root = rng.randrange(t.n)
        order = tree_matching_order(t, root)
        assert order[0] == root and len(order) == t.n
        mm = element_matching_sequence(cut_complex(t, 2), order)
        assert verify_acyclic_and_critical(mm) == (True, {})


def test_tree_matching_order_rejects_non_trees():
    with pytest.raises(ValueError):
        tree_matching_order(family("cycle:4"), 0)
    with pytest.raises(ValueError):
        tree_matching_order(family("edgeless:3"), 0)
    with pytest.raises(ValueError):
        tree_matching_order(family("path:3"), 5)


def test_element_matching_rejects_repeats():
    cx = cut_complex(family("path:4"), 2)
    with pytest.raises(ValueError):
        element_matching_sequence(cx, [0, 0, 1])


def test_empty_matching_everything_critical():
    cx = cut_complex(family("cycle:5"), 2)
    mm = MorseMatching(cx, ())
    acyclic, census = verify_acyclic_and_critical(mm)
    assert acyclic
    fvec = cx.f_vector()
    assert census == {d - 1: fvec[d] for d in range(len(fvec))}


def test_hand_built_cycle_detected():
    # boundary of a triangle with the three vertex-edge pairs arranged
    # in a single directed loop
    cx = from_facets([(0, 1), (1, 2), (0, 2)])
    pairs = (
        (mask_of([0]), mask_of([0, 1])),
        (mask_of([1]), mask_of([1, 2])),
        (mask_of([2]), mask_of([0, 2])),
    )
    acyclic, _ = verify_acyclic_and_critical(MorseMatching(cx, pairs))
    assert not acyclic


def test_malformed_matchings_rejected():
    cx = from_facets([(0, 1)])
    with pytest.raises(ValueError):
        verify_acyclic_and_critical(MorseMatching(cx, ((1, 3), (1, 3))))
    with pytest.raises(ValueError):
        verify_acyclic_and_critical(MorseMatching(cx, ((1, 7),)))
    with pytest.raises(ValueError):
        verify_acyclic_and_critical(MorseMatching(cx, ((8, 9),)))


def test_restricted_matching_c5():
    mm = restricted_matching(family("cycle:5"))
    acyclic, census = verify_acyclic_and_critical(mm)
    assert acyclic and census == {1: 1}


def test_restricted_matching_k33():
    mm = restricted_matching(family("complete_multipartite:3,3"))
    acyclic, census = verify_acyclic_and_critical(mm)
    assert acyclic and census == {2: 4}


def test_restricted_matching_petersen():
    mm = restricted_matching(family("petersen"))
    acyclic, census = verify_acyclic_and_critical(mm)
    assert acyclic and census == {6: 6}


def test_restricted_matching_rejections():
    with pytest.raises(ValueError):
        restricted_matching(family("complete:4"))
    with pytest.raises(ValueError):
        restricted_matching(family("path:4"))
    with pytest.raises(ValueError):
        restricted_matching(family("edgeless:4"))


def test_restricted_matching_cycle_rank():
    rng = random.Random(17)
    seen = 0
    while seen < 6:
        g = random_graph(rng, rng.randint(4, 8), 0.4)
        from cutcomplex import has_triangle

        if has_triangle(g) or not g.is_connected() or g.edge_count == g.n - 1:
            continue
        seen += 1
        mm = restricted_matching(g)
        acyclic, census = verify_acyclic_and_critical(mm)
        assert acyclic
        assert census == {g.n - 4: g.edge_count - g.n + 1}


def test_spanning_tree():
    t = spanning_tree(family("cycle:6"))
    assert t.edge_count == 5 and t.is_connected()
    with pytest.raises(ValueError):
        spanning_tree(family("edgeless:3"))


def test_prism_matching_small_cases():
    for n, k, dim in [(3, 2, 2), (4, 3, 3), (3, 3, 1)]:
        cx = cut_complex(family(f"prism:{n}"), k)
        mm = element_matching_sequence(cx, prism_matching_order(n, k))
        acyclic, census = verify_acyclic_and_critical(mm)
        assert acyclic
        assert census == {dim: comb(n - 1, k - 1)}


def test_prism_critical_cells_are_the_predicted_family():
    n, k = 4, 3
    cx = cut_complex(family(f"prism:{n}"), k)
    mm = element_matching_sequence(cx, prism_matching_order(n, k))
    full = (1 << (2 * n)) - 1
    expected = set()
    from itertools import combinations as icombs

    for idx in icombs(range(1, n), k - 1):
        removed = mask_of([0, idx[0], n + idx[0]] + [n + i for i in idx[1:]])
        expected.add(full ^ removed)
    assert mm.critical_faces() == expected


def test_prism_order_errors():
    with pytest.raises(ValueError):
        prism_matching_order(2, 3)
    with pytest.raises(ValueError):
        prism_matching_order(3, 1)


def test_morse_euler_identity_and_weak_inequality():
    rng = random.Random(19)
    for _ in range(8):
        g = random_graph(rng, rng.randint(4, 6), 0.5)
        for k in range(2, g.n):
            cx = cut_complex(g, k)
            if cx.is_void:
                continue
            order = list(range(g.n))
            rng.shuffle(order)
            mm = element_matching_sequence(cx, order)
            acyclic, census = verify_acyclic_and_critical(mm)
            assert acyclic
            signed = sum(c if d % 2 == 0 else -c for d, c in census.items())
            assert signed == cx.reduced_euler()
            rep = reduced_homology(cx)
            for d in rep.ranks:
                assert census.get(d, 0) >= rep.betti(d)
